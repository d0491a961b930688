#include "conical/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "conical/errors.hpp"

namespace conical {

namespace {

// 15-point Kronrod abscissae / weights and the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

template <std::size_t N>
using Values = std::array<double, N>;

template <std::size_t N>
struct Segment {
  double a;
  double b;
  Values<N> value;
  Values<N> error;

  double worst() const { return *std::max_element(error.begin(), error.end()); }
  bool operator<(const Segment& other) const { return worst() < other.worst(); }
};

// One Gauss-Kronrod 15 panel with the QUADPACK error heuristic, per component.
template <std::size_t N, typename F>
Segment<N> gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<Values<N>, 15> fv{};
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }

  Segment<N> seg{a, b, {}, {}};
  for (std::size_t c = 0; c < N; ++c) {
    double resk = kWgk[7] * fv[7][c];
    double resg = kWg[3] * fv[7][c];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
      const double pair = fv[j][c] + fv[14 - j][c];
      resk += kWgk[j] * pair;
      resabs += kWgk[j] * (std::fabs(fv[j][c]) + std::fabs(fv[14 - j][c]));
      if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fv[7][c] - mean);
    for (int j = 0; j < 7; ++j) {
      resasc += kWgk[j] * (std::fabs(fv[j][c] - mean) + std::fabs(fv[14 - j][c] - mean));
    }
    resk *= half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
      err = std::max(50.0 * kEps * resabs, err);
    }
    seg.value[c] = resk;
    seg.error[c] = err;
  }
  return seg;
}

struct AdaptiveOutcome {
  std::size_t evaluations = 0;
};

// Globally adaptive bisection of the segment with the largest error until
// every component's summed error is within tol.
template <std::size_t N, typename F>
std::array<QuadratureResult, N> adaptive(const F& f, double lo, double hi, double tol,
                                         std::span<const double> breakpoints,
                                         std::size_t max_subdivisions) {
  if (!(tol > 0.0)) throw InvalidParameter("quadrature: tolerance must be positive");

  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment<N>> heap;
  Values<N> total{};
  Values<N> total_err{};
  std::size_t evaluations = 0;
  auto push = [&](const Segment<N>& s) {
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += s.value[c];
      total_err[c] += s.error[c];
    }
    heap.push(s);
    evaluations += 15;
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    push(gauss_kronrod<N>(f, cuts[i], cuts[i + 1]));
  }

  auto converged = [&] {
    for (std::size_t c = 0; c < N; ++c) {
      if (total_err[c] > tol) return false;
    }
    return true;
  };

  std::size_t subdivisions = heap.size();
  while (!converged()) {
    if (subdivisions >= max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature: tolerance " << tol << " not met on [" << lo << ", " << hi
          << "] after " << subdivisions << " subintervals";
      throw ToleranceNotMet(msg.str(), *std::max_element(total_err.begin(), total_err.end()));
    }
    const Segment<N> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ToleranceNotMet("quadrature: interval collapsed to machine resolution",
                            worst.worst());
    }
    for (std::size_t c = 0; c < N; ++c) {
      total[c] -= worst.value[c];
      total_err[c] -= worst.error[c];
    }
    push(gauss_kronrod<N>(f, worst.a, mid));
    push(gauss_kronrod<N>(f, mid, worst.b));
    ++subdivisions;
  }

  // Recompute the error sum from scratch; running subtraction drifts.
  Values<N> err_sum{};
  Values<N> val_sum{};
  while (!heap.empty()) {
    const auto& s = heap.top();
    for (std::size_t c = 0; c < N; ++c) {
      err_sum[c] += s.error[c];
      val_sum[c] += s.value[c];
    }
    heap.pop();
  }

  std::array<QuadratureResult, N> out{};
  for (std::size_t c = 0; c < N; ++c) {
    out[c] = {val_sum[c], err_sum[c], evaluations};
  }
  return out;
}

void check_tail_rate(double tail_rate) {
  if (!(tail_rate > 0.0) || !std::isfinite(tail_rate)) {
    throw InvalidParameter("quadrature: tail_rate must be positive and finite");
  }
}

}  // namespace

Bracket::Bracket(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    std::ostringstream msg;
    msg << "Bracket: need finite lo < hi, got [" << lo << ", " << hi << "]";
    throw InvalidParameter(msg.str());
  }
}

QuadratureResult integrate(const RealFn& f, Bracket range, double tol,
                           std::span<const double> breakpoints,
                           std::size_t max_subdivisions) {
  auto wrapped = [&f](double x) { return Values<1>{f(x)}; };
  return adaptive<1>(wrapped, range.lo, range.hi, tol, breakpoints, max_subdivisions)[0];
}

double semi_infinite_cutoff(double tail_rate, double tol, double lower) {
  check_tail_rate(tail_rate);
  const double base = (std::log(1.0 / tol) + 5.0) / tail_rate;
  const double bound = std::log(100.0 / (tol * tail_rate)) / tail_rate;
  return lower + std::max(base, bound);
}

namespace {

double tail_bound(double tail_rate, double cutoff, double lower) {
  return std::exp(-tail_rate * (cutoff - lower)) / tail_rate;
}

}  // namespace

QuadratureResult integrate_semi_infinite(const RealFn& f, double tail_rate, double tol,
                                         double lower, std::span<const double> breakpoints) {
  const double cutoff = semi_infinite_cutoff(tail_rate, tol, lower);
  const double tail = tail_bound(tail_rate, cutoff, lower);
  auto wrapped = [&f](double x) { return Values<1>{f(x)}; };
  auto r = adaptive<1>(wrapped, lower, cutoff, tol - tail, breakpoints,
                       kDefaultMaxSubdivisions)[0];
  r.error_estimate += tail;
  return r;
}

ComplexQuadratureResult integrate_semi_infinite_complex(const ComplexFn& f, double tail_rate,
                                                        double tol, double lower,
                                                        std::span<const double> breakpoints) {
  const double cutoff = semi_infinite_cutoff(tail_rate, tol, lower);
  const double tail = tail_bound(tail_rate, cutoff, lower);
  auto wrapped = [&f](double x) {
    const Complex v = f(x);
    return Values<2>{v.real(), v.imag()};
  };
  auto r = adaptive<2>(wrapped, lower, cutoff, tol - tail, breakpoints,
                       kDefaultMaxSubdivisions);
  r[0].error_estimate += tail;
  r[1].error_estimate += tail;
  return {r[0], r[1]};
}

namespace {

// PV ∫_lo^hi g(s) / (s² - a²) ds with a single pole a ∈ (lo, hi), lo ≥ 0;
// hi = +∞ allowed.
QuadratureResult pv_single_pole(const RealFn& g, double a, double lo, double hi,
                                double tol, double tail_rate) {
  const bool unbounded = std::isinf(hi);
  double r = std::min(a - lo, a);
  if (!unbounded) r = std::min(r, hi - a);
  r *= 0.5;
  const double ga = g(a);
  const double window_lo = a - r;
  const double window_hi = a + r;

  auto subtracted = [&](double s) {
    const double denom = (s - a) * (s + a);
    if (s > window_lo && s < window_hi) return (g(s) - ga) / denom;
    return g(s) / denom;
  };

  const double inner_hi = unbounded ? window_hi : hi;
  const std::array<double, 3> cuts{window_lo, a, window_hi};
  const double part_tol = unbounded ? 0.5 * tol : tol;
  QuadratureResult near = integrate(subtracted, Bracket(lo, inner_hi), part_tol, cuts);

  QuadratureResult out = near;
  if (unbounded) {
    auto plain = [&](double s) { return g(s) / ((s - a) * (s + a)); };
    const QuadratureResult far = integrate_semi_infinite(plain, tail_rate, 0.5 * tol, window_hi);
    out.value += far.value;
    out.error_estimate += far.error_estimate;
    out.evaluations += far.evaluations;
  }
  // PV ∫_{a-r}^{a+r} ds / (s² - a²) = ln((2a - r) / (2a + r)) / (2a)
  out.value += ga * std::log((2.0 * a - r) / (2.0 * a + r)) / (2.0 * a);
  out.evaluations += 1;
  return out;
}

}  // namespace

QuadratureResult integrate_pv(const RealFn& numerator, std::span<const double> poles,
                              const PvDomain& domain, double tol, double tail_rate) {
  if (poles.empty()) throw InvalidParameter("integrate_pv: no poles given");
  if (!(tol > 0.0)) throw InvalidParameter("integrate_pv: tolerance must be positive");

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  if (domain.kind == PvDomain::Kind::Interval) {
    lo = domain.lo;
    hi = domain.hi;
    if (!(lo >= 0.0) || !(lo < hi) || !std::isfinite(hi)) {
      throw InvalidParameter("integrate_pv: interval domain needs 0 <= lo < hi < inf");
    }
  }
  for (double p : poles) {
    if (!(p > lo) || !(p < hi) || !std::isfinite(p)) {
      std::ostringstream msg;
      msg << "integrate_pv: pole " << p << " not strictly inside the domain";
      throw InvalidParameter(msg.str());
    }
  }
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = i + 1; j < poles.size(); ++j) {
      if (std::fabs(poles[i] - poles[j]) <= 10.0 * kPvExcisionWidth) {
        std::ostringstream msg;
        msg << "integrate_pv: poles " << poles[i] << " and " << poles[j]
            << " are closer than " << 10.0 * kPvExcisionWidth;
        throw PolesTooClose(msg.str());
      }
    }
  }

  // Whole line: fold onto the half line through the even part.
  RealFn folded;
  const RealFn* g = &numerator;
  if (domain.kind == PvDomain::Kind::WholeLine) {
    folded = [&numerator](double s) { return numerator(s) + numerator(-s); };
    g = &folded;
  }

  // Partial fractions: 1/Π(s² - p_j²) = Σ_k c_k / (s² - p_k²).
  QuadratureResult total;
  const double term_tol = tol / static_cast<double>(poles.size());
  for (std::size_t k = 0; k < poles.size(); ++k) {
    double c = 1.0;
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j != k) c /= (poles[k] * poles[k] - poles[j] * poles[j]);
    }
    const QuadratureResult term =
        pv_single_pole(*g, poles[k], lo, hi, term_tol / std::max(1.0, std::fabs(c)), tail_rate);
    total.value += c * term.value;
    total.error_estimate += std::fabs(c) * term.error_estimate;
    total.evaluations += term.evaluations;
  }
  return total;
}

double find_root_bracketed(const RealFn& objective, Bracket bracket, double tol) {
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = objective(a);
  double fb = objective(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream msg;
    msg << "find_root_bracketed: no sign change on [" << a << ", " << b << "] (f = " << fa
        << ", " << fb << ")";
    throw NoSignChange(msg.str());
  }

  // Brent (1973): inverse quadratic / secant steps guarded by bisection.
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = objective(b);
  }
  return b;
}

double minimize_scalar(const RealFn& objective, Bracket bracket, double tol,
                       int unimodality_samples) {
  constexpr double kGolden = 0.3819660112501051;  // (3 - √5) / 2
  double a = bracket.lo;
  double b = bracket.hi;
  double x = a + kGolden * (b - a);
  double w = x, v = x;
  double fx = objective(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (int iter = 0; iter < 500; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = std::sqrt(kEps) * std::fabs(x) * 1e-4 + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - xm) <= tol2 - 0.5 * (b - a)) break;

    bool golden = true;
    if (std::fabs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double etemp = e;
      e = d;
      if (!(std::fabs(p) >= std::fabs(0.5 * q * etemp) || p <= q * (a - x) ||
            p >= q * (b - x))) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, xm - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = kGolden * e;
    }
    const double u = std::fabs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
    const double fu = objective(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }

  if (unimodality_samples >= 3) {
    const int n = unimodality_samples;
    std::vector<double> samples(static_cast<std::size_t>(n));
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = bracket.lo + bracket.width() * i / (n - 1);
      samples[static_cast<std::size_t>(i)] = objective(t);
      scale = std::max(scale, std::fabs(samples[static_cast<std::size_t>(i)]));
    }
    const double slack = 1e-9 * scale + 1e-15;
    const auto min_it = std::min_element(samples.begin(), samples.end());
    bool ok = true;
    for (auto it = samples.begin(); it != min_it; ++it) {
      if (*(it + 1) > *it + slack) ok = false;
    }
    for (auto it = min_it; it + 1 != samples.end(); ++it) {
      if (*(it + 1) < *it - slack) ok = false;
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "minimize_scalar: objective is not unimodal on [" << bracket.lo << ", "
          << bracket.hi << "]";
      throw NotUnimodal(msg.str());
    }
  }
  return x;
}

}  // namespace conical
