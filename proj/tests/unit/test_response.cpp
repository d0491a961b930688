#include <cmath>

#include "conical/errors.hpp"
#include "conical/response.hpp"
#include "doctest.h"

using namespace conical;

TEST_CASE("flat transition probability") {
  CHECK(p_flat(0.1) == doctest::Approx(0.0662671830293738).epsilon(1e-14));
  CHECK(p_flat(0.0) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-15));
  CHECK(p_flat(1.0) == doctest::Approx(0.007088272232636416).epsilon(1e-13));
  CHECK(p_flat(1.5) == doctest::Approx(0.0012162325580967177).epsilon(1e-12));
  CHECK(p_flat(0.5) < p_flat(0.1));
}

TEST_CASE("string transition probability, frozen values") {
  CHECK(p_string(1.0, ConeParameter(3.0), 0.1).total == doctest::Approx(0.15219443513534757).epsilon(1e-12));
  CHECK(p_string(0.5, ConeParameter(4.0), 0.1).total == doctest::Approx(0.24618832278311028).epsilon(1e-12));
  CHECK(p_string(1.0, ConeParameter(2.5), 0.1).total == doctest::Approx(0.1274703311901546).epsilon(1e-10));
}

TEST_CASE("on-string identity P = nu P0") {
  for (double nu : {1.0, 1.5, 2.0, 2.5, 3.0, 3.7, 11.0}) {
    CHECK(p_string(0.0, ConeParameter(nu), 0.1).total ==
          doctest::Approx(nu * p_flat(0.1)).epsilon(1e-9));
  }
  CHECK(p_string(0.0, ConeParameter(3.0), 0.1).total == doctest::Approx(0.19880154908812).epsilon(1e-12));
}

TEST_CASE("breakdown bookkeeping") {
  const auto r = p_string(0.7, ConeParameter(5.5), 0.3);
  CHECK(r.p_flat == doctest::Approx(p_flat(0.3)));
  double sum = 0.0;
  for (double c : r.image_contributions) sum += c;
  CHECK(r.image_contributions.size() == 2);
  CHECK(sum == doctest::Approx(r.p_images).epsilon(1e-15));
  CHECK(r.total == doctest::Approx(r.p_flat + r.p_images + r.p_integral).epsilon(1e-15));
  CHECK(p_string(0.7, ConeParameter(3.0), 0.3).p_integral == 0.0);
  CHECK(p_string(0.7, ConeParameter(1.0), 0.3).total == p_flat(0.3));
}

TEST_CASE("response decreases with distance and grows with nu") {
  const ConeParameter nu(3.0);
  double prev = p_string(0.0, nu, 0.1).total;
  for (double rho = 0.25; rho <= 5.0; rho += 0.25) {
    const double v = p_string(rho, nu, 0.1).total;
    CHECK(v < prev);
    prev = v;
  }
  double last = 0.0;
  for (double v = 1.0; v <= 12.0; v += 0.5) {
    const double p = p_string(0.5, ConeParameter(v), 0.1).total;
    CHECK(p > last);
    last = p;
  }
}

TEST_CASE("far from the string the image term falls off as 1/rho^2") {
  // One image for ν = 3, sin(π/3) = √3/2, adding exp(-g²)/(4π (ρ sin)²)
  // at leading order.
  const double g = 0.1;
  const double rho = 50.0;
  const double s = std::sqrt(3.0) / 2.0;
  const double expected = p_flat(g) + std::exp(-g * g) / (4.0 * M_PI * rho * rho * s * s);
  CHECK(p_string(rho, ConeParameter(3.0), g).total == doctest::Approx(expected).epsilon(1e-6));
  CHECK(std::fabs(p_string(rho, ConeParameter(3.0), g).total - p_flat(g)) > 1e-6);
}

TEST_CASE("small-distance approximation") {
  const double g = 0.1;
  for (double nu : {2.0, 2.5, 3.0, 11.0}) {
    const double p = p_string(0.05, ConeParameter(nu), g).total;
    CHECK(std::fabs(p / (nu * p_flat(g)) - 1.0) < 0.01);
  }
}

TEST_CASE("reflecting plane") {
  CHECK(p_boundary(1e-9, 0.1) == 0.0);
  CHECK(std::fabs(p_boundary(1e-6, 0.1)) < 1e-10);
  CHECK(p_boundary(1.0, 0.1) == doctest::Approx(0.028664222470369333).epsilon(1e-13));
  CHECK(p_boundary(50.0, 0.1) == doctest::Approx(0.066251422806663721).epsilon(1e-13));
  const double v = p_boundary(1.0, 0.1);
  CHECK(v > 0.0);
  CHECK(v < p_flat(0.1));
}

TEST_CASE("detector pair dispatch") {
  const ConeParameter nu(3.0);
  const auto orth = detector_responses({Alignment::OrthogonalSameSide, 0.2, 1.0, 0.1}, nu);
  CHECK(orth.a.total == doctest::Approx(p_string(0.2, nu, 0.1).total));
  CHECK(orth.b.total == doctest::Approx(p_string(1.2, nu, 0.1).total));
  const auto opp = detector_responses({Alignment::OrthogonalOppositeSides, 0.5, 1.5, 0.1}, nu);
  CHECK(opp.b.total == doctest::Approx(p_string(1.0, nu, 0.1).total));
  const auto bd = detector_responses({Alignment::BoundaryOrthogonal, 0.5, 1.0, 0.1}, nu);
  CHECK(bd.a.total == doctest::Approx(p_boundary(0.5, 0.1)));
  CHECK(bd.b.total == doctest::Approx(p_boundary(1.5, 0.1)));
  const auto flat = detector_responses({Alignment::Flat, 0.0, 1.0, 0.1}, nu);
  CHECK(flat.a.total == p_flat(0.1));
}
