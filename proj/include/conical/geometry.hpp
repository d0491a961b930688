#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conical {

/// Deficit-angle parameter ν = 1 / (1 - 4Gμ); ν = 1 is Minkowski spacetime.
///
/// Values within kIntegerTolerance of an integer are snapped onto it so the
/// image count and half-weight rule do not flicker with rounding noise.
class ConeParameter {
public:
  static constexpr double kMin = 1.0;
  static constexpr double kMax = 64.0;
  static constexpr double kIntegerTolerance = 1e-12;

  explicit ConeParameter(double nu);

  static ConeParameter flat() { return ConeParameter(1.0); }

  double nu() const { return nu_; }
  bool is_integer() const;
  bool is_even_integer() const;
  /// True when 2ν is an integer (integer or half-integer ν).
  bool is_half_integer_multiple() const;

  /// ⌊ν/2⌋, the number of image terms.
  int image_count() const;

  double deficit_angle() const;       ///< 2π(ν-1)/ν
  double string_tension_gmu() const;  ///< Gμ = (1 - 1/ν)/4

private:
  double nu_;
};

enum class Alignment {
  Flat,
  ParallelSameSide,
  OrthogonalSameSide,
  OrthogonalOppositeSides,
  BoundaryParallel,
  BoundaryOrthogonal,
};

std::string_view to_string(Alignment a);
/// Accepts the names emitted by to_string plus the short CLI aliases
/// (flat, parallel, orthogonal, opposite, boundary-parallel, boundary-orthogonal).
std::optional<Alignment> parse_alignment(std::string_view name);

bool is_boundary(Alignment a);
bool is_same_side(Alignment a);

/// Pair of static detectors. Lengths in σ units, gap = Ωσ.
struct PairConfig {
  Alignment alignment = Alignment::Flat;
  double l = 0.0;
  double d = 1.0;
  double gap = 0.1;

  /// Throws InvalidParameter when an invariant fails: finite lengths,
  /// l ≥ 0, d > 0, gap ≥ 0, and d ≥ 2l > 0 for opposite sides.
  void validate() const;
};

struct ImageTerm {
  int m;
  double weight;    ///< ½ for m = ν/2 at even-integer ν, else 1
  double sin_term;  ///< sin(mπ/ν)
};

/// Images m = 1..⌊ν/2⌋ of the conical Wightman function; empty for ν < 2.
std::vector<ImageTerm> image_terms(const ConeParameter& nu);

struct RadialPair {
  double rho_a;
  double rho_b;
};

/// Distances of detectors A and B from the string.
RadialPair radial_pair(const PairConfig& config);

struct ImageArgument {
  int m;
  double weight;
  double z;  ///< argument of aux_f, σ units
};

/// Coefficient family multiplying aux_f under the ζ-integral.
enum class ZetaKind {
  None,      ///< integral vanishes identically
  SameSide,  ///< ν sin(νπ) / (π [cos(νπ) - cosh(νζ)])
  Opposite,  ///< ν sin(2νπ) / (2π [cos(2νπ) - cosh(νζ)])
};

/// ζ-integral ingredients of one correlation term.
struct ZetaSpec {
  ZetaKind kind = ZetaKind::None;
  double nu = 1.0;
  double d = 0.0;
  double product = 0.0;  ///< l ρ_B (same side) or l (d - l) (opposite)

  double coefficient(double zeta) const;
  double argument(double zeta) const;
  /// Width of the ζ = 0 peak that forms near (half-)even ν; 0 when absent.
  double peak_width() const;
  /// Breakpoints seeding the quadrature around the peak.
  std::vector<double> breakpoints() const;
  double tail_rate() const { return nu; }
};

struct FArguments {
  std::vector<ImageArgument> images;
  ZetaSpec zeta;
};

/// aux_f arguments for the string alignments. Flat yields no images and no
/// integral; boundary alignments are rejected (see correlation::x_boundary).
FArguments f_arguments(const PairConfig& config, const ConeParameter& nu);

/// ν sin(νπ) / (π [cos(νπ) - cosh(νζ)]), evaluated without cancellation.
double same_side_coefficient(double nu, double zeta);
/// ν sin(2νπ) / (2π [cos(2νπ) - cosh(νζ)]).
double opposite_coefficient(double nu, double zeta);

}  // namespace conical
