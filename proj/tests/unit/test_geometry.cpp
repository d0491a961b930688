#include <cmath>
#include <numbers>

#include "conical/errors.hpp"
#include "conical/geometry.hpp"
#include "doctest.h"

using namespace conical;

TEST_CASE("cone parameter range and snapping") {
  CHECK_THROWS_AS(ConeParameter(0.5), InvalidParameter);
  CHECK_THROWS_AS(ConeParameter(65.0), InvalidParameter);
  CHECK_THROWS_AS(ConeParameter(std::nan("")), InvalidParameter);
  const ConeParameter snapped(3.0 + 1e-14);
  CHECK(snapped.nu() == 3.0);
  CHECK(snapped.is_integer());
  CHECK_FALSE(ConeParameter(3.0 + 1e-9).is_integer());
  CHECK(ConeParameter(4.0).is_even_integer());
  CHECK(ConeParameter(2.5).is_half_integer_multiple());
  CHECK_FALSE(ConeParameter(2.7).is_half_integer_multiple());
}

TEST_CASE("deficit angle and string tension") {
  CHECK(ConeParameter::flat().deficit_angle() == 0.0);
  CHECK(ConeParameter(2.0).deficit_angle() == doctest::Approx(std::numbers::pi));
  CHECK(ConeParameter(2.0).string_tension_gmu() == doctest::Approx(0.125));
}

TEST_CASE("image terms") {
  CHECK(image_terms(ConeParameter(1.0)).empty());
  CHECK(image_terms(ConeParameter(1.9)).empty());
  const auto three = image_terms(ConeParameter(3.0));
  REQUIRE(three.size() == 1);
  CHECK(three[0].weight == 1.0);
  CHECK(three[0].sin_term == doctest::Approx(std::sqrt(3.0) / 2.0));

  const auto four = image_terms(ConeParameter(4.0));
  REQUIRE(four.size() == 2);
  CHECK(four[0].weight == 1.0);
  CHECK(four[1].weight == 0.5);
  CHECK(four[1].sin_term == 1.0);

  const auto odd = image_terms(ConeParameter(5.0));
  REQUIRE(odd.size() == 2);
  CHECK(odd[1].weight == 1.0);
  CHECK(image_terms(ConeParameter(11.0)).size() == 5);
}

TEST_CASE("alignment names round-trip") {
  for (auto a : {Alignment::Flat, Alignment::ParallelSameSide, Alignment::OrthogonalSameSide,
                 Alignment::OrthogonalOppositeSides, Alignment::BoundaryParallel,
                 Alignment::BoundaryOrthogonal}) {
    CHECK(parse_alignment(to_string(a)) == a);
  }
  CHECK_FALSE(parse_alignment("diagonal").has_value());
}

TEST_CASE("pair validation") {
  CHECK_NOTHROW(PairConfig{Alignment::ParallelSameSide, 0.0, 0.5, 0.1}.validate());
  CHECK_THROWS_AS((PairConfig{Alignment::ParallelSameSide, -1.0, 0.5, 0.1}.validate()), InvalidParameter);
  CHECK_THROWS_AS((PairConfig{Alignment::ParallelSameSide, 1.0, 0.0, 0.1}.validate()), InvalidParameter);
  CHECK_THROWS_AS((PairConfig{Alignment::ParallelSameSide, 1.0, 1.0, -0.1}.validate()), InvalidParameter);
  CHECK_THROWS_AS((PairConfig{Alignment::OrthogonalOppositeSides, 1.0, 1.5, 0.1}.validate()), InvalidParameter);
  CHECK_THROWS_AS((PairConfig{Alignment::OrthogonalOppositeSides, 0.0, 1.5, 0.1}.validate()), InvalidParameter);
  CHECK_NOTHROW(PairConfig{Alignment::OrthogonalOppositeSides, 1.0, 2.0, 0.1}.validate());
}

TEST_CASE("radial distances") {
  const auto orth = radial_pair({Alignment::OrthogonalSameSide, 0.3, 1.0, 0.1});
  CHECK(orth.rho_a == 0.3);
  CHECK(orth.rho_b == doctest::Approx(1.3));
  const auto opp = radial_pair({Alignment::OrthogonalOppositeSides, 1.0, 2.5, 0.1});
  CHECK(opp.rho_b == doctest::Approx(1.5));
  const auto par = radial_pair({Alignment::ParallelSameSide, 0.7, 2.0, 0.1});
  CHECK(par.rho_a == par.rho_b);
}

TEST_CASE("f arguments per alignment") {
  const ConeParameter nu(3.0);
  const auto par = f_arguments({Alignment::ParallelSameSide, 1.0, 0.5, 0.1}, nu);
  REQUIRE(par.images.size() == 1);
  CHECK(par.images[0].z == doctest::Approx(std::sqrt(0.0625 + 0.75)));
  CHECK(par.zeta.kind == ZetaKind::None);

  const auto orth = f_arguments({Alignment::OrthogonalSameSide, 1.0, 0.5, 0.1}, nu);
  CHECK(orth.images[0].z == doctest::Approx(std::sqrt(0.0625 + 1.5 * 0.75)));

  // symmetric opposite sides at even ν: the m = ν/2 image sits on the partner
  const auto sym = f_arguments({Alignment::OrthogonalOppositeSides, 1.0, 2.0, 0.1}, ConeParameter(4.0));
  REQUIRE(sym.images.size() == 2);
  CHECK(sym.images[1].z == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sym.images[0].z == doctest::Approx(std::cos(std::numbers::pi / 4.0)));

  const auto generic = f_arguments({Alignment::ParallelSameSide, 1.0, 0.5, 0.1}, ConeParameter(2.5));
  CHECK(generic.zeta.kind == ZetaKind::SameSide);
  CHECK(generic.zeta.argument(0.0) == doctest::Approx(std::sqrt(0.0625 + 1.0)));
  CHECK(f_arguments({Alignment::OrthogonalOppositeSides, 1.0, 2.0, 0.1}, ConeParameter(2.5)).zeta.kind ==
        ZetaKind::None);
  CHECK(f_arguments({Alignment::Flat, 0.0, 0.5, 0.1}, nu).images.empty());
  CHECK_THROWS_AS(f_arguments({Alignment::BoundaryParallel, 1.0, 0.5, 0.1}, nu), InvalidParameter);
}

TEST_CASE("zeta coefficients") {
  const double nu = 2.5;
  const double z = 0.4;
  const double direct = nu * std::sin(nu * std::numbers::pi) /
                        (std::numbers::pi * (std::cos(nu * std::numbers::pi) - std::cosh(nu * z)));
  CHECK(same_side_coefficient(nu, z) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(opposite_coefficient(2.3, z) ==
        doctest::Approx(2.3 * std::sin(4.6 * std::numbers::pi) /
                        (2 * std::numbers::pi * (std::cos(4.6 * std::numbers::pi) - std::cosh(2.3 * z))))
            .epsilon(1e-12));
  CHECK(same_side_coefficient(3.0, z) == 0.0);
  CHECK(opposite_coefficient(2.5, z) == 0.0);
}
