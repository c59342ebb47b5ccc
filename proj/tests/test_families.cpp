#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_util.hpp"
#include "ulambda/families.hpp"
#include "ulambda/json_io.hpp"

using namespace ulambda;
using testing::coeff_distance;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double th) { return {std::cos(th), std::sin(th)}; }

PowerSeries constant_psi(Complex value) {
  std::vector<Complex> c(3);
  c[0] = value;
  return PowerSeries(std::move(c));
}

// Independent long-division oracle for 1/poly.
std::vector<Complex> one_over(const std::vector<Complex>& poly, int order) {
  std::vector<Complex> q(order + 1), rem(order + poly.size() + 1);
  rem[0] = 1.0;
  for (int k = 0; k <= order; ++k) {
    q[k] = rem[k] / poly[0];
    for (std::size_t j = 0; j < poly.size(); ++j) rem[k + j] -= q[k] * poly[j];
  }
  return q;
}

}  // namespace

TEST_CASE("eval closed forms") {
  CHECK(eval(FunctionSpec::koebe(), {0.5, 0.0}).real() == doctest::Approx(2.0).epsilon(1e-14));

  std::mt19937 rng(71);
  for (int i = 0; i < 20; ++i) {
    const double r = 0.9 * testing::unit_real(rng);
    const Complex z = r * unit(kTwoPi * testing::unit_real(rng));
    CHECK(std::abs(eval(FunctionSpec::k_lambda(1.0), z) - eval(FunctionSpec::koebe(), z)) <=
          1e-12);
  }

  CHECK(eval(FunctionSpec::k_lambda(0.5), {-1.0, 0.0}).real() ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

  // rational member z/(1 - lambda z^2) and the test function
  const Complex z{0.3, 0.4};
  const double lam = 0.7;
  CHECK(std::abs(eval(FunctionSpec::rational_member(lam), z) - z / (1.0 - lam * z * z)) <= 1e-13);
  CHECK(std::abs(eval(FunctionSpec::test_g(lam), z) -
                 z / ((1.0 - z * z) * (1.0 - lam * z * z))) <= 1e-13);

  CHECK_THROWS_AS(eval(FunctionSpec::koebe(), {1.0, 0.0}), PoleAtPoint);
}

TEST_CASE("eval derivatives agree with the series route") {
  for (const FunctionSpec& spec :
       {FunctionSpec::koebe(), FunctionSpec::k_lambda(0.6), FunctionSpec::rational_member(0.4),
        FunctionSpec::test_g(0.8)}) {
    const PowerSeries s = series_of(spec, 64);
    std::mt19937 rng(79);
    for (int i = 0; i < 10; ++i) {
      const Complex z = 0.55 * testing::unit_real(rng) * unit(kTwoPi * testing::unit_real(rng));
      for (int m = 0; m <= 3; ++m)
        CHECK(std::abs(eval(spec, z, m) - evaluate(s, z, m)) <= 1e-9);
    }
  }
}

TEST_CASE("series_of") {
  const PowerSeries klam = series_of(FunctionSpec::k_lambda(0.5), 4);
  CHECK(klam.coeff(2).real() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(klam.coeff(3).real() == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(klam.coeff(4).real() == doctest::Approx(1.875).epsilon(1e-15));
  // synthetic-division oracle of 1/((1-z)(1-lambda z)) for the full tail
  const auto oracle = one_over({1.0, -1.5, 0.5}, 30);
  const PowerSeries full = series_of(FunctionSpec::k_lambda(0.5), 31);
  for (int n = 1; n <= 31; ++n) CHECK(std::abs(full.coeff(n) - oracle[n - 1]) <= 1e-13);

  const PowerSeries koebe = series_of(FunctionSpec::koebe(), 64);
  for (int n = 0; n <= 64; ++n)
    CHECK(std::abs(koebe.coeff(n) - Complex(static_cast<double>(n), 0.0)) <= 1e-12);

  const Complex x = unit(1.1);
  const PowerSeries rot = series_of(rotate(FunctionSpec::koebe(), x), 20);
  Complex xp{1.0, 0.0};
  for (int n = 1; n <= 20; ++n) {
    CHECK(std::abs(rot.coeff(n) - static_cast<double>(n) * xp) <= 1e-12);
    xp *= x;
  }
}

TEST_CASE("member_from_schwarz") {
  const double lam = 0.5;

  // psi == 1: f = z/(1 - lambda z^2)
  const FunctionSpec m1 = member_from_schwarz(lam, {0.0, 0.0}, constant_psi({1.0, 0.0}));
  const FunctionSpec rat = FunctionSpec::rational_member(lam);
  CHECK(coeff_distance(series_of(m1, 32), series_of(rat, 32)) <= 1e-13);

  // psi == -1 with a2 = 1 + lambda reproduces k_lambda; compare z/f polynomials.
  const FunctionSpec m2 = member_from_schwarz(lam, {1.0 + lam, 0.0}, constant_psi({-1.0, 0.0}));
  const auto h2 = z_over_f(m2);
  REQUIRE(h2.has_value());
  CHECK(std::abs(h2->coeff(0) - 1.0) == 0.0);
  CHECK(std::abs(h2->coeff(1) + (1.0 + lam)) == 0.0);
  CHECK(std::abs(h2->coeff(2) - lam) == 0.0);
  for (int n = 3; n <= h2->order(); ++n) CHECK(std::abs(h2->coeff(n)) == 0.0);

  // psi == 0: the identity map
  const FunctionSpec m3 = member_from_schwarz(lam, {0.0, 0.0}, constant_psi({0.0, 0.0}));
  const Complex z{0.4, -0.3};
  CHECK(std::abs(eval(m3, z) - z) <= 1e-15);
  CHECK(std::abs(eval(m3, z, 1) - 1.0) <= 1e-15);

  CHECK_THROWS_AS(member_from_schwarz(lam, {0.0, 0.0}, constant_psi({1.5, 0.0})), PsiUnbounded);
  // a2 far out of range puts a zero of z/f inside the disk
  CHECK_THROWS_AS(member_from_schwarz(lam, {4.5, 0.0}, constant_psi({0.0, 0.0})),
                  VanishingDenominator);
}

TEST_CASE("hull_from_measure") {
  const FunctionSpec single = hull_from_measure(DiscreteCircleMeasure({{{1.0, 0.0}, 1.0}}));
  CHECK(coeff_distance(series_of(single, 48), series_of(FunctionSpec::koebe(), 48)) <= 1e-12);

  const FunctionSpec pair =
      hull_from_measure(DiscreteCircleMeasure({{{1.0, 0.0}, 0.5}, {{-1.0, 0.0}, 0.5}}));
  const PowerSeries s = series_of(pair, 16);
  CHECK(std::abs(s.coeff(2)) <= 1e-15);
  CHECK(s.coeff(3).real() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(s.coeff(4)) <= 1e-15);
  for (int n = 2; n <= 16; ++n) {
    const double expect = n * (1.0 + ((n - 1) % 2 == 0 ? 1.0 : -1.0)) / 2.0;
    CHECK(std::abs(s.coeff(n) - Complex(expect, 0.0)) <= 1e-12);
  }

  // single atom at generic x: |a_n| = n
  const Complex x = unit(2.3);
  const PowerSeries sx = series_of(hull_from_measure(DiscreteCircleMeasure({{x, 1.0}})), 24);
  for (int n = 1; n <= 24; ++n)
    CHECK(std::abs(sx.coeff(n)) == doctest::Approx(static_cast<double>(n)).epsilon(1e-14));

  CHECK_THROWS_AS(DiscreteCircleMeasure({{{1.0, 0.0}, 0.5}}), InvalidMeasure);
  CHECK_THROWS_AS(DiscreteCircleMeasure({{{0.5, 0.0}, 1.0}}), InvalidMeasure);
  CHECK_THROWS_AS(DiscreteCircleMeasure({{{1.0, 0.0}, 1.5}, {{-1.0, 0.0}, -0.5}}),
                  InvalidMeasure);
}

TEST_CASE("rotate") {
  const FunctionSpec koebe = FunctionSpec::koebe();
  const Complex z{0.35, 0.2};
  CHECK(std::abs(eval(rotate(koebe, {1.0, 0.0}), z) - eval(koebe, z)) == 0.0);

  const FunctionSpec neg = rotate(koebe, {-1.0, 0.0});
  CHECK(std::abs(eval(neg, z) - z / ((1.0 + z) * (1.0 + z))) <= 1e-13);

  const Complex x = unit(0.77);
  const FunctionSpec back = rotate(rotate(koebe, x), std::conj(x));
  CHECK(std::abs(eval(back, z) - eval(koebe, z)) <= 1e-13);
  CHECK(std::abs(eval(rotate(koebe, x), z) - eval(koebe, x * z) / x) <= 1e-13);

  CHECK_THROWS_AS(rotate(koebe, {0.9, 0.0}), NotUnitModulus);
}

TEST_CASE("sample_members is deterministic and certified") {
  const auto a = sample_members(0.7, 5, 123);
  const auto b = sample_members(0.7, 5, 123);
  REQUIRE(a.size() == 5);
  REQUIRE(b.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(a[i].kind() == SpecKind::schwarz_member);
    CHECK(a[i].a2() == b[i].a2());
    CHECK(coeff_distance(series_of(a[i], 16), series_of(b[i], 16)) == 0.0);
    CHECK(series_of(a[i], 16).is_normalized(1e-12));
  }
  const auto c = sample_members(0.7, 5, 124);
  CHECK(a[0].a2() != c[0].a2());
}

TEST_CASE("spec JSON round trip") {
  std::vector<FunctionSpec> specs;
  specs.push_back(FunctionSpec::koebe());
  specs.push_back(FunctionSpec::k_lambda(0.4));
  specs.push_back(FunctionSpec::rational_member(0.6));
  specs.push_back(FunctionSpec::test_g(0.9));
  specs.push_back(rotate(FunctionSpec::k_lambda(0.4), unit(1.3)));
  specs.push_back(
      hull_from_measure(DiscreteCircleMeasure({{unit(0.3), 0.25}, {unit(2.0), 0.75}})));
  specs.push_back(sample_members(0.5, 1, 42)[0]);
  specs.push_back(FunctionSpec::series(series_of(FunctionSpec::koebe(), 12)));

  const Complex z{0.31, -0.22};
  for (const FunctionSpec& spec : specs) {
    const FunctionSpec again = spec_from_json(to_json(spec));
    CHECK(again.kind() == spec.kind());
    CHECK(std::abs(eval(again, z) - eval(spec, z)) <= 1e-12);
  }

  CHECK_THROWS_AS(spec_from_json(Json{{"kind", "unknown"}}), std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(Json{{"kind", "k_lambda"}}), std::invalid_argument);
}

TEST_CASE("z_over_f coverage") {
  CHECK(z_over_f(FunctionSpec::koebe()).has_value());
  CHECK(z_over_f(rotate(FunctionSpec::k_lambda(0.5), unit(0.9))).has_value());
  CHECK(!z_over_f(hull_from_measure(DiscreteCircleMeasure({{{1.0, 0.0}, 1.0}}))).has_value());
  CHECK(!z_over_f(FunctionSpec::series(PowerSeries::identity(8))).has_value());

  // rotated z/f matches h(xz)
  const Complex x = unit(0.9);
  const auto h = z_over_f(rotate(FunctionSpec::k_lambda(0.5), x));
  const auto h0 = z_over_f(FunctionSpec::k_lambda(0.5));
  const Complex z{0.5, 0.1};
  CHECK(std::abs(evaluate(*h, z) - evaluate(*h0, x * z)) <= 1e-14);
}
