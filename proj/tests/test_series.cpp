#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "ulambda/series.hpp"

using namespace ulambda;
using testing::coeff_distance;
using testing::random_coeff;

namespace {

PowerSeries from_reals(std::initializer_list<double> vals, int order) {
  std::vector<Complex> c(order + 1);
  int i = 0;
  for (double v : vals) c[i++] = v;
  return PowerSeries(std::move(c));
}

// Independent synthetic-division oracle: coefficients of 1/poly.
std::vector<Complex> long_division_one_over(const std::vector<Complex>& poly, int order) {
  std::vector<Complex> q(order + 1);
  std::vector<Complex> rem(order + 2);
  rem[0] = 1.0;
  for (int k = 0; k <= order; ++k) {
    q[k] = rem[k] / poly[0];
    for (std::size_t j = 0; j < poly.size() && k + j < rem.size(); ++j)
      rem[k + j] -= q[k] * poly[j];
  }
  return q;
}

}  // namespace

TEST_CASE("product basics") {
  const auto one_plus = from_reals({1.0, 1.0}, 16);
  const auto one_minus = from_reals({1.0, -1.0}, 16);
  const auto prod = product(one_plus, one_minus);
  CHECK(std::abs(prod.coeff(0) - 1.0) == 0.0);
  CHECK(std::abs(prod.coeff(2) + 1.0) == 0.0);
  for (int k : {1, 3, 4, 5, 10}) CHECK(std::abs(prod.coeff(k)) == 0.0);

  // Koebe's k(z)/z via the square of the geometric series, against a direct
  // convolution oracle.
  const auto sq = product(PowerSeries::geometric(10), PowerSeries::geometric(10));
  for (int k = 0; k <= 10; ++k) {
    Complex expect{};
    for (int j = 0; j <= k; ++j) expect += 1.0;  // 1 * 1 summed k+1 times
    CHECK(std::abs(sq.coeff(k) - expect) == 0.0);
    CHECK(sq.coeff(k).real() == doctest::Approx(k + 1.0));
  }

  std::mt19937 rng(11);
  std::vector<Complex> av(17);
  for (auto& v : av) v = random_coeff(rng);
  const PowerSeries a(av);
  CHECK(coeff_distance(product(a, PowerSeries::one(16)), a) == 0.0);
}

TEST_CASE("product is commutative and associative up to truncation") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> av(13), bv(13), cv(13);
    for (int i = 0; i < 13; ++i) {
      av[i] = random_coeff(rng, 0.5);
      bv[i] = random_coeff(rng, 0.5);
      cv[i] = random_coeff(rng, 0.5);
    }
    const PowerSeries a(av), b(bv), c(cv);
    CHECK(coeff_distance(product(a, b), product(b, a)) <= 1e-12);
    CHECK(coeff_distance(product(product(a, b), c), product(a, product(b, c))) <= 1e-12);
  }
}

TEST_CASE("reciprocal") {
  const auto geo = reciprocal(from_reals({1.0, -1.0}, 20));
  CHECK(coeff_distance(geo, PowerSeries::geometric(20)) <= 1e-14);

  // 1/((1-z)(1-lambda z)) at lambda = 1/2: partial sums of the geometric
  // tail, cross-checked by an independent long-division oracle.
  const double lam = 0.5;
  const std::vector<Complex> poly = {1.0, -(1.0 + lam), lam};
  const auto r = reciprocal(PowerSeries({poly[0], poly[1], poly[2]}).truncated(16));
  const auto oracle = long_division_one_over(poly, 16);
  const double expected_head[] = {1.0, 1.5, 1.75, 1.875};
  for (int k = 0; k < 4; ++k) CHECK(r.coeff(k).real() == doctest::Approx(expected_head[k]));
  for (int k = 0; k <= 16; ++k) CHECK(std::abs(r.coeff(k) - oracle[k]) <= 1e-14);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Complex> av(17);
    av[0] = Complex{1.0, 0.0} + random_coeff(rng, 0.3);
    double env = 0.4;
    for (int i = 1; i < 17; ++i) {
      av[i] = random_coeff(rng, env);
      env *= 0.4;
    }
    const PowerSeries a(av);
    CHECK(coeff_distance(reciprocal(reciprocal(a)), a) <= 1e-12);
    CHECK(coeff_distance(product(a, reciprocal(a)), PowerSeries::one(16)) <= 1e-12);
  }

  CHECK_THROWS_AS(reciprocal(PowerSeries::identity(8)), ZeroConstantTerm);
}

TEST_CASE("log_unit") {
  const auto zero = log_unit(PowerSeries::one(12));
  CHECK(coeff_distance(zero, PowerSeries::zero(12)) == 0.0);

  const auto l = log_unit(PowerSeries::geometric(24));
  CHECK(std::abs(l.coeff(0)) == 0.0);
  for (int n = 1; n <= 24; ++n) CHECK(std::abs(l.coeff(n) - 1.0 / n) <= 1e-14);

  std::mt19937 rng(31);
  std::vector<Complex> av(17);
  av[0] = 1.0;
  for (int i = 1; i < 17; ++i) av[i] = random_coeff(rng);
  const PowerSeries a(av);
  CHECK(coeff_distance(exp_series(log_unit(a)), a) <= 1e-10);

  CHECK_THROWS_AS(log_unit(PowerSeries::zero(8)), ConstantTermNotOne);
}

TEST_CASE("exp_series") {
  CHECK(coeff_distance(exp_series(PowerSeries::zero(10)), PowerSeries::one(10)) == 0.0);

  const auto geo = exp_series(log_unit(PowerSeries::geometric(20)));
  CHECK(coeff_distance(geo, PowerSeries::geometric(20)) <= 1e-12);

  // exp(2 log 1/(1-z)) = (1-z)^{-2}, coefficients n+1.
  const auto sq = exp_series(scale(log_unit(PowerSeries::geometric(20)), 2.0));
  for (int n = 0; n <= 20; ++n) CHECK(std::abs(sq.coeff(n) - Complex(n + 1.0, 0.0)) <= 1e-12);

  CHECK_THROWS_AS(exp_series(PowerSeries::one(8)), ConstantTermNotZero);
}

TEST_CASE("differentiate and antidifferentiate") {
  std::vector<Complex> z2(5);
  z2[2] = 1.0;
  const auto d = differentiate(PowerSeries(z2));
  CHECK(std::abs(d.coeff(1) - 2.0) == 0.0);
  CHECK(std::abs(d.coeff(0)) == 0.0);
  CHECK(std::abs(d.coeff(2)) == 0.0);

  const auto anti = antidifferentiate(PowerSeries::geometric(12));
  CHECK(std::abs(anti.coeff(0)) == 0.0);
  for (int n = 1; n <= 13; ++n) CHECK(std::abs(anti.coeff(n) - 1.0 / n) <= 1e-16);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Complex> av(15);
    for (auto& v : av) v = random_coeff(rng);
    const PowerSeries a(av);
    CHECK(coeff_distance(differentiate(antidifferentiate(a)), a) <= 1e-15);
  }
}

TEST_CASE("div_by_z and mul_by_z") {
  std::mt19937 rng(41);
  std::vector<Complex> av(15);
  av[1] = 1.0;
  for (int i = 2; i < 15; ++i) av[i] = random_coeff(rng);
  const PowerSeries f(av);

  CHECK(std::abs(div_by_z(f).coeff(0) - 1.0) == 0.0);
  CHECK(coeff_distance(mul_by_z(div_by_z(f)), f) == 0.0);

  // Koebe series: shifting k(z) down by one power leaves coefficients n+1.
  const auto koebe = product(PowerSeries::geometric(12), PowerSeries::geometric(12));
  const auto shifted = div_by_z(mul_by_z(koebe));
  for (int n = 0; n <= 12; ++n) CHECK(shifted.coeff(n).real() == doctest::Approx(n + 1.0));

  CHECK_THROWS_AS(div_by_z(PowerSeries::one(8)), NonzeroConstantTerm);
}

TEST_CASE("compose") {
  std::mt19937 rng(43);
  std::vector<Complex> av(13);
  for (auto& v : av) v = random_coeff(rng);
  const PowerSeries a(av);
  CHECK(coeff_distance(compose(a, PowerSeries::identity(12)), a) <= 1e-14);

  // 1/(1-z) composed with z^2: direct expansion has 1 at even powers.
  std::vector<Complex> z2(17);
  z2[2] = 1.0;
  const auto even = compose(PowerSeries::geometric(16), PowerSeries(z2));
  for (int n = 0; n <= 16; ++n)
    CHECK(std::abs(even.coeff(n) - Complex(n % 2 == 0 ? 1.0 : 0.0, 0.0)) <= 1e-14);

  const auto at_zero = compose(a, PowerSeries::zero(12));
  CHECK(std::abs(at_zero.coeff(0) - a.coeff(0)) == 0.0);
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(at_zero.coeff(n)) == 0.0);

  CHECK_THROWS_AS(compose(a, PowerSeries::one(12)), InnerConstantTermNotZero);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(PowerSeries::geometric(64), {0.5, 0.0}, 0).real() == doctest::Approx(2.0));

  // Koebe at 1/2 equals 2; order 128 keeps the tail below the tolerance.
  const auto koebe =
      mul_by_z(product(PowerSeries::geometric(128), PowerSeries::geometric(128)));
  CHECK(std::abs(evaluate(koebe, {0.5, 0.0}, 0) - 2.0) <= 1e-12);

  std::mt19937 rng(47);
  std::vector<Complex> av(11);
  for (auto& v : av) v = random_coeff(rng);
  const PowerSeries a(av);
  double factorial = 1.0;
  for (int m = 0; m <= 6; ++m) {
    if (m > 0) factorial *= m;
    CHECK(std::abs(evaluate(a, {0.0, 0.0}, m) - factorial * a.coeff(m)) <= 1e-14);
  }
}

TEST_CASE("evaluate of f and f/z agree on the disk") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Complex> av(21);
    av[1] = 1.0;
    double env = 0.7;
    for (int i = 2; i < 21; ++i) {
      av[i] = random_coeff(rng, env);
      env *= 0.7;
    }
    const PowerSeries f(av);
    const double r = 0.9 * std::sqrt(testing::unit_real(rng));
    const double th = 6.283185307179586 * testing::unit_real(rng);
    const Complex z = (0.05 + r) / (1.0 + 0.05) * Complex{std::cos(th), std::sin(th)};
    CHECK(std::abs(evaluate(f, z, 0) / z - evaluate(div_by_z(f), z, 0)) <= 1e-12);
  }
}
