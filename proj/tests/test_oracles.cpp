#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_util.hpp"
#include "ulambda/meromorphic.hpp"
#include "ulambda/oracles.hpp"

using namespace ulambda;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double th) { return {std::cos(th), std::sin(th)}; }

FunctionSpec identity_member() {
  std::vector<Complex> c(3);
  return member_from_schwarz(0.5, {0.0, 0.0}, PowerSeries(std::move(c)));
}

}  // namespace

TEST_CASE("u_deviation of k_lambda is lambda r_max^2") {
  const double lam = 0.5;
  const auto rep = u_deviation(FunctionSpec::k_lambda(lam), lam);
  CHECK(rep.sup == doctest::Approx(lam * 0.999 * 0.999).epsilon(1e-12));
  CHECK(std::abs(std::abs(rep.witness) - 0.999) <= 1e-12);
  CHECK(rep.verdict == Verdict::member);
  // first attaining grid point in radius-major order: outermost radius, angle 0
  CHECK(rep.witness.imag() == doctest::Approx(0.0));
}

TEST_CASE("u_deviation of the identity is zero") {
  const auto rep = u_deviation(identity_member(), 0.5);
  CHECK(rep.sup <= 1e-14);
  CHECK(rep.verdict == Verdict::member);
}

TEST_CASE("u_deviation flags the test function as nonmember") {
  for (double lam : {0.3, 0.7, 1.0}) {
    const auto rep = u_deviation(FunctionSpec::test_g(lam), lam);
    CHECK(rep.verdict == Verdict::nonmember);
    const double r = 0.999;
    const double expect = (1.0 + lam) * r * r + 3.0 * lam * r * r * r * r;
    CHECK(rep.sup == doctest::Approx(expect).epsilon(1e-12));
    CHECK(rep.sup > lam);
  }
}

TEST_CASE("u_deviation is invariant under grid-aligned rotations") {
  const DiskGrid grid{};
  const auto base = u_deviation(FunctionSpec::test_g(0.6), 0.6, grid);
  for (int k : {1, 37, 360}) {
    const Complex x = unit(kTwoPi * k / grid.angles);
    const auto rot = u_deviation(rotate(FunctionSpec::test_g(0.6), x), 0.6, grid);
    CHECK(std::abs(rot.sup - base.sup) <= 1e-10);
  }
  const auto member = sample_members(0.8, 1, 7)[0];
  const auto mbase = u_deviation(member, 0.8, grid);
  const auto mrot =
      u_deviation(rotate(member, unit(kTwoPi * 123 / grid.angles)), 0.8, grid);
  CHECK(std::abs(mrot.sup - mbase.sup) <= 1e-10);
}

TEST_CASE("schwarz members meet the construction residual bound") {
  for (double lam : {0.3, 1.0}) {
    for (const auto& f : sample_members(lam, 10, 99)) {
      const DiskGrid grid{};
      double sup_psi = 0.0;
      for (double r : grid.radius_values())
        for (int j = 0; j < grid.angles; ++j)
          sup_psi = std::max(sup_psi, std::abs(evaluate(f.psi(), r * unit(grid.angle(j)))));
      const auto rep = u_deviation(f, lam, grid);
      CHECK(rep.sup <= lam * 0.999 * 0.999 * sup_psi + 1e-9);
      CHECK(rep.verdict == Verdict::member);
    }
  }
}

TEST_CASE("u_deviation reports a zero of f as immediate nonmember") {
  // f = z - 2 z^2 vanishes at z = 1/2; the grid radius 0.5 is not sampled,
  // but a series with a zero at a grid point is caught.
  std::vector<Complex> c(4);
  c[1] = 1.0;
  c[2] = -1.0 / 0.999;
  const auto rep = u_deviation(FunctionSpec::series(PowerSeries(std::move(c))), 1.0);
  CHECK(rep.verdict == Verdict::nonmember);
  CHECK(std::isinf(rep.sup));
}

TEST_CASE("starlike_min_re") {
  CHECK(starlike_min_re(identity_member()) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(starlike_min_re(FunctionSpec::koebe()) >= 0.0);
  DiskGrid grid{};
  grid.r_max = 0.99;
  CHECK(starlike_min_re(FunctionSpec::k_lambda(0.5), grid) > 0.0);
}

TEST_CASE("m_deviation") {
  const MeromorphicSeries id({{0.0, 0.0}, {0.0, 0.0}});
  const auto rep0 = m_deviation(id, 0.5);
  CHECK(rep0.sup == 0.0);
  CHECK(rep0.verdict == Verdict::member);

  const double lam = 0.6;
  const MeromorphicSeries pole({{0.0, 0.0}, {-lam, 0.0}});
  const auto rep = m_deviation(pole, lam);
  CHECK(rep.sup == doctest::Approx(lam / (1.001 * 1.001)).epsilon(1e-12));
  CHECK(std::abs(std::abs(rep.witness) - 1.001) <= 1e-12);
  CHECK(rep.verdict == Verdict::member);

  const MeromorphicSeries koebe_tail({{-2.0, 0.0}, {1.0, 0.0}});
  const auto repk = m_deviation(koebe_tail, 1.0);
  CHECK(repk.sup == doctest::Approx(1.0 / (1.001 * 1.001)).epsilon(1e-12));
}

TEST_CASE("preimage_in_disk") {
  CHECK(preimage_in_disk(0.5, {1.0, 0.0}));
  CHECK(preimage_in_disk(1.0, {4.0, 0.0}));
  CHECK(!preimage_in_disk(0.5, {1.0 / 3.0, 0.0}));
  CHECK_THROWS_AS(preimage_in_disk(0.5, {0.0, 0.0}), WIsZero);
}

TEST_CASE("phi_boundary") {
  {
    const auto [u, v] = phi_boundary(0.5, std::numbers::pi);
    CHECK(u == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(v) <= 1e-15);
  }
  {
    const auto [u, v] = phi_boundary(1.0, std::numbers::pi);
    CHECK(u == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(v) <= 1e-15);
  }
  // consistency with the closed-form family on the unit circle
  for (double lam : {0.3, 0.8}) {
    for (int j = 1; j < 40; ++j) {
      const double th = 0.15 + (kTwoPi - 0.3) * j / 40.0;
      const auto [u, v] = phi_boundary(lam, th);
      const Complex z = unit(th);
      const Complex w = eval(FunctionSpec::k_lambda(lam), z) / z;
      CHECK(std::abs(Complex{u, v} - w) <= 1e-10);
      CHECK(curve_residual(lam, u, v) < 1e-9);
    }
  }
  CHECK_THROWS_AS(phi_boundary(0.5, 0.0), ThetaAtSingularity);
  CHECK_THROWS_AS(phi_boundary(0.5, kTwoPi), ThetaAtSingularity);
}

TEST_CASE("curve_residual") {
  CHECK(curve_residual(1.0, 0.25, 0.0) == doctest::Approx(0.0));
  // off-curve point has positive residual
  CHECK(curve_residual(0.5, 0.0, 0.5) > 1e-3);
  CHECK_THROWS_AS(curve_residual(0.5, asymptote(0.5), 0.0), DenominatorZero);
}

TEST_CASE("asymptote") {
  CHECK(std::abs(asymptote(1.0 / 3.0)) <= 1e-15);
  CHECK(asymptote(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(asymptote(1.0), LambdaIsOne);
}

TEST_CASE("nonconvexity witness") {
  const auto w = nonconvexity_witness(0.5, 200000);
  REQUIRE(w.has_value());
  CHECK(!preimage_in_disk(0.5, w->w1));
  CHECK(!preimage_in_disk(0.5, w->w2));
  CHECK(preimage_in_disk(0.5, w->mid));

  CHECK(!nonconvexity_witness(1.0, 200000).has_value());
  CHECK(!nonconvexity_witness(0.5, 10).has_value());  // budget exhausted
}

TEST_CASE("verdicts are monotone under grid refinement") {
  for (int angles : {360, 720, 1440}) {
    DiskGrid coarse{};
    coarse.angles = angles;
    DiskGrid fine{};
    fine.angles = 2 * angles;
    for (double lam : {0.4, 0.9}) {
      const auto a = u_deviation(FunctionSpec::test_g(lam), lam, coarse);
      const auto b = u_deviation(FunctionSpec::test_g(lam), lam, fine);
      CHECK(b.sup >= a.sup - 1e-15);
      if (a.verdict == Verdict::nonmember) CHECK(b.verdict == Verdict::nonmember);
    }
  }
}
