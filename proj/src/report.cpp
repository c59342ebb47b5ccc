#include "ulambda/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "ulambda/extremal.hpp"
#include "ulambda/families.hpp"
#include "ulambda/meromorphic.hpp"
#include "ulambda/oracles.hpp"
#include "ulambda/transforms.hpp"

namespace ulambda {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

double unit_real(std::mt19937& rng) { return static_cast<double>(rng()) / 4294967296.0; }

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

struct Check {
  bool ok = true;
  double worst = 0.0;  // most adverse margin seen (positive = violation)

  void require(bool cond) { ok = ok && cond; }
  void bound(double violation) {
    worst = std::max(worst, violation);
    ok = ok && violation <= 0.0;
  }
};

struct MemberSets {
  std::vector<FunctionSpec> at03;
  std::vector<FunctionSpec> at07;
  std::vector<FunctionSpec> at10;  // 200 members; criteria needing 50 use a prefix

  const std::vector<FunctionSpec>& at(double lambda) const {
    if (lambda == 0.3) return at03;
    if (lambda == 0.7) return at07;
    return at10;
  }
};

std::vector<double> log_modulus(const FunctionSpec& f, double r, int sign, int nodes) {
  std::vector<double> s(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double th = -kPi + kTwoPi * j / nodes;
    s[j] = sign * std::log(std::abs(eval(f, r * unit(th), 0)));
  }
  return s;
}

bool star_concave(const StarSamples& st) {
  if (st.star.front() != 0.0) return false;
  for (std::size_t k = 1; k + 1 < st.star.size(); ++k)
    if (st.star[k + 1] - 2.0 * st.star[k] + st.star[k - 1] > 1e-12) return false;
  return true;
}

// --- criteria -------------------------------------------------------------

CriterionResult c1_norm_formula() {
  Check chk;
  double worst = 0.0;
  const Complex alphas[] = {{1.0, 0.0}, {0.5, 0.5}};
  for (int i = 1; i <= 20; ++i) {
    const double lam = 0.05 * i;
    for (Complex alpha : alphas) {
      const double numeric = transform_norm_numeric(FunctionSpec::k_lambda(lam), alpha).value;
      const double closed = norm_J_klambda_closed(lam, alpha);
      worst = std::max(worst, std::abs(numeric - closed));
    }
  }
  chk.bound(worst - 1e-6);
  chk.require(std::abs(norm_J_klambda_closed(1.0, {1.0, 0.0}) - 4.0) <= 1e-12);
  chk.require(std::abs(transform_norm_numeric(FunctionSpec::koebe(), {1.0, 0.0}).value - 4.0) <=
              1e-6);
  // Branch continuity at lambda = 1/3.
  const double lam = 1.0 / 3.0;
  const double branch2 = (3.0 + lam - 2.0 * std::sqrt(2.0 * (1.0 - lam * lam))) / lam;
  chk.require(std::abs(branch2 - 2.0) <= 1e-12);
  chk.require(std::abs(norm_J_klambda_closed(lam, {1.0, 0.0}) - 2.0) <= 1e-12);
  return {1, "norm formula for J_alpha[k_lambda]", chk.ok, fmt("max |numeric-closed| = %.3g", worst)};
}

CriterionResult c2_norm_dominance(const MemberSets& members) {
  Check chk;
  double worst = -1e300;
  for (double lam : {0.3, 0.7, 1.0}) {
    const double closed = norm_J_klambda_closed(lam, {1.0, 0.0});
    const auto& set = members.at(lam);
    const int count = std::min<int>(50, set.size());
    for (int i = 0; i < count; ++i) {
      const double v = transform_norm_numeric(set[i], {1.0, 0.0}).value;
      worst = std::max(worst, v - closed);
    }
  }
  chk.bound(worst - 1e-6);
  return {2, "norm dominance over generated members", chk.ok,
          fmt("max norm excess over closed form = %.3g", worst)};
}

CriterionResult c3_integral_means(const MemberSets& members) {
  Check chk;
  // Quadrature against the Parseval oracle.
  double worst_quad = 0.0;
  std::vector<FunctionSpec> refs;
  refs.push_back(FunctionSpec::koebe());
  for (double lam : {0.3, 0.7, 1.0}) refs.push_back(FunctionSpec::k_lambda(lam));
  for (const FunctionSpec& spec : refs) {
    const PowerSeries s = series_of(spec, 512);
    for (double r : {0.3, 0.6, 0.9}) {
      const double quad = integral_mean(spec, 0, 2.0, r, 2048).value;
      worst_quad = std::max(worst_quad, std::abs(quad - parseval_mean(s, r)));
    }
  }
  chk.bound(worst_quad - 1e-9);

  // Mean dominance against the Koebe extremal for U(1) members.
  const FunctionSpec koebe = FunctionSpec::koebe();
  double worst_rel = -1e300;
  const double ps_with_zero[] = {1.0, 2.0, 3.0, -1.0, 0.5};
  for (double r : {0.5, 0.9}) {
    for (int n = 0; n <= 2; ++n) {
      const int np = (n == 0) ? 5 : 3;
      for (int ip = 0; ip < np; ++ip) {
        const double p = ps_with_zero[ip];
        const double mk = integral_mean(koebe, n, p, r, 2048).value;
        for (const FunctionSpec& f : members.at10) {
          const double mf = integral_mean(f, n, p, r, 2048).value;
          worst_rel = std::max(worst_rel, mf / mk - 1.0);
        }
      }
    }
  }
  chk.bound(worst_rel - 1e-8);
  return {3, "integral means: quadrature oracle and dominance", chk.ok,
          fmt("quad gap %.3g, max relative excess %.3g", worst_quad, worst_rel)};
}

CriterionResult c4_arc_length(const MemberSets& members) {
  Check chk;
  double worst = -1e300;
  for (double r : {0.5, 0.9}) {
    const double lk = arc_length(FunctionSpec::koebe(), r, 2048);
    for (const FunctionSpec& f : members.at10)
      worst = std::max(worst, arc_length(f, r, 2048) / lk - 1.0);
  }
  chk.bound(worst - 1e-8);
  return {4, "arc length dominance", chk.ok, fmt("max relative excess %.3g", worst)};
}

CriterionResult c5_star_dominance(const MemberSets& members) {
  Check chk;
  double worst = -1e300;
  bool concavity = true;
  for (double lam : {0.3, 0.7, 1.0}) {
    const auto& set = members.at(lam);
    const int count = std::min<int>(50, set.size());
    for (double r : {0.5, 0.9}) {
      for (int sign : {1, -1}) {
        const FunctionSpec klam = FunctionSpec::k_lambda(lam);
        concavity = concavity && star_concave(star_function(log_modulus(klam, r, sign, 4096)));
        for (int i = 0; i < count; ++i) {
          const auto res = star_dominance(set[i], lam, r, sign, 4096);
          worst = std::max(worst, res.max_violation);
          if (i == 0)
            concavity =
                concavity && star_concave(star_function(log_modulus(set[i], r, sign, 4096)));
        }
      }
    }
  }
  chk.bound(worst - 1e-8);
  chk.require(concavity);
  return {5, "star function dominance and concavity", chk.ok,
          fmt("max pointwise violation %.3g", worst)};
}

CriterionResult c6_fekete_szego(const MemberSets& members) {
  Check chk;
  // Search vs closed bound on a grid covering both regimes.
  double worst_gap = 0.0, worst_over = -1e300;
  const double mus[] = {-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
  for (double lam : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    for (double mu : mus) {
      const double bound = fs_bound(lam, {mu, 0.0});
      const double search = fs_search(lam, {mu, 0.0}, 512);
      worst_gap = std::max(worst_gap, bound - search);
      worst_over = std::max(worst_over, search - bound);
    }
  }
  chk.bound(worst_gap - 1e-3);
  chk.bound(worst_over - 1e-8);

  // Every generated member obeys the bound on a complex mu grid, and the
  // Schwarz-lemma special case mu = 1.
  double worst_member = -1e300;
  for (double lam : {0.3, 0.7, 1.0}) {
    for (const FunctionSpec& f : members.at(lam)) {
      const PowerSeries s = series_of(f, 8);
      for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
          const Complex mu{-2.0 + 0.2 * i, -2.0 + 0.2 * j};
          worst_member =
              std::max(worst_member, fekete_szego_value(s, mu) - fs_bound(lam, mu));
        }
      worst_member =
          std::max(worst_member, fekete_szego_value(s, {1.0, 0.0}) - lam);
    }
  }
  chk.bound(worst_member - 1e-9);

  // The paper's test function is a genuine nonmember.
  for (double lam : {0.3, 0.7, 1.0}) {
    const auto rep = u_deviation(FunctionSpec::test_g(lam), lam);
    chk.require(rep.verdict == Verdict::nonmember && rep.sup > lam);
  }
  return {6, "Fekete-Szego bound, search, and nonmember witness", chk.ok,
          fmt("search gap %.3g, member excess %.3g", worst_gap, worst_member)};
}

CriterionResult c7_hull(unsigned seed) {
  Check chk;
  std::mt19937 rng(seed + 7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = sample_measure(20, rng);
    worst = std::max(worst, coeff_bound_check(series_of(hull_from_measure(mu), 64)) - 1.0);
  }
  chk.bound(worst - 1e-12);

  double worst_atom = 0.0;
  for (int k = 0; k < 8; ++k) {
    const Complex x = unit(kTwoPi * k / 8.0);
    const auto single = hull_from_measure(DiscreteCircleMeasure({{x, 1.0}}));
    const PowerSeries a = series_of(single, 64);
    const PowerSeries b = series_of(rotate(FunctionSpec::koebe(), x), 64);
    for (int n = 0; n <= 64; ++n)
      worst_atom = std::max(worst_atom, std::abs(a.coeff(n) - b.coeff(n)));
  }
  chk.bound(worst_atom - 1e-12);
  return {7, "hull representation and coefficient bound", chk.ok,
          fmt("max |a_n|/n excess %.3g, atom mismatch %.3g", worst, worst_atom)};
}

CriterionResult c8_geometry() {
  Check chk;
  // Residuals of the boundary-curve identity, sampled away from the theta -> 0
  // singularity where the identity is numerically ill-conditioned.
  double worst_res = 0.0;
  for (double lam : {0.3, 0.5, 0.9, 1.0}) {
    for (int j = 0; j < 720; ++j) {
      const double th = 0.05 + (kTwoPi - 0.1) * j / 719.0;
      const auto [u, v] = phi_boundary(lam, th);
      worst_res = std::max(worst_res, curve_residual(lam, u, v));
    }
  }
  chk.bound(worst_res - 1e-9);

  for (double lam : {0.3, 0.5, 0.9}) {
    const double expect = (1.0 - 3.0 * lam) / (2.0 * (1.0 - lam) * (1.0 - lam));
    chk.require(asymptote(lam) == expect);
    const auto w = nonconvexity_witness(lam, 1000000);
    chk.require(w.has_value());
    if (w) {
      chk.require(!preimage_in_disk(lam, w->w1));
      chk.require(!preimage_in_disk(lam, w->w2));
      chk.require(preimage_in_disk(lam, w->mid));
      chk.require(std::abs(0.5 * (w->w1 + w->w2) - w->mid) == 0.0);
    }
  }
  chk.require(!nonconvexity_witness(1.0, 1000000).has_value());
  return {8, "boundary curve, asymptote, nonconvexity", chk.ok,
          fmt("max curve residual %.3g", worst_res)};
}

CriterionResult c9_meromorphic(const MemberSets& members, unsigned seed) {
  Check chk;
  double worst_id = 0.0;
  std::vector<FunctionSpec> specs = {FunctionSpec::koebe(), FunctionSpec::k_lambda(0.5),
                                     FunctionSpec::rational_member(0.5)};
  for (int i = 0; i < 50 && i < static_cast<int>(members.at10.size()); ++i)
    specs.push_back(members.at10[i]);
  for (const FunctionSpec& spec : specs) {
    const PowerSeries s = series_of(spec, 64);
    const MeromorphicSeries g = from_disk(s, 64);
    const Complex a2 = s.coeff(2), a3 = s.coeff(3);
    worst_id = std::max(worst_id, std::abs(g.b(0) + a2));
    worst_id = std::max(worst_id, std::abs(g.b(1) - (a2 * a2 - a3)));
  }
  chk.bound(worst_id - 1e-12);

  std::vector<Complex> samples;
  for (double r : {0.2, 0.45, 0.7, 0.9})
    for (int k = 0; k < 4; ++k) samples.push_back(r * unit(kTwoPi * k / 4.0 + 0.37));
  double worst_gp = 0.0;
  for (const FunctionSpec& spec :
       {specs[0], specs[1], specs[2], specs[3], specs[4], specs[5]})
    worst_gp = std::max(worst_gp, gprime_identity_check(spec, samples));
  chk.bound(worst_gp - 1e-8);

  for (double lam : {0.3, 0.7, 1.0}) {
    // area of zeta - lambda/zeta
    const MeromorphicSeries pole({{0.0, 0.0}, {-lam, 0.0}});
    chk.require(std::abs(area_omitted(pole) - kPi * (1.0 - lam * lam)) <= 1e-15 * kPi);

    const auto& set = members.at(lam);
    const int count = std::min<int>(50, set.size());
    for (int i = 0; i < count; ++i) {
      const MeromorphicSeries g = from_disk(series_of(set[i], 64), 64);
      chk.require(coefficient_area_bound(g, lam).holds);
    }

    for (int k = 0; k < 8; ++k) {
      const Complex b1 = lam * unit(kTwoPi * k / 8.0);
      const MeromorphicSeries g({Complex{}, b1});
      chk.require(is_extreme_candidate(g, lam, 1e-6));
      chk.require(m_deviation(g, lam).verdict == Verdict::member);
    }
    chk.require(!is_extreme_candidate(MeromorphicSeries({{0.0, 0.0}, {0.0, 0.0}}), lam, 1e-6));
    chk.require(
        !is_extreme_candidate(MeromorphicSeries({Complex{}, Complex{-lam / 2.0, 0.0}}), lam, 1e-6));
  }

  // Strict mixing: proper convex combinations of distinct extremal-sum tails
  // lose coefficient mass, per the per-coefficient parallelogram identity.
  std::mt19937 rng(seed + 9);
  const double lam = 0.7;
  double worst_mix = -1e300;
  double worst_identity = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&]() {
      std::vector<Complex> b(17);
      double sum = 0.0;
      for (int n = 1; n <= 16; ++n) {
        b[n] = Complex{2.0 * unit_real(rng) - 1.0, 2.0 * unit_real(rng) - 1.0};
        sum += n * std::norm(b[n]);
      }
      const double scl = lam / std::sqrt(sum);
      for (Complex& v : b) v *= scl;
      return MeromorphicSeries(std::move(b));
    };
    const MeromorphicSeries g1 = draw(), g2 = draw();
    const double t = 0.1 + 0.8 * unit_real(rng);
    const MeromorphicSeries mix = convex_combine(g1, g2, t);
    double sum_mix = 0.0, sum_diff = 0.0;
    for (int n = 1; n <= mix.order(); ++n) {
      sum_mix += n * std::norm(mix.b(n));
      sum_diff += n * std::norm(g1.b(n) - g2.b(n));
      const double lhs = std::norm(t * g1.b(n) + (1.0 - t) * g2.b(n));
      const double rhs = t * std::norm(g1.b(n)) + (1.0 - t) * std::norm(g2.b(n)) -
                         t * (1.0 - t) * std::norm(g1.b(n) - g2.b(n));
      worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
    }
    chk.require(sum_diff > 0.0);  // distinct draws
    worst_mix = std::max(worst_mix, sum_mix - (lam * lam - t * (1.0 - t) * sum_diff));
    chk.require(sum_mix < lam * lam);
  }
  chk.bound(worst_identity - 1e-12);
  chk.bound(std::abs(worst_mix) - 1e-12);
  return {9, "meromorphic transfer, area, extreme points", chk.ok,
          fmt("coeff identity gap %.3g, g' residual %.3g", worst_id, worst_gp)};
}

CriterionResult c10_series_engine(unsigned seed) {
  Check chk;
  std::mt19937 rng(seed + 10);
  int failures = 0;
  auto rand_coeff = [&](double env) {
    return Complex{env * (2.0 * unit_real(rng) - 1.0), env * (2.0 * unit_real(rng) - 1.0)};
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = 16;
    // Geometric envelopes keep the inverse problems well-conditioned.
    std::vector<Complex> av(order + 1), bv(order + 1), cv(order + 1);
    double env = 0.5;
    for (int n = 0; n <= order; ++n) {
      av[n] = rand_coeff(0.5);
      bv[n] = rand_coeff(0.5);
      cv[n] = rand_coeff(env);
      env *= 0.4;
    }
    const PowerSeries a(av), b(bv), c(cv);

    auto close = [&](const PowerSeries& x, const PowerSeries& y, double tol) {
      const int n = std::min(x.order(), y.order());
      for (int k = 0; k <= n; ++k)
        if (std::abs(x.coeff(k) - y.coeff(k)) > tol) return false;
      return true;
    };

    bool ok = true;
    ok = ok && close(product(a, b), product(b, a), 1e-12);
    ok = ok && close(product(product(a, b), c), product(a, product(b, c)), 1e-12);

    // reciprocal on a series bounded away from zero at the origin
    std::vector<Complex> rv(order + 1);
    rv[0] = Complex{1.0, 0.0} + 0.4 * rand_coeff(1.0);
    double renv = 0.4;
    for (int n = 1; n <= order; ++n) {
      rv[n] = rand_coeff(renv);
      renv *= 0.4;
    }
    const PowerSeries rser(rv);
    ok = ok && close(product(rser, reciprocal(rser)), PowerSeries::one(order), 1e-12);
    ok = ok && close(reciprocal(reciprocal(rser)), rser, 1e-12);

    // exp/log inverse pair
    std::vector<Complex> uv(order + 1);
    uv[0] = 1.0;
    double uenv = 0.5;
    for (int n = 1; n <= order; ++n) {
      uv[n] = rand_coeff(uenv);
      uenv *= 0.5;
    }
    const PowerSeries user(uv);
    ok = ok && close(exp_series(log_unit(user)), user, 1e-10);
    std::vector<Complex> wv(order + 1);
    double wenv = 0.5;
    for (int n = 1; n <= order; ++n) {
      wv[n] = rand_coeff(wenv);
      wenv *= 0.5;
    }
    const PowerSeries wser(wv);
    ok = ok && close(log_unit(exp_series(wser)), wser, 1e-10);

    // differentiation / antidifferentiation and the z-shift pair
    ok = ok && close(differentiate(antidifferentiate(a)), a, 1e-10);
    std::vector<Complex> nv(av);
    nv[0] = 0.0;
    nv[1] = 1.0;
    const PowerSeries norm_ser(nv);
    ok = ok && close(mul_by_z(div_by_z(norm_ser)), norm_ser, 0.0);

    // evaluate(f, z)/z vs evaluate(f/z, z)
    const double rr = 0.9 * std::sqrt(unit_real(rng));
    const Complex z = rr * unit(kTwoPi * unit_real(rng));
    if (std::abs(z) > 1e-3) {
      const Complex lhs = evaluate(norm_ser, z, 0) / z;
      const Complex rhs = evaluate(div_by_z(norm_ser), z, 0);
      ok = ok && std::abs(lhs - rhs) <= 1e-12;
    }

    if (!ok) ++failures;
  }
  chk.require(failures == 0);
  return {10, "series engine property battery", chk.ok,
          fmt("failures = %.0f of 1000", static_cast<double>(failures))};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, unsigned seed) {
  MemberSets members;
  members.at03 = sample_members(0.3, 50, seed);
  members.at07 = sample_members(0.7, 50, seed);
  members.at10 = sample_members(1.0, 200, seed);

  std::vector<CriterionResult> results;
  results.push_back(c1_norm_formula());
  results.push_back(c2_norm_dominance(members));
  results.push_back(c3_integral_means(members));
  results.push_back(c4_arc_length(members));
  results.push_back(c5_star_dominance(members));
  results.push_back(c6_fekete_szego(members));
  results.push_back(c7_hull(seed));
  results.push_back(c8_geometry());
  results.push_back(c9_meromorphic(members, seed));
  results.push_back(c10_series_engine(seed));

  for (const CriterionResult& r : results)
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  [" << r.detail
        << "]\n";
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace ulambda
