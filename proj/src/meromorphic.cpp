#include "ulambda/meromorphic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ulambda {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

MeromorphicSeries::MeromorphicSeries(std::vector<Complex> b) : b_(std::move(b)) {
  if (b_.empty()) throw std::invalid_argument("MeromorphicSeries: empty tail");
  for (const Complex& v : b_)
    if (!finite(v)) throw std::invalid_argument("MeromorphicSeries: non-finite coefficient");
}

Complex MeromorphicSeries::eval(Complex zeta) const {
  const Complex u = 1.0 / zeta;
  Complex s{};
  for (int n = order(); n >= 0; --n) s = s * u + b_[n];
  return zeta + s;  // s = sum b_n u^n after the Horner sweep
}

Complex MeromorphicSeries::eval_gprime(Complex zeta) const {
  // g'(zeta) = 1 - sum_{n>=1} n b_n zeta^{-n-1}
  const Complex u = 1.0 / zeta;
  Complex s{};
  for (int n = order(); n >= 1; --n) s = s * u + static_cast<double>(n) * b_[n];
  return 1.0 - s * u * u;
}

MeromorphicSeries from_disk(const PowerSeries& f, int order) {
  if (!f.is_normalized()) throw NotNormalized();
  // Zero check where the truncation is trustworthy.
  {
    const DiskGrid grid{.radii = 12, .angles = 240, .r_min = 0.05, .r_max = 0.6};
    for (double r : grid.radius_values())
      for (int j = 0; j < grid.angles; ++j) {
        const double th = grid.angle(j);
        if (std::abs(evaluate(f, r * Complex{std::cos(th), std::sin(th)})) < 1e-12)
          throw ZeroOfF();
      }
  }
  // b_n = coefficient n+1 of z/f needs a_0..a_{n+2}, so only the prefix up to
  // f.order() - 2 is determined by the input; the tail stops there.
  const int max_n = std::min(order, f.order() - 2);
  if (max_n < 1) throw std::invalid_argument("from_disk: series order too small");
  const PowerSeries h = reciprocal(div_by_z(f));
  std::vector<Complex> b(max_n + 1);
  for (int n = 0; n <= max_n; ++n) b[n] = h.coeff(n + 1);
  return MeromorphicSeries(std::move(b));
}

PowerSeries to_disk(const MeromorphicSeries& g, int order) {
  std::vector<Complex> h(order + 1);
  h[0] = 1.0;
  for (int n = 1; n <= order; ++n) h[n] = g.b(n - 1);
  return mul_by_z(reciprocal(PowerSeries(std::move(h)))).truncated(order);
}

double gprime_identity_check(const FunctionSpec& spec, std::span<const Complex> samples) {
  const MeromorphicSeries g = from_disk(series_of(spec, kDefaultOrder), kDefaultOrder);
  double worst = 0.0;
  for (Complex z : samples) {
    const Complex fz = eval(spec, z, 0);
    const Complex q = z / fz;
    const Complex rhs = q * q * eval(spec, z, 1);
    worst = std::max(worst, std::abs(g.eval_gprime(1.0 / z) - rhs));
  }
  return worst;
}

double area_omitted(const MeromorphicSeries& g) {
  double s = 0.0;
  for (int n = 1; n <= g.order(); ++n) s += n * std::norm(g.b(n));
  if (s > 1.0 + 1e-12) throw AreaNegative();
  return std::numbers::pi * (1.0 - std::min(s, 1.0));
}

AreaBoundResult coefficient_area_bound(const MeromorphicSeries& g, double lambda) {
  double s = 0.0;
  for (int n = 1; n <= g.order(); ++n) s += n * std::norm(g.b(n));
  const bool sum_ok = s <= lambda * lambda + 1e-9;
  bool area_ok = true;
  if (s <= 1.0 + 1e-12) {
    const double area = std::numbers::pi * (1.0 - std::min(s, 1.0));
    area_ok = area >= std::numbers::pi * (1.0 - lambda * lambda) - 1e-9 &&
              area <= std::numbers::pi + 1e-9;
  } else {
    area_ok = false;
  }
  return {sum_ok && area_ok, s};
}

bool is_extreme_candidate(const MeromorphicSeries& g, double lambda, double tol) {
  if (!g.sigma0_normalized()) throw NotSigmaZeroNormalized();
  double s = 0.0;
  for (int n = 1; n <= g.order(); ++n) s += n * std::norm(g.b(n));
  return std::abs(s - lambda * lambda) <= tol;
}

MeromorphicSeries convex_combine(const MeromorphicSeries& g1, const MeromorphicSeries& g2,
                                 double t) {
  if (!(t > 0.0 && t < 1.0)) throw TOutOfRange();
  if (!g1.sigma0_normalized() || !g2.sigma0_normalized()) throw NotSigmaZeroNormalized();
  const int n = std::max(g1.order(), g2.order());
  std::vector<Complex> b(n + 1);
  for (int k = 0; k <= n; ++k) b[k] = t * g1.b(k) + (1.0 - t) * g2.b(k);
  return MeromorphicSeries(std::move(b));
}

}  // namespace ulambda
