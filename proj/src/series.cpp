#include "ulambda/series.hpp"

#include <algorithm>
#include <cmath>

namespace ulambda {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 3) throw std::invalid_argument("PowerSeries: order must be >= 2");
  for (const Complex& v : c_)
    if (!finite(v)) throw std::invalid_argument("PowerSeries: non-finite coefficient");
}

PowerSeries PowerSeries::zero(int order) {
  return PowerSeries(std::vector<Complex>(std::max(order, 2) + 1));
}

PowerSeries PowerSeries::one(int order) {
  std::vector<Complex> c(std::max(order, 2) + 1);
  c[0] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order) {
  std::vector<Complex> c(std::max(order, 2) + 1);
  c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(int order) {
  std::vector<Complex> c(std::max(order, 2) + 1, Complex{1.0, 0.0});
  return PowerSeries(std::move(c));
}

bool PowerSeries::is_normalized(double tol) const {
  return std::abs(c_[0]) <= tol && std::abs(c_[1] - 1.0) <= tol;
}

PowerSeries PowerSeries::truncated(int order) const {
  std::vector<Complex> c(std::max(order, 2) + 1);
  const int n = std::min(c.size(), c_.size());
  std::copy_n(c_.begin(), n, c.begin());
  return PowerSeries(std::move(c));
}

PowerSeries product(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Complex s{};
    for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
    c[k] = s;
  }
  return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (std::abs(a.coeff(0)) < 1e-14) throw ZeroConstantTerm();
  const int n = a.order();
  std::vector<Complex> b(n + 1);
  b[0] = 1.0 / a.coeff(0);
  for (int k = 1; k <= n; ++k) {
    Complex s{};
    for (int j = 1; j <= k; ++j) s += a.coeff(j) * b[k - j];
    b[k] = -s / a.coeff(0);
  }
  return PowerSeries(std::move(b));
}

// First-order ODE recurrence L' = a'/a, i.e. n l_n = n c_n - sum_{k<n} k l_k c_{n-k}.
PowerSeries log_unit(const PowerSeries& a) {
  if (std::abs(a.coeff(0) - 1.0) > 1e-12) throw ConstantTermNotOne();
  const int n = a.order();
  std::vector<Complex> l(n + 1);
  for (int m = 1; m <= n; ++m) {
    Complex s = static_cast<double>(m) * a.coeff(m);
    for (int k = 1; k < m; ++k) s -= static_cast<double>(k) * l[k] * a.coeff(m - k);
    l[m] = s / static_cast<double>(m);
  }
  return PowerSeries(std::move(l));
}

// E' = a' E, i.e. n e_n = sum_{k=1..n} k c_k e_{n-k}, with e_0 = 1.
PowerSeries exp_series(const PowerSeries& a) {
  if (std::abs(a.coeff(0)) > 1e-12) throw ConstantTermNotZero();
  const int n = a.order();
  std::vector<Complex> e(n + 1);
  e[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    Complex s{};
    for (int k = 1; k <= m; ++k) s += static_cast<double>(k) * a.coeff(k) * e[m - k];
    e[m] = s / static_cast<double>(m);
  }
  return PowerSeries(std::move(e));
}

PowerSeries differentiate(const PowerSeries& a) {
  const int n = std::max(a.order() - 1, 2);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k + 1 <= a.order(); ++k)
    if (k <= n) c[k] = static_cast<double>(k + 1) * a.coeff(k + 1);
  return PowerSeries(std::move(c));
}

PowerSeries antidifferentiate(const PowerSeries& a) {
  std::vector<Complex> c(a.order() + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a.coeff(k) / static_cast<double>(k + 1);
  return PowerSeries(std::move(c));
}

PowerSeries div_by_z(const PowerSeries& a) {
  if (std::abs(a.coeff(0)) > 1e-12) throw NonzeroConstantTerm();
  const int n = std::max(a.order() - 1, 2);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k + 1 <= a.order(); ++k)
    if (k <= n) c[k] = a.coeff(k + 1);
  return PowerSeries(std::move(c));
}

PowerSeries mul_by_z(const PowerSeries& a) {
  std::vector<Complex> c(a.order() + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a.coeff(k);
  return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& w) {
  if (std::abs(w.coeff(0)) > 1e-12) throw InnerConstantTermNotZero();
  const int n = std::min(a.order(), w.order());
  const PowerSeries wn = w.truncated(n);
  // Horner on series: r = a_N; r = r*w + a_k.
  PowerSeries r = PowerSeries::zero(n);
  {
    std::vector<Complex> c(n + 1);
    c[0] = a.coeff(a.order());
    r = PowerSeries(std::move(c));
  }
  for (int k = a.order() - 1; k >= 0; --k) {
    PowerSeries t = product(r, wn);
    std::vector<Complex> c(t.coeffs().begin(), t.coeffs().end());
    c[0] += a.coeff(k);
    r = PowerSeries(std::move(c));
  }
  return r;
}

Complex evaluate(const PowerSeries& a, Complex z, int deriv_order) {
  if (deriv_order < 0) throw std::invalid_argument("evaluate: derivative order < 0");
  if (deriv_order > a.order()) return Complex{};
  // Coefficients of the m-th derivative, then Horner.
  const int m = deriv_order;
  const int n = a.order() - m;
  Complex r{};
  for (int k = n; k >= 0; --k) {
    double fall = 1.0;
    for (int j = 0; j < m; ++j) fall *= static_cast<double>(k + m - j);
    r = r * z + fall * a.coeff(k + m);
  }
  return r;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return PowerSeries(std::move(c));
}

PowerSeries subtract(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& a, Complex factor) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (Complex& v : c) v *= factor;
  return PowerSeries(std::move(c));
}

}  // namespace ulambda
