#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ulambda {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;

struct ZeroConstantTerm : std::domain_error {
  ZeroConstantTerm() : std::domain_error("reciprocal: constant term is zero") {}
};
struct ConstantTermNotOne : std::domain_error {
  ConstantTermNotOne() : std::domain_error("log_unit: constant term must be 1") {}
};
struct ConstantTermNotZero : std::domain_error {
  ConstantTermNotZero() : std::domain_error("exp_series: constant term must be 0") {}
};
struct NonzeroConstantTerm : std::domain_error {
  NonzeroConstantTerm() : std::domain_error("div_by_z: constant term must be 0") {}
};
struct InnerConstantTermNotZero : std::domain_error {
  InnerConstantTermNotZero() : std::domain_error("compose: inner series must vanish at 0") {}
};
struct NotNormalized : std::domain_error {
  NotNormalized() : std::domain_error("series is not normalized (c0 = 0, c1 = 1)") {}
};

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N, N >= 2.
/// Immutable after construction; every operation below is a pure function.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries one(int order);
  static PowerSeries identity(int order);   // z
  static PowerSeries geometric(int order);  // 1 + z + z^2 + ...

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : Complex{};
  }
  std::span<const Complex> coeffs() const { return c_; }

  // Class-A normalization: c0 = 0, c1 = 1.
  bool is_normalized(double tol = 1e-12) const;

  // Zero-pad or cut to the given order (clamped to >= 2).
  PowerSeries truncated(int order) const;

 private:
  std::vector<Complex> c_;
};

// Cauchy product, truncated to the smaller order.
PowerSeries product(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse; requires |c0| >= 1e-14.
PowerSeries reciprocal(const PowerSeries& a);

// Formal log of a series with c0 = 1; result has c0 = 0.
PowerSeries log_unit(const PowerSeries& a);

// Formal exp of a series with c0 = 0; result has c0 = 1.
PowerSeries exp_series(const PowerSeries& a);

PowerSeries differentiate(const PowerSeries& a);
PowerSeries antidifferentiate(const PowerSeries& a);  // constant of integration 0

PowerSeries div_by_z(const PowerSeries& a);  // requires c0 = 0
PowerSeries mul_by_z(const PowerSeries& a);

// Formal substitution a(w(z)); inner series must have c0 = 0.
PowerSeries compose(const PowerSeries& a, const PowerSeries& w);

// Horner evaluation of the m-th derivative at z. Truncation error is the
// discarded tail sum_{n>N} |c_n^{(m)}| |z|^n; for the geometrically decaying
// series used here it is negligible for |z| <= 0.6 and grows toward |z| = 0.999.
Complex evaluate(const PowerSeries& a, Complex z, int deriv_order = 0);

// Small helpers used across modules.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries subtract(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, Complex factor);

}  // namespace ulambda
