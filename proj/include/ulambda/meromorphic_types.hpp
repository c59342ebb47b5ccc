#pragma once

#include "ulambda/series.hpp"

namespace ulambda {

struct NotSigmaZeroNormalized : std::domain_error {
  NotSigmaZeroNormalized() : std::domain_error("meromorphic series must have b0 = 0") {}
};

/// Tail coefficients b_0..b_N of g(zeta) = zeta + sum_n b_n zeta^{-n} on
/// |zeta| > 1. Immutable.
class MeromorphicSeries {
 public:
  explicit MeromorphicSeries(std::vector<Complex> b);

  int order() const { return static_cast<int>(b_.size()) - 1; }
  Complex b(int n) const {
    return (n >= 0 && n < static_cast<int>(b_.size())) ? b_[n] : Complex{};
  }
  std::span<const Complex> tail() const { return b_; }

  bool sigma0_normalized(double tol = 1e-12) const { return std::abs(b_[0]) <= tol; }

  Complex eval(Complex zeta) const;         // g(zeta)
  Complex eval_gprime(Complex zeta) const;  // g'(zeta)

 private:
  std::vector<Complex> b_;
};

}  // namespace ulambda
