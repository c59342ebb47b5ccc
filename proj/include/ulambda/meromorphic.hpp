#pragma once

#include <span>

#include "ulambda/families.hpp"
#include "ulambda/meromorphic_types.hpp"
#include "ulambda/oracles.hpp"

namespace ulambda {

struct AreaNegative : std::domain_error {
  AreaNegative() : std::domain_error("area_omitted: sum n |b_n|^2 exceeds 1") {}
};
struct TOutOfRange : std::domain_error {
  TOutOfRange() : std::domain_error("convex_combine: t must lie in (0, 1)") {}
};

/// Tail of g(zeta) = 1/f(1/zeta): b_n is coefficient n+1 of z/f, so
/// b_0 = -a_2 and b_1 = a_2^2 - a_3. The returned tail order is
/// min(order, f.order() - 2), the longest prefix the input determines.
MeromorphicSeries from_disk(const PowerSeries& f, int order = kDefaultOrder);

/// Inverse of from_disk: the disk function 1/g(1/z) as a power series.
PowerSeries to_disk(const MeromorphicSeries& g, int order = kDefaultOrder);

/// max over samples of |g'(1/z) - (z/f)^2 f'(z)| with g transferred from the
/// spec at the default order.
double gprime_identity_check(const FunctionSpec& spec, std::span<const Complex> samples);

/// pi (1 - sum n |b_n|^2), the area of the omitted set of a univalent g.
double area_omitted(const MeromorphicSeries& g);

struct AreaBoundResult {
  bool holds = false;
  double sum = 0.0;  // sum n |b_n|^2
};

/// Checks sum n |b_n|^2 <= lambda^2 (+1e-9) and the corresponding area window.
AreaBoundResult coefficient_area_bound(const MeromorphicSeries& g, double lambda);

/// Sufficient extreme-point condition: the coefficient sum attains lambda^2
/// within tol. Absence of the condition proves nothing.
bool is_extreme_candidate(const MeromorphicSeries& g, double lambda, double tol = 1e-6);

/// Coefficientwise mix t g1 + (1-t) g2 of two Sigma_0-normalized tails.
MeromorphicSeries convex_combine(const MeromorphicSeries& g1, const MeromorphicSeries& g2,
                                 double t);

}  // namespace ulambda
