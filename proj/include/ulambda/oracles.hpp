#pragma once

#include <optional>
#include <string>

#include "ulambda/families.hpp"
#include "ulambda/grid.hpp"
#include "ulambda/meromorphic_types.hpp"

namespace ulambda {

struct ZeroOfF : std::domain_error {
  ZeroOfF() : std::domain_error("function vanishes on the punctured disk grid") {}
};
struct WIsZero : std::domain_error {
  WIsZero() : std::domain_error("preimage_in_disk: w must be nonzero") {}
};
struct ThetaAtSingularity : std::domain_error {
  ThetaAtSingularity() : std::domain_error("phi_boundary: theta must lie in (0, 2*pi)") {}
};
struct DenominatorZero : std::domain_error {
  DenominatorZero() : std::domain_error("curve_residual: denominator vanishes") {}
};
struct LambdaIsOne : std::domain_error {
  LambdaIsOne() : std::domain_error("asymptote: no vertical asymptote at lambda = 1") {}
};

enum class Verdict { member, nonmember, inconclusive };

std::string verdict_name(Verdict v);

/// Grid-limited certificate for a sup functional: the estimate is exact on the
/// grid, the verdict compares it against lambda at the given tolerance.
struct DeviationReport {
  double sup = 0.0;
  Complex witness{};
  Verdict verdict = Verdict::inconclusive;
  int grid_radii = 0;
  int grid_angles = 0;
  double grid_rmax = 0.0;
  double tol = 1e-6;
};

/// sup over the grid of |f'(z)(z/f)^2 - 1|, computed through the equivalent
/// h - z h' - 1 whenever z/f is available in closed form. A zero of f off the
/// origin makes the verdict nonmember immediately.
DeviationReport u_deviation(const FunctionSpec& spec, double lambda,
                            const DiskGrid& grid = {}, double tol = 1e-6);

/// min over the grid of Re(z f'/f); positive values are starlikeness evidence
/// at grid resolution.
double starlike_min_re(const FunctionSpec& spec, const DiskGrid& grid = {});

/// sup over the exterior grid of |g'(zeta) - 1|.
DeviationReport m_deviation(const MeromorphicSeries& g, double lambda,
                            const ExteriorGrid& grid = {}, double tol = 1e-6);

/// True iff k_lambda(z)/z = w for some |z| < 1 - 1e-12 (quadratic solve).
bool preimage_in_disk(double lambda, Complex w);

/// Boundary point (u, v) of the curve k_lambda(e^{i theta})/e^{i theta}.
std::pair<double, double> phi_boundary(double lambda, double theta);

/// Residual of the implicit boundary-curve equation at (u, v).
double curve_residual(double lambda, double u, double v);

/// Vertical asymptote (1 - 3 lambda) / (2 (1 - lambda)^2) of the boundary
/// curve; defined for lambda in (0, 1).
double asymptote(double lambda);

struct NonconvexityWitness {
  Complex w1;
  Complex w2;
  Complex mid;
};

/// Deterministic search for two points outside the image of k_lambda(z)/z
/// whose midpoint is inside it. Returns the first witness found in grid
/// order, or nothing (the complement is convex at lambda = 1). The budget
/// caps the number of preimage tests.
std::optional<NonconvexityWitness> nonconvexity_witness(double lambda, long budget);

}  // namespace ulambda
