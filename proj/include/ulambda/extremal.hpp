#pragma once

#include <span>
#include <vector>

#include "ulambda/families.hpp"

namespace ulambda {

struct NearZeroIntegrand : std::domain_error {
  NearZeroIntegrand() : std::domain_error("negative-power mean: |f| below threshold at a node") {}
};
struct NearZeroModulus : std::domain_error {
  NearZeroModulus() : std::domain_error("log-modulus samples: |f| below threshold at a node") {}
};

/// Circle mean (1/2pi) int |f^(n)(r e^{i theta})|^p d theta by the uniform
/// trapezoidal rule (spectrally accurate for these analytic integrands).
struct MeanReport {
  double value = 0.0;
  int n = 0;
  double p = 0.0;
  double r = 0.0;
  int nodes = 0;
};

MeanReport integral_mean(const FunctionSpec& spec, int n, double p, double r, int nodes = 2048);

/// Independent p = 2, n = 0 oracle: sum |a_n|^2 r^{2n}.
double parseval_mean(const PowerSeries& f, double r);

/// Image arc length int r |f'(r e^{i theta})| d theta.
double arc_length(const FunctionSpec& spec, double r, int nodes = 2048);

/// Discrete star function of M uniform samples over [-pi, pi): star[k] is
/// (2pi/M) times the sum of the k largest samples, realizing the sup over
/// measurable sets of measure 2 theta_k at grid resolution. star[0] = 0 and
/// the sequence is concave.
struct StarSamples {
  std::vector<double> values;  // input samples
  std::vector<double> star;    // size M+1, star[k] at theta_k = pi k / M
};

StarSamples star_function(std::span<const double> samples);

struct DominanceResult {
  bool holds = false;
  double max_violation = 0.0;  // max over the grid of lhs - rhs
};

/// Pointwise check star(sign log|f|) <= star(sign log|k_lambda|) + 1e-8 on
/// the circle of radius r.
DominanceResult star_dominance(const FunctionSpec& f, double lambda, double r, int sign,
                               int nodes = 4096);

struct MeanComparison {
  bool holds = false;
  double gap = 0.0;  // mean(k_lambda) - mean(f)
};

/// Circle-mean comparison |f|^p vs |k_lambda|^p; the convex-dominance
/// consequence of the star inequality instantiated at Phi(x) = e^{px}.
MeanComparison convex_mean_check(const FunctionSpec& f, double lambda, double r, double p,
                                 int nodes = 2048);

/// Series of f'(z)(z/f)^2 - 1; the z^2 coefficient is a3 - a2^2.
PowerSeries schwarz_residual(const PowerSeries& f);

/// |a3 - mu a2^2|.
double fekete_szego_value(const PowerSeries& f, Complex mu);

/// Closed-form bound for |a3 - mu a2^2| over the class: the affine branch
/// |(1+lambda+lambda^2) - mu (1+lambda)^2| when mu is far from the center,
/// else 1 + lambda; continuous across the regime boundary.
double fs_bound(double lambda, Complex mu);

/// Grid maximization of |(1+lambda) c2 + ((1+lambda+lambda^2) -
/// mu (1+lambda)^2) c1^2| over |c1| <= 1, |c2| <= 1 - |c1|^2. The objective
/// is invariant under a joint phase shift, so the sweep covers |c1|, |c2| and
/// the relative phase, each with `resolution` steps.
double fs_search(double lambda, Complex mu, int resolution = 512);

/// max over 2 <= n <= N of |a_n| / n.
double coeff_bound_check(const PowerSeries& f);

}  // namespace ulambda
