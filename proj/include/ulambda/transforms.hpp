#pragma once

#include <string>

#include "ulambda/families.hpp"

namespace ulambda {

struct VanishingDerivative : std::domain_error {
  VanishingDerivative() : std::domain_error("derivative vanishes at the evaluation point") {}
};

enum class NormMethod { closed_form, profile_max, grid_sup };

std::string norm_method_name(NormMethod m);

/// Pre-Schwarzian norm estimate. profile_max values come from a 1-D
/// maximization on the radius and are accurate to the stated tolerance;
/// grid_sup values are lower-bound estimates (sup of exact point values over
/// the grid plus a radial golden-section refinement at the best angle).
struct NormEstimate {
  double value = 0.0;
  NormMethod method = NormMethod::grid_sup;
  Complex argmax{};  // radius on the real axis for profile_max, point for grid_sup
};

/// Alexander transform: coefficient n of the result is a_n / n.
PowerSeries alexander(const PowerSeries& f);

/// Nonlinear transform with derivative (f/z)^alpha (principal formal branch).
/// alpha = 1 reduces to alexander, alpha = 0 to z.
PowerSeries j_alpha(const PowerSeries& f, Complex alpha);

/// T_f(z) = f''(z)/f'(z).
Complex pre_schwarzian(const FunctionSpec& spec, Complex z);

/// T of the alexander transform of the spec, scaled by alpha:
/// alpha (f'/f - 1/z); series-backed near the origin for stability.
Complex transform_pre_schwarzian(const FunctionSpec& spec, Complex alpha, Complex z);

/// Radial profile (1-r^2) |T_{J[k_lambda]}(r)| = 1 + r + lambda(1-r^2)/(1-lambda r),
/// extended continuously to r = 1.
double phi_profile(double lambda, double r);

/// Closed form of the pre-Schwarzian norm of J_alpha[k_lambda]:
/// 2|alpha| up to lambda = 1/3, then |alpha| (3 + lambda - 2 sqrt(2(1-lambda^2)))/lambda.
double norm_J_klambda_closed(double lambda, Complex alpha);

/// Pre-Schwarzian norm of the spec's own function.
NormEstimate pre_schwarzian_norm(const FunctionSpec& spec);

/// Pre-Schwarzian norm of J_alpha[spec]. For k_lambda (and koebe) the radial
/// profile is maximized by golden section to 1e-10; other kinds fall back to
/// the grid estimate.
NormEstimate transform_norm_numeric(const FunctionSpec& spec, Complex alpha);

}  // namespace ulambda
