#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ulambda/grid.hpp"
#include "ulambda/series.hpp"

namespace ulambda {

struct PoleAtPoint : std::domain_error {
  PoleAtPoint() : std::domain_error("eval: denominator vanishes at the point") {}
};
struct VanishingDenominator : std::domain_error {
  VanishingDenominator() : std::domain_error("member_from_schwarz: z/f has a zero; candidate rejected") {}
};
struct PsiUnbounded : std::domain_error {
  PsiUnbounded() : std::domain_error("member_from_schwarz: |psi| exceeds 1 on the validation grid") {}
};
struct InvalidMeasure : std::domain_error {
  InvalidMeasure() : std::domain_error("measure atoms must be unit modulus with nonnegative weights summing to 1") {}
};
struct NotUnitModulus : std::domain_error {
  NotUnitModulus() : std::domain_error("rotation factor must be unit modulus") {}
};

struct CircleAtom {
  Complex x;  // unit modulus
  double w;   // nonnegative weight
};

/// Finitely many unit-modulus atoms with weights summing to 1.
class DiscreteCircleMeasure {
 public:
  explicit DiscreteCircleMeasure(std::vector<CircleAtom> atoms);
  std::span<const CircleAtom> atoms() const { return atoms_; }

 private:
  std::vector<CircleAtom> atoms_;
};

enum class SpecKind {
  koebe,
  k_lambda,
  rational_member,
  test_g,
  rotation,
  schwarz_member,
  hull_measure,
  series,
};

/// Tagged description of a normalized analytic function on the unit disk.
/// Closed-form kinds:
///   koebe            z/(1-z)^2
///   k_lambda         z/((1-z)(1-lambda z))
///   rational_member  z/(1-lambda z^2)
///   test_g           z/((1-z^2)(1-lambda z^2))
///   rotation         conj-rotated base: x^{-1} f(x z)
///   schwarz_member   z/h with h = 1 - a2 z - lambda z int_0^z psi
///   hull_measure     int z/(1-xz)^{-2} dmu(x) over circle atoms
///   series           raw truncated Taylor coefficients
class FunctionSpec {
 public:
  static FunctionSpec koebe();
  static FunctionSpec k_lambda(double lambda);
  static FunctionSpec rational_member(double lambda);
  static FunctionSpec test_g(double lambda);
  static FunctionSpec series(PowerSeries s);

  SpecKind kind() const;
  std::string kind_name() const;

  // Kind-specific accessors; meaningful only for the matching kind.
  double lambda() const { return lambda_; }
  Complex rotation_factor() const { return x_; }
  const FunctionSpec& rotation_base() const { return *base_; }
  Complex a2() const { return a2_; }
  const PowerSeries& psi() const { return *psi_; }
  const DiscreteCircleMeasure& measure() const { return *measure_; }
  const PowerSeries& raw_series() const { return *series_; }

  friend FunctionSpec member_from_schwarz(double lambda, Complex a2, const PowerSeries& psi);
  friend FunctionSpec hull_from_measure(const DiscreteCircleMeasure& mu, int order);
  friend FunctionSpec rotate(const FunctionSpec& spec, Complex x);
  friend std::optional<PowerSeries> z_over_f(const FunctionSpec& spec);

 private:
  FunctionSpec() = default;

  SpecKind kind_ = SpecKind::koebe;
  double lambda_ = 1.0;
  Complex x_{1.0, 0.0};
  std::shared_ptr<const FunctionSpec> base_;
  Complex a2_{};
  std::shared_ptr<const PowerSeries> psi_;
  std::shared_ptr<const PowerSeries> h_;  // z/f for schwarz members, precomputed
  std::shared_ptr<const DiscreteCircleMeasure> measure_;
  std::shared_ptr<const PowerSeries> series_;
};

/// m-th derivative of the spec's function at z. Closed-form kinds evaluate
/// exactly (rational algebra); the series kind evaluates its truncation.
Complex eval(const FunctionSpec& spec, Complex z, int deriv_order = 0);

/// Taylor coefficients a_0..a_N of the spec's function.
PowerSeries series_of(const FunctionSpec& spec, int order);

/// Build f with z/f(z) = 1 - a2 z - lambda z int_0^z psi(t) dt, so that
/// f'(z)(z/f)^2 - 1 = lambda z^2 psi(z). Requires |psi| <= 1 on the boundary
/// validation grid and z/f zero-free in the disk (checked on the grid and by
/// a winding-number count on a circle near the boundary).
FunctionSpec member_from_schwarz(double lambda, Complex a2, const PowerSeries& psi);

/// Function with coefficients a_n = n sum_k w_k x_k^{n-1}; lies in the closed
/// convex hull of the starlike class by construction.
FunctionSpec hull_from_measure(const DiscreteCircleMeasure& mu, int order = kDefaultOrder);

/// x^{-1} f(x z) for |x| = 1; preserves normalization.
FunctionSpec rotate(const FunctionSpec& spec, Complex x);

/// The polynomial h with f = z/h, when the spec admits one (every closed-form
/// kind and rotations thereof). Exact coefficients; empty for hull and series
/// kinds.
std::optional<PowerSeries> z_over_f(const FunctionSpec& spec);

/// Deterministic sampler of certified members: random bounded psi (scaled
/// Blaschke products) and admissible a2. Candidates whose z/f factor is not
/// provably zero-free are discarded and redrawn.
std::vector<FunctionSpec> sample_members(double lambda, int count, unsigned seed);

/// Random probability measure with the given number of atoms.
DiscreteCircleMeasure sample_measure(int n_atoms, std::mt19937& rng);

}  // namespace ulambda
