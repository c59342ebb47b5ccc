#include "ulambda/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ulambda {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Golden-section maximum of a unimodal profile on [a, b]; endpoints included.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol = 1e-10) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  for (double x : {a, b}) {
    const double fx = f(x);
    if (fx > fm) {
      fm = fx;
      xm = x;
    }
  }
  return {fm, xm};
}

// alpha (f'/f - 1/z), the pre-Schwarzian of J_alpha[f]. Uses -h'/h when z/f
// is polynomial (stable down to z = 0), otherwise the direct quotient with a
// series fallback near the origin.
struct TransformDerivative {
  const FunctionSpec& spec;
  Complex alpha;
  std::optional<PowerSeries> h;

  TransformDerivative(const FunctionSpec& s, Complex a) : spec(s), alpha(a), h(z_over_f(s)) {}

  Complex at(Complex z) const {
    if (h) {
      const Complex hz = evaluate(*h, z, 0);
      if (std::abs(hz) < 1e-250) throw VanishingDerivative();
      return -alpha * evaluate(*h, z, 1) / hz;
    }
    if (std::abs(z) < 0.05) {
      const PowerSeries q = div_by_z(series_of(spec, kDefaultOrder));
      const PowerSeries t = product(differentiate(q), reciprocal(q));
      return alpha * evaluate(t, z, 0);
    }
    const Complex fz = eval(spec, z, 0);
    if (std::abs(fz) < 1e-14 * std::abs(z)) throw VanishingDerivative();
    return alpha * (eval(spec, z, 1) / fz - 1.0 / z);
  }
};

template <typename W>
NormEstimate grid_norm_sup(W&& weight) {
  const DiskGrid grid{};
  double best = -1.0;
  Complex arg{};
  double best_theta = 0.0;
  for (double r : grid.radius_values()) {
    for (int j = 0; j < grid.angles; ++j) {
      const double th = grid.angle(j);
      const Complex z = r * unit(th);
      const double v = weight(z);
      if (v > best) {
        best = v;
        arg = z;
        best_theta = th;
      }
    }
  }
  // Radial refinement along the best angle; still a lower bound of the sup.
  const Complex dir = unit(best_theta);
  auto [fv, rv] = golden_max([&](double r) { return weight(r * dir); }, 0.0, 1.0 - 1e-9);
  if (fv > best) {
    best = fv;
    arg = rv * dir;
  }
  return {best, NormMethod::grid_sup, arg};
}

}  // namespace

std::string norm_method_name(NormMethod m) {
  switch (m) {
    case NormMethod::closed_form: return "closed_form";
    case NormMethod::profile_max: return "profile_max";
    case NormMethod::grid_sup: return "grid_sup";
  }
  return "grid_sup";
}

PowerSeries alexander(const PowerSeries& f) {
  if (!f.is_normalized()) throw NotNormalized();
  std::vector<Complex> c(f.order() + 1);
  for (int n = 1; n <= f.order(); ++n) c[n] = f.coeff(n) / static_cast<double>(n);
  return PowerSeries(std::move(c));
}

PowerSeries j_alpha(const PowerSeries& f, Complex alpha) {
  if (!f.is_normalized()) throw NotNormalized();
  const PowerSeries q = div_by_z(f);
  const PowerSeries d = exp_series(scale(log_unit(q), alpha));
  return antidifferentiate(d).truncated(f.order());
}

Complex pre_schwarzian(const FunctionSpec& spec, Complex z) {
  const Complex fp = eval(spec, z, 1);
  if (std::abs(fp) < 1e-12) throw VanishingDerivative();
  return eval(spec, z, 2) / fp;
}

Complex transform_pre_schwarzian(const FunctionSpec& spec, Complex alpha, Complex z) {
  return TransformDerivative(spec, alpha).at(z);
}

double phi_profile(double lambda, double r) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in [0, 1]");
  const double d = 1.0 - lambda * r;
  if (d < 1e-14) return 2.0 + 2.0 * r;  // lambda = r = 1; continuous extension
  return 1.0 + r + lambda * (1.0 - r * r) / d;
}

double norm_J_klambda_closed(double lambda, Complex alpha) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  const double a = std::abs(alpha);
  if (lambda <= 1.0 / 3.0) return 2.0 * a;
  return a * (3.0 + lambda - 2.0 * std::sqrt(2.0 * (1.0 - lambda * lambda))) / lambda;
}

NormEstimate pre_schwarzian_norm(const FunctionSpec& spec) {
  if (spec.kind() == SpecKind::koebe) {
    // |T| peaks on the positive radius; profile (1-r^2)|T(r)| = 4 + 2r.
    auto [v, r] = golden_max(
        [&](double r) {
          return (1.0 - r * r) * std::abs(pre_schwarzian(spec, Complex{r, 0.0}));
        },
        0.0, 1.0 - 1e-9);
    return {v, NormMethod::profile_max, Complex{r, 0.0}};
  }
  return grid_norm_sup([&](Complex z) {
    return (1.0 - std::norm(z)) * std::abs(pre_schwarzian(spec, z));
  });
}

NormEstimate transform_norm_numeric(const FunctionSpec& spec, Complex alpha) {
  if (spec.kind() == SpecKind::k_lambda || spec.kind() == SpecKind::koebe) {
    const double lam = spec.kind() == SpecKind::koebe ? 1.0 : spec.lambda();
    auto [v, r] = golden_max([&](double r) { return phi_profile(lam, r); }, 0.0, 1.0);
    return {std::abs(alpha) * v, NormMethod::profile_max, Complex{r, 0.0}};
  }
  const TransformDerivative td(spec, alpha);
  return grid_norm_sup([&](Complex z) { return (1.0 - std::norm(z)) * std::abs(td.at(z)); });
}

}  // namespace ulambda
