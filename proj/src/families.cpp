#include "ulambda/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ulambda {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double unit_real(std::mt19937& rng) {
  return static_cast<double>(rng()) / 4294967296.0;  // [0, 1)
}

Complex pow_int(Complex x, int n) {
  if (n < 0) return 1.0 / pow_int(x, -n);
  Complex r{1.0, 0.0};
  while (n-- > 0) r *= x;
  return r;
}

// Derivatives of z/h at z by the Leibniz recurrence on f h = z:
//   h f^(m) = (z)^(m) - sum_{j<m} C(m,j) f^(j) h^(m-j).
Complex eval_over_h(const PowerSeries& h, Complex z, int m) {
  const Complex hz = evaluate(h, z, 0);
  if (std::abs(hz) < 1e-14) throw PoleAtPoint();
  std::vector<Complex> f(m + 1), hd(m + 1);
  for (int i = 0; i <= m; ++i) hd[i] = evaluate(h, z, i);
  std::vector<double> binom(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    for (int j = k; j > 0; --j) binom[j] += binom[j - 1];
    binom[0] = 1.0;
    Complex rhs = (k == 0) ? z : (k == 1 ? Complex{1.0, 0.0} : Complex{});
    for (int j = 0; j < k; ++j) rhs -= binom[j] * f[j] * hd[k - j];
    f[k] = rhs / hz;
  }
  return f[m];
}

// m-th derivative of the Koebe function u/(1-u)^2 = (1-u)^{-2} - (1-u)^{-1}.
Complex koebe_deriv(Complex u, int m) {
  const Complex d = 1.0 - u;
  if (std::abs(d) < 1e-14) throw PoleAtPoint();
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;  // m!
  const double fact1 = fact * (m + 1);     // (m+1)!
  return fact1 / pow_int(d, m + 2) - fact / pow_int(d, m + 1);
}

PowerSeries blaschke_series(Complex a, int order) {
  // (z - a)/(1 - conj(a) z) = -a + sum_{n>=1} conj(a)^{n-1} (1 - |a|^2) z^n
  std::vector<Complex> c(order + 1);
  c[0] = -a;
  const double one_minus = 1.0 - std::norm(a);
  Complex p{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    c[n] = p * one_minus;
    p *= std::conj(a);
  }
  return PowerSeries(std::move(c));
}

}  // namespace

DiscreteCircleMeasure::DiscreteCircleMeasure(std::vector<CircleAtom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidMeasure();
  double total = 0.0;
  for (const CircleAtom& a : atoms_) {
    if (a.w < 0.0 || std::abs(std::abs(a.x) - 1.0) > 1e-12) throw InvalidMeasure();
    total += a.w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidMeasure();
}

FunctionSpec FunctionSpec::koebe() {
  FunctionSpec s;
  s.kind_ = SpecKind::koebe;
  return s;
}

FunctionSpec FunctionSpec::k_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  FunctionSpec s;
  s.kind_ = SpecKind::k_lambda;
  s.lambda_ = lambda;
  return s;
}

FunctionSpec FunctionSpec::rational_member(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  FunctionSpec s;
  s.kind_ = SpecKind::rational_member;
  s.lambda_ = lambda;
  return s;
}

FunctionSpec FunctionSpec::test_g(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  FunctionSpec s;
  s.kind_ = SpecKind::test_g;
  s.lambda_ = lambda;
  return s;
}

FunctionSpec FunctionSpec::series(PowerSeries ps) {
  FunctionSpec s;
  s.kind_ = SpecKind::series;
  s.series_ = std::make_shared<const PowerSeries>(std::move(ps));
  return s;
}

SpecKind FunctionSpec::kind() const { return kind_; }

std::string FunctionSpec::kind_name() const {
  switch (kind_) {
    case SpecKind::koebe: return "koebe";
    case SpecKind::k_lambda: return "k_lambda";
    case SpecKind::rational_member: return "rational_member";
    case SpecKind::test_g: return "test_g";
    case SpecKind::rotation: return "rotation";
    case SpecKind::schwarz_member: return "schwarz_member";
    case SpecKind::hull_measure: return "hull_measure";
    case SpecKind::series: return "series";
  }
  return "unknown";
}

std::optional<PowerSeries> z_over_f(const FunctionSpec& spec) {
  const double lam = spec.lambda_;
  switch (spec.kind_) {
    case SpecKind::koebe:
      return PowerSeries({{1.0, 0.0}, {-2.0, 0.0}, {1.0, 0.0}});
    case SpecKind::k_lambda:
      return PowerSeries({{1.0, 0.0}, {-(1.0 + lam), 0.0}, {lam, 0.0}});
    case SpecKind::rational_member:
      return PowerSeries({{1.0, 0.0}, {0.0, 0.0}, {-lam, 0.0}});
    case SpecKind::test_g:
      return PowerSeries({{1.0, 0.0}, {0.0, 0.0}, {-(1.0 + lam), 0.0}, {0.0, 0.0}, {lam, 0.0}});
    case SpecKind::schwarz_member:
      return *spec.h_;
    case SpecKind::rotation: {
      // z/f for x^{-1} f0(x z) is h0(x z).
      auto base = z_over_f(*spec.base_);
      if (!base) return std::nullopt;
      std::vector<Complex> c(base->coeffs().begin(), base->coeffs().end());
      Complex p{1.0, 0.0};
      for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] *= p;
        p *= spec.x_;
      }
      return PowerSeries(std::move(c));
    }
    default:
      return std::nullopt;
  }
}

Complex eval(const FunctionSpec& spec, Complex z, int deriv_order) {
  switch (spec.kind()) {
    case SpecKind::rotation: {
      const Complex x = spec.rotation_factor();
      return pow_int(x, deriv_order - 1) * eval(spec.rotation_base(), x * z, deriv_order);
    }
    case SpecKind::hull_measure: {
      Complex s{};
      for (const CircleAtom& a : spec.measure().atoms())
        s += a.w * pow_int(a.x, deriv_order - 1) * koebe_deriv(a.x * z, deriv_order);
      return s;
    }
    case SpecKind::series:
      return evaluate(spec.raw_series(), z, deriv_order);
    default:
      return eval_over_h(*z_over_f(spec), z, deriv_order);
  }
}

PowerSeries series_of(const FunctionSpec& spec, int order) {
  if (order < 2) throw std::invalid_argument("series_of: order must be >= 2");
  switch (spec.kind()) {
    case SpecKind::rotation: {
      const PowerSeries base = series_of(spec.rotation_base(), order);
      std::vector<Complex> c(order + 1);
      for (int n = 1; n <= order; ++n) c[n] = base.coeff(n) * pow_int(spec.rotation_factor(), n - 1);
      return PowerSeries(std::move(c));
    }
    case SpecKind::hull_measure: {
      std::vector<Complex> c(order + 1);
      for (const CircleAtom& a : spec.measure().atoms()) {
        Complex p{1.0, 0.0};  // x^{n-1}
        for (int n = 1; n <= order; ++n) {
          c[n] += static_cast<double>(n) * a.w * p;
          p *= a.x;
        }
      }
      return PowerSeries(std::move(c));
    }
    case SpecKind::series:
      return spec.raw_series().truncated(order);
    default: {
      const PowerSeries h = *z_over_f(spec);
      const PowerSeries r = reciprocal(h.truncated(std::max(order - 1, 2)));
      std::vector<Complex> c(order + 1);
      for (int k = 0; k + 1 <= order; ++k) c[k + 1] = r.coeff(k);
      return PowerSeries(std::move(c));
    }
  }
}

FunctionSpec member_from_schwarz(double lambda, Complex a2, const PowerSeries& psi) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");

  // |psi| <= 1 on the boundary validation circle.
  {
    const double r = 0.999;
    for (int j = 0; j < 720; ++j) {
      const double th = kTwoPi * j / 720.0;
      if (std::abs(evaluate(psi, r * Complex{std::cos(th), std::sin(th)})) > 1.0 + 1e-9)
        throw PsiUnbounded();
    }
  }

  // h = 1 - a2 z - lambda z int_0^z psi; forcing omega = z^2 psi keeps the
  // defining integral free of the 1/t^2 singularity.
  std::vector<Complex> hc(psi.order() + 3);
  hc[0] = 1.0;
  hc[1] = -a2;
  for (int k = 2; k < static_cast<int>(hc.size()); ++k)
    hc[k] = -lambda * psi.coeff(k - 2) / static_cast<double>(k - 1);
  PowerSeries h{std::move(hc)};

  // Reject candidates whose h vanishes: grid minimum plus a winding-number
  // count of zeros inside a circle hugging the boundary.
  {
    const DiskGrid grid{};
    for (double r : grid.radius_values())
      for (int j = 0; j < grid.angles; ++j) {
        const double th = grid.angle(j);
        if (std::abs(evaluate(h, r * Complex{std::cos(th), std::sin(th)})) < 1e-12)
          throw VanishingDenominator();
      }

    const int nodes = std::max(4096, 32 * (h.order() + 1));
    bool counted = false;
    for (double rc : {0.99951, 0.9991, 0.99871}) {
      double min_mod = 1e308;
      double winding = 0.0;
      Complex prev = evaluate(h, Complex{rc, 0.0});
      for (int j = 1; j <= nodes; ++j) {
        const double th = kTwoPi * j / nodes;
        const Complex cur = evaluate(h, rc * Complex{std::cos(th), std::sin(th)});
        min_mod = std::min(min_mod, std::abs(cur));
        winding += std::arg(cur * std::conj(prev));
        prev = cur;
      }
      if (min_mod < 1e-6) continue;  // zero too close to this contour, try a smaller one
      if (std::lround(winding / kTwoPi) != 0) throw VanishingDenominator();
      counted = true;
      break;
    }
    if (!counted) throw VanishingDenominator();
  }

  FunctionSpec s;
  s.kind_ = SpecKind::schwarz_member;
  s.lambda_ = lambda;
  s.a2_ = a2;
  s.psi_ = std::make_shared<const PowerSeries>(psi);
  s.h_ = std::make_shared<const PowerSeries>(std::move(h));
  return s;
}

FunctionSpec hull_from_measure(const DiscreteCircleMeasure& mu, int order) {
  if (order < 2) throw std::invalid_argument("hull_from_measure: order must be >= 2");
  FunctionSpec s;
  s.kind_ = SpecKind::hull_measure;
  s.measure_ = std::make_shared<const DiscreteCircleMeasure>(mu);
  return s;
}

FunctionSpec rotate(const FunctionSpec& spec, Complex x) {
  if (std::abs(std::abs(x) - 1.0) > 1e-12) throw NotUnitModulus();
  if (x == Complex{1.0, 0.0}) return spec;
  FunctionSpec s;
  s.kind_ = SpecKind::rotation;
  if (spec.kind_ == SpecKind::rotation) {  // flatten nested rotations
    s.x_ = spec.x_ * x;
    s.base_ = spec.base_;
  } else {
    s.x_ = x;
    s.base_ = std::make_shared<const FunctionSpec>(spec);
  }
  return s;
}

std::vector<FunctionSpec> sample_members(double lambda, int count, unsigned seed) {
  std::seed_seq seq{seed, static_cast<unsigned>(std::lround(lambda * 1e6))};
  std::mt19937 rng(seq);
  std::vector<FunctionSpec> out;
  out.reserve(count);
  const int max_attempts = count * 200;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
       ++attempt) {
    const int n_factors = static_cast<int>(rng() % 3);
    PowerSeries psi = PowerSeries::one(62);
    for (int i = 0; i < n_factors; ++i) {
      Complex a;
      do {
        a = Complex{2.0 * unit_real(rng) - 1.0, 2.0 * unit_real(rng) - 1.0} * 0.6;
      } while (std::abs(a) > 0.6);
      psi = product(psi, blaschke_series(a, 62));
    }
    const double s = 0.15 + 0.75 * unit_real(rng);
    const double alpha = kTwoPi * unit_real(rng);
    psi = scale(psi, s * Complex{std::cos(alpha), std::sin(alpha)});

    const double rho = 0.6 * unit_real(rng);
    const double phi = kTwoPi * unit_real(rng);
    const Complex a2 = rho * (1.0 + lambda) * Complex{std::cos(phi), std::sin(phi)};
    try {
      out.push_back(member_from_schwarz(lambda, a2, psi));
    } catch (const VanishingDenominator&) {
      continue;
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("sample_members: too many rejected candidates");
  return out;
}

DiscreteCircleMeasure sample_measure(int n_atoms, std::mt19937& rng) {
  if (n_atoms < 1) throw std::invalid_argument("sample_measure: need at least one atom");
  std::vector<CircleAtom> atoms(n_atoms);
  double total = 0.0;
  for (CircleAtom& a : atoms) {
    const double th = kTwoPi * unit_real(rng);
    a.x = Complex{std::cos(th), std::sin(th)};
    a.w = 0.05 + unit_real(rng);
    total += a.w;
  }
  for (CircleAtom& a : atoms) a.w /= total;
  return DiscreteCircleMeasure(std::move(atoms));
}

}  // namespace ulambda
