#include "ulambda/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ulambda {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_nodes(int nodes) {
  if (nodes < 256 || !power_of_two(nodes))
    throw std::invalid_argument("nodes must be a power of 2 and >= 256");
}

std::vector<double> log_modulus_samples(const FunctionSpec& f, double r, int sign, int nodes) {
  std::vector<double> s(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double th = -std::numbers::pi + kTwoPi * j / nodes;
    const double mod = std::abs(eval(f, r * unit(th), 0));
    if (mod < 1e-12) throw NearZeroModulus();
    s[j] = sign * std::log(mod);
  }
  return s;
}

}  // namespace

MeanReport integral_mean(const FunctionSpec& spec, int n, double p, double r, int nodes) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0, 1)");
  if (n < 0) throw std::invalid_argument("derivative order must be >= 0");
  check_nodes(nodes);
  if (p < 0.0 && n != 0)
    throw std::invalid_argument("negative exponents are only supported for n = 0");
  if (p == 0.0) return {1.0, n, p, r, nodes};

  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double mod = std::abs(eval(spec, r * unit(kTwoPi * j / nodes), n));
    if (p < 0.0 && mod < 1e-12) throw NearZeroIntegrand();
    acc += std::pow(mod, p);
  }
  return {acc / nodes, n, p, r, nodes};
}

double parseval_mean(const PowerSeries& f, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0, 1)");
  double acc = 0.0;
  double r2n = 1.0;
  const double r2 = r * r;
  for (int n = 0; n <= f.order(); ++n) {
    acc += std::norm(f.coeff(n)) * r2n;
    r2n *= r2;
  }
  return acc;
}

double arc_length(const FunctionSpec& spec, double r, int nodes) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0, 1)");
  check_nodes(nodes);
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) acc += std::abs(eval(spec, r * unit(kTwoPi * j / nodes), 1));
  return r * acc * kTwoPi / nodes;
}

StarSamples star_function(std::span<const double> samples) {
  const int m = static_cast<int>(samples.size());
  if (m < 256 || m % 2 != 0) throw std::invalid_argument("need an even sample count >= 256");
  StarSamples out;
  out.values.assign(samples.begin(), samples.end());
  std::vector<double> sorted(out.values);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  out.star.resize(m + 1);
  out.star[0] = 0.0;
  const double cell = kTwoPi / m;
  for (int k = 1; k <= m; ++k) out.star[k] = out.star[k - 1] + cell * sorted[k - 1];
  return out;
}

DominanceResult star_dominance(const FunctionSpec& f, double lambda, double r, int sign,
                               int nodes) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0, 1)");
  check_nodes(nodes);
  const StarSamples sf = star_function(log_modulus_samples(f, r, sign, nodes));
  const FunctionSpec klam = FunctionSpec::k_lambda(lambda);
  const StarSamples sk = star_function(log_modulus_samples(klam, r, sign, nodes));
  double violation = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= nodes; ++k) violation = std::max(violation, sf.star[k] - sk.star[k]);
  return {violation <= 1e-8, violation};
}

MeanComparison convex_mean_check(const FunctionSpec& f, double lambda, double r, double p,
                                 int nodes) {
  if (p == 0.0) return {true, 0.0};
  const double mf = integral_mean(f, 0, p, r, nodes).value;
  const double mk = integral_mean(FunctionSpec::k_lambda(lambda), 0, p, r, nodes).value;
  return {mf <= mk + 1e-9, mk - mf};
}

PowerSeries schwarz_residual(const PowerSeries& f) {
  if (!f.is_normalized()) throw NotNormalized();
  const PowerSeries q = reciprocal(div_by_z(f));  // z/f
  PowerSeries res = product(differentiate(f), product(q, q));
  std::vector<Complex> c(res.coeffs().begin(), res.coeffs().end());
  c[0] -= 1.0;
  return PowerSeries(std::move(c));
}

double fekete_szego_value(const PowerSeries& f, Complex mu) {
  if (!f.is_normalized()) throw NotNormalized();
  const Complex a2 = f.coeff(2);
  const Complex a3 = f.coeff(3);
  return std::abs(a3 - mu * a2 * a2);
}

double fs_bound(double lambda, Complex mu) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  const double b = 1.0 + lambda;
  const Complex center{(1.0 + lambda + lambda * lambda) / (b * b), 0.0};
  if (std::abs(mu - center) >= 1.0 / b)
    return std::abs(Complex{1.0 + lambda + lambda * lambda, 0.0} - mu * b * b);
  return b;
}

double fs_search(double lambda, Complex mu, int resolution) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in (0, 1]");
  if (resolution < 64) throw std::invalid_argument("resolution must be >= 64");
  const double b = 1.0 + lambda;
  const double d = std::abs(Complex{1.0 + lambda + lambda * lambda, 0.0} - mu * b * b);

  // |b c2 + D c1^2| depends on the phases only through arg(c2) - 2 arg(c1),
  // so an absolute-phase sweep is redundant; scan |c1|, |c2| and the
  // relative phase.
  std::vector<double> cos_table(resolution);
  for (int k = 0; k < resolution; ++k) cos_table[k] = std::cos(kTwoPi * k / resolution);

  double best_sq = 0.0;
  for (int i = 0; i <= resolution; ++i) {
    const double c1 = static_cast<double>(i) / resolution;
    const double cap = 1.0 - c1 * c1;  // Schwarz-Pick clamp on |c2|
    const double t1 = d * c1 * c1;
    for (int j = 0; j <= resolution; ++j) {
      const double t2 = b * cap * static_cast<double>(j) / resolution;
      const double base = t1 * t1 + t2 * t2;
      const double cross = 2.0 * t1 * t2;
      for (int k = 0; k < resolution; ++k) {
        const double v = base + cross * cos_table[k];
        if (v > best_sq) best_sq = v;
      }
    }
  }
  return std::sqrt(best_sq);
}

double coeff_bound_check(const PowerSeries& f) {
  if (!f.is_normalized()) throw NotNormalized();
  double worst = 0.0;
  for (int n = 2; n <= f.order(); ++n)
    worst = std::max(worst, std::abs(f.coeff(n)) / static_cast<double>(n));
  return worst;
}

}  // namespace ulambda
