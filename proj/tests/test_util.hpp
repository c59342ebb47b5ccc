#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "ulambda/series.hpp"

namespace ulambda::testing {

inline double coeff_distance(const PowerSeries& a, const PowerSeries& b) {
  double worst = 0.0;
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  for (int k = n + 1; k <= a.order(); ++k) worst = std::max(worst, std::abs(a.coeff(k)));
  for (int k = n + 1; k <= b.order(); ++k) worst = std::max(worst, std::abs(b.coeff(k)));
  return worst;
}

inline double unit_real(std::mt19937& rng) {
  return static_cast<double>(rng()) / 4294967296.0;
}

inline Complex random_coeff(std::mt19937& rng, double envelope = 1.0) {
  return {envelope * (2.0 * unit_real(rng) - 1.0), envelope * (2.0 * unit_real(rng) - 1.0)};
}

}  // namespace ulambda::testing
