#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace ulambda {

/// Polar evaluation grid on the unit disk. Radii are spaced geometrically in
/// 1 - r so they accumulate at the boundary; angles are uniform.
struct DiskGrid {
  int radii = 24;
  int angles = 720;
  double r_min = 0.05;
  double r_max = 0.999;

  std::vector<double> radius_values() const {
    std::vector<double> r(radii);
    if (radii == 1) {
      r[0] = r_max;
      return r;
    }
    const double ratio = std::pow((1.0 - r_max) / (1.0 - r_min),
                                  1.0 / static_cast<double>(radii - 1));
    double gap = 1.0 - r_min;
    for (int i = 0; i < radii; ++i) {
      r[i] = 1.0 - gap;
      gap *= ratio;
    }
    r.front() = r_min;
    r.back() = r_max;
    return r;
  }

  double angle(int j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
  }
};

/// Grid in the exterior domain |zeta| > 1, radii listed nearest the unit
/// circle first (the deviation functionals peak there).
struct ExteriorGrid {
  std::vector<double> radii = {1.001, 1.01, 1.1, 2.0, 10.0};
  int angles = 720;

  double angle(int j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
  }
};

}  // namespace ulambda
