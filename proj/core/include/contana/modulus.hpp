#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "contana/function.hpp"
#include "contana/sampling.hpp"

namespace contana {

struct ModulusSample {
  double delta;
  double omega;
};

// Tabulated modulus of continuity; omega nondecreasing in delta.
struct ModulusCurve {
  std::vector<ModulusSample> samples;
};

// omega(delta) = max |f(x) - f(y)| over grid pairs at most delta apart,
// measured in whole grid steps. One monotone-deque pass per delta.
ModulusCurve modulus_on_grid(const SampleGrid& grid, std::span<const double> deltas);

// Samples f on `window` (finite, closed) with m points and tabulates.
ModulusCurve modulus(const FunctionSpec& f, const Interval& window,
                     std::span<const double> deltas, std::size_t m);

// Geometric ladder of deltas from one grid step up to the window length,
// snapped to whole steps and deduplicated.
std::vector<double> delta_ladder(const SampleGrid& grid, double ratio = 1.05);

inline constexpr double kInvertSafety = 0.9;

// Largest tabulated delta with omega < epsilon, times `safety`.
// Throws Unachievable when no sample qualifies.
double invert_modulus(const ModulusCurve& curve, double epsilon, double safety = kInvertSafety);

}  // namespace contana
