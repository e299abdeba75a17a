#include "contana/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "contana/errors.hpp"

namespace contana {
namespace {

// Largest whole number of grid steps not exceeding delta.
std::size_t steps_within(double delta, double spacing) {
  return static_cast<std::size_t>(std::floor(delta / spacing + 1e-9));
}

double max_spread(const std::vector<double>& v, std::size_t width) {
  if (width == 0) return 0.0;
  std::deque<std::size_t> hi;  // indices of decreasing values
  std::deque<std::size_t> lo;  // indices of increasing values
  double best = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    while (!hi.empty() && v[hi.back()] <= v[j]) hi.pop_back();
    while (!lo.empty() && v[lo.back()] >= v[j]) lo.pop_back();
    hi.push_back(j);
    lo.push_back(j);
    if (j >= width) {
      const std::size_t first = j - width;
      if (hi.front() < first) hi.pop_front();
      if (lo.front() < first) lo.pop_front();
    }
    best = std::max(best, v[hi.front()] - v[lo.front()]);
  }
  return best;
}

}  // namespace

ModulusCurve modulus_on_grid(const SampleGrid& grid, std::span<const double> deltas) {
  if (grid.size() < 2) throw InsufficientData("modulus needs at least two grid points");
  const double length = grid.hi() - grid.lo();
  ModulusCurve curve;
  curve.samples.reserve(deltas.size());
  double running = 0.0;
  double previous = 0.0;
  for (double delta : deltas) {
    if (!(delta > 0.0)) throw DomainError("deltas must be positive");
    if (delta < previous) throw DomainError("deltas must be sorted ascending");
    if (delta > length * (1.0 + 1e-12))
      throw BudgetError("delta exceeds the window length");
    previous = delta;
    const std::size_t width = std::min(steps_within(delta, grid.spacing), grid.size() - 1);
    running = std::max(running, max_spread(grid.values, width));
    curve.samples.push_back({delta, running});
  }
  return curve;
}

ModulusCurve modulus(const FunctionSpec& f, const Interval& window,
                     std::span<const double> deltas, std::size_t m) {
  if (!window.is_finite() || !window.is_closed())
    throw DomainError("modulus window must be finite and closed");
  return modulus_on_grid(sample(f, window, m), deltas);
}

std::vector<double> delta_ladder(const SampleGrid& grid, double ratio) {
  if (grid.size() < 2) throw InsufficientData("ladder needs at least two grid points");
  std::vector<double> out;
  const std::size_t max_steps = grid.size() - 1;
  std::size_t w = 1;
  while (true) {
    out.push_back(static_cast<double>(w) * grid.spacing);
    if (w >= max_steps) break;
    const auto next = static_cast<std::size_t>(std::ceil(static_cast<double>(w) * ratio));
    w = std::min(max_steps, std::max(w + 1, next));
  }
  return out;
}

double invert_modulus(const ModulusCurve& curve, double epsilon, double safety) {
  if (curve.samples.empty()) throw DomainError("cannot invert an empty modulus curve");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  double best = 0.0;
  for (const auto& s : curve.samples)
    if (s.omega < epsilon) best = std::max(best, s.delta);
  if (best == 0.0)
    throw Unachievable("no tabulated delta has omega < " + std::to_string(epsilon) +
                       "; refine the curve");
  return safety * best;
}

}  // namespace contana
