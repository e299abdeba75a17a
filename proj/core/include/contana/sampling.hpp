#pragma once

#include <cstddef>
#include <vector>

#include "contana/function.hpp"
#include "contana/interval.hpp"

namespace contana {

inline constexpr double kDefaultWindowWidth = 10.0;

// Uniform samples of a function over a finite closed window.
struct SampleGrid {
  std::vector<double> abscissae;
  std::vector<double> values;
  // Nominal gap between consecutive abscissae, (hi - lo) / (size - 1).
  double spacing = 0.0;

  std::size_t size() const noexcept { return abscissae.size(); }
  double lo() const { return abscissae.front(); }
  double hi() const { return abscissae.back(); }
};

// Default open-endpoint margin: 1e-9 of the window length, floored at 1e-12.
double default_margin(double window_length);

// Makes a domain finite and closed. Infinite sides are cut `width` away from
// the finite side (or to [-width/2, width/2] when both are infinite); open
// finite endpoints move inward by `margin`. A non-positive margin selects
// default_margin() of the truncated length.
Interval clip_window(const Interval& domain, double width = kDefaultWindowWidth,
                     double margin = 0.0);

// The finite closed window actually analysed: `window` intersected with f's
// domain, then clipped.
Interval analysis_window(const FunctionSpec& f, const Interval& window,
                         double width = kDefaultWindowWidth);

// m equally spaced points over `window` clipped against f's domain.
// Abscissa j is computed as lo + (hi - lo) * j / (m - 1) with the last point
// pinned to hi.
SampleGrid sample(const FunctionSpec& f, const Interval& window, std::size_t m,
                  double width = kDefaultWindowWidth);

// Uniform abscissae without evaluation.
std::vector<double> uniform_abscissae(double lo, double hi, std::size_t m);

}  // namespace contana
