#include "contana/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "contana/errors.hpp"

namespace contana {
namespace {

// Intersection of two intervals; throws DomainError when empty.
Interval intersect(const Interval& a, const Interval& b) {
  double lo = a.lo();
  bool lo_closed = a.lo_closed();
  if (b.lo() > lo || (b.lo() == lo && !b.lo_closed())) {
    lo = b.lo();
    lo_closed = b.lo_closed();
  }
  double hi = a.hi();
  bool hi_closed = a.hi_closed();
  if (b.hi() < hi || (b.hi() == hi && !b.hi_closed())) {
    hi = b.hi();
    hi_closed = b.hi_closed();
  }
  if (!(lo < hi)) throw DomainError("window " + b.to_string() + " is disjoint from domain " +
                                    a.to_string());
  return {lo, hi, lo_closed, hi_closed};
}

}  // namespace

double default_margin(double window_length) { return std::max(1e-9 * window_length, 1e-12); }

Interval clip_window(const Interval& domain, double width, double margin) {
  if (!(width > 0.0)) throw DomainError("window width must be positive");
  double lo = domain.lo();
  double hi = domain.hi();
  if (std::isinf(lo) && std::isinf(hi)) {
    lo = -width / 2;
    hi = width / 2;
  } else if (std::isinf(lo)) {
    lo = hi - width;
  } else if (std::isinf(hi)) {
    hi = lo + width;
  }
  const double pad = margin > 0.0 ? margin : default_margin(hi - lo);
  if (!domain.lo_closed() && !std::isinf(domain.lo())) lo += pad;
  if (!domain.hi_closed() && !std::isinf(domain.hi())) hi -= pad;
  if (!(lo < hi)) throw DomainError("margin swallows the window " + domain.to_string());
  return Interval::closed(lo, hi);
}

std::vector<double> uniform_abscissae(double lo, double hi, std::size_t m) {
  if (m < 2) throw InsufficientData("a grid needs at least two points");
  std::vector<double> xs(m);
  const double span = hi - lo;
  const auto last = static_cast<double>(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) xs[j] = lo + span * static_cast<double>(j) / last;
  xs[m - 1] = hi;
  return xs;
}

Interval analysis_window(const FunctionSpec& f, const Interval& window, double width) {
  return clip_window(intersect(f.domain(), window), width);
}

SampleGrid sample(const FunctionSpec& f, const Interval& window, std::size_t m, double width) {
  if (m < 2) throw InsufficientData("sample needs m >= 2");
  const Interval clipped = analysis_window(f, window, width);
  SampleGrid grid;
  grid.abscissae = uniform_abscissae(clipped.lo(), clipped.hi(), m);
  grid.spacing = clipped.length() / static_cast<double>(m - 1);
  grid.values.reserve(m);
  for (double x : grid.abscissae) grid.values.push_back(eval(f, x));
  return grid;
}

}  // namespace contana
