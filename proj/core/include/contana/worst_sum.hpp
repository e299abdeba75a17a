#pragma once

#include <cstddef>
#include <string_view>

#include "contana/collection.hpp"
#include "contana/convexity.hpp"
#include "contana/sampling.hpp"

namespace contana {

enum class WorstSumMethod { OracleDP, GluedClosedForm, UnitCells };
std::string_view to_string(WorstSumMethod m);

struct ACWorstReport {
  double delta = 0.0;
  double best_sum = 0.0;
  IntervalCollection witness;
  WorstSumMethod method = WorstSumMethod::OracleDP;
  double grid_spacing = 0.0;
};

inline constexpr std::size_t kDefaultMaxIntervals = 32;

// Largest number of whole grid steps whose total length stays strictly
// below delta. Ratios within 1e-9 of an integer count as that integer.
std::size_t budget_units(double delta, double spacing);

// Exact maximum of sum |f(y_i) - f(x_i)| over nonoverlapping collections of
// grid-aligned pairs with total length < delta and at most max_intervals
// pairs. Dynamic program over (grid index, remaining steps, pairs left).
ACWorstReport worst_ac_sum_oracle(const SampleGrid& grid, double delta,
                                  std::size_t max_intervals = kDefaultMaxIntervals);

// Best collection made of single grid cells, unlimited count: the budget goes
// to the cells with the largest increments. A lower bound on the true
// supremum that does not depend on how many pieces the witness needs.
ACWorstReport worst_unit_cells(const SampleGrid& grid, double delta);

// One interval of length just under delta at the favourable end of a
// monotone convex or concave piece.
ACWorstReport glued_closed_form(const FunctionSpec& f, const ShapePiece& piece, double delta);

}  // namespace contana
