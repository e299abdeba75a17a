#include "contana/worst_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "contana/errors.hpp"

namespace contana {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Oracle state count above which the DP refuses to run (about 200 MB of
// back-pointers).
constexpr double kMaxOracleStates = 2e8;

double grid_sum(const SampleGrid& grid, const std::vector<std::pair<std::size_t, std::size_t>>& idx) {
  double sum = 0.0;
  for (auto [a, b] : idx) sum += std::abs(grid.values[b] - grid.values[a]);
  return sum;
}

IntervalCollection to_collection(const SampleGrid& grid,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& idx) {
  std::vector<Pair> pairs;
  pairs.reserve(idx.size());
  for (auto [a, b] : idx) pairs.push_back({grid.abscissae[a], grid.abscissae[b]});
  return IntervalCollection(std::move(pairs));
}

}  // namespace

std::string_view to_string(WorstSumMethod m) {
  switch (m) {
    case WorstSumMethod::OracleDP: return "oracle_dp";
    case WorstSumMethod::GluedClosedForm: return "glued_closed_form";
    case WorstSumMethod::UnitCells: return "unit_cells";
  }
  return "oracle_dp";
}

std::size_t budget_units(double delta, double spacing) {
  if (!(spacing > 0.0)) throw BudgetError("grid spacing must be positive");
  const double ratio = delta / spacing;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio))
    return nearest >= 1.0 ? static_cast<std::size_t>(nearest) - 1 : 0;
  return static_cast<std::size_t>(std::floor(ratio));
}

// Each pair's contribution |v_end - v_start| is the better of the two signed
// sums s * (v_end - v_start), s = +/-1, and a signed sum splits into per-cell
// increments. The scan therefore walks the grid once with states
// (steps used, pairs opened, outside / inside with sign +1 / inside with -1).
ACWorstReport worst_ac_sum_oracle(const SampleGrid& grid, double delta,
                                  std::size_t max_intervals) {
  if (grid.size() < 2) throw InsufficientData("oracle needs at least two grid points");
  if (!(delta > grid.spacing)) throw BudgetError("delta must exceed the grid spacing");
  if (max_intervals == 0) throw BudgetError("max_intervals must be positive");

  const std::size_t m = grid.size();
  const std::size_t units = std::min(budget_units(delta, grid.spacing), m - 1);
  const std::size_t pairs_cap = std::min({max_intervals, units, m - 1});
  const std::size_t U = units + 1;
  const std::size_t K = pairs_cap + 1;
  if (static_cast<double>(m) * static_cast<double>(U) * static_cast<double>(K) > kMaxOracleStates)
    throw BudgetError("oracle state space too large; reduce the grid, delta or max_intervals");

  const std::size_t layer = U * K;
  auto at = [K](std::size_t u, std::size_t k) { return u * K + k; };

  std::vector<double> out(layer, kNegInf), in_pos(layer, kNegInf), in_neg(layer, kNegInf);
  std::vector<double> closed(layer), open_pos(layer), open_neg(layer);
  // Per point and state: bits 0-1 where `closed` came from (0 out, 1 +, 2 -),
  // bit 2 / bit 3 set when the +/- interval was opened here.
  std::vector<std::uint8_t> choice(m * layer, 0);
  out[at(0, 0)] = 0.0;

  for (std::size_t j = 0; j < m; ++j) {
    std::uint8_t* ch = choice.data() + j * layer;
    for (std::size_t s = 0; s < layer; ++s) {
      double best = out[s];
      std::uint8_t from = 0;
      if (in_pos[s] > best) { best = in_pos[s]; from = 1; }
      if (in_neg[s] > best) { best = in_neg[s]; from = 2; }
      closed[s] = best;
      ch[s] = from;
    }
    if (j + 1 == m) break;

    for (std::size_t u = 0; u < U; ++u) {
      for (std::size_t k = 0; k < K; ++k) {
        const std::size_t s = at(u, k);
        const double opened = k > 0 ? closed[at(u, k - 1)] : kNegInf;
        open_pos[s] = in_pos[s];
        open_neg[s] = in_neg[s];
        if (opened > open_pos[s]) { open_pos[s] = opened; ch[s] |= 4; }
        if (opened > open_neg[s]) { open_neg[s] = opened; ch[s] |= 8; }
      }
    }

    const double step = grid.values[j + 1] - grid.values[j];
    std::fill(in_pos.begin(), in_pos.end(), kNegInf);
    std::fill(in_neg.begin(), in_neg.end(), kNegInf);
    for (std::size_t u = 0; u + 1 < U; ++u) {
      for (std::size_t k = 1; k < K; ++k) {
        const std::size_t s = at(u, k);
        if (open_pos[s] > kNegInf) in_pos[at(u + 1, k)] = open_pos[s] + step;
        if (open_neg[s] > kNegInf) in_neg[at(u + 1, k)] = open_neg[s] - step;
      }
    }
    out = closed;
  }

  std::size_t best_state = at(0, 0);
  for (std::size_t s = 0; s < layer; ++s)
    if (closed[s] > closed[best_state]) best_state = s;

  // Walk back from the final point.
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::size_t u = best_state / K;
  std::size_t k = best_state % K;
  int state = 0;  // 0 closed-at-point, 1 inside +, 2 inside -
  std::size_t end = 0;
  for (std::size_t j = m; j-- > 0;) {
    const std::uint8_t* ch = choice.data() + j * layer;
    if (state == 0) {
      const int from = ch[at(u, k)] & 3;
      if (from != 0) {
        state = from;
        end = j;
      }
    }
    if (j == 0) break;
    // Step back across cell (j-1, j).
    if (state != 0) {
      --u;
      const std::uint8_t* prev = choice.data() + (j - 1) * layer;
      const bool opened = prev[at(u, k)] & (state == 1 ? 4 : 8);
      if (opened) {
        idx.emplace_back(j - 1, end);
        --k;
        state = 0;
      }
    }
  }
  std::reverse(idx.begin(), idx.end());

  ACWorstReport report;
  report.delta = delta;
  report.method = WorstSumMethod::OracleDP;
  report.grid_spacing = grid.spacing;
  report.witness = to_collection(grid, idx);
  report.best_sum = grid_sum(grid, idx);
  return report;
}

ACWorstReport worst_unit_cells(const SampleGrid& grid, double delta) {
  if (grid.size() < 2) throw InsufficientData("unit-cell search needs at least two grid points");
  if (!(delta > grid.spacing)) throw BudgetError("delta must exceed the grid spacing");
  const std::size_t cells = grid.size() - 1;
  const std::size_t units = std::min(budget_units(delta, grid.spacing), cells);

  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), 0);
  auto rise = [&](std::size_t j) { return std::abs(grid.values[j + 1] - grid.values[j]); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rise(a) > rise(b); });
  order.resize(units);
  std::sort(order.begin(), order.end());

  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(units);
  for (std::size_t j : order) idx.emplace_back(j, j + 1);

  ACWorstReport report;
  report.delta = delta;
  report.method = WorstSumMethod::UnitCells;
  report.grid_spacing = grid.spacing;
  report.witness = to_collection(grid, idx);
  report.best_sum = grid_sum(grid, idx);
  return report;
}

ACWorstReport glued_closed_form(const FunctionSpec& f, const ShapePiece& piece, double delta) {
  if (!(delta > 0.0)) throw BudgetError("delta must be positive");
  const Anchor anchor = favorable_anchor(piece);
  const double lo = piece.interval.lo();
  const double hi = piece.interval.hi();
  const double len = std::min(std::nextafter(delta, 0.0), hi - lo);
  const Pair p = anchor == Anchor::LeftAnchored ? Pair{lo, std::min(lo + len, hi)}
                                                : Pair{std::max(hi - len, lo), hi};
  ACWorstReport report;
  report.delta = delta;
  report.method = WorstSumMethod::GluedClosedForm;
  report.witness = IntervalCollection({p});
  report.best_sum = std::abs(eval(f, p.y) - eval(f, p.x));
  return report;
}

}  // namespace contana
