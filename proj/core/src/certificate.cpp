#include "contana/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "contana/errors.hpp"
#include "contana/modulus.hpp"

namespace contana {
namespace {

// Resolution cap when a piece's modulus curve needs refining.
constexpr std::size_t kMaxCurveResolution = (std::size_t{1} << 18) + 1;
// A delta resolved by fewer grid steps than this triggers a finer curve.
constexpr double kMinStepsPerDelta = 32.0;

struct PieceDelta {
  double delta;
  std::size_t resolution;
};

PieceDelta piece_delta(const FunctionSpec& f, const Interval& piece, double budget,
                       std::size_t resolution) {
  std::size_t m = std::max<std::size_t>(resolution, 3);
  while (true) {
    const SampleGrid grid = sample(f, piece, m);
    const auto ladder = delta_ladder(grid);
    const ModulusCurve curve = modulus_on_grid(grid, ladder);
    const bool can_refine = m < kMaxCurveResolution;
    try {
      const double delta = invert_modulus(curve, budget);
      if (!can_refine || delta / kInvertSafety >= kMinStepsPerDelta * grid.spacing)
        return {delta, m};
    } catch (const Unachievable&) {
      if (!can_refine) throw;
    }
    m = std::min(kMaxCurveResolution, 4 * (m - 1) + 1);
  }
}

std::size_t grid_points_for(double length, double step, std::size_t cap) {
  const double wanted = std::ceil(length / step) + 1.0;
  return static_cast<std::size_t>(std::clamp(wanted, 3.0, static_cast<double>(cap)));
}

}  // namespace

Certificate ac_certificate(const FunctionSpec& f, const Partition& p,
                           const std::vector<ShapePiece>& pieces, double epsilon,
                           std::size_t curve_resolution) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (pieces.empty()) throw PreconditionError("certificate needs at least one piece");

  std::vector<double> points{pieces.front().interval.lo()};
  for (const auto& piece : pieces) {
    (void)expected_trend(piece);  // ShapeError unless certified monotone
    if (piece.interval.lo() != points.back())
      throw PreconditionError("pieces must tile the window without gaps");
    points.push_back(piece.interval.hi());
  }
  if (points.front() != p.front() || points.back() != p.back())
    throw PreconditionError("pieces must cover the partition's window");
  for (double a : p.points())
    if (!std::binary_search(points.begin(), points.end(), a))
      throw PreconditionError("pieces must refine the partition");

  Certificate cert;
  cert.epsilon = epsilon;
  cert.partition = Partition(points);
  cert.monotone_pieces = pieces;
  cert.per_piece_budget = epsilon / static_cast<double>(pieces.size());

  double delta = kInf;
  for (const auto& piece : pieces) {
    const auto pd = piece_delta(f, piece.interval, cert.per_piece_budget, curve_resolution);
    cert.piece_deltas.push_back(pd.delta);
    cert.curve_resolution = std::max(cert.curve_resolution, pd.resolution);
    delta = std::min(delta, pd.delta);
  }
  cert.delta1 = kDelta1Safety * std::min(delta, cert.partition.min_piece_length());
  return cert;
}

IntervalCollection random_collection(Rng& rng, double lo, double hi, double budget,
                                     std::size_t max_pairs) {
  const double span = hi - lo;
  const auto n = static_cast<std::size_t>(rng.integer(1, std::max<std::size_t>(max_pairs, 1)));
  const double total =
      std::min(budget, 0.999 * span) * rng.uniform(0.05, 1.0) * (1.0 - 1e-9);

  std::vector<double> lengths(n);
  double weight = 0.0;
  for (auto& l : lengths) weight += (l = rng.uniform(0.05, 1.0));
  for (auto& l : lengths) l *= total / weight;

  std::vector<double> gaps(n + 1);
  double gap_weight = 0.0;
  for (auto& g : gaps) gap_weight += (g = rng.uniform());
  const double free = (span - total) * (1.0 - 1e-9);
  for (auto& g : gaps) g *= gap_weight > 0.0 ? free / gap_weight : 0.0;

  std::vector<Pair> pairs;
  pairs.reserve(n);
  double cursor = lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::min(cursor + gaps[i], hi);
    const double y = std::min(x + lengths[i], hi);
    if (y > x) pairs.push_back({x, y});
    cursor = y;
  }
  return IntervalCollection(std::move(pairs));
}

Verification verify_certificate(const FunctionSpec& f, const Certificate& cert,
                                const VerifyOptions& opts) {
  const double lo = cert.partition.front();
  const double hi = cert.partition.back();
  const double span = hi - lo;
  const double budget = cert.delta1;

  Verification out;
  auto consider = [&](const IntervalCollection& c, const char* source) {
    if (c.empty()) return;
    if (!(c.total_length() < budget)) return;  // never counts against the certificate
    ++out.collections_checked;
    const double s = variation_sum(f, c);
    if (s > out.worst_sum || out.worst_source.empty()) {
      out.worst_sum = s;
      out.worst_collection = c;
      out.worst_source = source;
    }
  };

  Rng rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const std::size_t pairs = t % 3 == 0 ? 1 : opts.max_random_pairs;
    consider(random_collection(rng, lo, hi, budget, pairs), "random");
  }

  // Anchored adversaries: one interval at each piece's favourable end, one
  // across each interior partition point, and one per piece at once.
  const double len = budget * (1.0 - 1e-9);
  const auto& pieces = cert.monotone_pieces;
  std::vector<Pair> spread;
  for (const auto& piece : pieces) {
    const double plo = piece.interval.lo();
    const double phi = piece.interval.hi();
    const bool left = favorable_anchor(piece) == Anchor::LeftAnchored;
    const double l = std::min(len, phi - plo);
    consider(IntervalCollection({left ? Pair{plo, plo + l} : Pair{phi - l, phi}}), "anchored");
    const double share = std::min(len / static_cast<double>(pieces.size()), phi - plo);
    spread.push_back(left ? Pair{plo, plo + share} : Pair{phi - share, phi});
  }
  std::sort(spread.begin(), spread.end(), [](const Pair& a, const Pair& b) { return a.x < b.x; });
  bool overlapping = false;
  for (std::size_t i = 1; i < spread.size(); ++i) overlapping |= spread[i - 1].y > spread[i].x;
  if (!overlapping) consider(IntervalCollection(spread), "anchored_all_pieces");
  const auto& pts = cert.partition.points();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double x = std::max(lo, pts[i] - len / 2);
    const double y = std::min(hi, pts[i] + len / 2);
    consider(IntervalCollection({Pair{x, y}}), "straddle");
  }

  // Grid searches over the whole window.
  std::size_t cells_m = opts.cells_grid;
  if (!(budget > span / static_cast<double>(cells_m - 1)))
    cells_m = grid_points_for(span, budget / 4.0, std::size_t{1} << 21);
  const SampleGrid cells_grid = sample(f, Interval::closed(lo, hi), cells_m);
  if (budget > cells_grid.spacing) {
    out.cells = worst_unit_cells(cells_grid, budget);
    consider(out.cells.witness, "unit_cells");
  }

  const std::size_t dp_m = grid_points_for(span, budget / 16.0, opts.oracle_max_grid);
  const SampleGrid dp_grid = sample(f, Interval::closed(lo, hi), dp_m);
  if (budget > dp_grid.spacing) {
    out.oracle = worst_ac_sum_oracle(dp_grid, budget, opts.oracle_max_intervals);
    consider(out.oracle.witness, "oracle_dp");
  }

  out.passed = out.worst_sum < cert.epsilon;
  return out;
}

}  // namespace contana
