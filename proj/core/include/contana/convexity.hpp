#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "contana/function.hpp"
#include "contana/interval.hpp"
#include "contana/sampling.hpp"

namespace contana {

enum class Shape { Convex, Concave, Affine, Unknown };
enum class Monotonicity { Increasing, Decreasing, Constant, Mixed };
enum class Trend { Nonincreasing, Nondecreasing, Constant };

std::string_view to_string(Shape s);
std::string_view to_string(Monotonicity m);
std::string_view to_string(Trend t);

// Finite partition a_0 < a_1 < ... < a_N.
class Partition {
public:
  explicit Partition(std::vector<double> points);

  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t piece_count() const noexcept { return points_.size() - 1; }
  double min_piece_length() const;
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

private:
  std::vector<double> points_;
};

struct ShapePiece {
  Interval interval;  // finite and closed
  Shape shape = Shape::Unknown;
  Monotonicity monotonicity = Monotonicity::Mixed;
  // Evidence resolution; the grid spacing for detected pieces.
  double tolerance = 0.0;
};

// Direction of G_sigma implied by a certified (monotonicity, shape) pair.
// Throws ShapeError for Mixed monotonicity or an uncertified shape.
Trend expected_trend(const ShapePiece& piece);

struct ConvexityWitness {
  double a;
  double b;
  double theta;
};

struct ConvexityCheck {
  bool holds = true;
  // Largest signed defect; positive means the inequality is violated.
  double worst_violation = 0.0;
  std::optional<ConvexityWitness> witness;
  double tolerance = 0.0;
};

struct ConvexityCheckOptions {
  std::size_t theta_steps = 16;
  std::size_t pair_samples = 64;
  std::uint64_t seed = 0;
  // Negative selects four units of rounding relative to the largest value seen.
  double tolerance = -1.0;
};

// Tests f(t a + (1 - t) b) against the chord t f(a) + (1 - t) f(b) over the
// endpoint pair of `piece` plus seeded random pairs, on the interior grid
// t = k / (theta_steps + 1).
ConvexityCheck check_convexity_inequality(const FunctionSpec& f, const Interval& piece,
                                          Shape claim, const ConvexityCheckOptions& opts = {});

inline constexpr std::size_t kDefaultMaxPieces = 64;

struct ShapeDetection {
  Partition partition;
  std::vector<ShapePiece> pieces;
  std::size_t sign_change_count = 0;
  double eta = 0.0;
};

struct NotPiecewiseConvex {
  std::size_t sign_change_count = 0;
  double eta = 0.0;
};

using DetectResult = std::variant<ShapeDetection, NotPiecewiseConvex>;

// eta < 0 selects 1e-8 * max|value| on the grid.
double default_eta(const SampleGrid& grid);

// Second difference at interior index j scaled to a uniform grid of the
// nominal spacing.
std::vector<double> second_differences(const SampleGrid& grid);

// Number of sign changes between runs of nonzero second differences.
std::size_t count_sign_changes(const SampleGrid& grid, double eta = -1.0);

// Splits the grid into maximal runs of one second-difference sign. Entries
// within eta of zero join the run on their left (leading ones join the first
// run). Partition points sit at the centre abscissa of each run's last triple.
DetectResult detect_partition(const SampleGrid& grid, double eta = -1.0,
                              std::size_t max_pieces = kDefaultMaxPieces);

// Splits a certified piece at its interior extremum, found by ternary search
// to within `tol` (<= 0 selects 1e-10 * length). Output pieces tile the input.
std::vector<ShapePiece> refine_to_monotone(const FunctionSpec& f, const ShapePiece& piece,
                                           double tol = 0.0);

// |f(x + sigma) - f(x)|
double g_sigma(const FunctionSpec& f, double x, double sigma);

struct GSigmaCurve {
  double sigma = 0.0;
  std::vector<double> abscissae;
  std::vector<double> values;
};

// m abscissae spanning [lo, hi - sigma] of the piece.
GSigmaCurve gsigma_curve(const FunctionSpec& f, const Interval& piece, double sigma, std::size_t m);

struct GSigmaMonotoneCheck {
  Trend direction = Trend::Constant;
  double max_violation = 0.0;
  // Largest |G| on the curve; violations are judged relative to max(1, scale).
  double scale = 0.0;
  GSigmaCurve curve;
};

GSigmaMonotoneCheck check_gsigma_monotone(const FunctionSpec& f, const ShapePiece& piece,
                                          double sigma, std::size_t m);

}  // namespace contana
