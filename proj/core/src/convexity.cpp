#include "contana/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contana/errors.hpp"
#include "contana/random.hpp"

namespace contana {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double d, double eta) {
  if (std::abs(d) <= eta) return 0;
  return d > 0.0 ? 1 : -1;
}

Monotonicity classify_monotonicity(const SampleGrid& grid, std::size_t first, std::size_t last,
                                   double tol) {
  bool up = false;
  bool down = false;
  for (std::size_t i = first; i < last; ++i) {
    const double d = grid.values[i + 1] - grid.values[i];
    if (d > tol) up = true;
    if (d < -tol) down = true;
  }
  if (up && down) return Monotonicity::Mixed;
  if (up) return Monotonicity::Increasing;
  if (down) return Monotonicity::Decreasing;
  return Monotonicity::Constant;
}

// Monotonicity from endpoint values of a piece known to be monotone.
Monotonicity endpoint_monotonicity(double fa, double fb) {
  const double tol = 4 * kEps * std::max({std::abs(fa), std::abs(fb), 1.0});
  if (fb - fa > tol) return Monotonicity::Increasing;
  if (fa - fb > tol) return Monotonicity::Decreasing;
  return Monotonicity::Constant;
}

}  // namespace

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Convex: return "convex";
    case Shape::Concave: return "concave";
    case Shape::Affine: return "affine";
    case Shape::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
    case Monotonicity::Mixed: return "mixed";
  }
  return "mixed";
}

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::Nonincreasing: return "nonincreasing";
    case Trend::Nondecreasing: return "nondecreasing";
    case Trend::Constant: return "constant";
  }
  return "constant";
}

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("a partition needs at least two points");
  for (double p : points_)
    if (!std::isfinite(p)) throw DomainError("partition points must be finite");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1] < points_[i]))
      throw DomainError("partition points must be strictly increasing");
}

double Partition::min_piece_length() const {
  double best = kInf;
  for (std::size_t i = 1; i < points_.size(); ++i)
    best = std::min(best, points_[i] - points_[i - 1]);
  return best;
}

Trend expected_trend(const ShapePiece& piece) {
  if (piece.shape == Shape::Unknown) throw ShapeError("piece shape is not certified");
  if (piece.monotonicity == Monotonicity::Mixed)
    throw ShapeError("piece is not monotone; refine it first");
  if (piece.shape == Shape::Affine || piece.monotonicity == Monotonicity::Constant)
    return Trend::Constant;
  const bool increasing = piece.monotonicity == Monotonicity::Increasing;
  const bool concave = piece.shape == Shape::Concave;
  return increasing == concave ? Trend::Nonincreasing : Trend::Nondecreasing;
}

ConvexityCheck check_convexity_inequality(const FunctionSpec& f, const Interval& piece,
                                          Shape claim, const ConvexityCheckOptions& opts) {
  if (claim == Shape::Unknown) throw ShapeError("claim must be convex, concave or affine");
  if (!f.domain().contains(piece))
    throw DomainError("piece " + piece.to_string() + " exceeds domain " + f.domain().to_string());
  if (opts.theta_steps == 0 || opts.pair_samples == 0)
    throw DomainError("theta_steps and pair_samples must be positive");

  const Interval w = clip_window(piece);
  Rng rng(opts.seed);
  ConvexityCheck out;
  out.worst_violation = -kInf;
  double scale = 0.0;

  for (std::size_t s = 0; s < opts.pair_samples; ++s) {
    double a = w.lo();
    double b = w.hi();
    if (s > 0) {
      a = rng.uniform(w.lo(), w.hi());
      b = rng.uniform(w.lo(), w.hi());
      if (a > b) std::swap(a, b);
      if (a == b) continue;
    }
    const double fa = eval(f, a);
    const double fb = eval(f, b);
    for (std::size_t k = 1; k <= opts.theta_steps; ++k) {
      const double theta = static_cast<double>(k) / static_cast<double>(opts.theta_steps + 1);
      const double mid = std::clamp(theta * a + (1.0 - theta) * b, a, b);
      const double fm = eval(f, mid);
      const double chord = theta * fa + (1.0 - theta) * fb;
      double defect = 0.0;
      switch (claim) {
        case Shape::Concave: defect = chord - fm; break;
        case Shape::Convex: defect = fm - chord; break;
        default: defect = std::abs(fm - chord); break;
      }
      scale = std::max({scale, std::abs(fa), std::abs(fb), std::abs(fm)});
      if (defect > out.worst_violation) {
        out.worst_violation = defect;
        out.witness = ConvexityWitness{a, b, theta};
      }
    }
  }
  out.tolerance = opts.tolerance >= 0.0 ? opts.tolerance : 4 * kEps * scale;
  out.holds = out.worst_violation <= out.tolerance;
  return out;
}

double default_eta(const SampleGrid& grid) {
  double peak = 0.0;
  for (double v : grid.values) peak = std::max(peak, std::abs(v));
  return 1e-8 * peak;
}

std::vector<double> second_differences(const SampleGrid& grid) {
  const auto& v = grid.values;
  std::vector<double> d;
  if (v.size() < 3) return d;
  d.reserve(v.size() - 2);
  for (std::size_t j = 1; j + 1 < v.size(); ++j) d.push_back(v[j + 1] - 2.0 * v[j] + v[j - 1]);
  return d;
}

std::size_t count_sign_changes(const SampleGrid& grid, double eta) {
  if (eta < 0.0) eta = default_eta(grid);
  std::size_t changes = 0;
  int last = 0;
  for (double d : second_differences(grid)) {
    const int s = sign_of(d, eta);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

DetectResult detect_partition(const SampleGrid& grid, double eta, std::size_t max_pieces) {
  if (grid.size() < 3) throw InsufficientData("detect_partition needs at least 3 grid points");
  if (eta < 0.0) eta = default_eta(grid);
  const auto d = second_differences(grid);

  struct Run {
    int sign;
    std::size_t last_centre;  // grid index of the run's last triple centre
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int s = sign_of(d[i], eta);
    const std::size_t centre = i + 1;
    if (runs.empty()) {
      runs.push_back({s, centre});
    } else if (s == 0 || runs.back().sign == s) {
      runs.back().last_centre = centre;
    } else if (runs.back().sign == 0) {
      // Leading zeros join the first signed run.
      runs.back() = {s, centre};
    } else {
      runs.push_back({s, centre});
    }
  }

  const std::size_t sign_changes = runs.size() - 1;
  if (runs.size() > max_pieces) return NotPiecewiseConvex{sign_changes, eta};

  std::vector<double> points{grid.abscissae.front()};
  std::vector<ShapePiece> pieces;
  std::size_t start = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const std::size_t end = r + 1 == runs.size() ? grid.size() - 1 : runs[r].last_centre;
    points.push_back(grid.abscissae[end]);
    ShapePiece piece{Interval::closed(grid.abscissae[start], grid.abscissae[end])};
    piece.shape = runs[r].sign > 0   ? Shape::Convex
                  : runs[r].sign < 0 ? Shape::Concave
                                     : Shape::Affine;
    piece.monotonicity = classify_monotonicity(grid, start, end, eta);
    piece.tolerance = grid.spacing;
    pieces.push_back(piece);
    start = end;
  }
  return ShapeDetection{Partition(std::move(points)), std::move(pieces), sign_changes, eta};
}

std::vector<ShapePiece> refine_to_monotone(const FunctionSpec& f, const ShapePiece& piece,
                                           double tol) {
  if (piece.shape == Shape::Unknown) throw ShapeError("cannot refine an uncertified piece");
  const double a = piece.interval.lo();
  const double b = piece.interval.hi();
  if (tol <= 0.0) tol = 1e-10 * (b - a);
  const double fa = eval(f, a);
  const double fb = eval(f, b);

  ShapePiece whole = piece;
  if (piece.shape == Shape::Affine) {
    whole.monotonicity = endpoint_monotonicity(fa, fb);
    return {whole};
  }

  // Convex pieces have a minimum, concave ones a maximum; search on s * f.
  const double s = piece.shape == Shape::Convex ? 1.0 : -1.0;
  double lo = a;
  double hi = b;
  while (hi - lo > tol) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (s * eval(f, m1) < s * eval(f, m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double extremum = 0.5 * (lo + hi);

  if (extremum - a <= tol || b - extremum <= tol) {
    whole.monotonicity = endpoint_monotonicity(fa, fb);
    return {whole};
  }
  ShapePiece left = piece;
  ShapePiece right = piece;
  left.interval = Interval::closed(a, extremum);
  right.interval = Interval::closed(extremum, b);
  left.monotonicity = endpoint_monotonicity(fa, eval(f, extremum));
  right.monotonicity = endpoint_monotonicity(eval(f, extremum), fb);
  return {left, right};
}

double g_sigma(const FunctionSpec& f, double x, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  return std::abs(eval(f, x + sigma) - eval(f, x));
}

GSigmaCurve gsigma_curve(const FunctionSpec& f, const Interval& piece, double sigma,
                         std::size_t m) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  if (m < 3) throw InsufficientData("a G_sigma curve needs at least 3 samples");
  const Interval w = clip_window(piece);
  if (!(w.length() > sigma))
    throw GeometryError("piece length must exceed sigma");
  GSigmaCurve curve;
  curve.sigma = sigma;
  curve.abscissae = uniform_abscissae(w.lo(), w.hi() - sigma, m);
  curve.values.reserve(m);
  for (double x : curve.abscissae) {
    const double xr = std::min(x + sigma, w.hi());
    curve.values.push_back(std::abs(eval(f, xr) - eval(f, x)));
  }
  return curve;
}

GSigmaMonotoneCheck check_gsigma_monotone(const FunctionSpec& f, const ShapePiece& piece,
                                          double sigma, std::size_t m) {
  GSigmaMonotoneCheck out;
  out.direction = expected_trend(piece);
  out.curve = gsigma_curve(f, piece.interval, sigma, m);
  const auto& g = out.curve.values;
  double rise = 0.0;
  double fall = 0.0;
  for (std::size_t j = 0; j + 1 < g.size(); ++j) {
    rise = std::max(rise, g[j + 1] - g[j]);
    fall = std::max(fall, g[j] - g[j + 1]);
  }
  for (double v : g) out.scale = std::max(out.scale, v);
  switch (out.direction) {
    case Trend::Nonincreasing: out.max_violation = rise; break;
    case Trend::Nondecreasing: out.max_violation = fall; break;
    case Trend::Constant: {
      // Flat within noise stays Constant; otherwise report the better fitting direction.
      const double noise = 1e-9 * std::max(1.0, out.scale);
      if (rise > noise || fall > noise) {
        out.direction = rise <= fall ? Trend::Nondecreasing : Trend::Nonincreasing;
        out.max_violation = std::min(rise, fall);
      } else {
        out.max_violation = std::max(rise, fall);
      }
      break;
    }
  }
  return out;
}

}  // namespace contana
