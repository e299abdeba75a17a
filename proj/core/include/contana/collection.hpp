#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "contana/convexity.hpp"
#include "contana/function.hpp"

namespace contana {

struct Pair {
  double x;
  double y;
  double length() const noexcept { return y - x; }
  friend bool operator==(const Pair&, const Pair&) = default;
};

// Finite collection of nonoverlapping subintervals (x_i, y_i), sorted with
// y_i <= x_{i+1}. Pairs no longer than `min_length` are rejected.
class IntervalCollection {
public:
  IntervalCollection() = default;
  explicit IntervalCollection(std::vector<Pair> pairs, double min_length = 0.0);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  double total_length() const noexcept { return total_length_; }

  friend bool operator==(const IntervalCollection&, const IntervalCollection&) = default;

private:
  std::vector<Pair> pairs_;
  double total_length_ = 0.0;
};

// sum_i |f(y_i) - f(x_i)|
double variation_sum(const FunctionSpec& f, const IntervalCollection& c);

enum class Anchor { LeftAnchored, RightAnchored };
std::string_view to_string(Anchor a);

struct GluedChain {
  std::vector<double> z;
  Anchor direction = Anchor::LeftAnchored;
};

// Packs the collection's lengths, in order, into one contiguous chain
// starting at x_1 (left) or ending at y_n (right).
GluedChain glue_chain(const IntervalCollection& c, Anchor direction);

// Anchor at the end where G_sigma is largest for this piece.
Anchor favorable_anchor(const ShapePiece& piece);

struct GluingCheck {
  double lhs = 0.0;  // sum |f(y_i) - f(x_i)|
  double rhs = 0.0;  // |f(z_{n+1}) - f(z_1)|
  bool holds = false;
  Anchor direction_used = Anchor::LeftAnchored;
  GluedChain chain;
};

// Tolerance is relative to max(1, rhs).
GluingCheck gluing_bound_check(const FunctionSpec& f, const ShapePiece& piece,
                               const IntervalCollection& c, double tolerance = 1e-9);

// Splits every pair at the partition point it contains (at most one each).
// Throws PreconditionError when a pair contains two or more points.
IntervalCollection split_collection_at_partition(const IntervalCollection& c,
                                                 const Partition& p);

}  // namespace contana
