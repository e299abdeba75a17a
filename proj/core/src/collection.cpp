#include "contana/collection.hpp"

#include <algorithm>
#include <cmath>

#include "contana/errors.hpp"

namespace contana {

IntervalCollection::IntervalCollection(std::vector<Pair> pairs, double min_length)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw GeometryError("collection endpoints must be finite");
    if (!(p.y - p.x > min_length))
      throw GeometryError("degenerate pair: y - x must exceed " + std::to_string(min_length));
    if (i > 0 && pairs_[i - 1].y > p.x)
      throw GeometryError("pairs must be sorted and nonoverlapping (y_i <= x_{i+1})");
    total_length_ += p.length();
  }
}

double variation_sum(const FunctionSpec& f, const IntervalCollection& c) {
  double sum = 0.0;
  for (const auto& p : c.pairs()) sum += std::abs(eval(f, p.y) - eval(f, p.x));
  return sum;
}

std::string_view to_string(Anchor a) {
  return a == Anchor::LeftAnchored ? "left" : "right";
}

GluedChain glue_chain(const IntervalCollection& c, Anchor direction) {
  if (c.empty()) throw EmptyCollection("cannot glue an empty collection");
  const auto& pairs = c.pairs();
  const std::size_t n = pairs.size();
  GluedChain chain;
  chain.direction = direction;
  chain.z.resize(n + 1);
  if (direction == Anchor::LeftAnchored) {
    chain.z[0] = pairs.front().x;
    for (std::size_t i = 0; i < n; ++i) chain.z[i + 1] = chain.z[i] + pairs[i].length();
  } else {
    chain.z[n] = pairs.back().y;
    for (std::size_t i = n; i-- > 0;) chain.z[i] = chain.z[i + 1] - pairs[i].length();
  }
  return chain;
}

Anchor favorable_anchor(const ShapePiece& piece) {
  return expected_trend(piece) == Trend::Nondecreasing ? Anchor::RightAnchored
                                                       : Anchor::LeftAnchored;
}

GluingCheck gluing_bound_check(const FunctionSpec& f, const ShapePiece& piece,
                               const IntervalCollection& c, double tolerance) {
  const Anchor anchor = favorable_anchor(piece);
  for (const auto& p : c.pairs())
    if (!piece.interval.contains(p.x) || !piece.interval.contains(p.y))
      throw GeometryError("pair leaves the piece " + piece.interval.to_string());

  GluingCheck out;
  out.direction_used = anchor;
  out.chain = glue_chain(c, anchor);
  // The chain spans total_length <= y_n - x_1; clamp rounding at the far end.
  auto& z = out.chain.z;
  for (double& v : z) v = std::clamp(v, piece.interval.lo(), piece.interval.hi());
  out.lhs = variation_sum(f, c);
  out.rhs = std::abs(eval(f, z.back()) - eval(f, z.front()));
  out.holds = out.lhs <= out.rhs + tolerance * std::max(1.0, out.rhs);
  return out;
}

IntervalCollection split_collection_at_partition(const IntervalCollection& c,
                                                 const Partition& p) {
  const auto& pts = p.points();
  std::vector<Pair> out;
  out.reserve(2 * c.size());
  for (const auto& pair : c.pairs()) {
    auto first = std::upper_bound(pts.begin(), pts.end(), pair.x);
    auto last = std::lower_bound(pts.begin(), pts.end(), pair.y);
    const auto inside = std::distance(first, last);
    if (inside > 1)
      throw PreconditionError("pair straddles more than one partition point");
    if (inside == 1) {
      out.push_back({pair.x, *first});
      out.push_back({*first, pair.y});
    } else {
      out.push_back(pair);
    }
  }
  return IntervalCollection(std::move(out));
}

}  // namespace contana
