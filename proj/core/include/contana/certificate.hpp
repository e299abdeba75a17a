#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "contana/collection.hpp"
#include "contana/convexity.hpp"
#include "contana/random.hpp"
#include "contana/worst_sum.hpp"

namespace contana {

inline constexpr double kDelta1Safety = 0.99;
inline constexpr std::size_t kDefaultCurveResolution = 4001;

struct Certificate {
  double epsilon = 0.0;
  double delta1 = 0.0;
  Partition partition{{0.0, 1.0}};
  double per_piece_budget = 0.0;  // epsilon / N
  std::vector<ShapePiece> monotone_pieces;
  // delta from inverting each piece's modulus at epsilon / N.
  std::vector<double> piece_deltas;
  std::size_t curve_resolution = 0;
};

// Builds (epsilon, delta1) from monotone-refined pieces that tile the
// partition's window. delta1 = 0.99 * min(min piece length, min piece delta).
Certificate ac_certificate(const FunctionSpec& f, const Partition& p,
                           const std::vector<ShapePiece>& pieces, double epsilon,
                           std::size_t curve_resolution = kDefaultCurveResolution);

struct VerifyOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t max_random_pairs = 16;
  // Resolution cap for the DP oracle and the unit-cell search.
  std::size_t oracle_max_grid = 20001;
  std::size_t cells_grid = 20001;
  std::size_t oracle_max_intervals = 8;
};

struct Verification {
  bool passed = false;
  double worst_sum = 0.0;
  IntervalCollection worst_collection;
  std::string worst_source;
  std::size_t collections_checked = 0;
  ACWorstReport oracle;
  ACWorstReport cells;
};

// Evaluates seeded random collections, anchored adversaries and grid
// searches, all with total length < delta1. Passes iff every sum < epsilon.
Verification verify_certificate(const FunctionSpec& f, const Certificate& cert,
                                const VerifyOptions& opts = {});

// Random valid collection inside [lo, hi] with 1..max_pairs pairs and total
// length strictly below `budget`.
IntervalCollection random_collection(Rng& rng, double lo, double hi, double budget,
                                     std::size_t max_pairs);

}  // namespace contana
