#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <contana/cantor.hpp>
#include <contana/certificate.hpp>
#include <contana/convexity.hpp>
#include <contana/errors.hpp>
#include <contana/sampling.hpp>
#include <contana/spec_parse.hpp>

using namespace contana;

namespace {

FunctionSpec fn(const std::string& spec, const std::string& interval) {
  return parse_function(spec, parse_interval(interval));
}

struct Pipeline {
  Partition partition{{0.0, 1.0}};
  std::vector<ShapePiece> pieces;
};

Pipeline detect_and_refine(const FunctionSpec& f, std::size_t m = 4001, double eta = -1.0) {
  const DetectResult r = detect_partition(sample(f, f.domain(), m), eta);
  const auto& d = std::get<ShapeDetection>(r);
  Pipeline out{d.partition, {}};
  for (const ShapePiece& p : d.pieces)
    for (const ShapePiece& q : refine_to_monotone(f, p)) out.pieces.push_back(q);
  return out;
}

VerifyOptions quick() {
  VerifyOptions o;
  o.trials = 2000;
  o.seed = 7;
  return o;
}

}  // namespace

TEST_CASE("sqrt certificate at epsilon 0.1") {
  const FunctionSpec f = fn("sqrt", "[0,1]");
  const Pipeline p = detect_and_refine(f);
  REQUIRE(p.pieces.size() == 1);
  const Certificate c = ac_certificate(f, p.partition, p.pieces, 0.1);
  CHECK(c.delta1 == doctest::Approx(0.99 * 0.9 * 0.01).epsilon(0.05));
  CHECK(c.per_piece_budget == doctest::Approx(0.1));

  const Verification v = verify_certificate(f, c, VerifyOptions{});
  CHECK(v.passed);
  CHECK(v.worst_sum < 0.1);
  CHECK(v.worst_sum == doctest::Approx(std::sqrt(c.delta1)).epsilon(0.01));
  CHECK(v.collections_checked > 10000);
}

TEST_CASE("affine certificate follows the linear modulus") {
  for (double slope : {0.5, -2.0, 20.0}) {
    const FunctionSpec f(kind::Affine{slope, 0.0}, Interval::closed(0.0, 1.0));
    const Pipeline p = detect_and_refine(f);
    const double eps = 0.3;
    const Certificate c = ac_certificate(f, p.partition, p.pieces, eps);
    CAPTURE(slope);
    const double law = std::min(0.99 * 0.9 * eps / std::abs(slope), 0.99);
    CHECK(c.delta1 <= law * (1.0 + 1e-9));
    // The 1.05 delta ladder can lose up to one rung.
    CHECK(c.delta1 >= law / 1.05 * (1.0 - 1e-9));
    const Verification v = verify_certificate(f, c, quick());
    CHECK(v.passed);
    CHECK(v.worst_sum <= std::abs(slope) * c.delta1 * (1.0 + 1e-9));
  }
}

TEST_CASE("sin certificate uses four monotone pieces") {
  const FunctionSpec f = fn("sin", "[0,2pi]");
  const Pipeline p = detect_and_refine(f);
  REQUIRE(p.pieces.size() == 4);
  const Certificate c = ac_certificate(f, p.partition, p.pieces, 0.4);
  CHECK(c.per_piece_budget == doctest::Approx(0.1));
  CHECK(c.delta1 <= 0.99 * std::min(0.1, M_PI / 2));
  CHECK(c.delta1 >= 0.99 * 0.9 * 0.1 * 0.95);
  CHECK(verify_certificate(f, c, quick()).passed);
}

TEST_CASE("certificate invariants and soundness across the catalog") {
  struct Case {
    std::string spec, interval;
    double eta;
  };
  const std::vector<Case> cases = {{"sqrt", "[0,1]", -1.0},
                                   {"affine:3,0", "[0,5]", -1.0},
                                   {"poly:0,0,1", "[0,10]", -1.0},
                                   {"poly:0,0,0,1", "[-1,1]", 1e-9},
                                   {"sin", "[0,2pi]", -1.0},
                                   {"pwl:0:0,1:2,2:1,3:3", "[0,3]", -1.0}};
  for (const Case& k : cases) {
    const FunctionSpec f = fn(k.spec, k.interval);
    const Pipeline p = detect_and_refine(f, 1001, k.eta);
    for (double eps : {0.4, 0.1}) {
      CAPTURE(k.spec);
      CAPTURE(eps);
      const Certificate c = ac_certificate(f, p.partition, p.pieces, eps, 1001);
      CHECK(c.delta1 < c.partition.min_piece_length());
      for (double d : c.piece_deltas) CHECK(c.delta1 <= d);
      CHECK(c.per_piece_budget == doctest::Approx(eps / static_cast<double>(c.monotone_pieces.size())));
      VerifyOptions o = quick();
      o.trials = 500;
      CHECK(verify_certificate(f, c, o).passed);
    }
  }
}

TEST_CASE("a fabricated cantor certificate is refuted") {
  const FunctionSpec f = fn("cantor", "[0,1]");
  Certificate c;
  c.epsilon = 0.5;
  c.delta1 = std::pow(2.0 / 3.0, 6);
  c.partition = Partition({0.0, 1.0});
  c.per_piece_budget = 0.5;
  // The shape claim is false; verification must not rely on it.
  c.monotone_pieces = {ShapePiece{Interval::closed(0.0, 1.0), Shape::Convex, Monotonicity::Increasing, 0.0}};
  const Verification v = verify_certificate(f, c, quick());
  CHECK_FALSE(v.passed);
  CHECK(v.worst_sum >= 0.5);
  CHECK(v.worst_collection.total_length() < c.delta1);

  // A finer stage cover fits inside the claimed budget and rises by one.
  const IntervalCollection cover = cantor_stage_cover(7);
  CHECK(cover.total_length() < c.delta1);
  CHECK(variation_sum(f, cover) == 1.0);
}

TEST_CASE("ac_certificate argument checks") {
  const FunctionSpec f = fn("poly:0,0,1", "[-1,1]");
  const Partition p({-1.0, 0.0, 1.0});
  const ShapePiece left{Interval::closed(-1.0, 0.0), Shape::Convex, Monotonicity::Decreasing, 0.0};
  const ShapePiece right{Interval::closed(0.0, 1.0), Shape::Convex, Monotonicity::Increasing, 0.0};
  const ShapePiece gap{Interval::closed(0.1, 1.0), Shape::Convex, Monotonicity::Increasing, 0.0};
  const ShapePiece mixed{Interval::closed(-1.0, 1.0), Shape::Convex, Monotonicity::Mixed, 0.0};
  CHECK_NOTHROW(ac_certificate(f, p, {left, right}, 0.1, 501));
  CHECK_THROWS_AS(ac_certificate(f, p, {left, gap}, 0.1), PreconditionError);
  CHECK_THROWS_AS(ac_certificate(f, p, {left}, 0.1), PreconditionError);
  CHECK_THROWS_AS(ac_certificate(f, p, {}, 0.1), PreconditionError);
  CHECK_THROWS_AS(ac_certificate(f, p, {mixed}, 0.1), ShapeError);
  CHECK_THROWS_AS(ac_certificate(f, p, {left, right}, 0.0), DomainError);
  // Pieces must refine the partition, not merely cover it.
  const ShapePiece whole{Interval::closed(-1.0, 1.0), Shape::Convex, Monotonicity::Increasing, 0.0};
  CHECK_THROWS_AS(ac_certificate(f, p, {whole}, 0.1), PreconditionError);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  const FunctionSpec f = fn("sin", "[0,2pi]");
  const Pipeline p = detect_and_refine(f, 1001);
  const Certificate c = ac_certificate(f, p.partition, p.pieces, 0.1, 1001);
  const Verification a = verify_certificate(f, c, quick());
  const Verification b = verify_certificate(f, c, quick());
  CHECK(a.worst_sum == b.worst_sum);
  CHECK(a.worst_collection == b.worst_collection);
  CHECK(a.worst_source == b.worst_source);
}
