#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <contana/cantor.hpp>
#include <contana/collection.hpp>
#include <contana/errors.hpp>
#include <contana/modulus.hpp>
#include <contana/random.hpp>
#include <contana/sampling.hpp>
#include <contana/spec_parse.hpp>
#include <contana/worst_sum.hpp>

using namespace contana;

namespace {

FunctionSpec fn(const std::string& spec, const std::string& interval) {
  return parse_function(spec, parse_interval(interval));
}

SampleGrid random_grid(Rng& rng, std::size_t n) {
  SampleGrid g;
  g.spacing = 1.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    g.abscissae.push_back(static_cast<double>(i) * g.spacing);
    g.values.push_back(rng.uniform(-1.0, 1.0));
  }
  g.abscissae.back() = 1.0;
  return g;
}

double witness_sum(const SampleGrid& g, const IntervalCollection& c) {
  double s = 0.0;
  for (const Pair& p : c.pairs()) {
    const auto i = static_cast<std::size_t>(std::llround(p.x / g.spacing));
    const auto j = static_cast<std::size_t>(std::llround(p.y / g.spacing));
    s += std::abs(g.values[j] - g.values[i]);
  }
  return s;
}

}  // namespace

TEST_CASE("budget units are strictly below delta") {
  CHECK(budget_units(0.25, 0.0025) == 99);
  CHECK(budget_units(0.2501, 0.0025) == 100);
  CHECK(budget_units(0.0026, 0.0025) == 1);
  CHECK(budget_units(9.0 / 27.0, 1.0 / 27.0) == 8);
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double h = rng.uniform(1e-4, 1e-1);
    const double d = rng.uniform(h, 1.0);
    CHECK(static_cast<double>(budget_units(d, h)) * h < d * (1.0 + 1e-12));
    CHECK(static_cast<double>(budget_units(d, h) + 1) * h >= d * (1.0 - 1e-9));
  }
  CHECK_THROWS_AS(budget_units(0.1, 0.0), BudgetError);
}

TEST_CASE("dynamic program equals exhaustive enumeration on small grids") {
  Rng rng(12);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 3 + rng.integer(0, 7);
    const SampleGrid g = random_grid(rng, n);
    const std::size_t units = 1 + rng.integer(0, n - 2);
    const std::size_t k = 1 + rng.integer(0, 3);
    const double delta = (static_cast<double>(units) + 0.5) * g.spacing;
    const ACWorstReport r = worst_ac_sum_oracle(g, delta, k);
    CAPTURE(n);
    CAPTURE(units);
    CAPTURE(k);
    CHECK(r.best_sum == doctest::Approx(oracle::brute_worst_sum(g.values, units, k)).epsilon(1e-12));
    CHECK(r.witness.total_length() < delta);
    CHECK(r.witness.size() <= k);
    CHECK(r.best_sum == doctest::Approx(witness_sum(g, r.witness)).epsilon(1e-12));
  }
}

TEST_CASE("oracle on sqrt picks one left-anchored interval") {
  const FunctionSpec f = fn("sqrt", "[0,1]");
  const SampleGrid g = sample(f, f.domain(), 401);
  const ACWorstReport r = worst_ac_sum_oracle(g, 0.25);
  CHECK(r.method == WorstSumMethod::OracleDP);
  CHECK(r.best_sum == doctest::Approx(std::sqrt(0.2475)).epsilon(1e-12));
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness.pairs()[0].x == 0.0);
  CHECK(r.witness.pairs()[0].y == doctest::Approx(0.2475));
  CHECK(r.best_sum == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("oracle on an affine function spends the whole budget") {
  for (double slope : {-3.0, 0.5, 7.0}) {
    const FunctionSpec f(kind::Affine{slope, 1.0}, Interval::closed(0.0, 2.0));
    const SampleGrid g = sample(f, f.domain(), 201);
    const double delta = 0.337;
    const ACWorstReport r = worst_ac_sum_oracle(g, delta);
    const double usable = static_cast<double>(budget_units(delta, g.spacing)) * g.spacing;
    CHECK(r.best_sum == doctest::Approx(std::abs(slope) * usable).epsilon(1e-10));
  }
}

TEST_CASE("cantor stage-three grid yields the non-AC witness") {
  const FunctionSpec f = fn("cantor", "[0,1]");
  const SampleGrid g = sample(f, f.domain(), 28);
  const double delta = 8.0 / 27.0 + g.spacing;
  const ACWorstReport r = worst_ac_sum_oracle(g, delta, 8);
  CHECK(r.best_sum == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(r.witness.size() == 8);
  for (const Pair& p : r.witness.pairs()) CHECK(p.length() == doctest::Approx(1.0 / 27.0));
  CHECK(r.witness.total_length() < delta);
}

TEST_CASE("stage covers rise by one in total while their length shrinks") {
  for (int k = 0; k <= 12; ++k) {
    const IntervalCollection c = cantor_stage_cover(k);
    CHECK(c.size() == (std::size_t{1} << k));
    CHECK(c.total_length() == doctest::Approx(std::pow(2.0 / 3.0, k)).epsilon(1e-9));
    const FunctionSpec f = fn("cantor", "[0,1]");
    CHECK(variation_sum(f, c) == 1.0);
  }
  CHECK_THROWS_AS(cantor_stage_cover(31), DomainError);
}

TEST_CASE("unit cells are a lower bound on the unrestricted oracle") {
  Rng rng(44);
  for (int t = 0; t < 60; ++t) {
    const SampleGrid g = random_grid(rng, 4 + rng.integer(0, 30));
    const double delta = rng.uniform(1.01, 10.0) * g.spacing;
    const ACWorstReport cells = worst_unit_cells(g, delta);
    const ACWorstReport dp = worst_ac_sum_oracle(g, delta, g.size());
    CHECK(cells.best_sum <= dp.best_sum + 1e-12);
    CHECK(cells.witness.total_length() < delta);
    CHECK(cells.best_sum == doctest::Approx(witness_sum(g, cells.witness)).epsilon(1e-12));
  }
}

TEST_CASE("unit cells expose cantor on a generic grid") {
  const FunctionSpec f = fn("cantor", "[0,1]");
  const SampleGrid g = sample(f, f.domain(), 100001);
  for (int k = 2; k <= 8; ++k) {
    const ACWorstReport r = worst_unit_cells(g, std::pow(2.0 / 3.0, k));
    CAPTURE(k);
    CHECK(r.best_sum > 0.95);
  }
}

TEST_CASE("oracle and the single glued interval agree on monotone pieces") {
  struct Case {
    std::string spec, interval;
    Shape shape;
    Monotonicity mono;
  };
  const std::vector<Case> cases = {
      {"sqrt", "[0,1]", Shape::Concave, Monotonicity::Increasing},
      {"poly:0,0,1", "[0,10]", Shape::Convex, Monotonicity::Increasing},
      {"recip", "[0.1,10]", Shape::Convex, Monotonicity::Decreasing},
      {"sin", "[0.5pi,pi]", Shape::Concave, Monotonicity::Decreasing}};
  for (const Case& c : cases) {
    CAPTURE(c.spec);
    const FunctionSpec f = fn(c.spec, c.interval);
    const ShapePiece p{f.domain(), c.shape, c.mono, 0.0};
    const SampleGrid g = sample(f, f.domain(), 1001);
    const double wh = oracle::pair_scan_modulus(g, g.spacing);
    for (double frac : {0.01, 0.1, 0.33}) {
      const double delta = frac * f.domain().length();
      const ACWorstReport dp = worst_ac_sum_oracle(g, delta, 8);
      const ACWorstReport glued = glued_closed_form(f, p, delta);
      CHECK(std::abs(dp.best_sum - glued.best_sum) <= wh + 1e-12);
      CHECK(glued.witness.size() == 1);
    }
  }
}

TEST_CASE("oracle argument checks") {
  const FunctionSpec f = fn("sqrt", "[0,1]");
  const SampleGrid g = sample(f, f.domain(), 11);
  CHECK_THROWS_AS(worst_ac_sum_oracle(g, 0.05), BudgetError);
  CHECK_THROWS_AS(worst_ac_sum_oracle(g, 0.5, 0), BudgetError);
  const SampleGrid big = sample(f, f.domain(), 2'000'001);
  CHECK_THROWS_AS(worst_ac_sum_oracle(big, 0.5, 32), BudgetError);
}
