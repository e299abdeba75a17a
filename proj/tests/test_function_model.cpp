#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <contana/errors.hpp>
#include <contana/function.hpp>
#include <contana/random.hpp>
#include <contana/sampling.hpp>
#include <contana/spec_parse.hpp>

using namespace contana;

namespace {

FunctionSpec fn(const char* spec, const char* interval) {
  return parse_function(spec, parse_interval(interval));
}

}  // namespace

TEST_CASE("interval construction and membership") {
  const Interval half = parse_interval("(0,1]");
  CHECK_FALSE(half.contains(0.0));
  CHECK(half.contains(1.0));
  CHECK(half.contains(Interval::closed(0.5, 1.0)));
  CHECK_FALSE(half.contains(Interval::closed(0.0, 1.0)));
  CHECK(half.to_string() == "(0,1]");
  CHECK(parse_interval("[0,inf)").to_string() == "[0,inf)");
  CHECK_THROWS_AS(Interval::closed(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(Interval(0.0, kInf, true, true), DomainError);
  CHECK_THROWS_AS(parse_interval("[0,1"), ParseError);
  CHECK_THROWS_AS(parse_interval("[2,1]"), ParseError);
}

TEST_CASE("eval examples") {
  CHECK(eval(fn("sqrt", "[0,1]"), 0.25) == 0.5);
  CHECK(eval(fn("x2sininv", "[-1,1]"), 0.0) == 0.0);
  CHECK(eval(fn("affine:2,1", "[0,5]"), 3.0) == 7.0);
  CHECK(eval(fn("poly:1,0,1", "[-2,2]"), -2.0) == 5.0);
  CHECK(eval(fn("recip", "[0.5,4]"), 4.0) == 0.25);
  CHECK(eval(fn("pwl:0:0,1:2,2:1", "[0,2]"), 1.5) == doctest::Approx(1.5));
}

TEST_CASE("eval rejects points outside the domain") {
  CHECK_THROWS_AS(eval(fn("sqrt", "[0,1]"), 1.5), DomainError);
  CHECK_THROWS_AS(eval(fn("sqrt", "(0,1]"), 0.0), DomainError);
  CHECK_THROWS_AS(fn("sqrt", "[-1,1]"), DomainError);
  CHECK_THROWS_AS(fn("recip", "[-1,1]"), DomainError);
  CHECK_THROWS_AS(fn("cantor", "[0,2]"), DomainError);
}

TEST_CASE("eval is bit-for-bit repeatable") {
  const FunctionSpec f = fn("x2sininv", "[0,1]");
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform();
    const double a = eval(f, x);
    const double b = eval(f, x);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
}

TEST_CASE("cantor digit examples") {
  CHECK(eval_cantor(0.0) == 0.0);
  CHECK(eval_cantor(1.0) == 1.0);
  // 1/3 and 2/3 are not binary64 values; the rounding error in x grows to
  // about 3e-11 in the result.
  CHECK(eval_cantor(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(eval_cantor(2.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(eval_cantor(1.0 / 3.0) <= 0.5);
  CHECK(eval_cantor(0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(eval_cantor(0.75) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(eval_cantor(0.5) == 0.5);
}

TEST_CASE("cantor agrees with an exact rational digit oracle") {
  // Denominators with short binary expansions are exact doubles.
  for (std::uint64_t q : {4u, 8u, 16u, 32u, 64u, 1024u}) {
    for (std::uint64_t p = 0; p <= q; ++p) {
      const double x = static_cast<double>(p) / static_cast<double>(q);
      CHECK(eval_cantor(x) == doctest::Approx(oracle::cantor_rational(p, q)).epsilon(1e-14));
    }
  }
}

TEST_CASE("cantor is nondecreasing on sorted grids") {
  for (int depth : {4, 12, 64}) {
    double last = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double y = eval_cantor(i / 20000.0, depth);
      REQUIRE(y >= last);
      last = y;
    }
  }
  Rng rng(3);
  std::vector<double> xs(5000);
  for (double& x : xs) x = rng.uniform();
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i) CHECK(eval_cantor(xs[i - 1]) <= eval_cantor(xs[i]));
}

TEST_CASE("cantor depth truncation bound") {
  Rng rng(5);
  for (int d : {1, 2, 5, 10, 20, 40}) {
    for (int i = 0; i < 500; ++i) {
      const double x = rng.uniform();
      CHECK(std::abs(eval_cantor(x, d) - eval_cantor(x, d + 8)) <= std::ldexp(1.0, -d));
    }
  }
  CHECK_THROWS_AS(eval_cantor(1.5), DomainError);
  CHECK_THROWS_AS(eval_cantor(0.5, 0), DomainError);
}

TEST_CASE("sampled table reproduces knots exactly") {
  const FunctionSpec f(kind::SampledTable{{{0.0, 1.0}, {0.3, -2.5}, {0.7, 0.1}, {1.0, 4.0}}},
                       Interval::closed(0.0, 1.0));
  CHECK(eval(f, 0.0) == 1.0);
  CHECK(eval(f, 0.3) == -2.5);
  CHECK(eval(f, 0.7) == 0.1);
  CHECK(eval(f, 1.0) == 4.0);
  CHECK(eval(f, 0.85) == doctest::Approx(2.05));
}

TEST_CASE("table files with and without headers") {
  const auto dir = std::filesystem::temp_directory_path() / "contana_table_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "t.csv";
  {
    std::ofstream out(path);
    out << "x,y\n0,0\n0.5,1\n1,0\n";
  }
  const FunctionSpec f = parse_function("table@" + path.string(), Interval::closed(0.0, 1.0));
  CHECK(eval(f, 0.25) == doctest::Approx(0.5));
  CHECK(parse_table_csv("0,1\n2,3\n").size() == 2);
  CHECK_THROWS_AS(parse_table_csv("0,1\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_function("table@" + (dir / "missing.csv").string(),
                                 Interval::closed(0.0, 1.0)),
                  ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("function mini-language") {
  CHECK(fn("cantor:12", "[0,1]").kind_name() == "cantor");
  CHECK(std::get<kind::Cantor>(fn("cantor:12", "[0,1]").kind()).depth == 12);
  CHECK(std::get<kind::Polynomial>(fn("poly:0,0,1", "[0,1]").kind()).coefficients.size() == 3);
  CHECK(parse_real("2pi") == doctest::Approx(2.0 * M_PI));
  CHECK(parse_real("-inf") == -kInf);
  CHECK_THROWS_AS(fn("nope", "[0,1]"), ParseError);
  CHECK_THROWS_AS(fn("affine:1", "[0,1]"), ParseError);
  CHECK_THROWS_AS(fn("sqrt:2", "[0,1]"), ParseError);
  CHECK_THROWS_AS(fn("cantor:0", "[0,1]"), ParseError);
  CHECK_THROWS_AS(fn("pwl:0:0,0:1", "[0,1]"), KindError);
  CHECK_THROWS_AS(parse_real("1.0x"), ParseError);
  CHECK(parse_reals("0.1,0.2").size() == 2);
}

TEST_CASE("sample examples") {
  const SampleGrid g = sample(fn("sqrt", "[0,1]"), Interval::closed(0.0, 1.0), 3);
  CHECK(g.abscissae == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(g.values[1] == doctest::Approx(0.70711).epsilon(1e-5));
  CHECK(g.values[2] == 1.0);

  const SampleGrid a = sample(fn("affine:1,0", "[0,2]"), Interval::closed(0.0, 2.0), 2);
  CHECK(a.abscissae == std::vector<double>{0.0, 2.0});
  CHECK(a.values == std::vector<double>{0.0, 2.0});

  const SampleGrid s = sample(fn("sqrt", "[0,inf)"), parse_interval("[0,inf)"), 2);
  CHECK(s.abscissae == std::vector<double>{0.0, 10.0});
  CHECK_THROWS_AS(sample(fn("sqrt", "[0,1]"), Interval::closed(0.0, 1.0), 1), InsufficientData);
}

TEST_CASE("clip_window examples") {
  CHECK(clip_window(parse_interval("[0,inf)"), 10.0) == Interval::closed(0.0, 10.0));
  CHECK(clip_window(Interval::open(0.0, 1.0), 10.0, 1e-6) == Interval::closed(1e-6, 1.0 - 1e-6));
  CHECK(clip_window(parse_interval("(-inf,inf)"), 10.0) == Interval::closed(-5.0, 5.0));
  CHECK(clip_window(parse_interval("(-inf,2]"), 4.0) == Interval::closed(-2.0, 2.0));
  const Interval d = clip_window(Interval::open(0.0, 1.0));
  CHECK(d.lo() == doctest::Approx(1e-9));
}

TEST_CASE("clip_window stays inside the domain closure") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    double lo = rng.uniform(-100.0, 100.0);
    double hi = lo + rng.uniform(1e-3, 50.0);
    if (rng.integer(0, 3) == 0) lo = -kInf;
    if (rng.integer(0, 3) == 0) hi = kInf;
    const bool lc = std::isfinite(lo) && rng.integer(0, 1) == 1;
    const bool hc = std::isfinite(hi) && rng.integer(0, 1) == 1;
    const Interval dom(lo, hi, lc, hc);
    const Interval w = clip_window(dom, rng.uniform(0.1, 20.0));
    CHECK(w.is_finite());
    CHECK(w.is_closed());
    CHECK(w.lo() >= dom.lo());
    CHECK(w.hi() <= dom.hi());
  }
}
