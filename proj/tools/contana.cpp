// contana: command-line front end for the continuity toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "contana/collection.hpp"
#include "contana/errors.hpp"
#include "contana/modulus.hpp"
#include "contana/report.hpp"
#include "contana/spec_parse.hpp"
#include "contana/suite.hpp"
#include "contana/worst_sum.hpp"

namespace {

using namespace contana;

enum Exit : int {
  kOk = 0,
  kViolated = 1,
  kParse = 2,
  kUnachievable = 3,
  kInternal = 4,
  kIo = 5,
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CONTANA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("CONTANA_SEED must be a non-negative integer");
    }
  }
  return 0;
}

struct Common {
  std::string fn;
  std::string interval;
  std::string json_path;
  double width = kDefaultWindowWidth;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--fn", c.fn, "Function spec (sqrt, cantor, poly:0,0,1, ...)")->required();
  cmd->add_option("--interval", c.interval, "Domain interval, e.g. [0,1] or [0,inf)")->required();
  cmd->add_option("--json", c.json_path, "Write the JSON report here instead of stdout");
  cmd->add_option("--width", c.width, "Window width for unbounded domains");
}

void emit(const Json& j, const std::string& path) {
  const std::string text = dump(j);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

Json header(const char* command, const Common& c, const FunctionSpec& f, const Interval& w) {
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"function", c.fn},
              {"domain", f.domain().to_string()},
              {"window", w.to_string()}};
}

std::vector<ShapePiece> monotone_pieces(const FunctionSpec& f, const Interval& window,
                                        std::size_t grid) {
  const SampleGrid g = sample(f, window, grid);
  const DetectResult d = detect_partition(g);
  const auto* shape = std::get_if<ShapeDetection>(&d);
  if (shape == nullptr) throw ShapeError("function is not piecewise convex at this resolution");
  std::vector<ShapePiece> out;
  for (const auto& piece : shape->pieces) {
    auto parts = refine_to_monotone(f, piece);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"contana: uniform and absolute continuity analysis for piecewise convex functions"};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  // analyze / certify
  Common an;
  AnalyzeOptions aopts;
  aopts.seed = env_seed;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline report");
  add_common(analyze_cmd, an);
  analyze_cmd->add_option("--epsilon", aopts.epsilon, "Target epsilon");
  analyze_cmd->add_option("--grid", aopts.grid, "Detection grid size");
  analyze_cmd->add_option("--eta", aopts.eta, "Second-difference zero band");
  analyze_cmd->add_option("--seed", aopts.seed, "Random seed (default CONTANA_SEED or 0)");
  analyze_cmd->add_option("--trials", aopts.trials, "Random verification trials");
  analyze_cmd->add_option("--max-pieces", aopts.max_pieces, "Piece bound");

  Common ce;
  AnalyzeOptions copts;
  copts.seed = env_seed;
  auto* certify_cmd = app.add_subcommand("certify", "Certificate and verification only");
  add_common(certify_cmd, ce);
  certify_cmd->add_option("--epsilon", copts.epsilon, "Target epsilon")->required();
  certify_cmd->add_option("--seed", copts.seed, "Random seed");
  certify_cmd->add_option("--trials", copts.trials, "Random verification trials");

  // modulus
  Common mo;
  std::string deltas_text;
  std::size_t mo_grid = 4001;
  auto* modulus_cmd = app.add_subcommand("modulus", "Tabulate the modulus of continuity");
  add_common(modulus_cmd, mo);
  modulus_cmd->add_option("--deltas", deltas_text, "Comma separated deltas")->required();
  modulus_cmd->add_option("--grid", mo_grid, "Grid size");

  // worst-sum
  Common ws;
  double ws_delta = 0.0;
  std::size_t ws_grid = 401;
  std::size_t ws_k = kDefaultMaxIntervals;
  auto* worst_cmd = app.add_subcommand("worst-sum", "Exact grid worst-case AC sum (DP oracle)");
  add_common(worst_cmd, ws);
  worst_cmd->add_option("--delta", ws_delta, "Total length budget")->required();
  worst_cmd->add_option("--grid", ws_grid, "Grid size");
  worst_cmd->add_option("--max-intervals", ws_k, "Maximum number of pairs");

  // check-lemma1
  Common l1;
  double l1_sigma = 0.5;
  std::size_t l1_points = 1000;
  auto* lemma_cmd = app.add_subcommand("check-lemma1", "Monotonicity of G_sigma on every piece");
  add_common(lemma_cmd, l1);
  lemma_cmd->add_option("--sigma", l1_sigma, "Shift sigma")->required();
  lemma_cmd->add_option("--points", l1_points, "Curve samples per piece");

  // check-glue
  Common gl;
  std::string pairs_text;
  auto* glue_cmd = app.add_subcommand("check-glue", "Gluing bound for a collection");
  add_common(glue_cmd, gl);
  glue_cmd->add_option("--pairs", pairs_text, "x1:y1,x2:y2,...")->required();

  // suite
  std::string out_dir;
  std::uint64_t suite_seed = env_seed;
  auto* suite_cmd = app.add_subcommand("suite", "Run the demonstration catalog and acceptance");
  suite_cmd->add_option("--out", out_dir, "Output directory")->required();
  suite_cmd->add_option("--seed", suite_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (analyze_cmd->parsed() || certify_cmd->parsed()) {
    const bool certify = certify_cmd->parsed();
    const Common& c = certify ? ce : an;
    AnalyzeOptions opts = certify ? copts : aopts;
    opts.width = c.width;
    if (certify) opts.worst_sum_ladder = false;
    const Interval iv = parse_interval(c.interval);
    const FunctionSpec f = parse_function(c.fn, iv);
    AnalysisResult r = analyze(f, c.fn, iv, opts);
    r.report["command"] = certify ? "certify" : "analyze";
    r.report["interval"] = c.interval;
    emit(r.report, c.json_path);
    return exit_code(r.status);
  }

  if (modulus_cmd->parsed()) {
    const Interval iv = parse_interval(mo.interval);
    const FunctionSpec f = parse_function(mo.fn, iv);
    const Interval w = analysis_window(f, iv, mo.width);
    const auto deltas = parse_reals(deltas_text);
    const ModulusCurve curve = modulus(f, w, deltas, mo_grid);
    Json j = header("modulus", mo, f, w);
    j["grid"] = mo_grid;
    j["modulus"] = to_json(curve);
    emit(j, mo.json_path);
    return kOk;
  }

  if (worst_cmd->parsed()) {
    const Interval iv = parse_interval(ws.interval);
    const FunctionSpec f = parse_function(ws.fn, iv);
    const Interval w = analysis_window(f, iv, ws.width);
    const SampleGrid grid = sample(f, w, ws_grid);
    const ACWorstReport rep = worst_ac_sum_oracle(grid, ws_delta, ws_k);
    Json j = header("worst-sum", ws, f, w);
    j["grid"] = ws_grid;
    j["max_intervals"] = ws_k;
    j["result"] = to_json(rep);
    emit(j, ws.json_path);
    return kOk;
  }

  if (lemma_cmd->parsed()) {
    const Interval iv = parse_interval(l1.interval);
    const FunctionSpec f = parse_function(l1.fn, iv);
    const Interval w = analysis_window(f, iv, l1.width);
    Json j = header("check-lemma1", l1, f, w);
    j["sigma"] = l1_sigma;
    Json rows = Json::array();
    bool all = true;
    for (const auto& piece : monotone_pieces(f, w, 4001)) {
      Json row = to_json(piece);
      if (!(piece.interval.length() > l1_sigma)) {
        row["skipped"] = "piece not longer than sigma";
        rows.push_back(row);
        continue;
      }
      const auto check = check_gsigma_monotone(f, piece, l1_sigma, l1_points);
      const bool ok = check.max_violation <= 1e-9 * std::max(1.0, check.scale);
      all &= ok;
      row["direction"] = to_string(check.direction);
      row["max_violation"] = check.max_violation;
      row["holds"] = ok;
      rows.push_back(row);
    }
    j["pieces"] = rows;
    j["holds"] = all;
    emit(j, l1.json_path);
    return all ? kOk : kViolated;
  }

  if (glue_cmd->parsed()) {
    const Interval iv = parse_interval(gl.interval);
    const FunctionSpec f = parse_function(gl.fn, iv);
    const Interval w = analysis_window(f, iv, gl.width);
    const IntervalCollection c = parse_pairs(pairs_text);
    const auto pieces = monotone_pieces(f, w, 4001);
    std::vector<double> points{pieces.front().interval.lo()};
    for (const auto& piece : pieces) points.push_back(piece.interval.hi());
    const IntervalCollection split = split_collection_at_partition(c, Partition(points));
    Json j = header("check-glue", gl, f, w);
    j["pairs"] = to_json(c);
    j["split_pairs"] = to_json(split);
    Json rows = Json::array();
    bool all = true;
    for (const auto& piece : pieces) {
      std::vector<Pair> inside;
      for (const auto& p : split.pairs())
        if (p.x >= piece.interval.lo() && p.y <= piece.interval.hi()) inside.push_back(p);
      if (inside.empty()) continue;
      const auto g = gluing_bound_check(f, piece, IntervalCollection(inside));
      all &= g.holds;
      rows.push_back(Json{{"piece", to_json(piece)},
                          {"pairs", to_json(IntervalCollection(inside))},
                          {"direction", to_string(g.direction_used)},
                          {"chain", g.chain.z},
                          {"lhs", g.lhs},
                          {"rhs", g.rhs},
                          {"holds", g.holds}});
    }
    j["checks"] = rows;
    j["holds"] = all;
    emit(j, gl.json_path);
    return all ? kOk : kViolated;
  }

  if (suite_cmd->parsed()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
      throw IoError("cannot create output directory " + out_dir);
    const SuiteOutcome outcome = run_suite(suite_seed);
    write_files_atomically(out_dir, outcome.files);
    for (const auto& c : outcome.criteria)
      std::cout << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": "
                << c.detail << "\n";
    return outcome.all_passed ? kOk : kViolated;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const contana::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const contana::Unachievable& e) {
    std::cerr << "unachievable: " << e.what() << "\n";
    return kUnachievable;
  } catch (const contana::ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kViolated;
  } catch (const contana::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
