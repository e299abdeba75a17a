#include "contana/report.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "contana/errors.hpp"
#include "contana/format.hpp"

namespace contana {
namespace {

double pick_sigma(double requested, double piece_length) {
  return requested > 0.0 && requested < piece_length ? requested : piece_length / 2.0;
}

std::vector<ShapePiece> refine_all(const FunctionSpec& f, const std::vector<ShapePiece>& pieces) {
  std::vector<ShapePiece> out;
  for (const auto& piece : pieces) {
    auto parts = refine_to_monotone(f, piece);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

}  // namespace

std::string_view to_string(AnalysisStatus s) {
  switch (s) {
    case AnalysisStatus::Certified: return "certified";
    case AnalysisStatus::NotPiecewiseConvex: return "not_piecewise_convex";
    case AnalysisStatus::Unachievable: return "unachievable";
    case AnalysisStatus::VerificationFailed: return "verification_failed";
  }
  return "unachievable";
}

int exit_code(AnalysisStatus s) {
  switch (s) {
    case AnalysisStatus::Certified:
    case AnalysisStatus::NotPiecewiseConvex: return 0;
    case AnalysisStatus::VerificationFailed: return 1;
    case AnalysisStatus::Unachievable: return 3;
  }
  return 4;
}

Json to_json(const Interval& iv) { return iv.to_string(); }

Json to_json(const IntervalCollection& c) {
  Json pairs = Json::array();
  for (const auto& p : c.pairs()) pairs.push_back(Json::array({p.x, p.y}));
  return pairs;
}

Json to_json(const ShapePiece& piece) {
  return Json{{"interval", piece.interval.to_string()},
              {"lo", piece.interval.lo()},
              {"hi", piece.interval.hi()},
              {"shape", to_string(piece.shape)},
              {"monotonicity", to_string(piece.monotonicity)},
              {"tolerance", piece.tolerance}};
}

Json to_json(const ACWorstReport& r) {
  return Json{{"delta", r.delta},
              {"best_sum", r.best_sum},
              {"method", to_string(r.method)},
              {"grid_spacing", r.grid_spacing},
              {"total_length", r.witness.total_length()},
              {"pair_count", r.witness.size()},
              {"witness", to_json(r.witness)}};
}

Json to_json(const Certificate& c) {
  return Json{{"epsilon", c.epsilon},
              {"delta1", c.delta1},
              {"per_piece_budget", c.per_piece_budget},
              {"piece_count", c.monotone_pieces.size()},
              {"partition", c.partition.points()},
              {"piece_deltas", c.piece_deltas},
              {"curve_resolution", c.curve_resolution}};
}

Json to_json(const ModulusCurve& c) {
  Json rows = Json::array();
  for (const auto& s : c.samples) rows.push_back(Json::array({s.delta, s.omega}));
  return rows;
}

std::string modulus_csv(const ModulusCurve& c) {
  std::string out = "delta,omega\n";
  for (const auto& s : c.samples)
    out += format_double(s.delta) + "," + format_double(s.omega) + "\n";
  return out;
}

std::string gsigma_csv(const GSigmaCurve& c) {
  std::string out = "x,g_sigma\n";
  for (std::size_t j = 0; j < c.abscissae.size(); ++j)
    out += format_double(c.abscissae[j]) + "," + format_double(c.values[j]) + "\n";
  return out;
}

std::string worstsum_csv(const std::vector<ACWorstReport>& reports) {
  std::string out = "delta,best_sum,method,pairs,total_length\n";
  for (const auto& r : reports)
    out += format_double(r.delta) + "," + format_double(r.best_sum) + "," +
           std::string(to_string(r.method)) + "," + std::to_string(r.witness.size()) + "," +
           format_double(r.witness.total_length()) + "\n";
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

AnalysisResult analyze(const FunctionSpec& f, const std::string& function_text,
                       const Interval& requested, const AnalyzeOptions& opts) {
  if (!(opts.epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (opts.grid < 3) throw InsufficientData("analysis grid needs at least 3 points");

  AnalysisResult result;
  const Interval window = analysis_window(f, requested, opts.width);
  const SampleGrid grid = sample(f, window, opts.grid, opts.width);
  const double eta = opts.eta >= 0.0 ? opts.eta : default_eta(grid);

  Json& report = result.report;
  report["schema"] = kReportSchema;
  report["command"] = "analyze";
  report["function"] = function_text;
  report["domain"] = f.domain().to_string();
  report["window"] = window.to_string();
  int cantor_depth = 0;
  if (const auto* c = std::get_if<kind::Cantor>(&f.kind())) cantor_depth = c->depth;
  report["parameters"] = Json{{"epsilon", opts.epsilon},
                              {"grid", opts.grid},
                              {"eta", eta},
                              {"eta_rule", opts.eta >= 0.0 ? "explicit" : "1e-8*max|value|"},
                              {"seed", opts.seed},
                              {"max_pieces", opts.max_pieces},
                              {"window_width", opts.width},
                              {"open_margin_rule", "max(1e-9*length,1e-12)"},
                              {"trials", opts.trials},
                              {"curve_resolution", opts.curve_resolution},
                              {"sigma", opts.sigma},
                              {"gsigma_points", opts.gsigma_points},
                              {"refinement_factors", opts.refinement_factors},
                              {"worst_sum_grid", opts.worst_sum_grid},
                              {"worst_sum_budgets", opts.worst_sum_ladder ? opts.worst_sum_budgets : 0},
                              {"cantor_depth", cantor_depth},
                              {"invert_safety", kInvertSafety},
                              {"delta1_safety", kDelta1Safety}};

  // Piecewise convexity at increasing resolution.
  Json resolutions = Json::array();
  bool exceeded = false;
  for (std::size_t factor : opts.refinement_factors) {
    const std::size_t m = (opts.grid - 1) * factor + 1;
    const SampleGrid g = factor == 1 ? grid : sample(f, window, m, opts.width);
    const std::size_t changes = count_sign_changes(g, opts.eta >= 0.0 ? opts.eta : default_eta(g));
    const bool over = changes + 1 > opts.max_pieces;
    exceeded |= over;
    resolutions.push_back(Json{{"grid", m},
                               {"spacing", g.spacing},
                               {"sign_changes", changes},
                               {"exceeds_max_pieces", over}});
  }
  const DetectResult detected = detect_partition(grid, eta, opts.max_pieces);
  const auto* shape = std::get_if<ShapeDetection>(&detected);
  const bool piecewise = shape != nullptr && !exceeded;
  report["detection"] = Json{{"resolutions", resolutions}};

  // Modulus over the whole window.
  result.modulus = modulus_on_grid(grid, delta_ladder(grid, 1.25));
  bool uniformly_continuous = true;
  try {
    (void)invert_modulus(result.modulus, opts.epsilon);
  } catch (const Unachievable&) {
    uniformly_continuous = false;
  }

  Json certificate = nullptr;
  Json verification = nullptr;
  Json verdict_cert = "n/a";
  Json partition = Json::array();
  Json pieces_json = Json::array();
  Json gsigma_checks = Json::array();
  bool gsigma_ok = true;

  if (piecewise) {
    const auto refined = refine_all(f, shape->pieces);
    for (double a : shape->partition.points()) partition.push_back(a);
    for (const auto& piece : refined) pieces_json.push_back(to_json(piece));

    for (std::size_t i = 0; i < refined.size(); ++i) {
      const double sigma = pick_sigma(opts.sigma, refined[i].interval.length());
      const auto check = check_gsigma_monotone(f, refined[i], sigma, opts.gsigma_points);
      const bool ok = check.max_violation <= 1e-9 * std::max(1.0, check.scale);
      gsigma_ok &= ok;
      gsigma_checks.push_back(Json{{"piece", i},
                            {"sigma", sigma},
                            {"direction", to_string(check.direction)},
                            {"max_violation", check.max_violation},
                            {"holds", ok}});
      if (i == 0) result.gsigma = check.curve;
    }

    try {
      const Certificate cert = ac_certificate(f, shape->partition, refined, opts.epsilon,
                                              opts.curve_resolution);
      certificate = to_json(cert);
      VerifyOptions vo;
      vo.trials = opts.trials;
      vo.seed = opts.seed;
      const Verification v = verify_certificate(f, cert, vo);
      verification = Json{{"passed", v.passed},
                          {"worst_sum", v.worst_sum},
                          {"worst_source", v.worst_source},
                          {"worst_collection", to_json(v.worst_collection)},
                          {"collections_checked", v.collections_checked},
                          {"trials", vo.trials},
                          {"seed", vo.seed},
                          {"oracle", to_json(v.oracle)},
                          {"unit_cells", to_json(v.cells)}};
      verdict_cert = v.passed;
      result.status = v.passed ? AnalysisStatus::Certified : AnalysisStatus::VerificationFailed;
    } catch (const Unachievable&) {
      result.status = AnalysisStatus::Unachievable;
      verdict_cert = false;
    }
  } else {
    result.status = AnalysisStatus::NotPiecewiseConvex;
    result.gsigma = gsigma_curve(f, window, pick_sigma(opts.sigma, window.length()),
                                 opts.gsigma_points);
  }

  // Worst-case sums as the budget shrinks.
  if (opts.worst_sum_ladder && opts.worst_sum_budgets > 0) {
    const SampleGrid fine = sample(f, window, opts.worst_sum_grid, opts.width);
    double delta = window.length();
    for (std::size_t k = 1; k <= opts.worst_sum_budgets; ++k) {
      delta *= 2.0 / 3.0;
      if (!(delta > fine.spacing)) break;
      result.worst_sums.push_back(worst_unit_cells(fine, delta));
    }
  }
  Json worst = Json::array();
  for (const auto& r : result.worst_sums) {
    Json row = to_json(r);
    row.erase("witness");
    worst.push_back(row);
  }

  // Without a partition, sums that stay >= epsilon at every probed budget
  // mean no delta can work.
  if (!piecewise && !result.worst_sums.empty() &&
      std::all_of(result.worst_sums.begin(), result.worst_sums.end(),
                  [&](const ACWorstReport& r) { return r.best_sum >= opts.epsilon; }))
    result.status = AnalysisStatus::Unachievable;

  report["partition"] = partition;
  report["pieces"] = pieces_json;
  report["gsigma_checks"] = gsigma_checks;
  report["modulus"] = to_json(result.modulus);
  report["certificate"] = certificate;
  report["verification"] = verification;
  report["worst_sums"] = worst;
  report["verdicts"] = Json{{"piecewise_convex", piecewise},
                            {"uniformly_continuous_at_resolution", uniformly_continuous},
                            {"gsigma_monotone", piecewise ? Json(gsigma_ok) : Json("n/a")},
                            {"certificate_verified", verdict_cert}};
  report["status"] = to_string(result.status);
  return result;
}

}  // namespace contana
