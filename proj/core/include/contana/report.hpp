#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "contana/certificate.hpp"
#include "contana/convexity.hpp"
#include "contana/modulus.hpp"
#include "contana/worst_sum.hpp"

namespace contana {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct AnalyzeOptions {
  double epsilon = 0.1;
  std::size_t grid = 4001;
  double eta = -1.0;  // < 0: 1e-8 * max|value|
  std::uint64_t seed = 0;
  std::size_t max_pieces = kDefaultMaxPieces;
  double width = kDefaultWindowWidth;
  std::size_t trials = 10000;
  std::size_t curve_resolution = kDefaultCurveResolution;
  double sigma = 0.5;  // shrunk to half the piece when it does not fit
  std::size_t gsigma_points = 1001;
  // Detection is repeated on grids refined by these factors.
  std::vector<std::size_t> refinement_factors{1, 4, 16};
  std::size_t worst_sum_grid = (std::size_t{1} << 17) + 1;
  std::size_t worst_sum_budgets = 8;  // delta_k = L (2/3)^k, k = 1..count
  bool worst_sum_ladder = true;
};

enum class AnalysisStatus { Certified, NotPiecewiseConvex, Unachievable, VerificationFailed };
std::string_view to_string(AnalysisStatus s);
// 0 certified / not piecewise convex, 1 verification failed, 3 unachievable.
int exit_code(AnalysisStatus s);

struct AnalysisResult {
  AnalysisStatus status = AnalysisStatus::NotPiecewiseConvex;
  Json report;
  ModulusCurve modulus;
  GSigmaCurve gsigma;
  std::vector<ACWorstReport> worst_sums;
};

// clip -> sample -> detect_partition -> refine_to_monotone -> G_sigma checks
// -> ac_certificate -> verify_certificate, plus a modulus table and a ladder
// of worst-case sums. `function_text` is recorded verbatim in the report.
AnalysisResult analyze(const FunctionSpec& f, const std::string& function_text,
                       const Interval& window, const AnalyzeOptions& opts = {});

Json to_json(const Interval& iv);
Json to_json(const IntervalCollection& c);
Json to_json(const ShapePiece& piece);
Json to_json(const ACWorstReport& r);
Json to_json(const Certificate& c);
Json to_json(const ModulusCurve& c);

std::string modulus_csv(const ModulusCurve& c);
std::string gsigma_csv(const GSigmaCurve& c);
std::string worstsum_csv(const std::vector<ACWorstReport>& reports);

// Stable text form of a report (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace contana
