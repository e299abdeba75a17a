#include "contana/suite.hpp"

#include <fstream>
#include <system_error>

#include "contana/errors.hpp"
#include "contana/spec_parse.hpp"

namespace contana {

const std::vector<SuiteEntry>& suite_catalog() {
  static const std::vector<SuiteEntry> entries{
      {"sqrt", "sqrt", "[0,1]", 0.1},
      {"affine", "affine:3,0", "[0,5]", 0.1},
      {"square", "poly:0,0,1", "[0,10]", 0.1},
      {"cube", "poly:0,0,0,1", "[-1,1]", 0.1},
      {"sin", "sin", "[0,2pi]", 0.4},
      {"recip", "recip", "[0.1,10]", 0.1},
      {"pwl", "pwl:0:0,1:2,2:1,3:3", "[0,3]", 0.1},
      {"x2sininv", "x2sininv", "[0,1]", 0.1},
      {"cantor", "cantor", "[0,1]", 0.5},
  };
  return entries;
}

FileSet build_catalog_files(std::uint64_t seed) {
  FileSet files;
  for (const auto& e : suite_catalog()) {
    const Interval iv = parse_interval(e.interval);
    const FunctionSpec f = parse_function(e.function, iv);
    AnalyzeOptions opts;
    opts.epsilon = e.epsilon;
    opts.seed = seed;
    const AnalysisResult r = analyze(f, e.function, iv, opts);
    Json report = r.report;
    report["interval"] = e.interval;
    report["suite_entry"] = e.name;
    files["report_" + e.name + ".json"] = dump(report);
    files["modulus_" + e.name + ".csv"] = modulus_csv(r.modulus);
    files["gsigma_" + e.name + ".csv"] = gsigma_csv(r.gsigma);
    files["worstsum_" + e.name + ".csv"] = worstsum_csv(r.worst_sums);
  }
  return files;
}

SuiteOutcome run_suite(std::uint64_t seed) {
  SuiteOutcome out;
  out.files = build_catalog_files(seed);
  const FileSet again = build_catalog_files(seed);
  out.criteria = run_acceptance_criteria(seed);
  CriterionResult det(8, "Determinism: identical seeds give byte-identical outputs");
  det.passed = again == out.files;
  det.detail = std::to_string(out.files.size()) + " files compared";
  out.criteria.push_back(det);

  Json criteria = Json::array();
  out.all_passed = true;
  for (const auto& c : out.criteria) {
    out.all_passed &= c.passed;
    criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed},
                            {"detail", c.detail}, {"time_limit_s", c.time_limit}});
  }
  out.files["acceptance.json"] = dump(Json{{"schema", kReportSchema},
                                           {"command", "suite"},
                                           {"seed", seed},
                                           {"all_passed", out.all_passed},
                                           {"criteria", criteria}});
  return out;
}

void write_files_atomically(const std::filesystem::path& dir, const FileSet& files) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoError("cannot create output directory " + dir.string());

  std::vector<fs::path> written;
  auto rollback = [&] {
    for (const auto& p : written) fs::remove(p, ec);
  };
  for (const auto& [name, content] : files) {
    const fs::path target = dir / name;
    const fs::path temp = dir / ("." + name + ".tmp");
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.close();
      if (!out) {
        fs::remove(temp, ec);
        rollback();
        throw IoError("cannot write " + temp.string());
      }
    }
    fs::rename(temp, target, ec);
    if (ec) {
      fs::remove(temp, ec);
      rollback();
      throw IoError("cannot rename into " + target.string());
    }
    written.push_back(target);
  }
}

}  // namespace contana
