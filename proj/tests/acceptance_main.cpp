// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
// Usage: contana_acceptance [scratch-dir]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>

#include "contana/acceptance.hpp"
#include "contana/suite.hpp"

namespace fs = std::filesystem;

namespace {

contana::FileSet read_dir(const fs::path& dir) {
  contana::FileSet files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    files[entry.path().filename().string()] =
        std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return files;
}

// Criterion 8: two full suite runs written to disk must match byte for byte.
contana::CriterionResult determinism(const fs::path& scratch, bool& suite_ok) {
  contana::CriterionResult r(8, "Determinism: suite reruns are byte-identical");
  const auto start = std::chrono::steady_clock::now();
  const fs::path a = scratch / "run_a";
  const fs::path b = scratch / "run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const auto first = contana::run_suite(0);
  contana::write_files_atomically(a, first.files);
  const auto second = contana::run_suite(0);
  contana::write_files_atomically(b, second.files);
  const auto fa = read_dir(a);
  const auto fb = read_dir(b);
  suite_ok = first.all_passed && second.all_passed;
  r.passed = !fa.empty() && fa == fb;
  r.detail = std::to_string(fa.size()) + " files per run, " + (r.passed ? "identical" : "DIFFERENT");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "contana_acceptance";
  fs::create_directories(scratch);

  auto results = contana::run_acceptance_criteria(0);
  bool suite_ok = false;
  try {
    results.push_back(determinism(scratch, suite_ok));
  } catch (const std::exception& e) {
    contana::CriterionResult r(8, "Determinism: suite reruns are byte-identical");
    r.detail = std::string("threw: ") + e.what();
    results.push_back(r);
  }

  bool all = true;
  for (const auto& r : results) {
    all &= r.passed;
    std::printf("%s  criterion %d: %s (%.2fs%s) -- %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds,
                r.time_limit > 0 ? (", limit " + std::to_string(static_cast<int>(r.time_limit)) + "s").c_str() : "",
                r.detail.c_str());
  }
  std::printf("suite exit status would be %d\n", suite_ok ? 0 : 1);
  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
