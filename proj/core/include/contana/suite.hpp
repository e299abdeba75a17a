#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "contana/acceptance.hpp"
#include "contana/report.hpp"

namespace contana {

struct SuiteEntry {
  std::string name;
  std::string function;
  std::string interval;
  double epsilon;
};

// Functions analysed by `contana suite`.
const std::vector<SuiteEntry>& suite_catalog();

// File name -> contents.
using FileSet = std::map<std::string, std::string>;

// report_<name>.json, modulus_<name>.csv, gsigma_<name>.csv and
// worstsum_<name>.csv for every catalog entry.
FileSet build_catalog_files(std::uint64_t seed);

struct SuiteOutcome {
  FileSet files;  // catalog files plus acceptance.json
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
};

// Builds the catalog twice (byte-identical output is criterion 8), runs
// criteria 1-7 and adds acceptance.json.
SuiteOutcome run_suite(std::uint64_t seed);

// Writes every file via temp-file-then-rename. On failure, files written by
// this call are removed and IoError is thrown.
void write_files_atomically(const std::filesystem::path& dir, const FileSet& files);

}  // namespace contana
