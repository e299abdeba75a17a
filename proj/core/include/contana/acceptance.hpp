#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace contana {

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int id_, std::string name_, double limit = 0.0)
      : id(id_), name(std::move(name_)), time_limit(limit) {}

  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no limit
};

// Criteria 1-7 (the suite-level determinism check is run by the caller).
// Each result includes its own runtime limit in the pass decision.
std::vector<CriterionResult> run_acceptance_criteria(std::uint64_t seed = 0);

CriterionResult gsigma_suite();
CriterionResult gluing_suite(std::uint64_t seed);
CriterionResult oracle_theory_agreement();
CriterionResult certificate_soundness(std::uint64_t seed);
CriterionResult cantor_non_ac_witness();
CriterionResult converse_counterexample();
CriterionResult split_dominance(std::uint64_t seed);

}  // namespace contana
