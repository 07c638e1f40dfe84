#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace curvegraph::audit {

enum class CriterionStatus { pass, fail };

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;

  bool passed() const { return status == CriterionStatus::pass; }
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  /// Base count for randomized criteria. Criteria that call for 200 or 50
  /// instances scale with it (2x, 1/2x); the sequence criterion uses 1/10.
  std::size_t instances = 100;
  /// Re-runs criteria 1-12 and compares the rendered output byte for byte.
  bool check_determinism = true;
};

/// Runs the thirteen acceptance criteria in order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options);

/// One line per criterion: "PASS  C01 figure1-exactness  <detail>".
std::string render(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace curvegraph::audit
