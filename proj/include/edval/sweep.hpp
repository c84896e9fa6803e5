#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edval/exec.hpp"

namespace edval {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0.0;
};

struct SweepOptions {
  std::uint64_t seed = 20240607;
  Exec exec = Exec::Parallel;
};

inline constexpr int kCriterionCount = 11;

/// Runs acceptance criterion `id` (1..11).
CriterionResult run_criterion(int id, const SweepOptions& options);
/// All criteria in id order.
std::vector<CriterionResult> run_all_criteria(const SweepOptions& options);
std::string format_result_line(const CriterionResult& r);

}  // namespace edval
