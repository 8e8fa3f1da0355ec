#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsmon/core/law_report.hpp"

namespace gsmon {

/// One acceptance suite: its reports, whether every report passed, and a
/// short explanation of each failing law.
struct SuiteResult {
  int number = 0;
  std::string title;
  std::vector<LawReport> reports;
  bool met = false;
  std::vector<std::string> analysis;
};

/// Suites 1 to 9; the seed drives every sampled law.  Throws
/// std::out_of_range for other numbers.
SuiteResult run_suite(int number, std::uint64_t seed = 0);
constexpr int kSuiteCount = 9;

/// Exhaustive over relations on sizes ≤ max_size: the partial-function and
/// totality predicates agree with their equations, dom matches the
/// set-theoretic formula, and total ⟺ dom = id.
LawReport check_finrel_predicates(std::size_t max_size = 3);

/// Wraps a report that is expected to fail: passes iff `r` failed with a
/// witness, recording the witness as a note.
LawReport expect_failure(const LawReport& r, const std::string& name);

}  // namespace gsmon
