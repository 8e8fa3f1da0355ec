#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <string>

#include "gsmon/cli/criteria.hpp"

namespace {

// Wall-clock limits in seconds, criteria 1..10.
constexpr double kLimit[] = {10, 30, 10, 60, 60, 120, 60, 120, 60, 300};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int report_all(const std::string& out) {
  const std::string cmd = std::string("\"") + GSMON_CLI_PATH + "\" report all --format json --seed 0 > \"" + out + "\"";
  return std::system(cmd.c_str());
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;
  for (int n = 1; n <= gsmon::kSuiteCount; ++n) {
    const auto t0 = clock::now();
    const auto s = gsmon::run_suite(n, 0);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool ok = s.met && secs < kLimit[n - 1];
    failed += !ok;
    std::printf("criterion %d: %s  %.2fs (limit %.0fs)  %s\n", n, ok ? "PASS" : "FAIL", secs, kLimit[n - 1],
                s.title.c_str());
    for (const auto& r : s.reports)
      for (const auto& note : r.notes())
        if (note.rfind("witness", 0) == 0) std::printf("    %s: %s\n", r.check().c_str(), note.c_str());
    for (const auto& a : s.analysis) std::printf("    analysis: %s\n", a.c_str());
  }

  const auto t0 = clock::now();
  const std::string a = "acceptance_report_a.json", b = "acceptance_report_b.json";
  auto first = std::async(std::launch::async, report_all, a);
  auto second = std::async(std::launch::async, report_all, b);
  first.get();
  second.get();
  const double secs = std::chrono::duration<double>(clock::now() - t0).count();
  const std::string ja = slurp(a), jb = slurp(b);
  const bool identical = !ja.empty() && ja == jb;
  const bool ok = identical && secs < kLimit[9];
  failed += !ok;
  std::printf("criterion 10: %s  %.2fs (limit %.0fs)  report all --seed 0 twice: %zu bytes, %s\n", ok ? "PASS" : "FAIL",
              secs, kLimit[9], ja.size(), identical ? "byte-identical" : "different");
  std::remove(a.c_str());
  std::remove(b.c_str());

  std::printf("%d of 10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
