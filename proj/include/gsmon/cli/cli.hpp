#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gsmon {

/// Version of the report envelope written by `--format json`.
constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string model = "finrel";
  std::string order = "inclusion";
  std::string monad = "powerset";
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> aux;
  std::size_t apex_bound = 4;
  std::size_t max_size = 3;
  std::uint64_t samples = 200;
  std::uint64_t cap = 65536;
  std::uint64_t budget = 4096;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string presentation;
  std::string assignment;
  std::string homs = "1:2,2:2";
  std::vector<std::string> files;
};

nlohmann::ordered_json to_json(const RunConfig& c);

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out`.  Returns 0 when every report passes, 1 on a failing law
/// and 2 on usage, fixture or library errors (diagnostics go to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsmon
