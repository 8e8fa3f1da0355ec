#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gsmon {

/// A counterexample to a named law: the instance that was tested and the
/// two sides that were expected to agree.
struct Witness {
  std::string law;
  std::vector<std::pair<std::string, std::string>> items;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one law over all of its tested instances.
struct LawResult {
  std::string name;
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::optional<Witness> witness;

  bool failed() const { return witness.has_value(); }
  void pass() { ++checked; }
  void fail(Witness w) {
    ++checked;
    if (!witness) {
      w.law = name;
      witness = std::move(w);
    }
  }
};

/// Result of a checker: one entry per law, in the order the laws were checked.
/// The report fails iff some law carries a witness.
class LawReport {
 public:
  LawReport() = default;
  explicit LawReport(std::string check) : check_(std::move(check)) {}

  const std::string& check() const { return check_; }

  /// Finds the law with this name, creating it at the end if absent.
  LawResult& law(std::string_view name);
  const LawResult* find(std::string_view name) const;

  const std::deque<LawResult>& laws() const { return laws_; }
  bool passed() const;
  std::uint64_t checked_count() const;
  bool exhaustive() const;
  /// The witness of the first failing law, if any.
  const Witness* witness() const;

  void note(std::string text) { notes_.push_back(std::move(text)); }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Appends all laws and notes of `other`, prefixing law names.
  void absorb(const LawReport& other, std::string_view prefix = {});

 private:
  std::string check_;
  std::deque<LawResult> laws_;  // stable references
  std::vector<std::string> notes_;
};

nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const LawReport& report);
std::string to_text(const LawReport& report);

}  // namespace gsmon
