#include "gsmon/core/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace gsmon {

LawResult& LawReport::law(std::string_view name) {
  auto it = std::find_if(laws_.begin(), laws_.end(),
                         [&](const LawResult& l) { return l.name == name; });
  if (it != laws_.end()) return *it;
  laws_.push_back(LawResult{std::string(name), 0, true, std::nullopt});
  return laws_.back();
}

const LawResult* LawReport::find(std::string_view name) const {
  auto it = std::find_if(laws_.begin(), laws_.end(),
                         [&](const LawResult& l) { return l.name == name; });
  return it == laws_.end() ? nullptr : &*it;
}

bool LawReport::passed() const {
  return std::none_of(laws_.begin(), laws_.end(),
                      [](const LawResult& l) { return l.failed(); });
}

std::uint64_t LawReport::checked_count() const {
  std::uint64_t n = 0;
  for (const auto& l : laws_) n += l.checked;
  return n;
}

bool LawReport::exhaustive() const {
  return std::all_of(laws_.begin(), laws_.end(),
                     [](const LawResult& l) { return l.exhaustive; });
}

const Witness* LawReport::witness() const {
  for (const auto& l : laws_)
    if (l.witness) return &*l.witness;
  return nullptr;
}

void LawReport::absorb(const LawReport& other, std::string_view prefix) {
  for (const auto& l : other.laws()) {
    LawResult copy = l;
    if (!prefix.empty()) {
      copy.name = std::string(prefix) + "/" + l.name;
      if (copy.witness) copy.witness->law = copy.name;
    }
    laws_.push_back(std::move(copy));
  }
  for (const auto& n : other.notes()) notes_.push_back(n);
}

nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& [role, value] : w.items) items.push_back({role, value});
  return {{"law", w.law}, {"items", items}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

nlohmann::ordered_json to_json(const LawReport& report) {
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const auto& l : report.laws()) {
    nlohmann::ordered_json j = {{"name", l.name},
                                {"verdict", l.failed() ? "fail" : "pass"},
                                {"checked", l.checked},
                                {"exhaustive", l.exhaustive}};
    if (l.witness) j["witness"] = to_json(*l.witness);
    laws.push_back(std::move(j));
  }
  nlohmann::ordered_json j = {{"check", report.check()},
                              {"verdict", report.passed() ? "pass" : "fail"},
                              {"checked_count", report.checked_count()},
                              {"exhaustive", report.exhaustive()},
                              {"laws", laws}};
  if (const Witness* w = report.witness()) j["witness"] = to_json(*w);
  if (!report.notes().empty()) j["notes"] = report.notes();
  return j;
}

std::string to_text(const LawReport& report) {
  std::ostringstream out;
  out << report.check() << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
      << report.checked_count() << " instances"
      << (report.exhaustive() ? "" : ", sampled") << ")\n";
  for (const auto& l : report.laws()) {
    out << "  " << (l.failed() ? "FAIL " : "ok   ") << l.name << " [" << l.checked
        << (l.exhaustive ? "" : ", sampled") << "]\n";
    if (l.witness) {
      for (const auto& [role, value] : l.witness->items)
        out << "       " << role << " = " << value << "\n";
      out << "       lhs = " << l.witness->lhs << "\n";
      out << "       rhs = " << l.witness->rhs << "\n";
    }
  }
  for (const auto& n : report.notes()) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace gsmon
