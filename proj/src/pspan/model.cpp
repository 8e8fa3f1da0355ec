#include "gsmon/pspan/model.hpp"

#include <algorithm>

#include "gsmon/core/checks.hpp"

namespace gsmon {

PSpanModel::PSpanModel(std::vector<std::size_t> objects, std::size_t apex_bound,
                       std::vector<std::size_t> auxiliary)
    : objects_(std::move(objects)), auxiliary_(std::move(auxiliary)), bound_(apex_bound) {
  if (std::find(objects_.begin(), objects_.end(), std::size_t{1}) == objects_.end())
    objects_.insert(objects_.begin(), 1);
}

bool PSpanModel::contains(std::size_t a) const {
  return std::find(objects_.begin(), objects_.end(), a) != objects_.end() ||
         std::find(auxiliary_.begin(), auxiliary_.end(), a) != auxiliary_.end();
}

HomSize PSpanModel::hom_size(std::size_t a, std::size_t b) const { return span_count(a, b, bound_); }

LawReport check_span_criteria(const std::vector<std::size_t>& sizes, std::size_t bound) {
  LawReport r("span-criteria");
  auto& leq = r.law("leq-search-equals-support");
  auto& wf = r.law("weakly-functional-agrees");
  auto& wt = r.law("weakly-total-agrees");
  auto& canon = r.law("canonical-form-invariant");
  std::vector<std::size_t> squares;
  for (auto a : sizes) squares.push_back(a * a);
  PSpanModel m(sizes, bound, squares);
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  for (auto a : sizes)
    for (auto b : sizes) {
      const std::uint64_t n = span_count(a, b, bound);
      std::vector<Span> spans;
      spans.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) spans.push_back(span_at(a, b, bound, i));
      for (const auto& s : spans) {
        Items items{{"s", to_string(s)}};
        bool fiber = span_is_weakly_functional(s), generic = is_weakly_functional(m, s);
        if (fiber == generic)
          wf.pass();
        else
          wf.fail({"", items, yes(fiber), yes(generic)});
        bool surj = span_is_weakly_total(s), gt = is_weakly_total(m, s);
        if (surj == gt)
          wt.pass();
        else
          wt.fail({"", items, yes(surj), yes(gt)});
        auto l = s.left();
        auto rr = s.right();
        std::reverse(l.begin(), l.end());
        std::reverse(rr.begin(), rr.end());
        Span again = span_canonicalize(a, b, l, rr);
        if (again == s && span_index(s, bound).has_value())
          canon.pass();
        else
          canon.fail({"", items, to_string(again), to_string(s)});
      }
      for (const auto& s : spans)
        for (const auto& t : spans) {
          bool x = span_leq_search(s, t), y = span_leq_support(s, t);
          if (x == y)
            leq.pass();
          else
            leq.fail({"", {{"s", to_string(s)}, {"t", to_string(t)}}, yes(x), yes(y)});
        }
    }
  return r;
}

}  // namespace gsmon
