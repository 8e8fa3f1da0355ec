#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsmon/core/law_report.hpp"
#include "gsmon/core/model.hpp"
#include "gsmon/pspan/span.hpp"

namespace gsmon {

/// PSpan(FinSet) on a list of sizes.  Hom-sets are the spans with apex at
/// most `apex_bound`; composites may exceed the bound and are kept exactly.
class PSpanModel {
 public:
  using Object = std::size_t;
  using Morphism = Span;

  explicit PSpanModel(std::vector<std::size_t> objects, std::size_t apex_bound = 4,
                      std::vector<std::size_t> auxiliary = {});

  const std::vector<std::size_t>& objects() const { return objects_; }
  bool contains(std::size_t a) const;
  std::size_t apex_bound() const { return bound_; }
  std::size_t unit() const { return 1; }
  std::size_t tensor_objects(std::size_t a, std::size_t b) const { return a * b; }
  std::size_t dom(const Span& f) const { return f.src(); }
  std::size_t cod(const Span& f) const { return f.tgt(); }
  Span identity(std::size_t a) const { return span_id(a); }
  Span compose(const Span& g, const Span& f) const { return span_compose(g, f); }
  Span tensor(const Span& f, const Span& g) const { return span_tensor(f, g); }
  Span symmetry(std::size_t a, std::size_t b) const { return span_symmetry(a, b); }
  Span dup(std::size_t a) const { return span_dup(a); }
  Span discharge(std::size_t a) const { return span_discharge(a); }
  bool equal(const Span& f, const Span& g) const { return f == g; }
  bool has_order() const { return true; }
  bool leq(const Span& f, const Span& g) const { return span_leq(f, g); }
  HomSize hom_size(std::size_t a, std::size_t b) const;
  Span hom_at(std::size_t a, std::size_t b, std::uint64_t i) const { return span_at(a, b, bound_, i); }
  Span hom_sample(std::size_t a, std::size_t b, Rng& rng) const { return random_span(a, b, bound_, rng); }
  std::optional<std::uint64_t> hom_index(const Span& f) const { return span_index(f, bound_); }
  std::string describe(const Span& f) const { return to_string(f); }
  std::string describe_object(std::size_t a) const { return std::to_string(a); }

 private:
  std::vector<std::size_t> objects_;
  std::vector<std::size_t> auxiliary_;
  std::size_t bound_;
};

/// Cross-validation over every span with apex ≤ bound between the given
/// sizes: 2-cell search agrees with support containment on every pair, the
/// fiber and surjectivity criteria agree with the generic ≈-based weak
/// functionality and totality in the model, and canonical form is
/// idempotent and invariant under apex permutations.
LawReport check_span_criteria(const std::vector<std::size_t>& sizes, std::size_t bound = 4);

}  // namespace gsmon
