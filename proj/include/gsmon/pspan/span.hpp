#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsmon/core/model.hpp"

namespace gsmon {

/// A span src <- apex -> tgt of finite sets.  Spans are kept in canonical
/// form: apex elements sorted by (left, right), so two spans are isomorphic
/// iff they compare equal.
class Span {
 public:
  Span() = default;
  /// Throws DimensionMismatch on mismatched legs or out-of-range values.
  Span(std::size_t src, std::size_t tgt, std::vector<std::size_t> left, std::vector<std::size_t> right);

  std::size_t src() const { return src_; }
  std::size_t tgt() const { return tgt_; }
  std::size_t apex() const { return left_.size(); }
  const std::vector<std::size_t>& left() const { return left_; }
  const std::vector<std::size_t>& right() const { return right_; }
  /// Apex elements as codes left·tgt + right, in canonical (sorted) order.
  std::vector<std::uint64_t> codes() const;

  bool operator==(const Span&) const = default;

 private:
  std::size_t src_ = 0;
  std::size_t tgt_ = 0;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
};

/// Sorts apex elements by (left, right).  Legs are validated.
Span span_canonicalize(std::size_t src, std::size_t tgt, std::vector<std::size_t> left,
                       std::vector<std::size_t> right);
Span span_from_pairs(std::size_t src, std::size_t tgt,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
/// The span src <-id- src -f-> tgt.
Span span_of_function(std::size_t src, std::size_t tgt, const std::function<std::size_t(std::size_t)>& f);

/// Pullback composite t∘s.  Throws DimensionMismatch if s.tgt ≠ t.src.
Span span_compose(const Span& t, const Span& s);
/// Product apex with row-major paired legs.
Span span_tensor(const Span& s, const Span& t);
Span span_id(std::size_t n);
Span span_symmetry(std::size_t m, std::size_t n);
Span span_dup(std::size_t n);
Span span_discharge(std::size_t n);

/// Whether a 2-cell s => t exists, by exhaustive search over apex maps.
bool span_leq_search(const Span& s, const Span& t);
/// Whether every (left, right) pair of s occurs in t.
bool span_leq_support(const Span& s, const Span& t);
/// The support criterion; throws DimensionMismatch on different boundaries.
bool span_leq(const Span& s, const Span& t);

/// Equal left values force equal right values.
bool span_is_weakly_functional(const Span& s);
/// The left leg is surjective.
bool span_is_weakly_total(const Span& s);

std::string to_string(const Span& s);
nlohmann::ordered_json to_json(const Span& s);
/// {"src", "tgt", "left", "right"}, canonicalized; throws FixtureError.
Span span_from_json(const nlohmann::json& j);

/// Spans src -> tgt with apex ≤ bound, ordered by apex size and then
/// lexicographically by codes.  Counts saturate at UINT64_MAX.
std::uint64_t span_count(std::size_t src, std::size_t tgt, std::size_t bound);
Span span_at(std::size_t src, std::size_t tgt, std::size_t bound, std::uint64_t i);
/// nullopt when the apex exceeds the bound.
std::optional<std::uint64_t> span_index(const Span& s, std::size_t bound);
Span random_span(std::size_t src, std::size_t tgt, std::size_t bound, Rng& rng);

}  // namespace gsmon
