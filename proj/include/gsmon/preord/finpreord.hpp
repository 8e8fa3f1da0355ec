#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsmon/finrel/rel.hpp"

namespace gsmon {

/// A finite preorder on {0, …, n-1}, stored as a dense boolean matrix.
class FinPreord {
 public:
  FinPreord() : FinPreord(1, {1}) {}
  /// Row-major n×n matrix; throws NotPreorder unless reflexive and transitive.
  FinPreord(std::size_t n, std::vector<std::uint8_t> leq);

  /// Reflexive-transitive closure of the given pairs.
  static FinPreord closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FinPreord discrete(std::size_t n);
  static FinPreord chain(std::size_t n);
  static FinPreord indiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * n_ + y] != 0; }
  bool is_discrete() const;
  /// Pairs x ≤ y with x ≠ y.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  /// Canonical text, e.g. "P2{0<=1}".
  std::string key() const;

  bool operator==(const FinPreord&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> leq_;
};

FinPreord preord_product(const FinPreord& x, const FinPreord& y);
FinPreord preord_terminal();
/// Every preorder on {0, …, n-1}, in a fixed order.
std::vector<FinPreord> all_preorders(std::size_t n);

nlohmann::ordered_json to_json(const FinPreord& p);
/// {"size": n, "leq_pairs": [[x,y], …]}; the closure of the pairs is taken.
FinPreord preord_from_json(const nlohmann::json& j);

/// A monotone map between finite preorders.
class MonotoneMap {
 public:
  /// Throws NotMonotone on a non-monotone table, DimensionMismatch on a bad one.
  MonotoneMap(FinPreord src, FinPreord tgt, std::vector<std::size_t> values);

  const FinPreord& src() const { return src_; }
  const FinPreord& tgt() const { return tgt_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }

  bool operator==(const MonotoneMap&) const = default;

 private:
  FinPreord src_, tgt_;
  std::vector<std::size_t> values_;
};

MonotoneMap map_identity(const FinPreord& x);
/// g ∘ f.
MonotoneMap map_compose(const MonotoneMap& g, const MonotoneMap& f);
/// ⟨f, g⟩ into the product, pairing row-major.
MonotoneMap map_pairing(const MonotoneMap& f, const MonotoneMap& g);
std::pair<MonotoneMap, MonotoneMap> map_projections(const FinPreord& x, const FinPreord& y);
/// Pointwise order in the target.
bool map_leq(const MonotoneMap& f, const MonotoneMap& g);
std::vector<MonotoneMap> all_monotone_maps(const FinPreord& x, const FinPreord& y);

/// {(x, y) : y ≤ f(x)}.
Rel hypograph(const MonotoneMap& f);

}  // namespace gsmon
