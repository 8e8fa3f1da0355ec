#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/model.hpp"
#include "gsmon/finrel/rel.hpp"

namespace gsmon {

enum class RelOrder { Inclusion, Reversed, Equality };

/// FinRel restricted to a list of sizes.  Hom-sets are enumerated lazily: the
/// i-th relation a -> b is the one whose row-major bitmask is i.
class FinRelModel {
 public:
  using Object = std::size_t;
  using Morphism = Rel;

  /// `auxiliary` sizes may occur as tensor objects in checked instances but
  /// are not quantified over themselves.
  explicit FinRelModel(std::vector<std::size_t> objects, RelOrder order = RelOrder::Inclusion,
                       std::vector<std::size_t> auxiliary = {});

  const std::vector<std::size_t>& objects() const { return objects_; }
  bool contains(std::size_t a) const;
  std::size_t unit() const { return 1; }
  std::size_t tensor_objects(std::size_t a, std::size_t b) const { return a * b; }
  std::size_t dom(const Rel& f) const { return f.src(); }
  std::size_t cod(const Rel& f) const { return f.tgt(); }
  Rel identity(std::size_t a) const { return rel_id(a); }
  Rel compose(const Rel& g, const Rel& f) const { return gsmon::compose(g, f); }
  Rel tensor(const Rel& f, const Rel& g) const { return rel_tensor(f, g); }
  Rel symmetry(std::size_t a, std::size_t b) const { return rel_symmetry(a, b); }
  Rel dup(std::size_t a) const { return rel_dup(a); }
  Rel discharge(std::size_t a) const { return rel_discharge(a); }
  bool equal(const Rel& f, const Rel& g) const { return f == g; }
  bool has_order() const { return true; }
  bool leq(const Rel& f, const Rel& g) const;
  RelOrder order() const { return order_; }
  HomSize hom_size(std::size_t a, std::size_t b) const;
  Rel hom_at(std::size_t a, std::size_t b, std::uint64_t i) const { return Rel::from_mask(a, b, i); }
  Rel hom_sample(std::size_t a, std::size_t b, Rng& rng) const { return random_rel(a, b, rng); }
  /// A random relation above f in the model's order.
  Rel sample_above(const Rel& f, Rng& rng) const;
  std::optional<std::uint64_t> hom_index(const Rel& f) const { return f.mask(); }
  std::string describe(const Rel& f) const { return to_string(f); }
  std::string describe_object(std::size_t a) const { return std::to_string(a); }

 private:
  std::vector<std::size_t> objects_;
  std::vector<std::size_t> auxiliary_;
  RelOrder order_;
};

/// The FinRel model on the given sizes with ⊆, after checking every hom-set
/// between listed sizes stays within `cap`.
FinRelModel as_presentation(const std::vector<std::size_t>& objects, std::uint64_t cap = 65536);

}  // namespace gsmon
