#include "gsmon/finrel/model.hpp"

#include <algorithm>
#include <limits>

#include "gsmon/core/errors.hpp"

namespace gsmon {

FinRelModel::FinRelModel(std::vector<std::size_t> objects, RelOrder order,
                         std::vector<std::size_t> auxiliary)
    : objects_(std::move(objects)), auxiliary_(std::move(auxiliary)), order_(order) {
  if (std::find(objects_.begin(), objects_.end(), std::size_t{1}) == objects_.end())
    objects_.insert(objects_.begin(), 1);
}

bool FinRelModel::contains(std::size_t a) const {
  return std::find(objects_.begin(), objects_.end(), a) != objects_.end() ||
         std::find(auxiliary_.begin(), auxiliary_.end(), a) != auxiliary_.end();
}

bool FinRelModel::leq(const Rel& f, const Rel& g) const {
  switch (order_) {
    case RelOrder::Inclusion:
      return f.subset_of(g);
    case RelOrder::Reversed:
      return g.subset_of(f);
    case RelOrder::Equality:
      return f == g;
  }
  return false;
}

HomSize FinRelModel::hom_size(std::size_t a, std::size_t b) const {
  std::size_t bits = a * b;
  if (bits >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << bits;
}

Rel FinRelModel::sample_above(const Rel& f, Rng& rng) const {
  Rel extra = random_rel(f.src(), f.tgt(), rng, 0.25);
  switch (order_) {
    case RelOrder::Inclusion:
      return f | extra;
    case RelOrder::Reversed: {
      Rel out = f;
      for (auto [a, b] : extra.pairs()) out.set(a, b, false);
      return out;
    }
    case RelOrder::Equality:
      return f;
  }
  return f;
}

FinRelModel as_presentation(const std::vector<std::size_t>& objects, std::uint64_t cap) {
  FinRelModel m(objects);
  for (auto a : m.objects())
    for (auto b : m.objects()) {
      auto n = m.hom_size(a, b);
      if (*n > cap)
        throw Infeasible("hom(" + std::to_string(a) + ", " + std::to_string(b) + ") has " +
                         (a * b >= 64 ? "2^" + std::to_string(a * b) : std::to_string(*n)) +
                         " relations, above the cap of " + std::to_string(cap));
    }
  return m;
}

}  // namespace gsmon
