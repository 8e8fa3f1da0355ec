#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gsmon {

using Rng = std::mt19937_64;
/// Size of a hom-set; nullopt means the hom-set is not enumerable and can
/// only be sampled.
using HomSize = std::optional<std::uint64_t>;

/// A strict symmetric monoidal category with chosen duplication and discharge
/// maps, optionally carrying a preorder on each hom-set.  All operations are
/// total on well-typed arguments; `objects()` is the fixture that the law
/// checkers quantify over.
template <class M>
concept GsModel =
    requires(const M& m, const typename M::Object& a, const typename M::Morphism& f,
             std::uint64_t i, Rng& rng) {
      requires std::equality_comparable<typename M::Object>;
      { m.objects() } -> std::convertible_to<std::vector<typename M::Object>>;
      { m.unit() } -> std::convertible_to<typename M::Object>;
      { m.tensor_objects(a, a) } -> std::convertible_to<typename M::Object>;
      { m.dom(f) } -> std::convertible_to<typename M::Object>;
      { m.cod(f) } -> std::convertible_to<typename M::Object>;
      { m.identity(a) } -> std::convertible_to<typename M::Morphism>;
      { m.compose(f, f) } -> std::convertible_to<typename M::Morphism>;
      { m.tensor(f, f) } -> std::convertible_to<typename M::Morphism>;
      { m.symmetry(a, a) } -> std::convertible_to<typename M::Morphism>;
      { m.dup(a) } -> std::convertible_to<typename M::Morphism>;
      { m.discharge(a) } -> std::convertible_to<typename M::Morphism>;
      { m.equal(f, f) } -> std::convertible_to<bool>;
      { m.has_order() } -> std::convertible_to<bool>;
      { m.leq(f, f) } -> std::convertible_to<bool>;
      { m.hom_size(a, a) } -> std::convertible_to<HomSize>;
      { m.hom_at(a, a, i) } -> std::convertible_to<typename M::Morphism>;
      { m.hom_sample(a, a, rng) } -> std::convertible_to<typename M::Morphism>;
      { m.hom_index(f) } -> std::convertible_to<std::optional<std::uint64_t>>;
      { m.describe(f) } -> std::convertible_to<std::string>;
      { m.describe_object(a) } -> std::convertible_to<std::string>;
    };

template <GsModel M>
using ObjectOf = typename M::Object;
template <GsModel M>
using MorphismOf = typename M::Morphism;

/// Whether `a` may appear in checked instances.  Models may accept auxiliary
/// objects (e.g. tensor squares) that are not themselves quantified over by
/// exposing `contains`.
template <GsModel M>
bool in_fixture(const M& m, const ObjectOf<M>& a) {
  if constexpr (requires { { m.contains(a) } -> std::convertible_to<bool>; }) return m.contains(a);
  const auto& objs = m.objects();
  return std::find(objs.begin(), objs.end(), a) != objs.end();
}

/// f ≈ g: each below the other.
template <GsModel M>
bool equivalent(const M& m, const MorphismOf<M>& f, const MorphismOf<M>& g) {
  return m.leq(f, g) && m.leq(g, f);
}

}  // namespace gsmon
