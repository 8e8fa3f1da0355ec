#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "gsmon/core/errors.hpp"
#include "gsmon/core/law_report.hpp"
#include "gsmon/core/model.hpp"

namespace gsmon {

struct CheckOptions {
  /// Largest hom-set a checker is willing to enumerate.
  std::uint64_t cap = 65536;
  /// Instances per law and object tuple before switching to sampling.
  std::uint64_t budget = 4096;
  std::uint64_t seed = 0;
  /// Largest hom-set that carries pairs in preorder generation.
  std::uint64_t preorder_bound = 4096;
  /// Largest hom-set whose morphisms act as composition partners there.
  std::uint64_t partner_bound = 4096;
};

/// 64-bit FNV-1a, used to derive per-law seeds.
std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ull);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// An indexable, sampleable collection.
template <class T>
struct Space {
  std::optional<std::uint64_t> size;
  std::function<T(std::uint64_t)> at;
  std::function<T(Rng&)> sample;
};

template <class T>
Space<T> single(T value) {
  return {1, [value](std::uint64_t) { return value; }, [value](Rng&) { return value; }};
}

template <GsModel M>
Space<MorphismOf<M>> hom_space(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b,
                               const CheckOptions& opts) {
  HomSize n = m.hom_size(a, b);
  if (n && *n > opts.cap)
    throw Infeasible("hom(" + m.describe_object(a) + ", " + m.describe_object(b) +
                     ") has " + std::to_string(*n) + " elements, above the cap of " +
                     std::to_string(opts.cap));
  return {n, [&m, a, b](std::uint64_t i) { return m.hom_at(a, b, i); },
          [&m, a, b](Rng& rng) { return m.hom_sample(a, b, rng); }};
}

namespace detail {

template <class Tuple, class Spaces, std::size_t... I>
void assign_at(Tuple& cur, const Spaces& spaces, std::size_t k, std::uint64_t i,
               std::index_sequence<I...>) {
  ((k == I ? (std::get<I>(cur) = std::get<I>(spaces).at(i), 0) : 0), ...);
}

}  // namespace detail

/// Runs `fn` over the product of `spaces`.  The product is enumerated when it
/// is finite and within the budget; otherwise `budget` seeded samples are
/// drawn and the law is marked non-exhaustive.  Stops at the first failure.
template <class Fn, class... Ts>
void visit(LawResult& law, const CheckOptions& opts, std::string_view key, Fn&& fn,
           const Space<Ts>&... spaces) {
  constexpr std::size_t n = sizeof...(Ts);
  static_assert(n > 0);
  if (law.failed()) return;
  std::array<std::optional<std::uint64_t>, n> sizes{spaces.size...};
  bool finite = true;
  std::uint64_t total = 1;
  for (const auto& s : sizes) {
    if (!s) {
      finite = false;
      break;
    }
    total = saturating_mul(total, *s);
  }
  if (finite && total == 0) return;
  if (finite && total <= opts.budget) {
    auto refs = std::forward_as_tuple(spaces...);
    std::array<std::uint64_t, n> idx{};
    std::tuple<Ts...> cur{spaces.at(0)...};
    for (;;) {
      std::apply(fn, cur);
      if (law.failed()) return;
      std::size_t k = n;
      for (;;) {
        if (k == 0) return;
        --k;
        if (++idx[k] < *sizes[k]) {
          detail::assign_at(cur, refs, k, idx[k], std::index_sequence_for<Ts...>{});
          break;
        }
        idx[k] = 0;
        detail::assign_at(cur, refs, k, 0, std::index_sequence_for<Ts...>{});
      }
    }
  }
  law.exhaustive = false;
  Rng rng(derive_seed(opts.seed, std::string(law.name) + "|" + std::string(key)));
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    std::tuple<Ts...> cur{spaces.sample(rng)...};
    std::apply(fn, cur);
    if (law.failed()) return;
  }
}

/// Calls fn(array<Object, N>) for every N-tuple of fixture objects.
template <std::size_t N, GsModel M, class Fn>
void for_each_objects(const M& m, Fn&& fn) {
  const auto objs = m.objects();
  if (objs.empty()) return;
  std::array<std::size_t, N> idx{};
  for (;;) {
    std::array<ObjectOf<M>, N> t;
    for (std::size_t i = 0; i < N; ++i) t[i] = objs[idx[i]];
    fn(t);
    std::size_t k = N;
    for (;;) {
      if (k == 0) return;
      --k;
      if (++idx[k] < objs.size()) break;
      idx[k] = 0;
    }
  }
}

}  // namespace gsmon
