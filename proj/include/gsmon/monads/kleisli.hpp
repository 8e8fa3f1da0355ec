#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/model.hpp"
#include "gsmon/finrel/rel.hpp"
#include "gsmon/functor/functor.hpp"
#include "gsmon/monads/checks.hpp"
#include "gsmon/monads/monads.hpp"
#include "gsmon/preord/model.hpp"

namespace gsmon {

/// An arrow src -> T(tgt), stored as its representative: one value per
/// source element.
template <class V>
struct KleisliMorphism {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<V> table;
  bool operator==(const KleisliMorphism&) const = default;
};

/// The Kleisli category of a built-in monad over finite sets; the unit size 1
/// is always listed.  Composition is
/// (g∘f)♯ = μ T(g♯) f♯, tensor goes through c, ∇♯ = η∇ and !♯ = η!, and hom
/// sets carry the pointwise value order.
template <Monad M>
class KleisliModel {
 public:
  using Object = std::size_t;
  using Value = typename M::Value;
  using Morphism = KleisliMorphism<Value>;

  explicit KleisliModel(M monad, std::vector<std::size_t> objects,
                        std::vector<std::size_t> auxiliary = {})
      : t_(std::move(monad)), objects_(std::move(objects)), auxiliary_(std::move(auxiliary)) {
    if (std::find(objects_.begin(), objects_.end(), std::size_t{1}) == objects_.end())
      objects_.insert(objects_.begin(), 1);
  }

  const M& monad() const { return t_; }
  const std::vector<std::size_t>& objects() const { return objects_; }
  bool contains(std::size_t a) const {
    return std::find(objects_.begin(), objects_.end(), a) != objects_.end() ||
           std::find(auxiliary_.begin(), auxiliary_.end(), a) != auxiliary_.end();
  }
  std::size_t unit() const { return 1; }
  std::size_t tensor_objects(std::size_t a, std::size_t b) const { return a * b; }
  std::size_t dom(const Morphism& f) const { return f.src; }
  std::size_t cod(const Morphism& f) const { return f.tgt; }

  /// The Kleisli arrow η_b ∘ f of a function.
  Morphism pure(std::size_t a, std::size_t b, const std::function<std::size_t(std::size_t)>& f) const {
    Morphism k{a, b, {}};
    k.table.reserve(a);
    for (std::size_t x = 0; x < a; ++x) k.table.push_back(t_.unit(b, f(x)));
    return k;
  }
  Morphism identity(std::size_t a) const {
    return pure(a, a, [](std::size_t x) { return x; });
  }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.tgt != g.src)
      throw TypeMismatch("Kleisli compose: " + std::to_string(f.tgt) + " vs " + std::to_string(g.src));
    Morphism h{f.src, g.tgt, {}};
    h.table.reserve(f.src);
    for (const auto& v : f.table)
      h.table.push_back(t_.bind(v, f.tgt, g.tgt, [&g](std::size_t y) { return g.table[y]; }));
    return h;
  }
  Morphism tensor(const Morphism& f, const Morphism& g) const {
    Morphism h{f.src * g.src, f.tgt * g.tgt, {}};
    h.table.reserve(h.src);
    for (const auto& a : f.table)
      for (const auto& b : g.table) h.table.push_back(t_.pair(a, f.tgt, b, g.tgt));
    return h;
  }
  Morphism symmetry(std::size_t a, std::size_t b) const {
    return pure(a * b, b * a, [a, b](std::size_t i) { return (i % b) * a + i / b; });
  }
  Morphism dup(std::size_t a) const {
    return pure(a, a * a, [a](std::size_t x) { return x * a + x; });
  }
  Morphism discharge(std::size_t a) const {
    return pure(a, 1, [](std::size_t) { return std::size_t{0}; });
  }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  bool has_order() const { return true; }
  bool leq(const Morphism& f, const Morphism& g) const {
    if (f.src != g.src || f.tgt != g.tgt) return false;
    for (std::size_t x = 0; x < f.src; ++x)
      if (!t_.leq(f.table[x], g.table[x])) return false;
    return true;
  }
  HomSize hom_size(std::size_t a, std::size_t b) const {
    auto c = t_.value_count(b);
    if (!c) return std::nullopt;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a; ++i) {
      n = saturating_mul(n, *c);
      if (n == UINT64_MAX) return std::nullopt;
    }
    return n;
  }
  /// Mixed radix with the first source element least significant.
  Morphism hom_at(std::size_t a, std::size_t b, std::uint64_t i) const {
    auto c = t_.value_count(b);
    Morphism k{a, b, {}};
    k.table.reserve(a);
    for (std::size_t x = 0; x < a; ++x) {
      k.table.push_back(t_.value_at(b, c ? i % *c : i));
      if (c) i /= *c;
    }
    return k;
  }
  Morphism hom_sample(std::size_t a, std::size_t b, Rng& rng) const {
    Morphism k{a, b, {}};
    k.table.reserve(a);
    for (std::size_t x = 0; x < a; ++x) k.table.push_back(t_.value_sample(b, rng));
    return k;
  }
  std::optional<std::uint64_t> hom_index(const Morphism& f) const {
    auto c = t_.value_count(f.tgt);
    if (!c) return std::nullopt;
    std::uint64_t i = 0;
    for (std::size_t x = f.src; x-- > 0;) {
      auto v = t_.value_index(f.tgt, f.table[x]);
      if (!v) return std::nullopt;
      i = i * *c + *v;
    }
    return i;
  }
  std::string describe(const Morphism& f) const {
    std::string s = std::to_string(f.src) + "->T" + std::to_string(f.tgt) + "[";
    for (std::size_t x = 0; x < f.table.size(); ++x) s += (x ? "," : "") + t_.show(f.table[x]);
    return s + "]";
  }
  std::string describe_object(std::size_t a) const { return std::to_string(a); }

  /// The alternative duplicator c_{A,A} ∇_{T(A)} η_A.
  Morphism dup_via_c(std::size_t a) const {
    Morphism k{a, a * a, {}};
    for (std::size_t x = 0; x < a; ++x) k.table.push_back(t_.pair(t_.unit(a, x), a, t_.unit(a, x), a));
    return k;
  }

  nlohmann::ordered_json to_json(const Morphism& f) const {
    nlohmann::ordered_json j;
    j["monad"] = t_.name();
    j["src"] = f.src;
    j["tgt"] = f.tgt;
    j["table"] = nlohmann::json::array();
    for (const auto& v : f.table) j["table"].push_back(nlohmann::ordered_json(t_.to_json(v)));
    return j;
  }
  Morphism from_json(const nlohmann::json& j) const {
    try {
      if (j.at("monad").get<std::string>() != t_.name())
        throw FixtureError("fixture is for monad '" + j.at("monad").get<std::string>() + "', not '" +
                           t_.name() + "'");
      Morphism f{j.at("src").get<std::size_t>(), j.at("tgt").get<std::size_t>(), {}};
      const auto& tab = j.at("table");
      if (!tab.is_array() || tab.size() != f.src)
        throw FixtureError("table must have " + std::to_string(f.src) + " entries");
      for (const auto& v : tab) f.table.push_back(t_.from_json(v, f.tgt));
      return f;
    } catch (const nlohmann::json::exception& e) {
      throw FixtureError(std::string("malformed Kleisli fixture: ") + e.what());
    }
  }

 private:
  M t_;
  std::vector<std::size_t> objects_;
  std::vector<std::size_t> auxiliary_;
};

/// The base category: the given sizes as discrete preorders.
PreordModel discrete_base(const std::vector<std::size_t>& sizes);

/// F_T: base -> Kleisli, F_T(f)♯ = η f, with identity structure maps.
template <Monad M>
FunctorData<PreordModel, KleisliModel<M>> kleisli_F_T(const PreordModel& base,
                                                       const KleisliModel<M>& k) {
  FunctorData<PreordModel, KleisliModel<M>> F;
  F.source = &base;
  F.target = &k;
  F.name = "F_" + k.monad().name();
  const KleisliModel<M>* kp = &k;
  F.on_object = [](const PreordObject& a) { return static_cast<std::size_t>(a.size()); };
  F.on_morphism = [kp](const PreordMap& f) {
    return kp->pure(f.src.size(), f.tgt.size(), [&f](std::size_t x) {
      return static_cast<std::size_t>(flatten(f.tgt, f.apply(unflatten(f.src, x))));
    });
  };
  F.laxator = [kp](const PreordObject& a, const PreordObject& b) {
    return kp->identity(a.size() * b.size());
  };
  F.unit_lax = [kp] { return kp->identity(1); };
  F.oplaxator = F.laxator;
  F.unit_oplax = F.unit_lax;
  return F;
}

/// The target of G_T: one factor T(n) per size, ordered by value_leq.
/// Requires T(n) enumerable.
template <Monad M>
FactorPtr kleisli_value_factor(const M& t, std::size_t n) {
  auto c = t.value_count(n);
  if (!c) throw Infeasible(t.name() + ": T(" + std::to_string(n) + ") is not enumerable");
  auto f = std::make_shared<PreordFactor>();
  f->key = "T" + std::to_string(n) + "[" + t.name() + "]";
  f->size = *c;
  f->leq = [t, n](std::uint64_t i, std::uint64_t j) { return t.leq(t.value_at(n, i), t.value_at(n, j)); };
  f->show = [t, n](std::uint64_t i) { return t.show(t.value_at(n, i)); };
  return f;
}

template <Monad M>
PreordModel kleisli_value_model(const KleisliModel<M>& k, PreordOptions opts = {}) {
  std::vector<PreordObject> objs;
  for (auto n : k.objects()) objs.push_back({{kleisli_value_factor(k.monad(), n)}});
  return PreordModel(objs, opts);
}

/// G_T: Kleisli -> Preord, G_T(f) = μ T(f♯), with ψ = c and ψ₀ = η_I.
template <Monad M>
FunctorData<KleisliModel<M>, PreordModel> kleisli_G_T(const KleisliModel<M>& k,
                                                      const PreordModel& target) {
  using V = typename M::Value;
  struct Cache {
    std::mutex mu;
    std::map<std::size_t, FactorPtr> factors;
  };
  auto cache = std::make_shared<Cache>();
  const KleisliModel<M>* kp = &k;
  auto factor = [kp, cache](std::size_t n) {
    std::lock_guard lock(cache->mu);
    auto it = cache->factors.find(n);
    if (it != cache->factors.end()) return it->second;
    return cache->factors[n] = kleisli_value_factor(kp->monad(), n);
  };
  auto index = [kp](std::size_t n, const V& v) -> std::uint64_t {
    auto i = kp->monad().value_index(n, v);
    if (!i) throw Infeasible("value " + kp->monad().show(v) + " has no index");
    return *i;
  };
  FunctorData<KleisliModel<M>, PreordModel> G;
  G.source = &k;
  G.target = &target;
  G.name = "G_" + k.monad().name();
  G.on_object = [factor](std::size_t n) { return PreordObject{{factor(n)}}; };
  G.on_morphism = [kp, factor, index](const KleisliMorphism<V>& f) -> PreordMap {
    return {PreordObject{{factor(f.src)}}, PreordObject{{factor(f.tgt)}},
            [kp, f, index](const Point& p) {
              const auto& t = kp->monad();
              V v = t.bind(t.value_at(f.src, p[0]), f.src, f.tgt,
                           [&f](std::size_t y) { return f.table[y]; });
              return Point{index(f.tgt, v)};
            },
            "G(" + kp->describe(f) + ")"};
  };
  G.laxator = [kp, factor, index](std::size_t a, std::size_t b) -> PreordMap {
    return {PreordObject{{factor(a), factor(b)}}, PreordObject{{factor(a * b)}},
            [kp, a, b, index](const Point& p) {
              const auto& t = kp->monad();
              return Point{index(a * b, t.pair(t.value_at(a, p[0]), a, t.value_at(b, p[1]), b))};
            },
            "c_{" + std::to_string(a) + "," + std::to_string(b) + "}"};
  };
  G.unit_lax = [kp, factor, index]() -> PreordMap {
    std::uint64_t i = index(1, kp->monad().unit(1, 0));
    return {PreordObject{}, PreordObject{{factor(1)}}, [i](const Point&) { return Point{i}; }, "η_I"};
  };
  return G;
}

/// ∇♯ agrees with c_{A,A} ∇_{T(A)} η_A on every fixture object.
template <Monad M>
LawReport check_dup_alternative(const KleisliModel<M>& k) {
  LawReport r("kleisli-dup-alternative(" + k.monad().name() + ")");
  auto& law = r.law("dup-alternative");
  for (auto a : k.objects()) {
    auto lhs = k.dup(a), rhs = k.dup_via_c(a);
    if (lhs == rhs)
      law.pass();
    else
      law.fail({"", {{"A", std::to_string(a)}}, k.describe(lhs), k.describe(rhs)});
  }
  return r;
}

/// In the multiset Kleisli endo-hom of I, f∘dom(f) equals f² for every
/// scalar f ≤ max_scalar, and differs from f unless f ∈ {0, 1}.
LawReport check_multiset_scalar_square(std::uint64_t max_scalar = 10);

/// Kleisli(powerset) on `sizes` against FinRel: the subset↔row encoding is a
/// bijection on homs preserving identities, composition, tensor, symmetry,
/// ∇, ! and the order.
LawReport check_powerset_is_rel(const std::vector<std::size_t>& sizes, const CheckOptions& opts = {});
/// Kleisli(nonempty powerset) morphisms are exactly the total relations, and
/// each is weakly total in the Kleisli model.
LawReport check_nonempty_is_total(const std::vector<std::size_t>& sizes, const CheckOptions& opts = {});
/// Kleisli(lifting) morphisms are exactly the partial functions, ordered by
/// graph inclusion, with matching composition.
LawReport check_lifting_is_partial(const std::vector<std::size_t>& sizes, const CheckOptions& opts = {});

/// Encoding shared by the comparisons: a subset-valued table as a relation.
Rel powerset_table_to_rel(std::size_t src, std::size_t tgt, const std::vector<std::uint64_t>& table);
Rel lifting_table_to_rel(std::size_t src, std::size_t tgt, const std::vector<std::int64_t>& table);

}  // namespace gsmon
