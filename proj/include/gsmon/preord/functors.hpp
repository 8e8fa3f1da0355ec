#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/law_report.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/functor/functor.hpp"
#include "gsmon/preord/model.hpp"

namespace gsmon {

/// R(f) = {(x, y) : y ≤ f(x)} on row-major flattened points.  Throws
/// Infeasible when the relation would exceed `max_bits` entries.
Rel hypograph_of(const PreordMap& f, std::uint64_t max_bits = std::uint64_t{1} << 26);

/// The hypograph mapping Preord → Rel with ψ_{A,B} = R(id_{A×B}) and ψ₀ = id_1.
FunctorData<PreordModel, FinRelModel> hypograph_functor(const PreordModel& source,
                                                        const FinRelModel& target);

/// Strict composition, lax identities (equality exactly on discrete
/// preorders) and f ≤ g ⟺ R(f) ⊆ R(g), over all monotone maps between
/// preorders of size ≤ max_size; then the colax cartesian lax-on-identities
/// check of R on a small product fixture.
LawReport check_hypograph_functoriality(const CheckOptions& opts = {}, std::size_t max_size = 3);

namespace preord_detail {

template <GsModel M>
std::uint64_t index_of(const M& m, const MorphismOf<M>& f) {
  auto i = m.hom_index(f);
  if (!i) throw Infeasible("no hom index for " + m.describe(f));
  return *i;
}

}  // namespace preord_detail

/// C(X, −): C → Preord.  Each C(X, n) is one factor whose points are hom
/// indices.  ψ(f, g) = (f⊗g)∇_X, ψ₀ = !_X, φ(h) = ((id⊗!)h, (!⊗id)h), φ₀
/// the unique map.
template <GsModel M>
FunctorData<M, PreordModel> hom_functor_to_preord(const M& m, const ObjectOf<M>& x,
                                                  const PreordModel& target,
                                                  const CheckOptions& opts = {}) {
  using Obj = ObjectOf<M>;
  using Mor = MorphismOf<M>;
  using preord_detail::index_of;
  struct Cache {
    std::mutex mu;
    std::map<std::string, FactorPtr> factors;
  };
  auto cache = std::make_shared<Cache>();
  const M* mp = &m;
  const std::uint64_t cap = opts.cap;
  const std::string xs = m.describe_object(x);
  auto on_object = [mp, x, cap, cache, xs](const Obj& n) -> PreordObject {
    std::string key = "C(" + xs + "," + mp->describe_object(n) + ")";
    std::lock_guard lock(cache->mu);
    auto it = cache->factors.find(key);
    if (it != cache->factors.end()) return {{it->second}};
    HomSize size = mp->hom_size(x, n);
    if (!size || *size > cap)
      throw Infeasible("hom(" + xs + ", " + mp->describe_object(n) + ") exceeds the cap of " +
                       std::to_string(cap));
    auto f = std::make_shared<PreordFactor>();
    f->key = key;
    f->size = *size;
    auto elems = std::make_shared<std::vector<Mor>>();
    elems->reserve(*size);
    for (std::uint64_t i = 0; i < *size; ++i) elems->push_back(mp->hom_at(x, n, i));
    if (*size <= 1024) {
      auto table = std::make_shared<Rel>(*size, *size);
      for (std::uint64_t i = 0; i < *size; ++i)
        for (std::uint64_t j = 0; j < *size; ++j)
          if (mp->leq((*elems)[i], (*elems)[j])) table->set(i, j);
      f->leq = [table](std::uint64_t i, std::uint64_t j) { return table->get(i, j); };
    } else {
      f->leq = [mp, elems](std::uint64_t i, std::uint64_t j) { return mp->leq((*elems)[i], (*elems)[j]); };
    }
    f->show = [mp, elems](std::uint64_t i) { return mp->describe((*elems)[i]); };
    cache->factors.emplace(key, f);
    return {{f}};
  };
  FunctorData<M, PreordModel> F;
  F.source = &m;
  F.target = &target;
  F.name = "C(" + xs + ",-)";
  F.on_object = on_object;
  F.on_morphism = [mp, x, on_object](const Mor& f) -> PreordMap {
    Obj a = mp->dom(f), b = mp->cod(f);
    return {on_object(a), on_object(b),
            [mp, x, a, f](const Point& p) {
              return Point{index_of(*mp, mp->compose(f, mp->hom_at(x, a, p[0])))};
            },
            "C(" + mp->describe_object(x) + "," + mp->describe(f) + ")"};
  };
  F.laxator = [mp, x, on_object](const Obj& a, const Obj& b) -> PreordMap {
    PreordObject src{{on_object(a).factors[0], on_object(b).factors[0]}};
    Mor dx = mp->dup(x);
    return {src, on_object(mp->tensor_objects(a, b)),
            [mp, x, a, b, dx](const Point& p) {
              Mor h = mp->hom_at(x, a, p[0]), k = mp->hom_at(x, b, p[1]);
              return Point{index_of(*mp, mp->compose(mp->tensor(h, k), dx))};
            },
            "ψ_{" + mp->describe_object(a) + "," + mp->describe_object(b) + "}"};
  };
  F.unit_lax = [mp, x, on_object]() -> PreordMap {
    std::uint64_t i = index_of(*mp, mp->discharge(x));
    return {PreordObject{}, on_object(mp->unit()), [i](const Point&) { return Point{i}; }, "ψ₀"};
  };
  F.oplaxator = [mp, x, on_object](const Obj& a, const Obj& b) -> PreordMap {
    PreordObject tgt{{on_object(a).factors[0], on_object(b).factors[0]}};
    Obj ab = mp->tensor_objects(a, b);
    Mor pl = mp->tensor(mp->identity(a), mp->discharge(b));
    Mor pr = mp->tensor(mp->discharge(a), mp->identity(b));
    return {on_object(ab), tgt,
            [mp, x, ab, pl, pr](const Point& p) {
              Mor h = mp->hom_at(x, ab, p[0]);
              Mor left = mp->compose(pl, h);
              Mor right = mp->compose(pr, h);
              return Point{index_of(*mp, left), index_of(*mp, right)};
            },
            "φ_{" + mp->describe_object(a) + "," + mp->describe_object(b) + "}"};
  };
  F.unit_oplax = [mp, on_object]() -> PreordMap {
    return {on_object(mp->unit()), PreordObject{}, [](const Point&) { return Point{}; }, "φ₀"};
  };
  return F;
}

/// For each pair (f, g): f ≤ g must agree with "C(X, f) ≤ C(X, g) for every
/// fixture object X", and with "R(C(X, f)) ⊆ R(C(X, g)) for every X" where
/// the hypograph is small enough to materialize (`hypograph_bound` points
/// per side).  The representing object X = dom f always participates.
template <GsModel M>
LawReport completeness_experiment(const M& m,
                                  const std::vector<std::pair<MorphismOf<M>, MorphismOf<M>>>& pairs,
                                  const CheckOptions& opts = {},
                                  std::uint64_t hypograph_bound = 256) {
  using Obj = ObjectOf<M>;
  if (!m.has_order()) throw MissingPreorder("completeness experiment needs a preorder");
  PreordModel target;
  LawReport r("completeness");
  auto& yon = r.law("yoneda-separation");
  auto& rel = r.law("hypograph-separation");
  auto& rep = r.law("representable-witness");
  std::vector<Obj> xs = m.objects();
  std::map<std::string, FunctorData<M, PreordModel>> functors;
  auto functor = [&](const Obj& x) -> const FunctorData<M, PreordModel>& {
    auto key = m.describe_object(x);
    auto it = functors.find(key);
    if (it == functors.end()) it = functors.emplace(key, hom_functor_to_preord(m, x, target, opts)).first;
    return it->second;
  };
  std::size_t skipped = 0;
  for (const auto& [f, g] : pairs) {
    if (!(m.dom(f) == m.dom(g)) || !(m.cod(f) == m.cod(g)))
      throw TypeMismatch(m.describe(f) + " and " + m.describe(g) + " are not parallel");
    const bool below = m.leq(f, g);
    std::vector<Obj> probe = xs;
    if (std::find(probe.begin(), probe.end(), m.dom(f)) == probe.end()) probe.push_back(m.dom(f));
    bool all_preord = true, all_rel = true;
    for (const auto& x : probe) {
      const auto& F = functor(x);
      PreordMap Ff = F.on_morphism(f), Fg = F.on_morphism(g);
      bool p = target.leq(Ff, Fg);
      all_preord = all_preord && p;
      if (Ff.src.size() <= hypograph_bound && Ff.tgt.size() <= hypograph_bound)
        all_rel = all_rel && hypograph_of(Ff).subset_of(hypograph_of(Fg));
      else
        ++skipped;
      if (x == m.dom(f)) {
        // C(X, f)(id_X) = f, so the representable functor alone decides
        if (p == below)
          rep.pass();
        else
          rep.fail({"", {{"f", m.describe(f)}, {"g", m.describe(g)}},
                    below ? "f<=g" : "not f<=g", p ? "C(X,f)<=C(X,g)" : "not C(X,f)<=C(X,g)"});
      }
    }
    Items items{{"f", m.describe(f)}, {"g", m.describe(g)}};
    if (all_preord == below)
      yon.pass();
    else
      yon.fail({"", items, below ? "f<=g" : "not f<=g",
                all_preord ? "all C(X,f)<=C(X,g)" : "some C(X,-) separates"});
    if (all_rel == below)
      rel.pass();
    else
      rel.fail({"", items, below ? "f<=g" : "not f<=g",
                all_rel ? "all R C(X,f) ⊆ R C(X,g)" : "some R C(X,-) separates"});
  }
  if (skipped)
    r.note(std::to_string(skipped) + " hypograph comparisons skipped above " +
           std::to_string(hypograph_bound) + " points");
  if (target.sampled_comparisons())
    r.note(std::to_string(target.sampled_comparisons()) + " pointwise comparisons were sampled");
  return r;
}

}  // namespace gsmon
