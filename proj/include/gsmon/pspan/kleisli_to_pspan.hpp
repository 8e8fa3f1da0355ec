#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gsmon/core/errors.hpp"
#include "gsmon/functor/functor.hpp"
#include "gsmon/monads/checks.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/pspan/model.hpp"

namespace gsmon {

namespace pspan_detail {

template <Monad M>
std::size_t value_size(const M& t, std::size_t n) {
  auto c = t.value_count(n);
  if (!c) throw Infeasible(t.name() + ": T(" + std::to_string(n) + ") is not enumerable");
  return static_cast<std::size_t>(*c);
}

template <Monad M>
std::size_t value_index(const M& t, std::size_t n, const typename M::Value& v) {
  auto i = t.value_index(n, v);
  if (!i) throw Infeasible("value " + t.show(v) + " has no index");
  return static_cast<std::size_t>(*i);
}

}  // namespace pspan_detail

/// PSpan on the sizes |T(n)| for the Kleisli fixture objects.
template <Monad M>
PSpanModel kleisli_pspan_target(const KleisliModel<M>& k, std::size_t apex_bound = 4) {
  std::vector<std::size_t> objs;
  for (auto n : k.objects()) objs.push_back(pspan_detail::value_size(k.monad(), n));
  return PSpanModel(objs, apex_bound);
}

/// G_T followed by the inclusion of functions as spans with identity left
/// legs: n ↦ |T(n)|, f ↦ (μ T(f♯) as a function), ψ = c, ψ₀ = η_I.  Unless
/// `require_gs` is false, throws NotGsMonoidalMonad when the monad fails
/// check_gs_monoidal_monad up to the largest fixture object.
template <Monad M>
FunctorData<KleisliModel<M>, PSpanModel> kleisli_to_pspan(const KleisliModel<M>& k,
                                                          const PSpanModel& target,
                                                          const CheckOptions& opts = {},
                                                          bool require_gs = true) {
  using V = typename M::Value;
  using pspan_detail::value_index;
  using pspan_detail::value_size;
  const auto& objs = k.objects();
  if (require_gs) {
    std::size_t max_size = objs.empty() ? 1 : *std::max_element(objs.begin(), objs.end());
    auto r = check_gs_monoidal_monad(k.monad(), max_size, opts);
    if (!r.passed()) {
      const Witness* w = r.witness();
      throw NotGsMonoidalMonad(k.monad().name() + " is not gs-monoidal: " + w->law + " fails, " +
                               w->lhs + " vs " + w->rhs);
    }
  }
  const KleisliModel<M>* kp = &k;
  FunctorData<KleisliModel<M>, PSpanModel> F;
  F.source = &k;
  F.target = &target;
  F.name = "PSpan∘G_" + k.monad().name();
  F.on_object = [kp](std::size_t n) { return value_size(kp->monad(), n); };
  F.on_morphism = [kp](const KleisliMorphism<V>& f) {
    const auto& t = kp->monad();
    return span_of_function(value_size(t, f.src), value_size(t, f.tgt), [&](std::size_t i) {
      V v = t.bind(t.value_at(f.src, i), f.src, f.tgt, [&f](std::size_t y) { return f.table[y]; });
      return value_index(t, f.tgt, v);
    });
  };
  F.laxator = [kp](std::size_t a, std::size_t b) {
    const auto& t = kp->monad();
    std::size_t na = value_size(t, a), nb = value_size(t, b);
    return span_of_function(na * nb, value_size(t, a * b), [&](std::size_t i) {
      return value_index(t, a * b, t.pair(t.value_at(a, i / nb), a, t.value_at(b, i % nb), b));
    });
  };
  F.unit_lax = [kp] {
    const auto& t = kp->monad();
    std::size_t e = value_index(t, 1, t.unit(1, 0));
    return span_of_function(1, value_size(t, 1), [e](std::size_t) { return e; });
  };
  return F;
}

}  // namespace gsmon
