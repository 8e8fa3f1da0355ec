#pragma once

#include <functional>
#include <string>

#include "gsmon/core/model.hpp"

namespace gsmon {

/// A mapping between models together with optional lax (ψ, ψ₀) and oplax
/// (φ, φ₀) structure.  ψ_{A,B}: FA⊗FB → F(A⊗B), ψ₀: I → FI,
/// φ_{A,B}: F(A⊗B) → FA⊗FB, φ₀: FI → I.  Empty members mean "absent".
template <GsModel S, GsModel T>
struct FunctorData {
  const S* source = nullptr;
  const T* target = nullptr;
  std::string name;
  std::function<ObjectOf<T>(const ObjectOf<S>&)> on_object;
  std::function<MorphismOf<T>(const MorphismOf<S>&)> on_morphism;
  std::function<MorphismOf<T>(const ObjectOf<S>&, const ObjectOf<S>&)> laxator;
  std::function<MorphismOf<T>()> unit_lax;
  std::function<MorphismOf<T>(const ObjectOf<S>&, const ObjectOf<S>&)> oplaxator;
  std::function<MorphismOf<T>()> unit_oplax;

  bool has_lax() const { return laxator && unit_lax; }
  bool has_oplax() const { return oplaxator && unit_oplax; }
};

/// F ∘ G with ψ^{FG}_{A,B} = F(ψ^G_{A,B}) ∘ ψ^F_{GA,GB} and ψ₀^{FG} = F(ψ₀^G) ∘ ψ₀^F;
/// dually φ^{FG}_{A,B} = φ^F_{GA,GB} ∘ F(φ^G_{A,B}) and φ₀^{FG} = φ₀^F ∘ F(φ₀^G).
/// Both functors are captured by value.
template <GsModel R, GsModel S, GsModel T>
FunctorData<R, T> compose_functors(const FunctorData<S, T>& f, const FunctorData<R, S>& g) {
  FunctorData<R, T> h;
  h.source = g.source;
  h.target = f.target;
  h.name = f.name + "∘" + g.name;
  h.on_object = [f, g](const ObjectOf<R>& a) { return f.on_object(g.on_object(a)); };
  h.on_morphism = [f, g](const MorphismOf<R>& x) { return f.on_morphism(g.on_morphism(x)); };
  if (f.has_lax() && g.has_lax()) {
    h.laxator = [f, g](const ObjectOf<R>& a, const ObjectOf<R>& b) {
      return f.target->compose(f.on_morphism(g.laxator(a, b)),
                               f.laxator(g.on_object(a), g.on_object(b)));
    };
    h.unit_lax = [f, g] { return f.target->compose(f.on_morphism(g.unit_lax()), f.unit_lax()); };
  }
  if (f.has_oplax() && g.has_oplax()) {
    h.oplaxator = [f, g](const ObjectOf<R>& a, const ObjectOf<R>& b) {
      return f.target->compose(f.oplaxator(g.on_object(a), g.on_object(b)),
                               f.on_morphism(g.oplaxator(a, b)));
    };
    h.unit_oplax = [f, g] {
      return f.target->compose(f.unit_oplax(), f.on_morphism(g.unit_oplax()));
    };
  }
  return h;
}

}  // namespace gsmon
