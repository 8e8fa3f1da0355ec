#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "gsmon/core/errors.hpp"
#include "gsmon/core/model.hpp"

namespace gsmon {

/// A model with its hom preorder replaced.  An empty predicate means no order.
template <GsModel M>
class WithOrder : public M {
 public:
  using Leq = std::function<bool(const MorphismOf<M>&, const MorphismOf<M>&)>;

  WithOrder(M base, Leq leq) : M(std::move(base)), leq_(std::move(leq)) {}

  const M& base() const { return *this; }
  bool has_order() const { return static_cast<bool>(leq_); }
  bool leq(const MorphismOf<M>& f, const MorphismOf<M>& g) const {
    if (!leq_) throw MissingPreorder("no preorder attached");
    return leq_(f, g);
  }

 private:
  Leq leq_;
};

/// A model with alternative duplication and/or discharge maps.
template <GsModel M>
class WithStructure : public M {
 public:
  using Make = std::function<MorphismOf<M>(const ObjectOf<M>&)>;

  WithStructure(M base, Make dup, Make discharge)
      : M(std::move(base)), dup_(std::move(dup)), discharge_(std::move(discharge)) {}

  const M& base() const { return *this; }
  MorphismOf<M> dup(const ObjectOf<M>& a) const { return dup_ ? dup_(a) : M::dup(a); }
  MorphismOf<M> discharge(const ObjectOf<M>& a) const {
    return discharge_ ? discharge_(a) : M::discharge(a);
  }

 private:
  Make dup_, discharge_;
};

}  // namespace gsmon
