#pragma once

#include <bit>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/law_report.hpp"
#include "gsmon/core/model.hpp"

namespace gsmon {

using Items = std::vector<std::pair<std::string, std::string>>;

namespace detail {

template <GsModel M, class ItemsFn>
void expect_eq(LawResult& law, const M& m, const MorphismOf<M>& lhs, const MorphismOf<M>& rhs,
               ItemsFn&& items) {
  if (m.equal(lhs, rhs))
    law.pass();
  else
    law.fail(Witness{"", items(), m.describe(lhs), m.describe(rhs)});
}

template <GsModel M, class ItemsFn>
void expect_leq(LawResult& law, const M& m, const MorphismOf<M>& lhs, const MorphismOf<M>& rhs,
                ItemsFn&& items) {
  if (m.leq(lhs, rhs))
    law.pass();
  else
    law.fail(Witness{"", items(), m.describe(lhs), m.describe(rhs)});
}

template <GsModel M>
bool all_in(const M& m, std::initializer_list<ObjectOf<M>> objs) {
  for (const auto& o : objs)
    if (!in_fixture(m, o)) return false;
  return true;
}

template <GsModel M>
std::string key_of(const M& m, std::initializer_list<ObjectOf<M>> objs) {
  std::string k;
  for (const auto& o : objs) k += m.describe_object(o) + ",";
  return k;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Predicates

template <GsModel M>
bool is_total(const M& m, const MorphismOf<M>& f) {
  return m.equal(m.compose(m.discharge(m.cod(f)), f), m.discharge(m.dom(f)));
}

template <GsModel M>
bool is_functional(const M& m, const MorphismOf<M>& f) {
  auto a = m.dom(f), b = m.cod(f);
  if (!in_fixture(m, m.tensor_objects(a, a)) || !in_fixture(m, m.tensor_objects(b, b)))
    throw MissingObject("functionality of " + m.describe(f) + " needs A⊗A and B⊗B");
  return m.equal(m.compose(m.dup(b), f), m.compose(m.tensor(f, f), m.dup(a)));
}

template <GsModel M>
bool is_weakly_total(const M& m, const MorphismOf<M>& f) {
  if (!m.has_order()) throw MissingPreorder("weak totality needs a preorder");
  return equivalent(m, m.compose(m.discharge(m.cod(f)), f), m.discharge(m.dom(f)));
}

template <GsModel M>
bool is_weakly_functional(const M& m, const MorphismOf<M>& f) {
  if (!m.has_order()) throw MissingPreorder("weak functionality needs a preorder");
  auto a = m.dom(f), b = m.cod(f);
  if (!in_fixture(m, m.tensor_objects(a, a)) || !in_fixture(m, m.tensor_objects(b, b)))
    throw MissingObject("functionality of " + m.describe(f) + " needs A⊗A and B⊗B");
  return equivalent(m, m.compose(m.dup(b), f), m.compose(m.tensor(f, f), m.dup(a)));
}

/// dom(f) = (id_A ⊗ !_B f) ∇_A.
template <GsModel M>
MorphismOf<M> domain_of_definition(const M& m, const MorphismOf<M>& f) {
  auto a = m.dom(f);
  if (!in_fixture(m, m.tensor_objects(a, a)))
    throw MissingObject("dom of " + m.describe(f) + " needs A⊗A");
  return m.compose(m.tensor(m.identity(a), m.compose(m.discharge(m.cod(f)), f)), m.dup(a));
}

/// The pairing ⟨h, g⟩ = (h ⊗ g) ∇_C.
template <GsModel M>
MorphismOf<M> pairing(const M& m, const MorphismOf<M>& h, const MorphismOf<M>& g) {
  return m.compose(m.tensor(h, g), m.dup(m.dom(h)));
}

template <GsModel M>
MorphismOf<M> project_left(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b) {
  return m.tensor(m.identity(a), m.discharge(b));
}

template <GsModel M>
MorphismOf<M> project_right(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b) {
  return m.tensor(m.discharge(a), m.identity(b));
}

// ---------------------------------------------------------------------------
// Category and symmetric monoidal structure

template <GsModel M>
LawReport check_category_and_monoidal(const M& m, const CheckOptions& opts = {}) {
  using detail::all_in;
  using detail::expect_eq;
  using detail::key_of;
  using Obj = ObjectOf<M>;
  using Mor = MorphismOf<M>;
  LawReport r("category");
  const Obj I = m.unit();
  auto T = [&](const Obj& a, const Obj& b) { return m.tensor_objects(a, b); };
  auto d = [&](const Mor& f) { return m.describe(f); };

  {
    auto& law = r.law("unit-object");
    for (const auto& a : m.objects()) {
      if (T(I, a) == a && T(a, I) == a)
        law.pass();
      else
        law.fail({"", {{"A", m.describe_object(a)}}, m.describe_object(T(I, a)),
                  m.describe_object(T(a, I))});
    }
  }
  {
    auto& law = r.law("object-tensor-associative");
    for_each_objects<3>(m, [&](const std::array<Obj, 3>& o) {
      if (!all_in(m, {T(o[0], o[1]), T(o[1], o[2]), T(T(o[0], o[1]), o[2])})) return;
      auto l = T(T(o[0], o[1]), o[2]), rr = T(o[0], T(o[1], o[2]));
      if (l == rr)
        law.pass();
      else
        law.fail({"", {{"A", m.describe_object(o[0])}, {"B", m.describe_object(o[1])},
                       {"C", m.describe_object(o[2])}},
                  m.describe_object(l), m.describe_object(rr)});
    });
  }
  {
    auto& law = r.law("structure-typing");
    auto typed = [&](const Mor& f, const Obj& a, const Obj& b, const std::string& what) {
      if (m.dom(f) == a && m.cod(f) == b)
        law.pass();
      else
        law.fail({"", {{"map", what}}, m.describe_object(m.dom(f)) + " -> " +
                                           m.describe_object(m.cod(f)),
                  m.describe_object(a) + " -> " + m.describe_object(b)});
    };
    for (const auto& a : m.objects()) {
      typed(m.identity(a), a, a, "id_" + m.describe_object(a));
      typed(m.discharge(a), a, I, "!_" + m.describe_object(a));
      if (in_fixture(m, T(a, a))) typed(m.dup(a), a, T(a, a), "∇_" + m.describe_object(a));
    }
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      if (!all_in(m, {T(o[0], o[1]), T(o[1], o[0])})) return;
      typed(m.symmetry(o[0], o[1]), T(o[0], o[1]), T(o[1], o[0]),
            "γ_" + m.describe_object(o[0]) + "," + m.describe_object(o[1]));
    });
  }
  {
    auto& left = r.law("identity-left");
    auto& right = r.law("identity-right");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      auto hom = hom_space(m, o[0], o[1], opts);
      visit(left, opts, key_of(m, {o[0], o[1]}), [&](const Mor& f) {
        expect_eq(left, m, m.compose(m.identity(o[1]), f), f, [&] { return Items{{"f", d(f)}}; });
      }, hom);
      visit(right, opts, key_of(m, {o[0], o[1]}), [&](const Mor& f) {
        expect_eq(right, m, m.compose(f, m.identity(o[0])), f, [&] { return Items{{"f", d(f)}}; });
      }, hom);
    });
  }
  {
    auto& law = r.law("associativity");
    for_each_objects<4>(m, [&](const std::array<Obj, 4>& o) {
      visit(law, opts, key_of(m, {o[0], o[1], o[2], o[3]}),
            [&](const Mor& f, const Mor& g, const Mor& h) {
              expect_eq(law, m, m.compose(m.compose(h, g), f), m.compose(h, m.compose(g, f)),
                        [&] { return Items{{"f", d(f)}, {"g", d(g)}, {"h", d(h)}}; });
            },
            hom_space(m, o[0], o[1], opts), hom_space(m, o[1], o[2], opts),
            hom_space(m, o[2], o[3], opts));
    });
  }
  {
    auto& law = r.law("tensor-identity");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      auto ab = T(o[0], o[1]);
      if (!in_fixture(m, ab)) return;
      expect_eq(law, m, m.tensor(m.identity(o[0]), m.identity(o[1])), m.identity(ab), [&] {
        return Items{{"A", m.describe_object(o[0])}, {"B", m.describe_object(o[1])}};
      });
    });
  }
  {
    auto& law = r.law("tensor-unit");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      visit(law, opts, key_of(m, {o[0], o[1]}), [&](const Mor& f) {
        auto items = [&] { return Items{{"f", d(f)}}; };
        expect_eq(law, m, m.tensor(f, m.identity(I)), f, items);
        if (!law.failed()) expect_eq(law, m, m.tensor(m.identity(I), f), f, items);
      }, hom_space(m, o[0], o[1], opts));
    });
  }
  {
    auto& law = r.law("tensor-associative");
    for_each_objects<6>(m, [&](const std::array<Obj, 6>& o) {
      if (!all_in(m, {T(o[0], o[2]), T(o[1], o[3]), T(o[2], o[4]), T(o[3], o[5]),
                      T(T(o[0], o[2]), o[4]), T(T(o[1], o[3]), o[5])}))
        return;
      visit(law, opts, key_of(m, {o[0], o[1], o[2], o[3], o[4], o[5]}),
            [&](const Mor& f, const Mor& g, const Mor& h) {
              expect_eq(law, m, m.tensor(m.tensor(f, g), h), m.tensor(f, m.tensor(g, h)),
                        [&] { return Items{{"f", d(f)}, {"g", d(g)}, {"h", d(h)}}; });
            },
            hom_space(m, o[0], o[1], opts), hom_space(m, o[2], o[3], opts),
            hom_space(m, o[4], o[5], opts));
    });
  }
  {
    auto& law = r.law("interchange");
    // f: A->B, g: B->C, h: D->E, k: E->F
    for_each_objects<6>(m, [&](const std::array<Obj, 6>& o) {
      if (!all_in(m, {T(o[0], o[3]), T(o[1], o[4]), T(o[2], o[5])})) return;
      visit(law, opts, key_of(m, {o[0], o[1], o[2], o[3], o[4], o[5]}),
            [&](const Mor& f, const Mor& g, const Mor& h, const Mor& k) {
              expect_eq(law, m, m.tensor(m.compose(g, f), m.compose(k, h)),
                        m.compose(m.tensor(g, k), m.tensor(f, h)), [&] {
                          return Items{{"f", d(f)}, {"g", d(g)}, {"h", d(h)}, {"k", d(k)}};
                        });
            },
            hom_space(m, o[0], o[1], opts), hom_space(m, o[1], o[2], opts),
            hom_space(m, o[3], o[4], opts), hom_space(m, o[4], o[5], opts));
    });
  }
  {
    auto& law = r.law("symmetry-natural");
    // f: A->B, g: C->D
    for_each_objects<4>(m, [&](const std::array<Obj, 4>& o) {
      if (!all_in(m, {T(o[0], o[2]), T(o[2], o[0]), T(o[1], o[3]), T(o[3], o[1])})) return;
      visit(law, opts, key_of(m, {o[0], o[1], o[2], o[3]}),
            [&](const Mor& f, const Mor& g) {
              expect_eq(law, m, m.compose(m.symmetry(o[1], o[3]), m.tensor(f, g)),
                        m.compose(m.tensor(g, f), m.symmetry(o[0], o[2])),
                        [&] { return Items{{"f", d(f)}, {"g", d(g)}}; });
            },
            hom_space(m, o[0], o[1], opts), hom_space(m, o[2], o[3], opts));
    });
  }
  {
    auto& inv = r.law("symmetry-involutive");
    auto& unit = r.law("symmetry-unit");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      const auto& a = o[0];
      const auto& b = o[1];
      if (!all_in(m, {T(a, b), T(b, a)})) return;
      expect_eq(inv, m, m.compose(m.symmetry(b, a), m.symmetry(a, b)), m.identity(T(a, b)), [&] {
        return Items{{"A", m.describe_object(a)}, {"B", m.describe_object(b)}};
      });
    });
    for (const auto& a : m.objects())
      expect_eq(unit, m, m.symmetry(a, I), m.identity(a),
                [&] { return Items{{"A", m.describe_object(a)}}; });
  }
  {
    auto& law = r.law("hexagon");
    for_each_objects<3>(m, [&](const std::array<Obj, 3>& o) {
      const auto &a = o[0], &b = o[1], &c = o[2];
      if (!all_in(m, {T(a, b), T(b, a), T(a, c), T(c, a), T(b, c), T(c, b), T(T(a, b), c),
                      T(T(b, a), c), T(T(b, c), a)}))
        return;
      auto lhs = m.symmetry(a, T(b, c));
      auto rhs = m.compose(m.tensor(m.identity(b), m.symmetry(a, c)),
                           m.tensor(m.symmetry(a, b), m.identity(c)));
      expect_eq(law, m, lhs, rhs, [&] {
        return Items{{"A", m.describe_object(a)}, {"B", m.describe_object(b)},
                     {"C", m.describe_object(c)}};
      });
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// gs-monoidal axioms

template <GsModel M>
LawReport check_gs_axioms(const M& m, const CheckOptions& opts = {}) {
  (void)opts;
  using detail::all_in;
  using detail::expect_eq;
  using Obj = ObjectOf<M>;
  LawReport r("gs");
  const Obj I = m.unit();
  auto T = [&](const Obj& a, const Obj& b) { return m.tensor_objects(a, b); };
  auto obj = [&](const Obj& a) { return Items{{"A", m.describe_object(a)}}; };

  auto& coassoc = r.law("coassociativity");
  auto& cocomm = r.law("cocommutativity");
  auto& counit_l = r.law("counitality-left");
  auto& counit_r = r.law("counitality-right");
  for (const auto& a : m.objects()) {
    auto aa = T(a, a);
    if (!in_fixture(m, aa)) continue;
    auto id = m.identity(a);
    auto dup = m.dup(a);
    if (in_fixture(m, T(aa, a)))
      expect_eq(coassoc, m, m.compose(m.tensor(dup, id), dup), m.compose(m.tensor(id, dup), dup),
                [&] { return obj(a); });
    expect_eq(cocomm, m, m.compose(m.symmetry(a, a), dup), dup, [&] { return obj(a); });
    expect_eq(counit_l, m, m.compose(m.tensor(m.discharge(a), id), dup), id,
              [&] { return obj(a); });
    expect_eq(counit_r, m, m.compose(m.tensor(id, m.discharge(a)), dup), id,
              [&] { return obj(a); });
  }

  auto& dup_mult = r.law("dup-multiplicative");
  auto& dis_mult = r.law("discharge-multiplicative");
  for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
    const auto &a = o[0], &b = o[1];
    auto ab = T(a, b);
    if (!in_fixture(m, ab)) return;
    auto items = [&] { return Items{{"A", m.describe_object(a)}, {"B", m.describe_object(b)}}; };
    expect_eq(dis_mult, m, m.discharge(ab), m.tensor(m.discharge(a), m.discharge(b)), items);
    if (!all_in(m, {T(ab, ab), T(a, a), T(b, b), T(T(a, a), T(b, b)), T(b, a)})) return;
    auto mid = m.tensor(m.tensor(m.identity(a), m.symmetry(a, b)), m.identity(b));
    expect_eq(dup_mult, m, m.dup(ab), m.compose(mid, m.tensor(m.dup(a), m.dup(b))), items);
  });

  auto& dup_unit = r.law("dup-unit");
  auto& dis_unit = r.law("discharge-unit");
  expect_eq(dup_unit, m, m.dup(I), m.identity(I), [] { return Items{}; });
  expect_eq(dis_unit, m, m.discharge(I), m.identity(I), [] { return Items{}; });
  return r;
}

// ---------------------------------------------------------------------------
// Materialized hom preorders

/// The preorder on one hom-set, materialized as a bit matrix when the hom-set
/// is small enough; otherwise only sampling is available.
template <GsModel M>
class HomOrder {
 public:
  static constexpr std::uint64_t kDenseBound = 1024;
  using Mor = MorphismOf<M>;

  HomOrder(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b, const CheckOptions& opts)
      : a_(a), b_(b) {
    HomSize n = m.hom_size(a, b);
    if (!n || *n > kDenseBound || *n > opts.cap) return;
    dense_ = true;
    for (std::uint64_t i = 0; i < *n; ++i) elems_.push_back(m.hom_at(a, b, i));
    words_ = (elems_.size() + 63) / 64;
    rows_.assign(elems_.size() * words_, 0);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = 0; j < elems_.size(); ++j)
        if (m.leq(elems_[i], elems_[j])) {
          rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          pairs_.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
  }

  bool dense() const { return dense_; }
  bool at(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  void check_preorder(const M& m, LawResult& refl, LawResult& trans) const {
    for (std::size_t i = 0; i < elems_.size() && !refl.failed(); ++i) {
      if (at(i, i))
        refl.pass();
      else
        refl.fail({"", {{"f", m.describe(elems_[i])}}, m.describe(elems_[i]),
                   m.describe(elems_[i])});
    }
    for (const auto& [i, j] : pairs_) {
      if (trans.failed()) return;
      // every successor of j must be a successor of i
      bool ok = true;
      std::size_t bad = 0;
      for (std::size_t w = 0; w < words_ && ok; ++w) {
        std::uint64_t missing = rows_[j * words_ + w] & ~rows_[i * words_ + w];
        if (missing) {
          ok = false;
          bad = w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
        }
      }
      if (ok) {
        trans.pass();
      } else {
        trans.fail({"",
                    {{"f", m.describe(elems_[i])},
                     {"g", m.describe(elems_[j])},
                     {"h", m.describe(elems_[bad])}},
                    m.describe(elems_[i]), m.describe(elems_[bad])});
      }
    }
  }

  /// Space of comparable pairs (f, f') with f ≤ f'.  When not dense, pairs are
  /// sampled and callers must filter on f ≤ f'.
  Space<std::pair<Mor, Mor>> pairs(const M& m, const CheckOptions& opts) const {
    if (dense_) {
      return {pairs_.size(),
              [this](std::uint64_t k) {
                return std::pair<Mor, Mor>{elems_[pairs_[k].first], elems_[pairs_[k].second]};
              },
              [this](Rng& rng) {
                std::uniform_int_distribution<std::size_t> pick(0, pairs_.size() - 1);
                auto k = pick(rng);
                return std::pair<Mor, Mor>{elems_[pairs_[k].first], elems_[pairs_[k].second]};
              }};
    }
    auto hom = hom_space(m, a_, b_, opts);
    return {std::nullopt, nullptr, [&m, hom](Rng& rng) {
              Mor f = hom.sample(rng);
              if constexpr (requires { m.sample_above(f, rng); }) {
                Mor g = m.sample_above(f, rng);
                return std::pair<Mor, Mor>{f, g};
              } else {
                Mor g = hom.sample(rng);
                return std::pair<Mor, Mor>{f, g};
              }
            }};
  }

 private:
  ObjectOf<M> a_, b_;
  bool dense_ = false;
  std::vector<Mor> elems_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

// ---------------------------------------------------------------------------
// Oplax cartesian preorder

template <GsModel M>
LawReport check_oplax_cartesian(const M& m, const CheckOptions& opts = {}) {
  using detail::all_in;
  using detail::expect_leq;
  using detail::key_of;
  using Obj = ObjectOf<M>;
  using Mor = MorphismOf<M>;
  if (!m.has_order()) throw MissingPreorder("oplax cartesian check needs a preorder on homs");
  LawReport r("oplax");
  auto T = [&](const Obj& a, const Obj& b) { return m.tensor_objects(a, b); };
  auto d = [&](const Mor& f) { return m.describe(f); };

  std::map<std::string, HomOrder<M>> orders;
  auto order_of = [&](const Obj& a, const Obj& b) -> const HomOrder<M>& {
    auto key = detail::key_of(m, {a, b});
    auto it = orders.find(key);
    if (it == orders.end()) it = orders.emplace(key, HomOrder<M>(m, a, b, opts)).first;
    return it->second;
  };
  {
    auto& refl = r.law("preorder-reflexive");
    auto& trans = r.law("preorder-transitive");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      const auto& ho = order_of(o[0], o[1]);
      if (ho.dense()) {
        ho.check_preorder(m, refl, trans);
        return;
      }
      auto hom = hom_space(m, o[0], o[1], opts);
      visit(refl, opts, key_of(m, {o[0], o[1]}), [&](const Mor& f) {
        expect_leq(refl, m, f, f, [&] { return Items{{"f", d(f)}}; });
      }, hom);
      visit(trans, opts, key_of(m, {o[0], o[1]}),
            [&](const std::pair<Mor, Mor>& fg, const Mor& h) {
              const auto& [f, g] = fg;
              if (!m.leq(f, g) || !m.leq(g, h)) return;
              expect_leq(trans, m, f, h,
                         [&] { return Items{{"f", d(f)}, {"g", d(g)}, {"h", d(h)}}; });
            },
            ho.pairs(m, opts), hom);
    });
  }
  {
    auto& post = r.law("compose-monotone-post");
    auto& pre = r.law("compose-monotone-pre");
    for_each_objects<3>(m, [&](const std::array<Obj, 3>& o) {
      // f <= f': A->B, g: B->C
      visit(post, opts, key_of(m, {o[0], o[1], o[2]}),
            [&](const std::pair<Mor, Mor>& ff, const Mor& g) {
              const auto& [f, f2] = ff;
              if (!m.leq(f, f2)) return;
              expect_leq(post, m, m.compose(g, f), m.compose(g, f2),
                         [&] { return Items{{"f", d(f)}, {"f'", d(f2)}, {"g", d(g)}}; });
            },
            order_of(o[0], o[1]).pairs(m, opts), hom_space(m, o[1], o[2], opts));
      // f <= f': B->C, h: A->B
      visit(pre, opts, key_of(m, {o[0], o[1], o[2]}),
            [&](const std::pair<Mor, Mor>& ff, const Mor& h) {
              const auto& [f, f2] = ff;
              if (!m.leq(f, f2)) return;
              expect_leq(pre, m, m.compose(f, h), m.compose(f2, h),
                         [&] { return Items{{"f", d(f)}, {"f'", d(f2)}, {"h", d(h)}}; });
            },
            order_of(o[1], o[2]).pairs(m, opts), hom_space(m, o[0], o[1], opts));
    });
  }
  {
    auto& law = r.law("tensor-monotone");
    // f <= f': A->B, g: C->D
    for_each_objects<4>(m, [&](const std::array<Obj, 4>& o) {
      bool right = all_in(m, {T(o[0], o[2]), T(o[1], o[3])});
      bool left = all_in(m, {T(o[2], o[0]), T(o[3], o[1])});
      if (!left && !right) return;
      visit(law, opts, key_of(m, {o[0], o[1], o[2], o[3]}),
            [&](const std::pair<Mor, Mor>& ff, const Mor& g) {
              const auto& [f, f2] = ff;
              if (!m.leq(f, f2)) return;
              auto items = [&] { return Items{{"f", d(f)}, {"f'", d(f2)}, {"g", d(g)}}; };
              if (right) expect_leq(law, m, m.tensor(f, g), m.tensor(f2, g), items);
              if (left && !law.failed())
                expect_leq(law, m, m.tensor(g, f), m.tensor(g, f2), items);
            },
            order_of(o[0], o[1]).pairs(m, opts), hom_space(m, o[2], o[3], opts));
    });
  }
  {
    auto& dup = r.law("dup-lax-natural");
    auto& dis = r.law("discharge-lax-natural");
    for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
      const auto &a = o[0], &b = o[1];
      bool with_dup = all_in(m, {T(a, a), T(b, b)});
      visit(dup, opts, key_of(m, {a, b}), [&](const Mor& f) {
        auto items = [&] { return Items{{"f", d(f)}}; };
        if (with_dup)
          expect_leq(dup, m, m.compose(m.dup(b), f), m.compose(m.tensor(f, f), m.dup(a)), items);
        expect_leq(dis, m, m.compose(m.discharge(b), f), m.discharge(a), items);
      }, hom_space(m, a, b, opts));
    });
    if (dis.checked == 0) dis.exhaustive = dup.exhaustive;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Domains of definition

enum class DomClauses { Auto, All, Strict };

/// Checks: dom of a functional map is functional; total ⟺ dom(f) = id; and,
/// when the order clauses are requested, dom(f) ≤ id and f dom(f) ≈ f.
template <GsModel M>
LawReport check_dom_propositions(const M& m, const CheckOptions& opts = {},
                                 DomClauses clauses = DomClauses::Auto) {
  using detail::expect_eq;
  using detail::expect_leq;
  using detail::key_of;
  using Obj = ObjectOf<M>;
  using Mor = MorphismOf<M>;
  bool with_order = clauses == DomClauses::All || (clauses == DomClauses::Auto && m.has_order());
  if (with_order && !m.has_order()) throw MissingPreorder("dom order clauses need a preorder");
  LawReport r("dom");
  auto T = [&](const Obj& a, const Obj& b) { return m.tensor_objects(a, b); };
  auto d = [&](const Mor& f) { return m.describe(f); };
  auto& functional = r.law("dom-of-functional-is-functional");
  auto& total = r.law("total-iff-dom-identity");
  LawResult* below = with_order ? &r.law("dom-below-identity") : nullptr;
  LawResult* restr = with_order ? &r.law("restriction-equivalent") : nullptr;
  LawResult* strict = clauses == DomClauses::Strict ? &r.law("restriction-equation") : nullptr;
  for_each_objects<2>(m, [&](const std::array<Obj, 2>& o) {
    const auto &a = o[0], &b = o[1];
    if (!in_fixture(m, T(a, a))) return;
    bool fun_clause = in_fixture(m, T(b, b));
    auto hom = hom_space(m, a, b, opts);
    std::string key = key_of(m, {a, b});
    auto body = [&](const Mor& f) {
      auto items = [&] { return Items{{"f", d(f)}}; };
      Mor df = domain_of_definition(m, f);
      if (fun_clause && is_functional(m, f)) {
        if (is_functional(m, df))
          functional.pass();
        else
          functional.fail({"", {{"f", d(f)}, {"dom(f)", d(df)}}, "not functional", "functional"});
      }
      bool t = is_total(m, f), idd = m.equal(df, m.identity(a));
      if (t == idd)
        total.pass();
      else
        total.fail({"", {{"f", d(f)}, {"dom(f)", d(df)}},
                    std::string("total=") + (t ? "true" : "false"),
                    std::string("dom(f)=id ") + (idd ? "true" : "false")});
      if (below) expect_leq(*below, m, df, m.identity(a), items);
      if (restr) {
        Mor fd = m.compose(f, df);
        if (equivalent(m, fd, f))
          restr->pass();
        else
          restr->fail({"", items(), d(fd), d(f)});
      }
      if (strict) expect_eq(*strict, m, m.compose(f, df), f, items);
    };
    visit(total, opts, key, body, hom);
    functional.exhaustive = total.exhaustive;
    if (below) below->exhaustive = total.exhaustive;
    if (restr) restr->exhaustive = total.exhaustive;
    if (strict) strict->exhaustive = total.exhaustive;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Weak products

/// Checks that A⊗B is a weak product in the subcategory of total maps and a
/// product in the subcategory of total functional maps, for every C whose
/// C⊗C lies in the fixture.
template <GsModel M>
LawReport check_weak_product(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b,
                             const CheckOptions& opts = {}) {
  using detail::expect_eq;
  using detail::key_of;
  using Mor = MorphismOf<M>;
  auto ab = m.tensor_objects(a, b);
  if (!in_fixture(m, ab)) throw MissingObject("weak product needs A⊗B in the fixture");
  LawReport r("weakproduct");
  auto d = [&](const Mor& f) { return m.describe(f); };
  auto pl = project_left(m, a, b), pr = project_right(m, a, b);
  auto& tot = r.law("pairing-total");
  auto& left = r.law("projection-left");
  auto& right = r.law("projection-right");
  auto& fun = r.law("pairing-functional");
  auto& uniq = r.law("mediator-unique");
  for (const auto& c : m.objects()) {
    if (!in_fixture(m, m.tensor_objects(c, c))) continue;
    std::string key = key_of(m, {a, b, c});
    visit(tot, opts, key, [&](const Mor& h, const Mor& g) {
      if (!is_total(m, h) || !is_total(m, g)) return;
      auto p = pairing(m, h, g);
      auto items = [&] { return Items{{"h", d(h)}, {"g", d(g)}, {"<h,g>", d(p)}}; };
      if (is_total(m, p))
        tot.pass();
      else
        tot.fail({"", items(), "not total", "total"});
      expect_eq(left, m, m.compose(pl, p), h, items);
      expect_eq(right, m, m.compose(pr, p), g, items);
      if (is_functional(m, h) && is_functional(m, g)) {
        if (is_functional(m, p))
          fun.pass();
        else
          fun.fail({"", items(), "not functional", "functional"});
      }
    }, hom_space(m, c, a, opts), hom_space(m, c, b, opts));
    left.exhaustive = right.exhaustive = fun.exhaustive = tot.exhaustive;
    visit(uniq, opts, key, [&](const Mor& q) {
      if (!is_total(m, q) || !is_functional(m, q)) return;
      auto p = pairing(m, m.compose(pl, q), m.compose(pr, q));
      expect_eq(uniq, m, q, p, [&] { return Items{{"q", d(q)}}; });
    }, hom_space(m, c, ab, opts));
  }
  return r;
}

/// Checks that A⊗B is a categorical product with the chosen projections over
/// all maps (not only total functional ones).
template <GsModel M>
LawReport check_cartesian_product(const M& m, const ObjectOf<M>& a, const ObjectOf<M>& b,
                                  const CheckOptions& opts = {}) {
  using detail::expect_eq;
  using detail::key_of;
  using Mor = MorphismOf<M>;
  auto ab = m.tensor_objects(a, b);
  if (!in_fixture(m, ab)) throw MissingObject("product needs A⊗B in the fixture");
  LawReport r("product");
  auto d = [&](const Mor& f) { return m.describe(f); };
  auto pl = project_left(m, a, b), pr = project_right(m, a, b);
  auto& exists = r.law("product-projections");
  auto& uniq = r.law("product-mediator-unique");
  for (const auto& c : m.objects()) {
    if (!in_fixture(m, m.tensor_objects(c, c))) continue;
    std::string key = key_of(m, {a, b, c});
    visit(exists, opts, key, [&](const Mor& h, const Mor& g) {
      auto p = pairing(m, h, g);
      auto items = [&] { return Items{{"h", d(h)}, {"g", d(g)}, {"<h,g>", d(p)}}; };
      expect_eq(exists, m, m.compose(pl, p), h, items);
      if (!exists.failed()) expect_eq(exists, m, m.compose(pr, p), g, items);
    }, hom_space(m, c, a, opts), hom_space(m, c, b, opts));
    visit(uniq, opts, key, [&](const Mor& q) {
      auto p = pairing(m, m.compose(pl, q), m.compose(pr, q));
      expect_eq(uniq, m, q, p, [&] { return Items{{"q", d(q)}}; });
    }, hom_space(m, c, ab, opts));
  }
  return r;
}

/// Two distinct mediators for f: A -> B into B⊗B: ∇_B f and (f⊗f)∇_A.
template <GsModel M>
struct MediatorPair {
  MorphismOf<M> via_dup;
  MorphismOf<M> via_pairing;
  bool same_projections = false;
  bool distinct = false;
};

template <GsModel M>
MediatorPair<M> mediator_pair(const M& m, const MorphismOf<M>& f) {
  auto a = m.dom(f), b = m.cod(f);
  auto x = m.compose(m.dup(b), f);
  auto y = m.compose(m.tensor(f, f), m.dup(a));
  auto pl = project_left(m, b, b), pr = project_right(m, b, b);
  bool same = m.equal(m.compose(pl, x), m.compose(pl, y)) &&
              m.equal(m.compose(pr, x), m.compose(pr, y));
  return {x, y, same, !m.equal(x, y)};
}

/// Checks ∇ ≈ ∇' and ! ≈ !' for an alternative gs structure.
template <GsModel M, class Dup, class Discharge>
LawReport check_dup_discharge_uniqueness(const M& m, Dup&& dup2, Discharge&& discharge2) {
  if (!m.has_order()) throw MissingPreorder("uniqueness up to ≈ needs a preorder");
  LawReport r("uniqueness");
  auto& dl = r.law("dup-equivalent");
  auto& xl = r.law("discharge-equivalent");
  for (const auto& a : m.objects()) {
    auto items = [&] { return Items{{"A", m.describe_object(a)}}; };
    if (in_fixture(m, m.tensor_objects(a, a))) {
      auto x = m.dup(a), y = dup2(a);
      if (equivalent(m, x, y))
        dl.pass();
      else
        dl.fail({"", items(), m.describe(x), m.describe(y)});
    }
    auto x = m.discharge(a), y = discharge2(a);
    if (equivalent(m, x, y))
      xl.pass();
    else
      xl.fail({"", items(), m.describe(x), m.describe(y)});
  }
  return r;
}

}  // namespace gsmon
