#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/model.hpp"
#include "gsmon/termgraph/termgraph.hpp"

namespace gsmon {

/// Sorts to objects and ops to morphisms of a model.
template <GsModel M>
struct TgAssignment {
  std::vector<ObjectOf<M>> sorts;
  std::vector<MorphismOf<M>> ops;
};

namespace tg_detail {

template <GsModel M>
ObjectOf<M> list_object(const M& m, const std::vector<ObjectOf<M>>& objs) {
  if (objs.empty()) return m.unit();
  ObjectOf<M> acc = objs[0];
  for (std::size_t i = 1; i < objs.size(); ++i) acc = m.tensor_objects(acc, objs[i]);
  return acc;
}

template <GsModel M>
MorphismOf<M> list_tensor(const M& m, const std::vector<MorphismOf<M>>& fs) {
  if (fs.empty()) return m.identity(m.unit());
  MorphismOf<M> acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = m.tensor(acc, fs[i]);
  return acc;
}

/// a -> a^k built from ∇, ! and identities.
template <GsModel M>
MorphismOf<M> copies(const M& m, const ObjectOf<M>& a, std::size_t k) {
  if (k == 0) return m.discharge(a);
  MorphismOf<M> f = m.identity(a);
  ObjectOf<M> rest = m.unit();
  for (std::size_t j = 1; j < k; ++j) {
    f = m.compose(m.tensor(m.dup(a), m.identity(rest)), f);
    rest = j == 1 ? a : m.tensor_objects(rest, a);
  }
  return f;
}

/// The copy-discard-permute map from the wire list `from` (distinct) to the
/// wire list `to` (entries of `from`, repetition and omission allowed).
template <GsModel M>
MorphismOf<M> wiring(const M& m, const std::vector<ObjectOf<M>>& wire_obj, const std::vector<std::size_t>& from,
                     const std::vector<std::size_t>& to) {
  std::vector<MorphismOf<M>> parts;
  std::vector<std::size_t> spread;
  for (auto w : from) {
    auto k = static_cast<std::size_t>(std::count(to.begin(), to.end(), w));
    parts.push_back(copies(m, wire_obj[w], k));
    spread.insert(spread.end(), k, w);
  }
  MorphismOf<M> f = list_tensor(m, parts);
  // target position of each spread entry: i-th copy of w goes to the i-th occurrence in `to`
  std::vector<std::size_t> target(spread.size());
  for (std::size_t i = 0; i < spread.size(); ++i) {
    auto nth = static_cast<std::size_t>(std::count(spread.begin(), spread.begin() + static_cast<long>(i), spread[i]));
    for (std::size_t j = 0, seen = 0; j < to.size(); ++j)
      if (to[j] == spread[i] && seen++ == nth) target[i] = j;
  }
  std::vector<ObjectOf<M>> objs;
  for (auto w : spread) objs.push_back(wire_obj[w]);
  for (std::size_t pass = 0; pass < target.size(); ++pass)
    for (std::size_t i = 0; i + 1 < target.size(); ++i) {
      if (target[i] < target[i + 1]) continue;
      std::vector<ObjectOf<M>> pre(objs.begin(), objs.begin() + static_cast<long>(i));
      std::vector<ObjectOf<M>> post(objs.begin() + static_cast<long>(i) + 2, objs.end());
      std::vector<MorphismOf<M>> swap;
      if (!pre.empty()) swap.push_back(m.identity(list_object(m, pre)));
      swap.push_back(m.symmetry(objs[i], objs[i + 1]));
      if (!post.empty()) swap.push_back(m.identity(list_object(m, post)));
      f = m.compose(list_tensor(m, swap), f);
      std::swap(target[i], target[i + 1]);
      std::swap(objs[i], objs[i + 1]);
    }
  return f;
}

}  // namespace tg_detail

template <GsModel M>
ObjectOf<M> tg_word_object(const M& m, const TgAssignment<M>& a, const Word& w) {
  std::vector<ObjectOf<M>> objs;
  for (auto s : w) objs.push_back(a.sorts.at(s));
  return tg_detail::list_object(m, objs);
}

/// Throws TypeMismatch unless every op is assigned a morphism of the
/// assigned type.
template <GsModel M>
void tg_check_assignment(const Signature& sig, const M& m, const TgAssignment<M>& a) {
  if (a.sorts.size() != sig.sorts.size() || a.ops.size() != sig.ops.size())
    throw TypeMismatch("assignment covers " + std::to_string(a.sorts.size()) + " sorts and " +
                       std::to_string(a.ops.size()) + " ops");
  for (std::size_t o = 0; o < sig.ops.size(); ++o)
    if (!(m.dom(a.ops[o]) == tg_word_object(m, a, sig.ops[o].in)) ||
        !(m.cod(a.ops[o]) == tg_word_object(m, a, sig.ops[o].out)))
      throw TypeMismatch("op " + sig.ops[o].name + " assigned " + m.describe(a.ops[o]));
}

/// Evaluates a graph one box per layer in the chosen topological order: each
/// layer copies, discards and permutes the live wires, then applies the box
/// next to the identity on the wires still needed later.
template <GsModel M>
MorphismOf<M> tg_eval(const TermGraph& t, const M& m, const TgAssignment<M>& a, TieBreak tie = TieBreak::Least) {
  tg_check_assignment(*t.signature(), m, a);
  std::vector<ObjectOf<M>> wire_obj;
  for (auto s : t.wire_sorts()) wire_obj.push_back(a.sorts[s]);
  const auto order = tg_layering(t, tie);
  std::vector<std::size_t> remaining(t.wire_count(), 0);
  for (const auto& b : t.boxes())
    for (auto w : b.in) ++remaining[w];
  for (auto w : t.outputs()) ++remaining[w];

  std::vector<std::size_t> bundle(t.input().size());
  for (std::size_t i = 0; i < bundle.size(); ++i) bundle[i] = i;
  MorphismOf<M> f = m.identity(tg_word_object(m, a, t.input()));
  for (auto bi : order) {
    const auto& box = t.boxes()[bi];
    for (auto w : box.in) --remaining[w];
    std::vector<std::size_t> keep;
    for (auto w : bundle)
      if (remaining[w] > 0) keep.push_back(w);
    std::vector<std::size_t> target = keep;
    target.insert(target.end(), box.in.begin(), box.in.end());
    f = m.compose(tg_detail::wiring(m, wire_obj, bundle, target), f);
    std::vector<ObjectOf<M>> keep_objs;
    for (auto w : keep) keep_objs.push_back(wire_obj[w]);
    f = m.compose(m.tensor(m.identity(tg_detail::list_object(m, keep_objs)), a.ops[box.op]), f);
    bundle = keep;
    bundle.insert(bundle.end(), box.out.begin(), box.out.end());
  }
  return m.compose(tg_detail::wiring(m, wire_obj, bundle, t.outputs()), f);
}

/// Functoriality and layering invariance of evaluation on s: A -> B,
/// t: B -> C and an unrelated u.
template <GsModel M>
void check_tg_eval_instance(LawReport& r, const M& m, const TgAssignment<M>& a, const TermGraph& s,
                            const TermGraph& t, const TermGraph& u, const std::string& key) {
  const auto& sig = t.signature();
  auto items = [&] {
    return Items{{"case", key}, {"s", to_string(s)}, {"t", to_string(t)}, {"u", to_string(u)}};
  };
  auto ev = [&](const TermGraph& g) { return tg_eval(g, m, a); };
  detail::expect_eq(r.law("eval-compose"), m, ev(tg_compose(t, s)), m.compose(ev(t), ev(s)), items);
  detail::expect_eq(r.law("eval-tensor"), m, ev(tg_tensor(s, u)), m.tensor(ev(s), ev(u)), items);
  const auto A = s.input(), B = u.input();
  const auto a_obj = tg_word_object(m, a, A), b_obj = tg_word_object(m, a, B);
  detail::expect_eq(r.law("eval-identity"), m, ev(tg_id(sig, A)), m.identity(a_obj), items);
  detail::expect_eq(r.law("eval-dup"), m, ev(tg_dup(sig, A)), m.dup(a_obj), items);
  detail::expect_eq(r.law("eval-discharge"), m, ev(tg_discharge(sig, A)), m.discharge(a_obj), items);
  detail::expect_eq(r.law("eval-symmetry"), m, ev(tg_symmetry(sig, A, B)), m.symmetry(a_obj, b_obj), items);
  for (std::size_t o = 0; o < sig->ops.size(); ++o)
    detail::expect_eq(r.law("eval-generator"), m, ev(tg_from_op(sig, o)), a.ops[o], items);
  const auto ts = tg_compose(t, s);
  for (const auto* g : {&s, &t, &u, &ts})
    detail::expect_eq(r.law("layering-invariant"), m, tg_eval(*g, m, a, TieBreak::Least),
                      tg_eval(*g, m, a, TieBreak::Greatest), items);
}

}  // namespace gsmon
