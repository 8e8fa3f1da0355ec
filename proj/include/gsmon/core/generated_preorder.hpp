#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsmon/core/adapters.hpp"
#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/model.hpp"

namespace gsmon {

/// The least preorder on the fixture's hom-sets that contains ∇_B f ≤ (f⊗f)∇_A
/// and !_B f ≤ !_A and is closed under composition and tensoring with fixture
/// morphisms.  Hom-sets above `CheckOptions::preorder_bound` carry no pairs
/// (they are listed in `excluded` and compare by equality); their morphisms
/// still act as generators, and as composition partners up to
/// `CheckOptions::partner_bound`.  Only in-fixture instances generate, so the
/// result is a lower bound of the untruncated preorder.
template <GsModel M>
class GeneratedPreorder {
 public:
  using Obj = ObjectOf<M>;
  using Mor = MorphismOf<M>;

  struct Hom {
    Obj a, b;
    std::vector<Mor> elems;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows, cols;
    bool get(std::size_t i, std::size_t j) const { return (rows[i * words + j / 64] >> (j % 64)) & 1u; }
  };

  GeneratedPreorder(const M& m, const CheckOptions& opts, bool from_existing);

  const std::vector<Hom>& homs() const { return homs_; }
  const std::vector<std::pair<Obj, Obj>>& excluded() const { return excluded_; }
  std::uint64_t generators() const { return generators_; }
  /// Non-reflexive related pairs.
  std::uint64_t strict_pairs() const;
  bool leq(const M& m, const Mor& f, const Mor& g) const;
  const Hom* find(const Obj& a, const Obj& b) const;

 private:
  std::optional<std::size_t> hom_id(const Obj& a, const Obj& b) const;

  std::vector<Hom> homs_;
  // every enumerable hom-set; the first homs_.size() entries mirror homs_
  std::vector<std::pair<Obj, Obj>> all_;
  std::vector<std::vector<Mor>> all_elems_;
  std::vector<std::pair<Obj, Obj>> excluded_;
  std::uint64_t generators_ = 0;
};

template <GsModel M>
std::optional<std::size_t> GeneratedPreorder<M>::hom_id(const Obj& a, const Obj& b) const {
  for (std::size_t h = 0; h < homs_.size(); ++h)
    if (homs_[h].a == a && homs_[h].b == b) return h;
  return std::nullopt;
}

template <GsModel M>
const typename GeneratedPreorder<M>::Hom* GeneratedPreorder<M>::find(const Obj& a, const Obj& b) const {
  auto h = hom_id(a, b);
  return h ? &homs_[*h] : nullptr;
}

template <GsModel M>
std::uint64_t GeneratedPreorder<M>::strict_pairs() const {
  std::uint64_t n = 0;
  for (const auto& h : homs_) {
    for (auto w : h.rows) n += static_cast<std::uint64_t>(std::popcount(w));
    n -= h.elems.size();
  }
  return n;
}

template <GsModel M>
bool GeneratedPreorder<M>::leq(const M& m, const Mor& f, const Mor& g) const {
  if (!(m.dom(f) == m.dom(g)) || !(m.cod(f) == m.cod(g))) return false;
  const Hom* h = find(m.dom(f), m.cod(f));
  if (!h) return m.equal(f, g);
  auto i = m.hom_index(f), j = m.hom_index(g);
  if (!i || !j || *i >= h->elems.size() || *j >= h->elems.size()) return m.equal(f, g);
  return h->get(*i, *j);
}

template <GsModel M>
GeneratedPreorder<M>::GeneratedPreorder(const M& m, const CheckOptions& opts, bool from_existing) {
  const auto objs = m.objects();
  std::vector<std::pair<Obj, Obj>> partners_only, generators_only;
  for (const auto& a : objs)
    for (const auto& b : objs) {
      HomSize n = m.hom_size(a, b);
      if (!n || *n > opts.preorder_bound || *n > opts.cap) {
        excluded_.emplace_back(a, b);
        if (n && *n <= opts.cap) {
          generators_only.emplace_back(a, b);
          if (*n <= opts.partner_bound) partners_only.emplace_back(a, b);
        }
        continue;
      }
      Hom h{a, b, {}, 0, {}, {}};
      for (std::uint64_t i = 0; i < *n; ++i) h.elems.push_back(m.hom_at(a, b, i));
      h.words = (h.elems.size() + 63) / 64;
      h.rows.assign(h.elems.size() * h.words, 0);
      h.cols.assign(h.elems.size() * h.words, 0);
      homs_.push_back(std::move(h));
    }
  for (const auto& h : homs_) {
    all_.emplace_back(h.a, h.b);
    all_elems_.push_back(h.elems);
  }
  for (const auto& [a, b] : partners_only) {
    all_.emplace_back(a, b);
    std::vector<Mor> elems;
    for (std::uint64_t i = 0, n = *m.hom_size(a, b); i < n; ++i) elems.push_back(m.hom_at(a, b, i));
    all_elems_.push_back(std::move(elems));
  }

  struct Item {
    std::size_t h, i, j;
  };
  std::vector<Item> work;
  auto add = [&](std::size_t h, std::size_t i, std::size_t j) {
    Hom& H = homs_[h];
    std::uint64_t bit = std::uint64_t{1} << (j % 64);
    if (H.rows[i * H.words + j / 64] & bit) return;
    H.rows[i * H.words + j / 64] |= bit;
    H.cols[j * H.words + i / 64] |= std::uint64_t{1} << (i % 64);
    if (i != j) work.push_back({h, i, j});
  };
  auto index_in = [&](std::size_t h, const Mor& f) -> std::optional<std::size_t> {
    auto i = m.hom_index(f);
    if (!i || *i >= homs_[h].elems.size()) return std::nullopt;
    return static_cast<std::size_t>(*i);
  };

  for (std::size_t h = 0; h < homs_.size(); ++h)
    for (std::size_t i = 0; i < homs_[h].elems.size(); ++i) add(h, i, i);

  if (from_existing && m.has_order())
    for (std::size_t h = 0; h < homs_.size(); ++h)
      for (std::size_t i = 0; i < homs_[h].elems.size(); ++i)
        for (std::size_t j = 0; j < homs_[h].elems.size(); ++j)
          if (i != j && m.leq(homs_[h].elems[i], homs_[h].elems[j])) add(h, i, j);

  const Obj I = m.unit();
  std::vector<std::pair<Obj, Obj>> gen_homs;
  for (const auto& h : homs_) gen_homs.emplace_back(h.a, h.b);
  gen_homs.insert(gen_homs.end(), generators_only.begin(), generators_only.end());
  for (const auto& [a, b] : gen_homs) {
    auto aa = m.tensor_objects(a, a), bb = m.tensor_objects(b, b);
    auto dup_hom = (in_fixture(m, aa) && in_fixture(m, bb)) ? hom_id(a, bb) : std::nullopt;
    auto dis_hom = hom_id(a, I);
    if (!dup_hom && !dis_hom) continue;
    for (std::uint64_t idx = 0, n = *m.hom_size(a, b); idx < n; ++idx) {
      const Mor f = m.hom_at(a, b, idx);
      if (dup_hom) {
        auto x = index_in(*dup_hom, m.compose(m.dup(b), f));
        auto y = index_in(*dup_hom, m.compose(m.tensor(f, f), m.dup(a)));
        if (x && y) {
          add(*dup_hom, *x, *y);
          ++generators_;
        }
      }
      if (dis_hom) {
        auto x = index_in(*dis_hom, m.compose(m.discharge(b), f));
        auto y = index_in(*dis_hom, m.discharge(a));
        if (x && y) {
          add(*dis_hom, *x, *y);
          ++generators_;
        }
      }
    }
  }

  // propagation partners per hom
  struct Post {
    std::size_t by, into;
  };
  struct Tens {
    std::size_t with, into;
    bool left;
  };
  std::vector<std::vector<Post>> post(homs_.size()), pre(homs_.size());
  std::vector<std::vector<Tens>> tens(homs_.size());
  for (std::size_t h = 0; h < homs_.size(); ++h) {
    const Obj x = homs_[h].a, y = homs_[h].b;
    for (std::size_t k = 0; k < all_.size(); ++k) {
      const auto& [ka, kb] = all_[k];
      if (ka == y)
        if (auto into = hom_id(x, kb)) post[h].push_back({k, *into});
      if (kb == x)
        if (auto into = hom_id(ka, y)) pre[h].push_back({k, *into});
      auto xp = m.tensor_objects(x, ka), yq = m.tensor_objects(y, kb);
      if (in_fixture(m, xp) && in_fixture(m, yq))
        if (auto into = hom_id(xp, yq)) tens[h].push_back({k, *into, false});
      auto px = m.tensor_objects(ka, x), qy = m.tensor_objects(kb, y);
      if (in_fixture(m, px) && in_fixture(m, qy))
        if (auto into = hom_id(px, qy)) tens[h].push_back({k, *into, true});
    }
  }

  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    const Mor u = homs_[it.h].elems[it.i];
    const Mor v = homs_[it.h].elems[it.j];
    for (const auto& p : post[it.h])
      for (const Mor& g : all_elems_[p.by]) {
        auto x = index_in(p.into, m.compose(g, u)), y = index_in(p.into, m.compose(g, v));
        if (x && y) add(p.into, *x, *y);
      }
    for (const auto& p : pre[it.h])
      for (const Mor& k : all_elems_[p.by]) {
        auto x = index_in(p.into, m.compose(u, k)), y = index_in(p.into, m.compose(v, k));
        if (x && y) add(p.into, *x, *y);
      }
    for (const auto& t : tens[it.h])
      for (const Mor& w : all_elems_[t.with]) {
        auto x = index_in(t.into, t.left ? m.tensor(w, u) : m.tensor(u, w));
        auto y = index_in(t.into, t.left ? m.tensor(w, v) : m.tensor(v, w));
        if (x && y) add(t.into, *x, *y);
      }
    // transitivity
    Hom& H = homs_[it.h];
    for (std::size_t w = 0; w < H.words; ++w) {
      std::uint64_t before = H.cols[it.i * H.words + w];
      while (before) {
        std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(before));
        before &= before - 1;
        add(it.h, t, it.j);
      }
      std::uint64_t after = H.rows[it.j * H.words + w];
      while (after) {
        std::size_t s = w * 64 + static_cast<std::size_t>(std::countr_zero(after));
        after &= after - 1;
        add(it.h, it.i, s);
      }
    }
  }
}

/// Returns `m` with its preorder replaced by the generated one.  With
/// `from_existing`, the closure starts from m's own order instead of from
/// equality.
template <GsModel M>
WithOrder<M> generate_oplax_preorder(const M& m, const CheckOptions& opts = {},
                                     bool from_existing = false,
                                     std::shared_ptr<const GeneratedPreorder<M>>* out = nullptr) {
  auto g = std::make_shared<const GeneratedPreorder<M>>(m, opts, from_existing);
  if (out) *out = g;
  auto model = std::make_shared<const M>(m);
  return WithOrder<M>(m, [g, model](const MorphismOf<M>& f, const MorphismOf<M>& h) {
    return g->leq(*model, f, h);
  });
}

/// Checks that the model's own preorder contains the generated preorder.
template <GsModel M>
LawReport check_contains_generated(const M& m, const GeneratedPreorder<M>& g) {
  LawReport r("generated-containment");
  auto& law = r.law("generated-pairs-contained");
  for (const auto& h : g.homs())
    for (std::size_t i = 0; i < h.elems.size() && !law.failed(); ++i)
      for (std::size_t j = 0; j < h.elems.size(); ++j) {
        if (!h.get(i, j)) continue;
        if (m.leq(h.elems[i], h.elems[j])) {
          law.pass();
        } else {
          law.fail({"", {{"f", m.describe(h.elems[i])}, {"g", m.describe(h.elems[j])}},
                    m.describe(h.elems[i]), m.describe(h.elems[j])});
          break;
        }
      }
  for (const auto& [a, b] : g.excluded())
    r.note("hom(" + m.describe_object(a) + ", " + m.describe_object(b) +
           ") above the preorder bound; carries no generated pairs");
  return r;
}

}  // namespace gsmon
