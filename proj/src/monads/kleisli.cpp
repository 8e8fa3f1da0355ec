#include "gsmon/monads/kleisli.hpp"

#include "gsmon/finrel/model.hpp"
#include "gsmon/preord/finpreord.hpp"

namespace gsmon {

PreordModel discrete_base(const std::vector<std::size_t>& sizes) {
  std::vector<FinPreord> objs;
  for (auto n : sizes) objs.push_back(FinPreord::discrete(n));
  return PreordModel(objs);
}

LawReport check_multiset_scalar_square(std::uint64_t max_scalar) {
  KleisliModel<MultisetMonad> k(MultisetMonad{}, {1});
  LawReport r("multiset-scalar-square");
  auto& square = r.law("scalar-square");
  auto& strict = r.law("dom-strict-equality-fails");
  for (std::uint64_t s = 0; s <= max_scalar; ++s) {
    KleisliMorphism<MultisetMonad::Value> f{1, 1, {{s}}};
    auto d = domain_of_definition(k, f);
    auto lhs = k.compose(f, d);
    KleisliMorphism<MultisetMonad::Value> sq{1, 1, {{s * s}}};
    Items items{{"f", std::to_string(s)}, {"dom(f)", k.describe(d)}};
    if (lhs == sq)
      square.pass();
    else
      square.fail({"", items, k.describe(lhs), k.describe(sq)});
    bool expect_equal = s <= 1;
    if ((lhs == f) == expect_equal)
      strict.pass();
    else
      strict.fail({"", items, k.describe(lhs), k.describe(f)});
  }
  return r;
}

Rel powerset_table_to_rel(std::size_t src, std::size_t tgt, const std::vector<std::uint64_t>& table) {
  Rel r(src, tgt);
  for (std::size_t x = 0; x < src; ++x)
    for (std::size_t y = 0; y < tgt; ++y)
      if ((table[x] >> y) & 1) r.set(x, y);
  return r;
}

Rel lifting_table_to_rel(std::size_t src, std::size_t tgt, const std::vector<std::int64_t>& table) {
  Rel r(src, tgt);
  for (std::size_t x = 0; x < src; ++x)
    if (table[x] != LiftingMonad::kBottom) r.set(x, static_cast<std::size_t>(table[x]));
  return r;
}

namespace {

/// Laws shared by the three comparisons: the translation commutes with
/// identities, composition, tensor, structure maps, and matches the order.
template <Monad M, class Translate>
void compare_with_rel(LawReport& r, const KleisliModel<M>& k, const FinRelModel& rel,
                      Translate&& tr, const CheckOptions& opts) {
  using Mor = typename KleisliModel<M>::Morphism;
  auto d = [&](const Mor& f) { return k.describe(f); };
  auto expect = [&](LawResult& law, const Rel& lhs, const Rel& rhs, Items items) {
    if (lhs == rhs)
      law.pass();
    else
      law.fail({"", std::move(items), to_string(lhs), to_string(rhs)});
  };
  auto& structure = r.law("structure-preserved");
  for (auto a : k.objects()) {
    std::string as = std::to_string(a);
    expect(structure, tr(k.identity(a)), rel.identity(a), {{"id", as}});
    expect(structure, tr(k.dup(a)), rel.dup(a), {{"∇", as}});
    expect(structure, tr(k.discharge(a)), rel.discharge(a), {{"!", as}});
    for (auto b : k.objects())
      expect(structure, tr(k.symmetry(a, b)), rel.symmetry(a, b), {{"γ", as + "," + std::to_string(b)}});
  }
  auto& comp = r.law("composition-preserved");
  auto& tens = r.law("tensor-preserved");
  auto& order = r.law("order-preserved-reflected");
  for (auto a : k.objects())
    for (auto b : k.objects()) {
      std::string kab = std::to_string(a) + "," + std::to_string(b);
      visit(order, opts, kab, [&](const Mor& f, const Mor& g) {
        bool lhs = k.leq(f, g), rhs = rel.leq(tr(f), tr(g));
        if (lhs == rhs)
          order.pass();
        else
          order.fail({"", {{"f", d(f)}, {"g", d(g)}}, lhs ? "leq" : "not leq", rhs ? "leq" : "not leq"});
      }, hom_space(k, a, b, opts), hom_space(k, a, b, opts));
      for (auto c : k.objects()) {
        std::string key = kab + "," + std::to_string(c);
        visit(comp, opts, key, [&](const Mor& f, const Mor& g) {
          expect(comp, tr(k.compose(g, f)), rel.compose(tr(g), tr(f)), {{"f", d(f)}, {"g", d(g)}});
        }, hom_space(k, a, b, opts), hom_space(k, b, c, opts));
        visit(tens, opts, key, [&](const Mor& f, const Mor& g) {
          expect(tens, tr(k.tensor(f, g)), rel.tensor(tr(f), tr(g)), {{"f", d(f)}, {"g", d(g)}});
        }, hom_space(k, a, b, opts), hom_space(k, c, c, opts));
      }
    }
}

}  // namespace

LawReport check_powerset_is_rel(const std::vector<std::size_t>& sizes, const CheckOptions& opts) {
  KleisliModel<PowersetMonad> k(PowersetMonad{}, sizes);
  FinRelModel rel(sizes);
  auto tr = [](const KleisliMorphism<std::uint64_t>& f) { return powerset_table_to_rel(f.src, f.tgt, f.table); };
  LawReport r("powerset-kleisli-is-rel");
  auto& bij = r.law("hom-bijection");
  for (auto a : sizes)
    for (auto b : sizes) {
      auto ks = k.hom_size(a, b), rs = rel.hom_size(a, b);
      Items items{{"A", std::to_string(a)}, {"B", std::to_string(b)}};
      if (ks != rs || !ks) {
        bij.fail({"", items, ks ? std::to_string(*ks) : "?", rs ? std::to_string(*rs) : "?"});
        continue;
      }
      // the encoding sends the i-th Kleisli arrow to the i-th relation
      visit(bij, opts, std::to_string(a) + "," + std::to_string(b), [&](const std::uint64_t& i) {
        auto f = k.hom_at(a, b, i);
        auto g = rel.hom_at(a, b, i);
        if (tr(f) == g && k.hom_index(f) == rel.hom_index(g))
          bij.pass();
        else
          bij.fail({"", {{"index", std::to_string(i)}}, k.describe(f), to_string(g)});
      }, Space<std::uint64_t>{*ks, [](std::uint64_t i) { return i; },
                              [n = *ks](Rng& rng) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }});
    }
  compare_with_rel(r, k, rel, tr, opts);
  return r;
}

LawReport check_nonempty_is_total(const std::vector<std::size_t>& sizes, const CheckOptions& opts) {
  KleisliModel<NonemptyPowersetMonad> k(NonemptyPowersetMonad{}, sizes);
  FinRelModel rel(sizes);
  auto tr = [](const KleisliMorphism<std::uint64_t>& f) { return powerset_table_to_rel(f.src, f.tgt, f.table); };
  LawReport r("nonempty-kleisli-is-total");
  auto& count = r.law("hom-count-matches-total");
  auto& total = r.law("image-total");
  auto& weak = r.law("weakly-total");
  for (auto a : sizes)
    for (auto b : sizes) {
      std::uint64_t totals = 0;
      auto rs = hom_space(rel, a, b, opts);
      for (std::uint64_t i = 0; i < *rs.size; ++i)
        if (is_total_relation(rs.at(i))) ++totals;
      auto ks = k.hom_size(a, b);
      Items items{{"A", std::to_string(a)}, {"B", std::to_string(b)}};
      if (ks && *ks == totals)
        count.pass();
      else
        count.fail({"", items, ks ? std::to_string(*ks) : "?", std::to_string(totals)});
      visit(total, opts, std::to_string(a) + "," + std::to_string(b), [&](const KleisliMorphism<std::uint64_t>& f) {
        if (is_total_relation(tr(f)))
          total.pass();
        else
          total.fail({"", {{"f", k.describe(f)}}, to_string(tr(f)), "total"});
        if (is_weakly_total(k, f))
          weak.pass();
        else
          weak.fail({"", {{"f", k.describe(f)}}, k.describe(k.compose(k.discharge(b), f)),
                     k.describe(k.discharge(a))});
      }, hom_space(k, a, b, opts));
    }
  compare_with_rel(r, k, rel, tr, opts);
  return r;
}

LawReport check_lifting_is_partial(const std::vector<std::size_t>& sizes, const CheckOptions& opts) {
  KleisliModel<LiftingMonad> k(LiftingMonad{}, sizes);
  FinRelModel rel(sizes);
  auto tr = [](const KleisliMorphism<std::int64_t>& f) { return lifting_table_to_rel(f.src, f.tgt, f.table); };
  LawReport r("lifting-kleisli-is-partial");
  auto& count = r.law("hom-count-matches-partial");
  auto& partial = r.law("image-partial-function");
  for (auto a : sizes)
    for (auto b : sizes) {
      std::uint64_t partials = 0;
      auto rs = hom_space(rel, a, b, opts);
      for (std::uint64_t i = 0; i < *rs.size; ++i)
        if (is_partial_function(rs.at(i))) ++partials;
      auto ks = k.hom_size(a, b);
      if (ks && *ks == partials)
        count.pass();
      else
        count.fail({"", {{"A", std::to_string(a)}, {"B", std::to_string(b)}},
                    ks ? std::to_string(*ks) : "?", std::to_string(partials)});
      visit(partial, opts, std::to_string(a) + "," + std::to_string(b), [&](const KleisliMorphism<std::int64_t>& f) {
        if (is_partial_function(tr(f)))
          partial.pass();
        else
          partial.fail({"", {{"f", k.describe(f)}}, to_string(tr(f)), "partial function"});
      }, hom_space(k, a, b, opts));
    }
  compare_with_rel(r, k, rel, tr, opts);
  return r;
}

}  // namespace gsmon
