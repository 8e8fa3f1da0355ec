#include "gsmon/termgraph/suite.hpp"

#include <algorithm>
#include <numeric>

#include "gsmon/core/checks.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/termgraph/eval.hpp"

namespace gsmon {

namespace {

void expect_tg(LawResult& law, const TermGraph& lhs, const TermGraph& rhs, const std::string& key) {
  if (tg_equal(lhs, rhs))
    law.pass();
  else
    law.fail({"", {{"case", key}}, to_string(lhs), to_string(rhs)});
}

TermGraph shuffled(const TermGraph& t, Rng& rng) {
  std::vector<std::size_t> boxes(t.boxes().size()), wires(t.wire_count() - t.input().size());
  std::iota(boxes.begin(), boxes.end(), 0);
  std::iota(wires.begin(), wires.end(), 0);
  std::shuffle(boxes.begin(), boxes.end(), rng);
  std::shuffle(wires.begin(), wires.end(), rng);
  return tg_relabel(t, boxes, wires);
}

Word cat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void check_axioms(LawReport& r, const SignaturePtr& sig, Rng& rng, const std::string& key) {
  auto word = [&] { return random_word(*sig, 2, rng); };
  const Word A = word(), B = word(), C = word(), D = word();
  auto graph = [&](const Word& x, const Word& y) { return random_termgraph(sig, x, y, rng); };
  const auto s = graph(A, B), t = graph(B, C), u = graph(C, D), h = graph(C, A), k = graph(A, D);
  auto id = [&](const Word& w) { return tg_id(sig, w); };
  auto sym = [&](const Word& x, const Word& y) { return tg_symmetry(sig, x, y); };
  auto dup = [&](const Word& w) { return tg_dup(sig, w); };
  auto del = [&](const Word& w) { return tg_discharge(sig, w); };

  expect_tg(r.law("compose-associative"), tg_compose(u, tg_compose(t, s)), tg_compose(tg_compose(u, t), s), key);
  expect_tg(r.law("compose-unital"), tg_compose(id(B), s), s, key);
  expect_tg(r.law("compose-unital"), tg_compose(s, id(A)), s, key);
  expect_tg(r.law("tensor-associative"), tg_tensor(tg_tensor(s, t), u), tg_tensor(s, tg_tensor(t, u)), key);
  expect_tg(r.law("tensor-unital"), tg_tensor(id({}), s), s, key);
  expect_tg(r.law("tensor-unital"), tg_tensor(s, id({})), s, key);
  expect_tg(r.law("tensor-identity"), tg_tensor(id(A), id(B)), id(cat(A, B)), key);
  expect_tg(r.law("interchange"), tg_tensor(tg_compose(t, s), tg_compose(k, h)),
            tg_compose(tg_tensor(t, k), tg_tensor(s, h)), key);
  expect_tg(r.law("symmetry-natural"), tg_compose(sym(B, D), tg_tensor(s, u)),
            tg_compose(tg_tensor(u, s), sym(A, C)), key);
  expect_tg(r.law("symmetry-involutive"), tg_compose(sym(B, A), sym(A, B)), id(cat(A, B)), key);
  expect_tg(r.law("hexagon"), sym(A, cat(B, C)),
            tg_compose(tg_tensor(id(B), sym(A, C)), tg_tensor(sym(A, B), id(C))), key);
  expect_tg(r.law("coassociative"), tg_compose(tg_tensor(dup(A), id(A)), dup(A)),
            tg_compose(tg_tensor(id(A), dup(A)), dup(A)), key);
  expect_tg(r.law("cocommutative"), tg_compose(sym(A, A), dup(A)), dup(A), key);
  expect_tg(r.law("counital"), tg_compose(tg_tensor(id(A), del(A)), dup(A)), id(A), key);
  expect_tg(r.law("counital"), tg_compose(tg_tensor(del(A), id(A)), dup(A)), id(A), key);
  expect_tg(r.law("dup-multiplicative"), dup(cat(A, B)),
            tg_compose(tg_tensor(tg_tensor(id(A), sym(A, B)), id(B)), tg_tensor(dup(A), dup(B))), key);
  expect_tg(r.law("discharge-multiplicative"), del(cat(A, B)), tg_tensor(del(A), del(B)), key);
  expect_tg(r.law("unit-structure"), dup({}), id({}), key);
  expect_tg(r.law("unit-structure"), del({}), id({}), key);

  auto& gc = r.law("no-garbage-collection");
  auto discarded = tg_compose(del(B), s);
  if (discarded.boxes().size() == s.boxes().size())
    gc.pass();
  else
    gc.fail({"", {{"case", key}, {"s", to_string(s)}}, std::to_string(discarded.boxes().size()),
             std::to_string(s.boxes().size())});

  auto& agree = r.law("canonical-labeling-agrees-with-search");
  auto& relabel = r.law("canonical-labeling-relabel-invariant");
  auto& symmetric = r.law("tg-equal-symmetric");
  const auto composite = tg_compose(tg_compose(u, t), s);
  const auto other = graph(A, D);
  for (const auto& [x, y] : std::vector<std::pair<TermGraph, TermGraph>>{
           {composite, shuffled(composite, rng)}, {composite, other}, {s, graph(A, B)}}) {
    bool eq = tg_equal(x, y), search = tg_isomorphic_search(x, y);
    if (eq == search)
      agree.pass();
    else
      agree.fail({"", {{"case", key}, {"x", to_string(x)}, {"y", to_string(y)}}, eq ? "equal" : "unequal",
                  search ? "isomorphic" : "not isomorphic"});
    if (eq == tg_equal(y, x))
      symmetric.pass();
    else
      symmetric.fail({"", {{"case", key}, {"x", to_string(x)}, {"y", to_string(y)}}, "", ""});
  }
  for (const auto* g : {&s, &t, &composite})
    expect_tg(relabel, *g, shuffled(*g, rng), key);
}

template <GsModel M, class Sample>
TgAssignment<M> assign(const Signature& sig, const M& m, Rng& rng, Sample&& sample) {
  TgAssignment<M> a;
  std::uniform_int_distribution<std::size_t> size(1, 2);
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) a.sorts.push_back(size(rng));
  for (const auto& op : sig.ops)
    a.ops.push_back(sample(tg_word_object(m, a, op.in), tg_word_object(m, a, op.out)));
  return a;
}

}  // namespace

LawReport check_termgraph_suite(std::uint64_t cases, std::uint64_t seed) {
  LawReport axioms("termgraph-axioms"), rel("eval-finrel"), lift("eval-lifting");
  FinRelModel finrel({1, 2});
  KleisliModel lifting(LiftingMonad{}, {1, 2});
  for (std::uint64_t i = 0; i < cases; ++i) {
    const std::string key = "case " + std::to_string(i);
    Rng rng(derive_seed(seed, key));
    auto sig = random_signature(rng);
    check_axioms(axioms, sig, rng, key);

    const Word A = random_word(*sig, 2, rng), B = random_word(*sig, 2, rng), C = random_word(*sig, 2, rng);
    const auto s = random_termgraph(sig, A, B, rng), t = random_termgraph(sig, B, C, rng);
    const auto u = random_termgraph(sig, random_word(*sig, 2, rng), random_word(*sig, 2, rng), rng);
    auto ra = assign(*sig, finrel, rng, [&](std::size_t x, std::size_t y) { return random_rel(x, y, rng); });
    check_tg_eval_instance(rel, finrel, ra, s, t, u, key);
    auto la = assign(*sig, lifting, rng, [&](std::size_t x, std::size_t y) { return lifting.hom_sample(x, y, rng); });
    check_tg_eval_instance(lift, lifting, la, s, t, u, key);
  }
  LawReport r("termgraph");
  r.absorb(axioms, "axioms");
  r.absorb(rel, "finrel");
  r.absorb(lift, "lifting");
  std::vector<std::string> names;
  for (const auto& law : r.laws()) names.push_back(law.name);
  for (const auto& name : names) r.law(name).exhaustive = false;
  r.note(std::to_string(cases) + " seeded cases from seed " + std::to_string(seed));
  return r;
}

LawReport check_sharing_vs_copying(std::size_t max_size) {
  LawReport r("sharing-vs-copying");
  auto sig = std::make_shared<Signature>(Signature{{"A"}, {{"f", {0}, {0}}}});
  const auto f = tg_from_op(sig, 0);
  const auto sharing = tg_compose(tg_dup(sig, {0}), f);
  const auto copying = tg_compose(tg_tensor(f, f), tg_dup(sig, {0}));
  auto& distinct = r.law("graphs-distinct");
  if (!tg_equal(sharing, copying) && !tg_isomorphic_search(sharing, copying) && sharing.boxes().size() == 1 &&
      copying.boxes().size() == 2)
    distinct.pass();
  else
    distinct.fail({"", {}, to_string(sharing), to_string(copying)});

  auto run = [&](LawResult& law, const auto& m) {
    for (std::size_t n = 1; n <= max_size; ++n)
      for (std::uint64_t i = 0, total = *m.hom_size(n, n); i < total; ++i) {
        auto g = m.hom_at(n, n, i);
        using M = std::decay_t<decltype(m)>;
        TgAssignment<M> a{{n}, {g}};
        bool same = m.equal(tg_eval(sharing, m, a), tg_eval(copying, m, a));
        bool functional = is_functional(m, g);
        if (same == functional)
          law.pass();
        else
          law.fail({"", {{"f", m.describe(g)}}, same ? "values agree" : "values differ",
                    functional ? "functional" : "not functional"});
      }
  };
  FinRelModel finrel({1, 2, 3}, RelOrder::Inclusion, {4, 9});
  run(r.law("finrel-agree-iff-functional"), finrel);
  KleisliModel lifting(LiftingMonad{}, {1, 2, 3}, {4, 9});
  run(r.law("lifting-agree-iff-functional"), lifting);
  return r;
}

}  // namespace gsmon
