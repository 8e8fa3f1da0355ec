#include <doctest.h>

#include <set>

#include "gsmon/core/adapters.hpp"
#include "gsmon/core/checks.hpp"
#include "gsmon/core/generated_preorder.hpp"
#include "gsmon/core/presentation.hpp"
#include "gsmon/finrel/model.hpp"

using namespace gsmon;

namespace {

// Set-of-pairs relations, evaluated straight from the definitions.
using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

Pairs as_set(const Rel& r) {
  auto v = r.pairs();
  return Pairs(v.begin(), v.end());
}

Pairs set_compose(const Pairs& s, const Pairs& r) {
  Pairs out;
  for (auto [a, b] : r)
    for (auto [c, d] : s)
      if (b == c) out.insert({a, d});
  return out;
}

Pairs set_tensor(const Pairs& r, std::size_t r_tgt, const Pairs& s, std::size_t s_src,
                 std::size_t s_tgt) {
  (void)r_tgt;
  Pairs out;
  for (auto [a, b] : r)
    for (auto [x, y] : s) out.insert({a * s_src + x, b * s_tgt + y});
  return out;
}

}  // namespace

TEST_CASE("relation examples") {
  Rel r = Rel::from_pairs(1, 2, {{0, 1}});
  Rel s = Rel::from_pairs(2, 1, {{1, 0}});
  CHECK(compose(s, r) == Rel::from_pairs(1, 1, {{0, 0}}));
  CHECK(rel_dup(2) == Rel::from_pairs(2, 4, {{0, 0}, {1, 3}}));
  CHECK(rel_leq(Rel(2, 3), Rel::full(2, 3)));
  CHECK(rel_leq(Rel(2, 3), Rel(2, 3)));
  CHECK_THROWS_AS(compose(r, r), DimensionMismatch);
}

TEST_CASE("partial function and totality predicates") {
  FinRelModel m({1, 2, 4}, RelOrder::Inclusion, {16});
  Rel two = Rel::from_pairs(2, 2, {{0, 0}, {0, 1}});
  CHECK_FALSE(is_partial_function(two));
  CHECK_FALSE(is_total_relation(two));
  CHECK_FALSE(is_functional(m, two));
  CHECK_FALSE(is_total(m, two));

  Rel partial = Rel::from_pairs(2, 2, {{0, 0}});
  CHECK(is_partial_function(partial));
  CHECK_FALSE(is_total_relation(partial));
  CHECK(is_functional(m, partial));
  CHECK_FALSE(is_total(m, partial));

  for (std::size_t n : {1, 2, 4}) {
    CHECK(is_functional(m, rel_id(n)));
    CHECK(is_total(m, rel_id(n)));
  }
}

TEST_CASE("dom examples") {
  FinRelModel m({1, 2, 4});
  CHECK(domain_of_definition(m, Rel::from_pairs(2, 2, {{0, 0}, {0, 1}})) ==
        Rel::from_pairs(2, 2, {{0, 0}}));
  CHECK(domain_of_definition(m, rel_id(2)) == rel_id(2));
  CHECK(domain_of_definition(m, Rel::from_pairs(2, 1, {{0, 0}, {1, 0}})) == rel_id(2));
  FinRelModel small({1, 2});
  CHECK_THROWS_AS(domain_of_definition(small, Rel(2, 1)), MissingObject);
}

TEST_CASE("as_presentation sizes and cap") {
  auto m = as_presentation({1, 2, 4});
  CHECK(*m.hom_size(2, 2) == 16);
  auto one = as_presentation({1});
  CHECK(one.objects().size() == 1);
  CHECK(*one.hom_size(1, 1) == 2);
  CHECK_THROWS_AS(as_presentation({1, 2, 4, 8}, 100), Infeasible);
}

TEST_CASE("composition, tensor and structure agree with the set oracle") {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3, d = 1 + rng() % 3;
    Rel f = random_rel(a, b, rng), g = random_rel(b, c, rng), h = random_rel(c, d, rng);
    CHECK(as_set(compose(g, f)) == set_compose(as_set(g), as_set(f)));
    CHECK(as_set(rel_tensor(f, h)) == set_tensor(as_set(f), b, as_set(h), c, d));
  }
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      Pairs sym;
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y) sym.insert({x * n + y, y * m + x});
      CHECK(as_set(rel_symmetry(m, n)) == sym);
    }
}

TEST_CASE("composition associative and unital on sizes up to 3") {
  Rng rng(11);
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      for (std::uint64_t i = 0; i < (1u << (a * b)); ++i) {
        Rel f = Rel::from_mask(a, b, i);
        CHECK(compose(rel_id(b), f) == f);
        CHECK(compose(f, rel_id(a)) == f);
        Rel g = random_rel(b, 2, rng), h = random_rel(2, 3, rng);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
      }
    }
}

TEST_CASE("FinRel fixture passes the generic checks") {
  auto m = as_presentation({1, 2, 4});
  CheckOptions opts;
  auto cat = check_category_and_monoidal(m, opts);
  INFO(to_text(cat));
  CHECK(cat.passed());
  auto gs = check_gs_axioms(m, opts);
  INFO(to_text(gs));
  CHECK(gs.passed());
  auto oplax = check_oplax_cartesian(m, opts);
  INFO(to_text(oplax));
  CHECK(oplax.passed());
}

TEST_CASE("reversed order is not oplax cartesian") {
  FinRelModel m({1, 2, 4}, RelOrder::Reversed);
  auto r = check_oplax_cartesian(m);
  REQUIRE_FALSE(r.passed());
  const Witness* w = r.witness();
  REQUIRE(w != nullptr);
  CHECK(w->law == "dup-lax-natural");
  // re-evaluate the witness: the first item is the morphism f
  CHECK(r.find("preorder-reflexive")->checked > 0);
}

TEST_CASE("trivial preorder: oplax cartesian only on the cartesian part") {
  FinRelModel m({1, 2}, RelOrder::Equality);
  CHECK_FALSE(check_oplax_cartesian(m).passed());
  for (std::uint64_t i = 0; i < 16; ++i) {
    Rel f = Rel::from_mask(2, 2, i);
    CHECK(is_weakly_total(m, f) == is_total(m, f));
  }
}

TEST_CASE("predicates agree with the equations on all relations of sizes up to 3") {
  FinRelModel m({1, 2, 3}, RelOrder::Inclusion, {4, 9});
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::uint64_t i = 0; i < (1u << (a * b)); ++i) {
        Rel f = Rel::from_mask(a, b, i);
        CHECK(is_partial_function(f) == is_functional(m, f));
        CHECK(is_total_relation(f) == is_total(m, f));
        CHECK(domain_of_definition(m, f) == rel_domain(f));
        CHECK(is_total(m, f) == (domain_of_definition(m, f) == rel_id(a)));
      }
}

TEST_CASE("structure maps are total and functional; both classes closed under composition") {
  FinRelModel m({1, 2, 3}, RelOrder::Inclusion, {4, 9, 16, 81});
  for (std::size_t a : {1, 2, 3}) {
    CHECK(is_total(m, m.dup(a)));
    CHECK(is_functional(m, m.dup(a)));
    CHECK(is_total(m, m.discharge(a)));
    CHECK(is_functional(m, m.discharge(a)));
  }
  for (std::uint64_t i = 0; i < 512; ++i)
    for (std::uint64_t j = 0; j < 512; j += 7) {
      Rel f = Rel::from_mask(3, 3, i), g = Rel::from_mask(3, 3, j);
      if (is_total_relation(f) && is_total_relation(g)) CHECK(is_total_relation(compose(g, f)));
      if (is_partial_function(f) && is_partial_function(g))
        CHECK(is_partial_function(compose(g, f)));
    }
}

TEST_CASE("dom propositions on FinRel up to size 3") {
  FinRelModel m({1, 2, 3}, RelOrder::Inclusion, {4, 9});
  auto r = check_dom_propositions(m);
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.exhaustive());
  CHECK(r.find("restriction-equivalent") != nullptr);
}

TEST_CASE("weak products in FinRel") {
  FinRelModel m({1, 2, 4}, RelOrder::Inclusion, {16});
  auto r = check_weak_product(m, 2, 2);
  INFO(to_text(r));
  CHECK(r.passed());

  // not a product over all relations
  CHECK_FALSE(check_cartesian_product(m, 2, 2).passed());

  Rel f = Rel::from_pairs(1, 2, {{0, 0}, {0, 1}});
  FinRelModel fx({1, 2}, RelOrder::Inclusion, {4});
  auto pair = mediator_pair(fx, f);
  CHECK(pair.same_projections);
  CHECK(pair.distinct);
}

TEST_CASE("uniqueness of the structure up to equivalence") {
  FinRelModel m({1, 2, 4});
  auto r = check_dup_discharge_uniqueness(
      m, [&](std::size_t a) { return m.dup(a); }, [&](std::size_t a) { return m.discharge(a); });
  CHECK(r.passed());
}

TEST_CASE("materialized FinRel agrees with the lazy model") {
  FinRelModel m({1, 2});
  auto p = TablePresentation::materialize(m);
  CHECK(p.morphism_count() == 2 + 4 + 4 + 16);
  CHECK(check_category_and_monoidal(p).passed());
  CHECK(check_gs_axioms(p).passed());
  CHECK(check_oplax_cartesian(p).passed());
  auto round = TablePresentation::from_json(p.to_json());
  CHECK(round.to_json() == p.to_json());
}

TEST_CASE("empty dup fails counitality") {
  FinRelModel base({1, 2, 4});
  WithStructure<FinRelModel> m(
      base, [](std::size_t a) { return a == 2 ? Rel(2, 4) : rel_dup(a); }, nullptr);
  auto r = check_gs_axioms(m);
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness()->law.rfind("counitality", 0) == 0);
}

TEST_CASE("generated preorder on the FinRel fixture") {
  FinRelModel m({1, 2, 4});
  std::shared_ptr<const GeneratedPreorder<FinRelModel>> g;
  auto q = generate_oplax_preorder(m, {}, false, &g);
  CHECK(g->strict_pairs() > 0);
  auto contained = check_contains_generated(m, *g);
  INFO(to_text(contained));
  CHECK(contained.passed());
  // the reversed order does not contain it
  FinRelModel rev({1, 2, 4}, RelOrder::Reversed);
  CHECK_FALSE(check_contains_generated(rev, *g).passed());
  // idempotent on a smaller fixture
  FinRelModel small({1, 2});
  std::shared_ptr<const GeneratedPreorder<FinRelModel>> gs;
  auto qs = generate_oplax_preorder(small, {}, false, &gs);
  std::shared_ptr<const GeneratedPreorder<WithOrder<FinRelModel>>> gs2;
  generate_oplax_preorder(qs, {}, true, &gs2);
  CHECK(gs2->strict_pairs() == gs->strict_pairs());
  CHECK(check_oplax_cartesian(qs).passed());
}
