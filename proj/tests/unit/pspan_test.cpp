#include <doctest.h>

#include <set>

#include "gsmon/core/checks.hpp"
#include "gsmon/functor/checks.hpp"
#include "gsmon/pspan/kleisli_to_pspan.hpp"
#include "gsmon/pspan/model.hpp"

using namespace gsmon;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Multiset of (left, right) pairs, the isomorphism invariant of a span.
std::multiset<std::pair<std::size_t, std::size_t>> pair_multiset(const Span& s) {
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.apex(); ++i) out.insert({s.left()[i], s.right()[i]});
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  auto s = span_from_pairs(2, 1, {{1, 0}, {0, 0}});
  CHECK(s.left() == std::vector<std::size_t>{0, 1});
  CHECK(s.right() == std::vector<std::size_t>{0, 0});
  CHECK(span_id(3) == span_from_pairs(3, 3, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(span_from_pairs(2, 2, {{0, 1}, {1, 0}, {0, 1}}) == span_from_pairs(2, 2, {{0, 1}, {0, 1}, {1, 0}}));
  CHECK_THROWS_AS(span_from_pairs(2, 2, {{2, 0}}), DimensionMismatch);
  CHECK_THROWS_AS(Span(1, 1, {0}, {}), DimensionMismatch);
}

TEST_CASE("composition by pullback") {
  auto s = span_from_pairs(2, 2, {{0, 1}});
  auto t = span_of_function(2, 1, [](std::size_t) { return std::size_t{0}; });
  auto ts = span_compose(t, s);
  CHECK(ts == span_from_pairs(2, 1, {{0, 0}}));
  CHECK(span_compose(span_id(2), s) == s);
  CHECK(span_compose(s, span_id(2)) == s);
  CHECK_THROWS_AS(span_compose(span_id(3), s), DimensionMismatch);

  // set-builder oracle: apex {(a,b) : s.right(a) = t.left(b)}
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_span(2, 3, 4, rng);
    auto g = random_span(3, 2, 4, rng);
    std::multiset<std::pair<std::size_t, std::size_t>> expect;
    for (std::size_t a = 0; a < f.apex(); ++a)
      for (std::size_t b = 0; b < g.apex(); ++b)
        if (f.right()[a] == g.left()[b]) expect.insert({f.left()[a], g.right()[b]});
    CHECK(pair_multiset(span_compose(g, f)) == expect);
  }
  CHECK(span_dup(2) == span_from_pairs(2, 4, {{0, 0}, {1, 3}}));
  CHECK(span_tensor(span_from_pairs(2, 2, {{0, 1}}), span_from_pairs(1, 2, {{0, 0}, {0, 1}})) ==
        span_from_pairs(2, 4, {{0, 2}, {0, 3}}));
}

TEST_CASE("2-cells") {
  auto s = span_from_pairs(1, 1, {{0, 0}, {0, 0}});
  auto t = span_from_pairs(1, 1, {{0, 0}});
  CHECK(span_leq(s, t));
  CHECK(span_leq(t, s));
  CHECK_FALSE(s == t);
  auto a = span_from_pairs(2, 2, {{0, 0}});
  auto b = span_from_pairs(2, 2, {{1, 1}});
  CHECK_FALSE(span_leq(a, b));
  CHECK_FALSE(span_leq(b, a));
  CHECK_FALSE(span_leq_search(a, b));
  CHECK(span_leq_search(span_from_pairs(2, 2, {}), a));
  CHECK_THROWS_AS(span_leq(a, t), DimensionMismatch);
}

TEST_CASE("weak functionality and totality") {
  auto f = span_of_function(2, 3, [](std::size_t x) { return 2 - x; });
  CHECK(span_is_weakly_functional(f));
  CHECK(span_is_weakly_total(f));
  CHECK_FALSE(span_is_weakly_functional(span_from_pairs(2, 2, {{0, 0}, {0, 1}})));
  CHECK_FALSE(span_is_weakly_total(span_from_pairs(2, 1, {{0, 0}})));
}

TEST_CASE("span enumeration is a bijection onto canonical spans") {
  CHECK(span_count(1, 1, 4) == 5);
  CHECK(span_count(2, 2, 4) == 1 + 4 + 10 + 20 + 35);
  CHECK(span_count(1, 1, 0) == 1);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t i = 0; i < span_count(2, 3, 3); ++i) {
    auto s = span_at(2, 3, 3, i);
    CHECK(span_index(s, 3) == i);
    seen.insert(s.codes());
  }
  CHECK(seen.size() == span_count(2, 3, 3));
  CHECK_FALSE(span_index(span_from_pairs(1, 1, {{0, 0}, {0, 0}}), 1).has_value());
}

TEST_CASE("span fixtures") {
  auto s = span_from_json(nlohmann::json::parse(R"({"src":2,"tgt":2,"left":[1,0],"right":[0,0]})"));
  CHECK(s == span_from_pairs(2, 2, {{0, 0}, {1, 0}}));
  CHECK(to_json(s).dump() == R"({"src":2,"tgt":2,"left":[0,1],"right":[0,0]})");
  CHECK_THROWS_AS(span_from_json(nlohmann::json::parse(R"({"src":2,"tgt":2,"left":[5],"right":[0]})")),
                  FixtureError);
  CHECK_THROWS_AS(span_from_json(nlohmann::json::parse(R"({"src":2})")), FixtureError);
}

TEST_CASE("criteria cross-validation") {
  auto r = check_span_criteria({1, 2}, 4);
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.exhaustive());
}

TEST_CASE("PSpan is oplax cartesian") {
  PSpanModel m({1, 2}, 3, {4});
  CheckOptions opts;
  opts.budget = 2048;
  auto r = check_category_and_monoidal(m, opts);
  r.absorb(check_gs_axioms(m, opts));
  r.absorb(check_oplax_cartesian(m, opts));
  INFO(to_text(r));
  CHECK(r.passed());
  // spans 1 -> 1 are multisets over a point
  PSpanModel point({1}, 3);
  CHECK(point.hom_size(1, 1) == 4);
  CHECK(point.compose(point.hom_at(1, 1, 2), point.hom_at(1, 1, 3)).apex() == 6);
  PSpanModel empty({1, 2}, 0);
  CHECK(check_category_and_monoidal(empty).passed());
}

TEST_CASE("Kleisli to PSpan") {
  KleisliModel ik(IdentityMonad{}, {1, 2}, {4});
  auto itarget = kleisli_pspan_target(ik);
  auto I = kleisli_to_pspan(ik, itarget);
  auto strict = check_gs_functor(I, GsFlavor::Lax);
  INFO(to_text(strict));
  CHECK(strict.passed());
  CHECK(I.on_morphism(ik.identity(2)) == span_id(2));

  KleisliModel pk(PowersetMonad{}, {1, 2});
  auto ptarget = kleisli_pspan_target(pk);
  CHECK_THROWS_AS(kleisli_to_pspan(pk, ptarget), NotGsMonoidalMonad);

  KleisliModel wk(WriterMonad(2), {1, 2}, {4});
  auto wtarget = kleisli_pspan_target(wk);
  CHECK_THROWS_AS(kleisli_to_pspan(wk, wtarget), NotGsMonoidalMonad);
  auto W = kleisli_to_pspan(wk, wtarget, {}, false);
  CHECK(check_lax_monoidal(W).passed());
  CHECK_FALSE(check_gs_functor(W, GsFlavor::Lax).passed());
}
