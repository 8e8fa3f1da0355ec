#include <doctest.h>

#include <set>

#include "gsmon/core/checks.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/functor/checks.hpp"
#include "gsmon/preord/finpreord.hpp"
#include "gsmon/preord/functors.hpp"
#include "gsmon/preord/model.hpp"

using namespace gsmon;

namespace {

bool failed(const LawReport& r, const std::string& law) {
  auto* l = r.find(law);
  return l && l->failed();
}

// Hypograph straight from the set-builder formula.
std::set<std::pair<std::size_t, std::size_t>> hyp_oracle(const MonotoneMap& f) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < f.src().size(); ++x)
    for (std::size_t y = 0; y < f.tgt().size(); ++y)
      if (f.tgt().leq(y, f.values()[x])) out.insert({x, y});
  return out;
}

}  // namespace

TEST_CASE("finite preorders") {
  auto c2 = FinPreord::chain(2);
  auto sq = preord_product(c2, c2);
  CHECK(sq.size() == 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          CHECK(sq.leq(a * 2 + b, c * 2 + d) == (a <= c && b <= d));
  CHECK(preord_terminal().size() == 1);
  CHECK(all_preorders(1).size() == 1);
  CHECK(all_preorders(2).size() == 4);
  CHECK(all_preorders(3).size() == 29);
  CHECK(FinPreord::closure(3, {{0, 1}, {1, 2}}).leq(0, 2));
  CHECK_THROWS_AS(FinPreord(2, {1, 0, 0, 0}), NotPreorder);
  CHECK_THROWS_AS(MonotoneMap(c2, c2, {1, 0}), NotMonotone);
  CHECK(all_monotone_maps(c2, c2).size() == 3);

  auto j = to_json(FinPreord::chain(3));
  CHECK(j.dump() == R"({"size":3,"leq_pairs":[[0,1],[0,2],[1,2]]})");
  CHECK(preord_from_json(nlohmann::json::parse(R"({"size":3,"leq_pairs":[[0,1],[1,2]]})")) ==
        FinPreord::chain(3));
}

TEST_CASE("pairing and projections") {
  auto c2 = FinPreord::chain(2);
  auto d2 = FinPreord::discrete(2);
  for (const auto& f : all_monotone_maps(d2, c2))
    for (const auto& g : all_monotone_maps(d2, c2)) {
      auto p = map_pairing(f, g);
      auto [pl, pr] = map_projections(c2, c2);
      for (std::size_t x = 0; x < 2; ++x) {
        CHECK(p(x) == f(x) * 2 + g(x));
        CHECK(pl(p(x)) == f(x));
        CHECK(pr(p(x)) == g(x));
      }
    }
}

TEST_CASE("hypograph examples") {
  auto c2 = FinPreord::chain(2);
  CHECK(hypograph(map_identity(c2)) == Rel::from_pairs(2, 2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(hypograph(map_identity(FinPreord::discrete(3))) == rel_id(3));
  CHECK(hypograph(MonotoneMap(c2, c2, {1, 1})) == Rel::full(2, 2));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : all_preorders(n))
      for (const auto& y : all_preorders(2))
        for (const auto& f : all_monotone_maps(x, y)) {
          auto v = hypograph(f).pairs();
          CHECK(std::set<std::pair<std::size_t, std::size_t>>(v.begin(), v.end()) == hyp_oracle(f));
        }
}

TEST_CASE("hypograph functoriality sweep") {
  auto r = check_hypograph_functoriality();
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.find("strict-composition")->checked > 10000);
}

TEST_CASE("hypograph is strict exactly on discrete fixtures") {
  FinRelModel rel({1});
  PreordModel disc({FinPreord::discrete(2), FinPreord::discrete(3)});
  CHECK(check_functor(hypograph_functor(disc, rel)).passed());
  PreordModel chain({FinPreord::chain(2)});
  CHECK(failed(check_functor(hypograph_functor(chain, rel)), "preserves-identity"));
}

TEST_CASE("Preord model is cartesian") {
  PreordModel m({FinPreord::chain(2), FinPreord::discrete(2), FinPreord::indiscrete(2)});
  auto c2 = preord_object(FinPreord::chain(2));
  CHECK(m.hom_size(c2, c2) == 3u);
  auto cat = check_category_and_monoidal(m);
  INFO(to_text(cat));
  CHECK(cat.passed());
  CHECK(check_gs_axioms(m).passed());
  CHECK(check_oplax_cartesian(m).passed());
  auto d2 = preord_object(FinPreord::discrete(2));
  CHECK(check_cartesian_product(m, c2, d2).passed());
  // ∇ is natural on the nose
  for (std::uint64_t i = 0; i < *m.hom_size(c2, d2); ++i) {
    auto f = m.hom_at(c2, d2, i);
    CHECK(m.equal(m.compose(m.dup(d2), f), m.compose(m.tensor(f, f), m.dup(c2))));
    CHECK(m.hom_index(f) == i);
  }
}

TEST_CASE("hom functor into Preord") {
  FinRelModel rel({1, 2, 4});
  PreordModel target;
  auto F = hom_functor_to_preord(rel, std::size_t{2}, target);
  for (std::size_t n : {1, 2, 4}) CHECK(F.on_object(n).size() == (std::uint64_t{1} << (2 * n)));
  auto F1 = hom_functor_to_preord(rel, std::size_t{1}, target);
  CHECK(F1.unit_lax().apply({}) == Point{*rel.hom_index(rel_id(1))});
  Rel f = Rel::from_pairs(2, 2, {{0, 1}});
  Rel g = Rel::from_pairs(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  Point out = F.laxator(2, 2).apply({*rel.hom_index(f), *rel.hom_index(g)});
  CHECK(rel.hom_at(2, 4, out[0]) == compose(rel_tensor(f, g), rel_dup(2)));

  CheckOptions opts;
  opts.budget = 256;
  for (std::size_t x : {1, 2}) {
    auto G = hom_functor_to_preord(rel, x, target);
    auto cart = check_colax_cartesian(G, opts);
    INFO(to_text(cart));
    CHECK(cart.passed());
    CHECK(check_oplaxator_lax_naturality(G, opts).passed());
    auto bicart = check_colax_bicartesian(G, opts);
    CHECK(failed(bicart, "oplaxator-natural"));
    CHECK_FALSE(failed(bicart, "bilax-braiding"));
    CHECK_FALSE(failed(bicart, "colax-op-dup"));
    CHECK_FALSE(failed(bicart, "colax-op-discharge"));
  }
}

TEST_CASE("completeness experiment") {
  FinRelModel rel({1, 2, 4});
  std::vector<std::pair<Rel, Rel>> pairs;
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}})
    for (std::uint64_t i = 0; i < *rel.hom_size(a, b); ++i)
      for (std::uint64_t j = 0; j < *rel.hom_size(a, b); ++j)
        pairs.emplace_back(rel.hom_at(a, b, i), rel.hom_at(a, b, j));
  auto r = completeness_experiment(rel, pairs);
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.find("yoneda-separation")->checked == 16 + 256);
}

TEST_CASE("hypograph after hom functor is lax on identities") {
  FinRelModel src({1, 2}, RelOrder::Inclusion, {4});
  FinRelModel rel({1});
  PreordModel mid;
  auto R = hypograph_functor(mid, rel);
  for (std::size_t x : {1, 2}) {
    auto C = hom_functor_to_preord(src, x, mid);
    auto RC = compose_functors(R, C);
    CheckOptions opts;
    opts.budget = 256;
    auto r = check_lax_on_identities(RC, opts, true);
    INFO(to_text(r));
    CHECK(r.passed());
  }
}
