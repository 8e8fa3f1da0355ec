#include <doctest.h>

#include <set>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/generated_preorder.hpp"
#include "gsmon/core/presentation.hpp"

using namespace gsmon;
using json = nlohmann::json;

namespace {

json one_object() {
  return json::parse(R"({
    "objects": ["I"], "unit": "I",
    "morphisms": [{"name": "id", "dom": "I", "cod": "I"}],
    "identity": {"I": "id"}, "leq": []
  })");
}

// The cartesian monoid {0,1} on one object under ⊗ = multiplication-free
// composition: a small non-trivial table with two endomorphisms of I.
json two_scalars() {
  return json::parse(R"({
    "objects": ["I"], "unit": "I",
    "morphisms": [{"name": "id", "dom": "I", "cod": "I"}, {"name": "z", "dom": "I", "cod": "I"}],
    "identity": {"I": "id"},
    "compose": [["z", "z", "z"]],
    "tensor_mor": [["z", "z", "z"]],
    "leq": [["z", "id"]]
  })");
}

}  // namespace

TEST_CASE("one-object presentation") {
  auto p = TablePresentation::from_json(one_object());
  auto r = check_category_and_monoidal(p);
  CHECK(r.passed());
  CHECK(r.find("associativity")->checked == 1);
  CHECK(check_gs_axioms(p).passed());
  CHECK(check_oplax_cartesian(p).passed());
}

TEST_CASE("two scalars") {
  auto p = TablePresentation::from_json(two_scalars());
  CHECK(check_category_and_monoidal(p).passed());
  CHECK(check_gs_axioms(p).passed());
  auto r = check_oplax_cartesian(p);
  CHECK(r.passed());
  auto z = p.morphism("z");
  CHECK(p.leq(z, p.identity(p.unit())));
  CHECK_FALSE(p.leq(p.identity(p.unit()), z));
  // z is not total: !∘z = z ≠ id
  CHECK_FALSE(is_total(p, z));
}

TEST_CASE("corrupted composition is reported with its triple") {
  auto j = two_scalars();
  j["compose"] = json::parse(R"([["z", "z", "id"]])");
  auto p = TablePresentation::from_json(j);
  auto r = check_category_and_monoidal(p);
  REQUIRE_FALSE(r.passed());
  const Witness* w = r.witness();
  REQUIRE(w);
  CHECK(w->law == "interchange");
  // re-evaluate
  auto get = [&](const std::string& role) {
    for (const auto& [k, v] : w->items)
      if (k == role) return p.morphism(v);
    FAIL("missing role");
    return MorphismId{};
  };
  auto f = get("f"), g = get("g"), h = get("h"), k = get("k");
  CHECK(p.tensor(p.compose(g, f), p.compose(k, h)) !=
        p.compose(p.tensor(g, k), p.tensor(f, h)));
}

TEST_CASE("malformed presentations") {
  auto j = one_object();
  j["identity"]["I"] = "nope";
  CHECK_THROWS_AS(TablePresentation::from_json(j), MalformedPresentation);
  auto k = two_scalars();
  k["morphisms"].push_back(json{{"name", "f"}, {"dom", "I"}, {"cod", "X"}});
  CHECK_THROWS_AS(TablePresentation::from_json(k), MalformedPresentation);
  auto l = one_object();
  l.erase("leq");
  auto p = TablePresentation::from_json(l);
  CHECK_THROWS_AS(check_oplax_cartesian(p), MissingPreorder);
}

TEST_CASE("leq closure on load") {
  auto j = json::parse(R"({
    "objects": ["I"], "unit": "I",
    "morphisms": [{"name": "a", "dom": "I", "cod": "I"}, {"name": "b", "dom": "I", "cod": "I"},
                  {"name": "c", "dom": "I", "cod": "I"}],
    "identity": {"I": "a"},
    "leq": [["a", "b"], ["b", "c"]]
  })");
  auto p = TablePresentation::from_json(j);
  CHECK(p.leq(p.morphism("a"), p.morphism("c")));
  CHECK(p.leq(p.morphism("c"), p.morphism("c")));
  CHECK_FALSE(p.leq(p.morphism("c"), p.morphism("a")));
}

TEST_CASE("visit enumerates exhaustively within budget and samples above it") {
  CheckOptions opts;
  opts.budget = 100;
  Space<int> ten{10, [](std::uint64_t i) { return static_cast<int>(i); },
                 [](Rng& r) { return static_cast<int>(r() % 10); }};
  LawResult law{"pairs"};
  std::set<std::pair<int, int>> seen;
  visit(law, opts, "k", [&](int a, int b) {
    seen.insert({a, b});
    law.pass();
  }, ten, ten);
  CHECK(seen.size() == 100);
  CHECK(law.exhaustive);

  LawResult big{"triples"};
  int calls = 0;
  visit(big, opts, "k", [&](int, int, int) {
    ++calls;
    big.pass();
  }, ten, ten, ten);
  CHECK(calls == 100);
  CHECK_FALSE(big.exhaustive);

  LawResult stop{"stop"};
  visit(stop, opts, "k", [&](int a) {
    if (a == 3)
      stop.fail({"", {{"a", "3"}}, "", ""});
    else
      stop.pass();
  }, ten);
  CHECK(stop.checked == 4);
}

TEST_CASE("sampling is deterministic in the seed") {
  CheckOptions opts;
  opts.budget = 5;
  Space<std::uint64_t> any{std::nullopt, nullptr, [](Rng& r) { return r(); }};
  std::vector<std::uint64_t> a, b, c;
  LawResult l1{"x"}, l2{"x"}, l3{"x"};
  visit(l1, opts, "k", [&](std::uint64_t v) { a.push_back(v); }, any);
  visit(l2, opts, "k", [&](std::uint64_t v) { b.push_back(v); }, any);
  opts.seed = 1;
  visit(l3, opts, "k", [&](std::uint64_t v) { c.push_back(v); }, any);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("report json") {
  LawReport r("demo");
  r.law("a").pass();
  r.law("b").fail({"", {{"f", "x"}}, "l", "r"});
  auto j = to_json(r);
  CHECK(j["verdict"] == "fail");
  CHECK(j["witness"]["law"] == "b");
  CHECK(j["checked_count"] == 2);
}

TEST_CASE("generated preorder of a cartesian presentation is equality") {
  auto p = TablePresentation::from_json(one_object());
  std::shared_ptr<const GeneratedPreorder<TablePresentation>> g;
  auto q = generate_oplax_preorder(p, {}, false, &g);
  CHECK(g->strict_pairs() == 0);
  CHECK(check_oplax_cartesian(q).passed());
}

TEST_CASE("generated preorder on two scalars relates z below id") {
  auto j = two_scalars();
  j.erase("leq");
  auto p = TablePresentation::from_json(j);
  std::shared_ptr<const GeneratedPreorder<TablePresentation>> g;
  auto q = generate_oplax_preorder(p, {}, false, &g);
  // generator: !_I z = z ≤ !_I = id
  CHECK(q.leq(p.morphism("z"), p.identity(p.unit())));
  CHECK_FALSE(q.leq(p.identity(p.unit()), p.morphism("z")));
  CHECK(g->strict_pairs() == 1);
  CHECK(check_oplax_cartesian(q).passed());
  // idempotent
  std::shared_ptr<const GeneratedPreorder<WithOrder<TablePresentation>>> g2;
  generate_oplax_preorder(q, {}, true, &g2);
  CHECK(g2->strict_pairs() == g->strict_pairs());
}
