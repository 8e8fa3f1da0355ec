#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gsmon/core/checks.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/termgraph/eval.hpp"
#include "gsmon/termgraph/suite.hpp"

using namespace gsmon;

namespace {

/// Sorts A, B; f: A -> B, g: A·A -> A, c: I -> A.
SignaturePtr small_signature() {
  return std::make_shared<Signature>(
      Signature{{"A", "B"}, {{"f", {0}, {1}}, {"g", {0, 0}, {0}}, {"c", {}, {0}}}});
}

}  // namespace

TEST_CASE("construction validates wires and sorts") {
  auto sig = small_signature();
  CHECK_NOTHROW(TermGraph(sig, {0}, {0, 1}, {{0, {0}, {1}}}, {1, 1}));
  CHECK_THROWS_AS(TermGraph(sig, {0}, {0, 0}, {{0, {0}, {1}}}, {1}), SortMismatch);
  CHECK_THROWS_AS(TermGraph(sig, {0}, {0, 1}, {}, {1}), InterfaceMismatch);
  CHECK_THROWS_AS(TermGraph(sig, {}, {0, 0}, {{1, {1, 1}, {0}}, {1, {0, 0}, {1}}}, {}), InterfaceMismatch);
  CHECK_THROWS_AS(tg_compose(tg_from_op(sig, 0), tg_from_op(sig, 0)), SortMismatch);
  CHECK_THROWS_AS(tg_compose(tg_from_op(sig, 1), tg_from_op(sig, 0)), InterfaceMismatch);
}

TEST_CASE("composition, tensor and discarding") {
  auto sig = small_signature();
  auto f = tg_from_op(sig, 0);
  CHECK(tg_equal(tg_compose(tg_id(sig, {1}), f), f));
  CHECK(tg_equal(tg_compose(f, tg_id(sig, {0})), f));
  auto dropped = tg_compose(tg_discharge(sig, {1}), f);
  CHECK(dropped.boxes().size() == 1);
  CHECK(dropped.outputs().empty());
  CHECK(dropped.consumer_count(1) == 0);
  CHECK(tg_unreachable_boxes(dropped) == std::vector<bool>{true});
  CHECK_FALSE(tg_equal(dropped, tg_discharge(sig, {0})));
  auto ff = tg_tensor(f, f);
  CHECK(ff.input() == Word{0, 0});
  CHECK(ff.output() == Word{1, 1});
  CHECK(ff.boxes().size() == 2);
}

TEST_CASE("sharing is not copying") {
  auto sig = small_signature();
  auto f = tg_from_op(sig, 0);
  auto shared = tg_compose(tg_dup(sig, {1}), f);
  auto copied = tg_compose(tg_tensor(f, f), tg_dup(sig, {0}));
  CHECK(shared.boxes().size() == 1);
  CHECK(copied.boxes().size() == 2);
  CHECK_FALSE(tg_equal(shared, copied));
  CHECK_FALSE(tg_isomorphic_search(shared, copied));
}

TEST_CASE("coassociativity canonicalizes to one wire read three times") {
  auto sig = small_signature();
  auto d = tg_dup(sig, {0});
  auto left = tg_compose(tg_tensor(d, tg_id(sig, {0})), d);
  auto right = tg_compose(tg_tensor(tg_id(sig, {0}), d), d);
  CHECK(tg_equal(left, right));
  CHECK(left.outputs() == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("canonical labeling") {
  auto sig = small_signature();
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto s = random_termgraph(sig, {0, 0}, {0, 1}, rng, 5);
    std::vector<std::size_t> boxes(s.boxes().size()), wires(s.wire_count() - 2);
    std::iota(boxes.begin(), boxes.end(), 0);
    std::iota(wires.begin(), wires.end(), 0);
    std::shuffle(boxes.begin(), boxes.end(), rng);
    std::shuffle(wires.begin(), wires.end(), rng);
    auto t = tg_relabel(s, boxes, wires);
    CHECK(tg_equal(s, t));
    CHECK(tg_certificate(s) == tg_certificate(t));
    auto u = random_termgraph(sig, {0, 0}, {0, 1}, rng, 5);
    CHECK(tg_equal(s, u) == tg_isomorphic_search(s, u));
    CHECK(tg_equal(s, u) == tg_equal(u, s));
  }
  // interchanging two identical boxes whose outputs go to different slots
  auto c = tg_from_op(sig, 2);
  auto two = tg_tensor(c, c);
  CHECK(tg_equal(two, tg_compose(tg_symmetry(sig, {0}, {0}), two)));
  CHECK_FALSE(tg_equal(tg_compose(tg_dup(sig, {0}), c), two));
}

TEST_CASE("term graph fixtures") {
  auto sig = small_signature();
  auto f = tg_compose(tg_dup(sig, {1}), tg_from_op(sig, 0));
  auto j = to_json(f);
  CHECK(j.dump() ==
        R"({"input":["A"],"wires":[{"sort":"A","producer":["in",0],"consumers":[["box",0,0]]},)"
        R"({"sort":"B","producer":["box",0,0],"consumers":[["out",0],["out",1]]}],)"
        R"("boxes":[{"op":"f","in":[0],"out":[1]}],"outputs":[1,1]})");
  CHECK(tg_equal(termgraph_from_json(sig, nlohmann::json::parse(j.dump())), f));
  auto bad = nlohmann::json::parse(j.dump());
  bad["wires"][1]["consumers"] = nlohmann::json::array();
  CHECK_THROWS_AS(termgraph_from_json(sig, bad), FixtureError);
  CHECK_THROWS_AS(termgraph_from_json(sig, nlohmann::json::parse(R"({"input":["Z"]})")), FixtureError);
  auto sj = to_json(*sig);
  CHECK(signature_from_json(nlohmann::json::parse(sj.dump())) == *sig);
}

TEST_CASE("evaluation into FinRel") {
  auto sig = std::make_shared<Signature>(Signature{{"A"}, {{"f", {0}, {0}}}});
  FinRelModel m({1, 2, 3}, RelOrder::Inclusion, {4, 9});
  auto R = Rel::from_pairs(2, 2, {{0, 0}, {0, 1}});
  TgAssignment<FinRelModel> a{{2}, {R}};
  CHECK(tg_eval(tg_id(sig, {0}), m, a) == rel_id(2));
  CHECK(tg_eval(tg_dup(sig, {0}), m, a) == rel_dup(2));
  CHECK(tg_eval(tg_from_op(sig, 0), m, a) == R);
  auto f = tg_from_op(sig, 0);
  auto shared = tg_compose(tg_dup(sig, {0}), f);
  auto copied = tg_compose(tg_tensor(f, f), tg_dup(sig, {0}));
  // shared: 0 -> {(0,0),(1,1)}; copied: 0 -> all of {0,1}²
  CHECK(tg_eval(shared, m, a) == Rel::from_pairs(2, 4, {{0, 0}, {0, 3}}));
  CHECK(tg_eval(copied, m, a) == Rel::from_pairs(2, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
  auto P = Rel::from_pairs(2, 2, {{0, 1}});
  TgAssignment<FinRelModel> p{{2}, {P}};
  CHECK(tg_eval(shared, m, p) == tg_eval(copied, m, p));
  CHECK_THROWS_AS(tg_eval(f, m, TgAssignment<FinRelModel>{{3}, {R}}), TypeMismatch);
  CHECK_THROWS_AS(tg_eval(f, m, TgAssignment<FinRelModel>{{2}, {}}), TypeMismatch);
}

TEST_CASE("layering tie-break") {
  auto sig = small_signature();
  auto c = tg_from_op(sig, 2);
  auto g = tg_tensor(tg_tensor(c, c), tg_from_op(sig, 0));
  CHECK(tg_layering(g) == std::vector<std::size_t>{0, 1, 2});
  CHECK(tg_layering(g, TieBreak::Greatest) == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("free model passes the generic gs checks") {
  auto sig = small_signature();
  TermGraphModel m(sig, {{0}, {1}, {0, 1}}, 2);
  CheckOptions opts;
  opts.budget = 3;
  auto r = check_category_and_monoidal(m, opts);
  r.absorb(check_gs_axioms(m, opts));
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK_THROWS_AS(check_oplax_cartesian(m, opts), MissingPreorder);
  // ∇ is not natural in the free model
  auto f = tg_from_op(sig, 0);
  CHECK_FALSE(is_functional(m, f));
  CHECK_FALSE(is_total(m, f));
  CHECK(is_total(m, tg_id(sig, {0})));
}

TEST_CASE("seeded suite") {
  auto r = check_termgraph_suite(100, 4);
  INFO(to_text(r));
  CHECK(r.passed());
  auto s = check_sharing_vs_copying(2);
  INFO(to_text(s));
  CHECK(s.passed());
}
