#include <doctest.h>

#include "gsmon/core/checks.hpp"
#include "gsmon/functor/checks.hpp"
#include "gsmon/monads/checks.hpp"
#include "gsmon/monads/kleisli.hpp"

using namespace gsmon;

namespace {

bool failed(const LawReport& r, const std::string& law) {
  auto* l = r.find(law);
  return l && l->failed();
}

/// Powerset with μ broken on the subset {0, 1} of T(2).
struct CorruptedPowerset : PowersetMonad {
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const {
    Value out = PowersetMonad::bind(v, m, n, k);
    return m == 2 && v == 0b11 ? out & ~Value{1} : out;
  }
};

}  // namespace

TEST_CASE("powerset operations match set-builder evaluation") {
  PowersetMonad p;
  // k(0) = {1}, k(1) = {0, 2}
  std::vector<std::uint64_t> k{0b010, 0b101};
  CHECK(p.bind(0b11, 2, 3, [&](std::size_t x) { return k[x]; }) == 0b111);
  CHECK(p.bind(0b01, 2, 3, [&](std::size_t x) { return k[x]; }) == 0b010);
  CHECK(p.bind(0, 2, 3, [&](std::size_t x) { return k[x]; }) == 0);
  // {0,1} × {1} in T(2·2): pairs (0,1), (1,1) -> indices 1, 3
  CHECK(p.pair(0b11, 2, 0b10, 2) == 0b1010);
  CHECK(p.map(0b110, 3, 2, [](std::size_t x) { return x % 2; }) == 0b11);
  CHECK(p.show(0b101) == "{0,2}");
  CHECK(p.value_count(3) == 8u);
  CHECK_THROWS_AS(p.pair(1, 9, 1, 9), Infeasible);
}

TEST_CASE("lifting, multiset, distribution and writer operations") {
  LiftingMonad l;
  CHECK(l.bind(LiftingMonad::kBottom, 2, 2, [](std::size_t) { return std::int64_t{1}; }) ==
        LiftingMonad::kBottom);
  CHECK(l.pair(1, 2, 0, 3) == 3);
  CHECK(l.pair(1, 2, LiftingMonad::kBottom, 3) == LiftingMonad::kBottom);
  CHECK(l.leq(LiftingMonad::kBottom, 0));
  CHECK_FALSE(l.leq(0, 1));

  MultisetMonad ms;
  // 2·x0 + 1·x1, k(x0) = 3·y0, k(x1) = y0 + y1
  MultisetMonad::Value v{2, 1};
  std::vector<MultisetMonad::Value> k{{3, 0}, {1, 1}};
  CHECK(ms.bind(v, 2, 2, [&](std::size_t x) { return k[x]; }) == MultisetMonad::Value{7, 1});
  CHECK(ms.pair({2}, 1, {3}, 1) == MultisetMonad::Value{6});
  CHECK_THROWS_AS(ms.pair({UINT64_MAX}, 1, {2}, 1), ArithmeticOverflow);

  DistributionMonad d;
  DistributionMonad::Value half{Rational(1, 2), Rational(1, 2)};
  auto dd = d.pair(half, 2, half, 2);
  CHECK(dd.size() == 4);
  CHECK(dd[3] == Rational(1, 4));
  CHECK(d.valid(4, dd));
  CHECK_FALSE(d.valid(2, {Rational(1, 2), Rational(1, 3)}));

  // f♯(x) = (1, y), g♯(y) = (1, z) over Z/2 gives (g∘f)♯(x) = (0, z)
  WriterMonad w(2);
  auto gf = w.bind({1, 0}, 1, 1, [](std::size_t) { return WriterMonad::Value{1, 0}; });
  CHECK(gf == WriterMonad::Value{0, 0});
  CHECK(w.pair({1, 1}, 2, {1, 0}, 3) == WriterMonad::Value{0, 3});
  CHECK(WriterMonad(3).pair({2, 0}, 1, {2, 0}, 1) == WriterMonad::Value{1, 0});
}

TEST_CASE("monads by name and value JSON round trip") {
  for (const auto& name : monad_names()) {
    auto m = monad_by_name(name);
    std::visit([&](const auto& t) {
      CHECK(t.name() == name);
      Rng rng(1);
      for (int i = 0; i < 20; ++i) {
        auto v = t.value_sample(3, rng);
        CHECK(t.valid(3, v));
        CHECK(t.from_json(t.to_json(v), 3) == v);
      }
    }, m);
  }
  CHECK(std::get<WriterMonad>(monad_by_name("writer-z5")).order() == 5);
  CHECK_THROWS_AS(monad_by_name("writer-z"), FixtureError);
  CHECK_THROWS_AS(monad_by_name("giry"), FixtureError);
  CHECK_THROWS_AS(PowersetMonad{}.from_json(8, 3), FixtureError);
  CHECK_THROWS_AS(DistributionMonad{}.from_json(nlohmann::json{"1/2"}, 1), FixtureError);
}

TEST_CASE("every built-in monad satisfies the commutative monad laws") {
  for (const auto& name : monad_names()) {
    auto m = monad_by_name(name);
    std::visit([&](const auto& t) {
      auto r = check_monad_laws(t, 3);
      INFO(name << "\n" << to_text(r));
      CHECK(r.passed());
    }, m);
  }
}

TEST_CASE("a corrupted multiplication is caught with a witness") {
  auto r = check_monad_laws(CorruptedPowerset{}, 2);
  CHECK_FALSE(r.passed());
  REQUIRE(r.witness() != nullptr);
  CHECK(failed(r, "mu-unit-right"));
}

TEST_CASE("value orders are compatible for powerset and lifting") {
  CHECK(check_value_order(PowersetMonad{}, 3).passed());
  CHECK(check_value_order(LiftingMonad{}, 3).passed());
  CHECK(check_value_order(NonemptyPowersetMonad{}, 3).passed());
}

TEST_CASE("gs-monoidal monads") {
  CHECK(check_gs_monoidal_monad(IdentityMonad{}, 3).passed());

  auto p = check_gs_monoidal_monad(PowersetMonad{}, 3);
  CHECK(failed(p, "T-dup"));
  // T(∇)({0,1}) = {(0,0),(1,1)} against {0,1}×{0,1}
  CHECK(PowersetMonad{}.map(0b11, 2, 4, [](std::size_t x) { return x * 2 + x; }) == 0b1001);
  CHECK(PowersetMonad{}.pair(0b11, 2, 0b11, 2) == 0b1111);

  auto l = check_gs_monoidal_monad(LiftingMonad{}, 2);
  CHECK(failed(l, "T-discharge"));
  REQUIRE(l.find("T-discharge")->witness);
  CHECK(l.find("T-discharge")->witness->lhs == "⊥");

  CHECK(failed(check_gs_monoidal_monad(MultisetMonad{}, 2), "T-dup"));
}

TEST_CASE("writer monad over a nontrivial group is not gs-monoidal") {
  for (std::uint32_t k : {2u, 3u}) {
    WriterMonad w(k);
    auto r = check_gs_monoidal_monad(w, 3);
    CHECK(failed(r, "T-dup"));
    CHECK(failed(r, "T-discharge"));
    // T(!)(1, x) keeps the group element; η_I ! forgets it
    CHECK(w.map({1, 0}, 1, 1, [](std::size_t) { return std::size_t{0}; }) == WriterMonad::Value{1, 0});
    CHECK(w.unit(1, 0) == WriterMonad::Value{0, 0});
  }
  CHECK(check_gs_monoidal_monad(WriterMonad(1), 3).passed());
}

TEST_CASE("colax cartesian monads") {
  CHECK(check_colax_cartesian_monad(PowersetMonad{}, 3).passed());
  CHECK(check_colax_cartesian_monad(NonemptyPowersetMonad{}, 3).passed());
  CHECK(check_colax_cartesian_monad(LiftingMonad{}, 3).passed());
  CHECK(check_colax_cartesian_monad(IdentityMonad{}, 3).passed());
  CHECK(failed(check_colax_cartesian_monad(MultisetMonad{}, 2), "T-dup-leq"));
  CHECK_FALSE(check_colax_cartesian_monad(WriterMonad(2), 2).passed());
}

TEST_CASE("Kleisli categories are gs-monoidal") {
  CheckOptions opts;
  opts.budget = 512;
  for (const auto& name : monad_names()) {
    auto m = monad_by_name(name);
    std::visit([&](const auto& t) {
      KleisliModel k(t, {1, 2, 3}, {4, 6, 9});
      auto r = check_category_and_monoidal(k, opts);
      r.absorb(check_gs_axioms(k, opts));
      r.absorb(check_dup_alternative(k));
      INFO(name << "\n" << to_text(r));
      CHECK(r.passed());
    }, m);
  }
}

TEST_CASE("Kleisli order is oplax cartesian exactly for colax cartesian monads") {
  CheckOptions opts;
  opts.budget = 512;
  KleisliModel pk(PowersetMonad{}, {1, 2}, {4});
  CHECK(check_oplax_cartesian(pk, opts).passed());
  KleisliModel lk(LiftingMonad{}, {1, 2}, {4});
  CHECK(check_oplax_cartesian(lk, opts).passed());
  KleisliModel mk(MultisetMonad{}, {1, 2}, {4});
  CHECK_FALSE(check_oplax_cartesian(mk, opts).passed());
}

TEST_CASE("Kleisli comparisons with FinRel") {
  CheckOptions opts;
  opts.budget = 1024;
  auto p = check_powerset_is_rel({1, 2, 3}, opts);
  INFO(to_text(p));
  CHECK(p.passed());
  auto n = check_nonempty_is_total({1, 2, 3}, opts);
  INFO(to_text(n));
  CHECK(n.passed());
  auto l = check_lifting_is_partial({1, 2, 3}, opts);
  INFO(to_text(l));
  CHECK(l.passed());
  CHECK(powerset_table_to_rel(2, 2, {0b01, 0b11}) == Rel::from_pairs(2, 2, {{0, 0}, {1, 0}, {1, 1}}));
}

TEST_CASE("multiset scalars square under dom") {
  auto r = check_multiset_scalar_square(10);
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.find("scalar-square")->checked == 11);
}

TEST_CASE("F_T is strict and colax cartesian; G_T is lax monoidal") {
  auto base = discrete_base({1, 2});
  KleisliModel pk(PowersetMonad{}, {1, 2}, {4});
  auto F = kleisli_F_T(base, pk);
  auto fs = check_gs_functor(F, GsFlavor::Strict);
  INFO(to_text(fs));
  CHECK(fs.passed());
  CHECK(check_colax_cartesian(F).passed());

  auto target = kleisli_value_model(pk);
  auto G = kleisli_G_T(pk, target);
  auto lax = check_lax_monoidal(G);
  INFO(to_text(lax));
  CHECK(lax.passed());
  auto gs = check_gs_functor(G, GsFlavor::Lax);
  CHECK(failed(gs, "gs-lax-dup"));
  CHECK(check_colax_cartesian(G).passed());

  KleisliModel ik(IdentityMonad{}, {1, 2}, {4});
  auto itarget = kleisli_value_model(ik);
  CHECK(check_gs_functor(kleisli_G_T(ik, itarget), GsFlavor::Lax).passed());
  CHECK(check_gs_functor(kleisli_F_T(base, ik), GsFlavor::Strict).passed());
}

TEST_CASE("Kleisli morphism fixtures") {
  KleisliModel wk(WriterMonad(2), {1, 2});
  KleisliMorphism<WriterMonad::Value> f{2, 2, {{1, 1}, {0, 0}}};
  auto j = wk.to_json(f);
  CHECK(j.dump() == R"({"monad":"writer-z2","src":2,"tgt":2,"table":[[1,1],[0,0]]})");
  CHECK(wk.from_json(j) == f);
  KleisliModel lk(LiftingMonad{}, {1, 2});
  auto g = lk.from_json(nlohmann::json::parse(R"({"monad":"lifting","src":2,"tgt":1,"table":[null,0]})"));
  CHECK(g.table == std::vector<std::int64_t>{-1, 0});
  CHECK_THROWS_AS(lk.from_json(nlohmann::json::parse(R"({"monad":"powerset","src":1,"tgt":1,"table":[1]})")),
                  FixtureError);
  CHECK_THROWS_AS(lk.from_json(nlohmann::json::parse(R"({"monad":"lifting","src":2,"tgt":1,"table":[0]})")),
                  FixtureError);
  CHECK_THROWS_AS(lk.from_json(nlohmann::json::parse(R"({"monad":"lifting","src":1,"tgt":1,"table":[3]})")),
                  FixtureError);
}
