#include <doctest.h>

#include "gsmon/finrel/model.hpp"
#include "gsmon/functor/checks.hpp"

using namespace gsmon;

namespace {

FunctorData<FinRelModel, FinRelModel> identity_functor(const FinRelModel& m) {
  FunctorData<FinRelModel, FinRelModel> F;
  F.source = &m;
  F.target = &m;
  F.name = "Id";
  F.on_object = [](std::size_t a) { return a; };
  F.on_morphism = [](const Rel& f) { return f; };
  F.laxator = [](std::size_t a, std::size_t b) { return rel_id(a * b); };
  F.unit_lax = [] { return rel_id(1); };
  F.oplaxator = [](std::size_t a, std::size_t b) { return rel_id(a * b); };
  F.unit_oplax = [] { return rel_id(1); };
  return F;
}

bool failed(const LawReport& r, const std::string& law) {
  auto* l = r.find(law);
  return l && l->failed();
}

}  // namespace

TEST_CASE("identity functor satisfies every flavor") {
  FinRelModel m({1, 2}, RelOrder::Inclusion, {4, 8, 16});
  auto F = identity_functor(m);
  for (auto flavor : {GsFlavor::Lax, GsFlavor::Oplax, GsFlavor::Strong, GsFlavor::Strict}) {
    auto r = check_gs_functor(F, flavor);
    INFO(to_text(r));
    CHECK(r.passed());
  }
  CHECK(check_bilax(F).passed());
  CHECK(check_colax_bicartesian(F).passed());
  CHECK(check_lax_on_identities(F, {}, true).passed());
  auto FF = compose_functors(F, F);
  CHECK(check_gs_functor(FF, GsFlavor::Strict).passed());
}

TEST_CASE("corrupted laxator is caught") {
  FinRelModel m({1, 2}, RelOrder::Inclusion, {4});
  auto F = identity_functor(m);
  F.laxator = [](std::size_t a, std::size_t b) { return Rel::full(a * b, a * b); };
  auto r = check_lax_monoidal(F);
  CHECK_FALSE(r.passed());
  CHECK(failed(r, "laxator-unit-left"));
  CHECK_FALSE(failed(r, "preserves-composition"));
  REQUIRE(r.witness());
  CHECK(r.witness()->lhs != r.witness()->rhs);
  // F(∇) ⊆ ψ∇ still holds with the full relation
  auto c = check_colax_cartesian(F);
  CHECK_FALSE(failed(c, "colax-dup"));
  CHECK_FALSE(failed(c, "colax-discharge"));
}

TEST_CASE("mistyped morphism map and missing structure") {
  FinRelModel m({1, 2}, RelOrder::Inclusion, {4});
  auto F = identity_functor(m);
  F.on_morphism = [](const Rel&) { return rel_id(1); };
  CHECK(failed(check_functor(F), "functor-typing"));
  auto G = identity_functor(m);
  G.laxator = nullptr;
  CHECK_THROWS_AS(check_lax_monoidal(G), MissingStructure);
  CHECK_THROWS_AS(check_bilax(G), MissingStructure);
}

TEST_CASE("non-monotone map fails monotonicity") {
  FinRelModel m({1, 2}, RelOrder::Inclusion, {4});
  auto F = identity_functor(m);
  // complement on 2 -> 2, identity elsewhere
  F.on_morphism = [](const Rel& f) {
    if (f.src() != 2 || f.tgt() != 2 || f == rel_id(2)) return f;
    Rel c(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (!f.get(i, j)) c.set(i, j);
    return c;
  };
  CHECK(failed(check_functor(F), "monotone"));
}
