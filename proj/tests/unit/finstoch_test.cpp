#include <doctest.h>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/finstoch/stoch.hpp"

using namespace gsmon;

namespace {

StochMatrix mat(std::size_t src, std::size_t tgt, std::vector<Rational> entries) {
  RatMatrix m(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(tgt));
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(static_cast<Eigen::Index>(i / tgt), static_cast<Eigen::Index>(i % tgt)) = entries[i];
  return StochMatrix(std::move(m));
}

const Rational half(1, 2);

}  // namespace

TEST_CASE("row sums are validated exactly") {
  CHECK_NOTHROW(mat(1, 3, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  CHECK_THROWS_AS(mat(1, 2, {half, Rational(1, 3)}), RowSumViolation);
  CHECK_THROWS_AS(mat(1, 2, {Rational(3, 2), -half}), RowSumViolation);
}

TEST_CASE("composition and tensor") {
  auto f = mat(1, 2, {0, 1});
  auto g = mat(2, 2, {half, half, 0, 1});
  CHECK(stoch_compose(g, f) == mat(1, 2, {0, 1}));
  CHECK(stoch_compose(g, mat(1, 2, {1, 0})) == mat(1, 2, {half, half}));
  CHECK_THROWS_AS(stoch_compose(f, f), DimensionMismatch);
  // Kronecker under row-major pairing
  CHECK(stoch_tensor(mat(1, 2, {half, half}), mat(1, 2, {0, 1})) == mat(1, 4, {0, half, 0, half}));
  CHECK(stoch_dup(2) == mat(2, 4, {1, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(stoch_symmetry(1, 2) == stoch_id(2));
}

TEST_CASE("support") {
  auto f = mat(2, 2, {1, 0, half, half});
  CHECK(support(f) == Rel::from_pairs(2, 2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(support_leq(mat(2, 2, {1, 0, 1, 0}), f));
  CHECK_FALSE(support_leq(f, mat(2, 2, {1, 0, 1, 0})));
  auto u = uniform_on_rows(Rel::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}}));
  CHECK(u == mat(2, 3, {half, 0, half, 0, 1, 0}));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto s = random_stoch(2, 3, rng);
    CHECK(support_leq(s, random_stoch_above(s, rng)));
  }
}

TEST_CASE("small denominator enumeration") {
  CHECK(small_denominator_matrices(1, 2).size() == 5);
  CHECK(small_denominator_matrices(2, 2).size() == 25);
  CHECK(small_denominator_matrices(1, 1).size() == 1);
}

TEST_CASE("stochastic fixtures") {
  auto f = stoch_from_json(nlohmann::json::parse(R"({"src":1,"tgt":2,"rows":[["1/2","1/2"]]})"));
  CHECK(f == mat(1, 2, {half, half}));
  CHECK(to_json(f).dump() == R"({"src":1,"tgt":2,"rows":[["1/2","1/2"]]})");
  CHECK_THROWS_AS(stoch_from_json(nlohmann::json::parse(R"({"src":1,"tgt":2,"rows":[["1"]]})")), FixtureError);
  CHECK_THROWS_AS(stoch_from_json(nlohmann::json::parse(R"({"src":1,"tgt":2,"rows":[["1/2","1/3"]]})")),
                  RowSumViolation);
}

TEST_CASE("FinStoch axioms") {
  FinStochModel m({1, 2}, {4});
  CheckOptions opts;
  opts.budget = 256;
  auto r = check_category_and_monoidal(m, opts);
  r.absorb(check_gs_axioms(m, opts));
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK_FALSE(r.exhaustive());
  CHECK_THROWS_AS(m.hom_at(1, 2, 0), Infeasible);
}

TEST_CASE("support comparison") {
  auto r = check_support_oplax(100, 2);
  INFO(to_text(r));
  CHECK(r.passed());
}
