#include "gsmon/finstoch/stoch.hpp"

#include <algorithm>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/functor/checks.hpp"

namespace gsmon {

StochMatrix::StochMatrix(RatMatrix m) : m_(std::move(m)) {
  for (Eigen::Index x = 0; x < m_.rows(); ++x) {
    Rational sum = 0;
    for (Eigen::Index y = 0; y < m_.cols(); ++y) {
      if (m_(x, y) < Rational(0))
        throw RowSumViolation("negative entry " + m_(x, y).str() + " in row " + std::to_string(x));
      sum += m_(x, y);
    }
    if (sum != Rational(1))
      throw RowSumViolation("row " + std::to_string(x) + " sums to " + sum.str());
  }
}

StochMatrix StochMatrix::from_function(std::size_t src, std::size_t tgt, const std::vector<std::size_t>& f) {
  RatMatrix m = RatMatrix::Constant(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(tgt), Rational(0));
  for (std::size_t x = 0; x < src; ++x) {
    if (f[x] >= tgt) throw DimensionMismatch("function value out of range");
    m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(f[x])) = 1;
  }
  return StochMatrix(std::move(m));
}

bool StochMatrix::operator==(const StochMatrix& o) const {
  return m_.rows() == o.m_.rows() && m_.cols() == o.m_.cols() && m_ == o.m_;
}

StochMatrix stoch_compose(const StochMatrix& g, const StochMatrix& f) {
  if (f.tgt() != g.src())
    throw DimensionMismatch("stoch compose: " + std::to_string(f.tgt()) + " vs " + std::to_string(g.src()));
  return StochMatrix(f.matrix().lazyProduct(g.matrix()));
}

StochMatrix stoch_tensor(const StochMatrix& f, const StochMatrix& g) {
  const auto fs = f.matrix().rows(), ft = f.matrix().cols();
  const auto gs = g.matrix().rows(), gt = g.matrix().cols();
  RatMatrix m(fs * gs, ft * gt);
  for (Eigen::Index x1 = 0; x1 < fs; ++x1)
    for (Eigen::Index y1 = 0; y1 < ft; ++y1)
      m.block(x1 * gs, y1 * gt, gs, gt) = f.matrix()(x1, y1) * g.matrix().array();
  return StochMatrix(std::move(m));
}

namespace {

StochMatrix of_function(std::size_t src, std::size_t tgt, auto&& f) {
  std::vector<std::size_t> v(src);
  for (std::size_t x = 0; x < src; ++x) v[x] = f(x);
  return StochMatrix::from_function(src, tgt, v);
}

RatMatrix zeros(std::size_t r, std::size_t c) {
  return RatMatrix::Constant(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), Rational(0));
}

StochMatrix normalized(RatMatrix w) {
  for (Eigen::Index x = 0; x < w.rows(); ++x) {
    Rational sum = 0;
    for (Eigen::Index y = 0; y < w.cols(); ++y) sum += w(x, y);
    for (Eigen::Index y = 0; y < w.cols(); ++y) w(x, y) /= sum;
  }
  return StochMatrix(std::move(w));
}

}  // namespace

StochMatrix stoch_id(std::size_t n) {
  return of_function(n, n, [](std::size_t x) { return x; });
}

StochMatrix stoch_symmetry(std::size_t m, std::size_t n) {
  return of_function(m * n, n * m, [m, n](std::size_t i) { return (i % n) * m + i / n; });
}

StochMatrix stoch_dup(std::size_t n) {
  return of_function(n, n * n, [n](std::size_t x) { return x * n + x; });
}

StochMatrix stoch_discharge(std::size_t n) {
  return of_function(n, 1, [](std::size_t) { return std::size_t{0}; });
}

Rel support(const StochMatrix& f) {
  Rel r(f.src(), f.tgt());
  for (std::size_t x = 0; x < f.src(); ++x)
    for (std::size_t y = 0; y < f.tgt(); ++y)
      if (!f(x, y).is_zero()) r.set(x, y);
  return r;
}

bool support_leq(const StochMatrix& f, const StochMatrix& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt()) return false;
  return support(f).subset_of(support(g));
}

StochMatrix uniform_on_rows(const Rel& r) {
  RatMatrix w = zeros(r.src(), r.tgt());
  for (std::size_t x = 0; x < r.src(); ++x)
    for (std::size_t y = 0; y < r.tgt(); ++y)
      if (r.get(x, y)) w(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1;
  return normalized(std::move(w));
}

StochMatrix random_stoch(std::size_t src, std::size_t tgt, Rng& rng) {
  if (tgt == 0 && src > 0) throw Infeasible("no stochastic maps into the empty set");
  RatMatrix w = zeros(src, tgt);
  std::uniform_int_distribution<std::int64_t> weight(0, 3);
  for (std::size_t x = 0; x < src; ++x) {
    bool zero = true;
    while (zero)
      for (std::size_t y = 0; y < tgt; ++y) {
        auto v = weight(rng);
        w(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = v;
        if (v) zero = false;
      }
  }
  return normalized(std::move(w));
}

StochMatrix random_stoch_above(const StochMatrix& f, Rng& rng) {
  RatMatrix w = zeros(f.src(), f.tgt());
  std::uniform_int_distribution<std::int64_t> any(0, 3), positive(1, 3);
  for (std::size_t x = 0; x < f.src(); ++x)
    for (std::size_t y = 0; y < f.tgt(); ++y)
      w(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = f(x, y).is_zero() ? any(rng) : positive(rng);
  return normalized(std::move(w));
}

std::vector<StochMatrix> small_denominator_matrices(std::size_t src, std::size_t tgt) {
  const std::vector<Rational> vals{0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1};
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> idx(tgt, 0);
  for (;;) {
    Rational sum = 0;
    std::vector<Rational> row;
    for (auto i : idx) {
      row.push_back(vals[i]);
      sum += vals[i];
    }
    if (sum == Rational(1)) rows.push_back(row);
    std::size_t k = 0;
    while (k < tgt && ++idx[k] == vals.size()) idx[k++] = 0;
    if (k == tgt) break;
  }
  std::vector<StochMatrix> out;
  std::vector<std::size_t> pick(src, 0);
  if (rows.empty() && src > 0) return out;
  for (;;) {
    RatMatrix m(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(tgt));
    for (std::size_t x = 0; x < src; ++x)
      for (std::size_t y = 0; y < tgt; ++y)
        m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = rows[pick[x]][y];
    out.emplace_back(std::move(m));
    std::size_t k = 0;
    while (k < src && ++pick[k] == rows.size()) pick[k++] = 0;
    if (k == src) break;
  }
  return out;
}

std::string to_string(const StochMatrix& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.src(); ++x) {
    s += x ? ",[" : "[";
    for (std::size_t y = 0; y < f.tgt(); ++y) s += (y ? "," : "") + f(x, y).str();
    s += "]";
  }
  return s + "]";
}

nlohmann::ordered_json to_json(const StochMatrix& f) {
  nlohmann::ordered_json j;
  j["src"] = f.src();
  j["tgt"] = f.tgt();
  j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < f.src(); ++x) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t y = 0; y < f.tgt(); ++y) row.push_back(f(x, y).str());
    j["rows"].push_back(row);
  }
  return j;
}

StochMatrix stoch_from_json(const nlohmann::json& j) {
  try {
    auto src = j.at("src").get<std::size_t>(), tgt = j.at("tgt").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != src) throw FixtureError("matrix needs " + std::to_string(src) + " rows");
    RatMatrix m(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(tgt));
    for (std::size_t x = 0; x < src; ++x) {
      if (!rows[x].is_array() || rows[x].size() != tgt)
        throw FixtureError("row " + std::to_string(x) + " needs " + std::to_string(tgt) + " entries");
      for (std::size_t y = 0; y < tgt; ++y)
        m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = Rational::parse(rows[x][y].get<std::string>());
    }
    return StochMatrix(std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed matrix fixture: ") + e.what());
  }
}

FinStochModel::FinStochModel(std::vector<std::size_t> objects, std::vector<std::size_t> auxiliary)
    : objects_(std::move(objects)), auxiliary_(std::move(auxiliary)) {
  if (std::find(objects_.begin(), objects_.end(), std::size_t{1}) == objects_.end())
    objects_.insert(objects_.begin(), 1);
}

bool FinStochModel::contains(std::size_t a) const {
  return std::find(objects_.begin(), objects_.end(), a) != objects_.end() ||
         std::find(auxiliary_.begin(), auxiliary_.end(), a) != auxiliary_.end();
}

StochMatrix FinStochModel::hom_at(std::size_t a, std::size_t b, std::uint64_t) const {
  throw Infeasible("hom(" + std::to_string(a) + ", " + std::to_string(b) + ") in FinStoch is not enumerable");
}

LawReport check_support_oplax(std::uint64_t samples, std::size_t max_size, std::uint64_t seed) {
  LawReport r("finstoch-support");
  std::vector<std::size_t> sizes, aux;
  for (std::size_t a = 1; a <= max_size; ++a) sizes.push_back(a);
  for (auto a : sizes)
    for (auto b : sizes)
      if (std::find(sizes.begin(), sizes.end(), a * b) == sizes.end() &&
          std::find(aux.begin(), aux.end(), a * b) == aux.end())
        aux.push_back(a * b);
  FinStochModel m(sizes, aux);
  FinRelModel rel(sizes, RelOrder::Inclusion, aux);
  CheckOptions opts;
  opts.budget = samples;
  opts.seed = seed;

  r.absorb(check_oplax_cartesian(m, opts), "oplax");
  r.note("support_leq satisfies every generating inequality and closure rule (oplax/* laws), so it contains the generated preorder");

  FunctorData<FinStochModel, FinRelModel> S;
  S.source = &m;
  S.target = &rel;
  S.name = "supp";
  S.on_object = [](std::size_t a) { return a; };
  S.on_morphism = [](const StochMatrix& f) { return support(f); };
  S.laxator = [](std::size_t a, std::size_t b) { return rel_id(a * b); };
  S.unit_lax = [] { return rel_id(1); };
  S.oplaxator = S.laxator;
  S.unit_oplax = S.unit_lax;
  r.absorb(check_gs_functor(S, GsFlavor::Strict, opts), "support");

  auto& total = r.law("support-total");
  auto& sums = r.law("row-sums-exact");
  auto& quotient = r.law("equivalence-iff-equal-support");
  auto row_sums_one = [](const StochMatrix& f) {
    for (std::size_t x = 0; x < f.src(); ++x) {
      Rational s = 0;
      for (std::size_t y = 0; y < f.tgt(); ++y) s += f(x, y);
      if (s != Rational(1)) return false;
    }
    return true;
  };
  for (auto a : sizes)
    for (auto b : sizes) {
      std::string key = std::to_string(a) + "," + std::to_string(b);
      Space<StochMatrix> hom{std::nullopt, nullptr, [a, b](Rng& rng) { return random_stoch(a, b, rng); }};
      visit(total, opts, key, [&](const StochMatrix& f) {
        if (is_total_relation(support(f)))
          total.pass();
        else
          total.fail({"", {{"f", to_string(f)}}, to_string(support(f)), "total"});
      }, hom);
      visit(quotient, opts, key, [&](const StochMatrix& f, const StochMatrix& g) {
        for (const auto& h : {g, uniform_on_rows(support(f))}) {
          bool eq = support_leq(f, h) && support_leq(h, f);
          bool same = support(f) == support(h);
          if (eq == same)
            quotient.pass();
          else
            quotient.fail({"", {{"f", to_string(f)}, {"g", to_string(h)}}, eq ? "≈" : "not ≈",
                           same ? "same support" : "different support"});
        }
      }, hom, hom);
      for (auto c : sizes) {
        Space<StochMatrix> next{std::nullopt, nullptr, [b, c](Rng& rng) { return random_stoch(b, c, rng); }};
        visit(sums, opts, key + "," + std::to_string(c), [&](const StochMatrix& f, const StochMatrix& g) {
          for (const auto& h : {stoch_compose(g, f), stoch_tensor(f, g)}) {
            if (row_sums_one(h))
              sums.pass();
            else
              sums.fail({"", {{"f", to_string(f)}, {"g", to_string(g)}}, to_string(h), "rows summing to 1"});
          }
        }, hom, next);
      }
    }

  auto& realized = r.law("total-relations-realized");
  for (auto a : sizes)
    for (auto b : sizes)
      for (std::uint64_t i = 0, n = *rel.hom_size(a, b); i < n; ++i) {
        Rel t = rel.hom_at(a, b, i);
        if (!is_total_relation(t)) continue;
        Rel s = support(uniform_on_rows(t));
        if (s == t)
          realized.pass();
        else
          realized.fail({"", {{"R", to_string(t)}}, to_string(s), to_string(t)});
      }

  auto& exhaustive = r.law("support-functorial-small-denominators");
  std::vector<std::size_t> small{1, 2};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<StochMatrix>> mats;
  for (auto a : small)
    for (auto b : small) mats[{a, b}] = small_denominator_matrices(a, b);
  for (auto a : small)
    for (auto b : small)
      for (auto c : small)
        for (const auto& f : mats[{a, b}])
          for (const auto& g : mats[{b, c}]) {
            auto check = [&](const Rel& lhs, const Rel& rhs) {
              if (lhs == rhs)
                exhaustive.pass();
              else
                exhaustive.fail({"", {{"f", to_string(f)}, {"g", to_string(g)}}, to_string(lhs), to_string(rhs)});
            };
            check(support(stoch_compose(g, f)), compose(support(g), support(f)));
            check(support(stoch_tensor(f, g)), rel_tensor(support(f), support(g)));
          }
  return r;
}

}  // namespace gsmon
