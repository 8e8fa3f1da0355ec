#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/law_report.hpp"
#include "gsmon/monads/monads.hpp"

namespace gsmon {

namespace monad_detail {

using Table = std::vector<std::size_t>;

template <Monad M>
Space<typename M::Value> value_space(const M& t, std::size_t n) {
  return {t.value_count(n), [&t, n](std::uint64_t i) { return t.value_at(n, i); },
          [&t, n](Rng& rng) { return t.value_sample(n, rng); }};
}

/// Functions m -> n as tables, index read little-endian in base n.
inline Space<Table> function_space(std::size_t m, std::size_t n) {
  std::optional<std::uint64_t> size = 1;
  for (std::size_t i = 0; i < m; ++i) size = saturating_mul(*size, n);
  return {size,
          [m, n](std::uint64_t i) {
            Table t(m);
            for (auto& v : t) {
              v = i % n;
              i /= n;
            }
            return t;
          },
          [m, n](Rng& rng) {
            Table t(m);
            for (auto& v : t) v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            return t;
          }};
}

/// Kleisli arrows m -> T(n) as tables of values.
template <Monad M>
Space<std::vector<typename M::Value>> kleisli_space(const M& t, std::size_t m, std::size_t n) {
  auto count = t.value_count(n);
  std::optional<std::uint64_t> size;
  if (count) {
    size = 1;
    for (std::size_t i = 0; i < m; ++i) size = saturating_mul(*size, *count);
  }
  return {size,
          [&t, m, n, count](std::uint64_t i) {
            std::vector<typename M::Value> k;
            k.reserve(m);
            for (std::size_t x = 0; x < m; ++x) {
              k.push_back(t.value_at(n, i % *count));
              i /= *count;
            }
            return k;
          },
          [&t, m, n](Rng& rng) {
            std::vector<typename M::Value> k;
            k.reserve(m);
            for (std::size_t x = 0; x < m; ++x) k.push_back(t.value_sample(n, rng));
            return k;
          }};
}

inline std::string show_table(const Table& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

template <Monad M>
std::string show_values(const M& t, const std::vector<typename M::Value>& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + t.show(k[i]);
  return s + "]";
}

template <Monad M>
void expect_value(LawResult& law, const M& t, const typename M::Value& lhs,
                  const typename M::Value& rhs, const Items& items, bool leq = false) {
  if (leq ? t.leq(lhs, rhs) : lhs == rhs)
    law.pass();
  else
    law.fail({"", items, t.show(lhs), t.show(rhs)});
}

inline Items sizes(std::size_t m, std::size_t n) {
  return {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
}

template <class... Rest>
Items with(Items base, Rest&&... rest) {
  (base.emplace_back(std::forward<Rest>(rest)), ...);
  return base;
}

}  // namespace monad_detail

/// Monad laws in Kleisli form on sizes 1..max_size, naturality of η, μ and c,
/// the symmetric-monoidal-monad axioms of c, and the commutativity square
/// (both double strengths agree with c).
template <Monad M>
LawReport check_monad_laws(const M& t, std::size_t max_size, const CheckOptions& opts = {}) {
  using namespace monad_detail;
  using V = typename M::Value;
  using K = std::vector<V>;
  LawReport r("monad-laws(" + t.name() + ")");
  auto sv = [&](const V& v) { return t.show(v); };
  auto sk = [&](const K& k) { return show_values(t, k); };
  auto key = [](std::initializer_list<std::size_t> ns) {
    std::string s;
    for (auto n : ns) s += std::to_string(n) + ",";
    return s;
  };
  auto fn = [](const K& k) { return [&k](std::size_t x) { return k[x]; }; };
  auto idx = [](const Table& f) { return [&f](std::size_t x) { return f[x]; }; };
  const std::size_t N = max_size;

  auto& unit_left = r.law("mu-unit-left");
  auto& unit_right = r.law("mu-unit-right");
  auto& eta_nat = r.law("eta-natural");
  auto& map_mu = r.law("map-via-mu");
  auto& functorial = r.law("map-functorial");
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t n = 1; n <= N; ++n) {
      visit(unit_left, opts, key({m, n}), [&](const K& k) {
        for (std::size_t x = 0; x < m && !unit_left.failed(); ++x)
          expect_value(unit_left, t, t.bind(t.unit(m, x), m, n, fn(k)), k[x],
                       with(sizes(m, n), std::pair{"x", std::to_string(x)}, std::pair{"k", sk(k)}));
      }, kleisli_space(t, m, n));
      if (m == n) {
        visit(unit_right, opts, key({m}), [&](const V& v) {
          expect_value(unit_right, t, t.bind(v, m, m, [&](std::size_t x) { return t.unit(m, x); }),
                       v, with(sizes(m, m), std::pair{"v", sv(v)}));
        }, value_space(t, m));
      }
      visit(eta_nat, opts, key({m, n}), [&](const Table& f) {
        for (std::size_t x = 0; x < m && !eta_nat.failed(); ++x)
          expect_value(eta_nat, t, t.map(t.unit(m, x), m, n, idx(f)), t.unit(n, f[x]),
                       with(sizes(m, n), std::pair{"f", show_table(f)},
                            std::pair{"x", std::to_string(x)}));
      }, function_space(m, n));
      visit(map_mu, opts, key({m, n}), [&](const V& v, const Table& f) {
        expect_value(map_mu, t, t.map(v, m, n, idx(f)),
                     t.bind(v, m, n, [&](std::size_t x) { return t.unit(n, f[x]); }),
                     with(sizes(m, n), std::pair{"v", sv(v)}, std::pair{"f", show_table(f)}));
      }, value_space(t, m), function_space(m, n));
      if (m == n) {
        visit(functorial, opts, key({m}), [&](const V& v) {
          expect_value(functorial, t, t.map(v, m, m, [](std::size_t x) { return x; }), v,
                       with(sizes(m, m), std::pair{"v", sv(v)}));
        }, value_space(t, m));
      }
    }

  auto& assoc = r.law("mu-associative");
  auto& mu_nat = r.law("mu-natural");
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t p = 1; p <= N; ++p) {
        visit(assoc, opts, key({m, n, p}), [&](const V& v, const K& k, const K& l) {
          expect_value(assoc, t, t.bind(t.bind(v, m, n, fn(k)), n, p, fn(l)),
                       t.bind(v, m, p, [&](std::size_t x) { return t.bind(k[x], n, p, fn(l)); }),
                       {{"v", sv(v)}, {"k", sk(k)}, {"l", sk(l)}});
        }, value_space(t, m), kleisli_space(t, m, n), kleisli_space(t, n, p));
        visit(functorial, opts, key({m, n, p}), [&](const V& v, const Table& f, const Table& g) {
          expect_value(functorial, t, t.map(t.map(v, m, n, idx(f)), n, p, idx(g)),
                       t.map(v, m, p, [&](std::size_t x) { return g[f[x]]; }),
                       {{"v", sv(v)}, {"f", show_table(f)}, {"g", show_table(g)}});
        }, value_space(t, m), function_space(m, n), function_space(n, p));
        visit(mu_nat, opts, key({m, n, p}), [&](const V& v, const K& k, const Table& f) {
          expect_value(mu_nat, t, t.map(t.bind(v, m, n, fn(k)), n, p, idx(f)),
                       t.bind(v, m, p, [&](std::size_t x) { return t.map(k[x], n, p, idx(f)); }),
                       {{"v", sv(v)}, {"k", sk(k)}, {"f", show_table(f)}});
        }, value_space(t, m), kleisli_space(t, m, n), function_space(n, p));
      }

  auto& c_nat = r.law("c-natural");
  auto& c_unit = r.law("c-unital");
  auto& c_sym = r.law("c-symmetric");
  auto& eta_mon = r.law("eta-monoidal");
  auto& commut = r.law("commutative");
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t n = 1; n <= N; ++n) {
      visit(c_nat, opts, key({m, n}), [&](const V& a, const V& b, const Table& f, const Table& g) {
        // f: m -> n, g: n -> m
        expect_value(c_nat, t, t.pair(t.map(a, m, n, idx(f)), n, t.map(b, n, m, idx(g)), m),
                     t.map(t.pair(a, m, b, n), m * n, n * m,
                           [&](std::size_t i) { return f[i / n] * m + g[i % n]; }),
                     {{"a", sv(a)}, {"b", sv(b)}, {"f", show_table(f)}, {"g", show_table(g)}});
      }, value_space(t, m), value_space(t, n), function_space(m, n), function_space(n, m));
      if (m == 1) {
        visit(c_unit, opts, key({n}), [&](const V& b) {
          auto items = with(sizes(1, n), std::pair{"b", sv(b)});
          expect_value(c_unit, t, t.pair(t.unit(1, 0), 1, b, n), b, items);
          if (!c_unit.failed()) expect_value(c_unit, t, t.pair(b, n, t.unit(1, 0), 1), b, items);
        }, value_space(t, n));
      }
      visit(c_sym, opts, key({m, n}), [&](const V& a, const V& b) {
        expect_value(c_sym, t,
                     t.map(t.pair(a, m, b, n), m * n, n * m,
                           [&](std::size_t i) { return (i % n) * m + i / n; }),
                     t.pair(b, n, a, m), {{"a", sv(a)}, {"b", sv(b)}});
      }, value_space(t, m), value_space(t, n));
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y)
          expect_value(eta_mon, t, t.pair(t.unit(m, x), m, t.unit(n, y), n), t.unit(m * n, x * n + y),
                       with(sizes(m, n), std::pair{"x", std::to_string(x)},
                            std::pair{"y", std::to_string(y)}));
      visit(commut, opts, key({m, n}), [&](const V& a, const V& b) {
        // μ T(t') t  and  μ T(t) t' on (a, b)
        V left = t.bind(a, m, m * n, [&](std::size_t x) {
          return t.map(b, n, m * n, [&](std::size_t y) { return x * n + y; });
        });
        V right = t.bind(b, n, m * n, [&](std::size_t y) {
          return t.map(a, m, m * n, [&](std::size_t x) { return x * n + y; });
        });
        auto items = Items{{"a", sv(a)}, {"b", sv(b)}};
        expect_value(commut, t, left, right, items);
        if (!commut.failed()) expect_value(commut, t, left, t.pair(a, m, b, n), items);
      }, value_space(t, m), value_space(t, n));
    }

  auto& c_assoc = r.law("c-associative");
  auto& mu_mon = r.law("mu-monoidal");
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t p = 1; p <= N; ++p) {
        visit(c_assoc, opts, key({m, n, p}), [&](const V& a, const V& b, const V& c) {
          expect_value(c_assoc, t, t.pair(t.pair(a, m, b, n), m * n, c, p),
                       t.pair(a, m, t.pair(b, n, c, p), n * p),
                       {{"a", sv(a)}, {"b", sv(b)}, {"c", sv(c)}});
        }, value_space(t, m), value_space(t, n), value_space(t, p));
        // a ∈ T(m), k: m -> T(n); b ∈ T(n), l: n -> T(p)
        visit(mu_mon, opts, key({m, n, p}), [&](const V& a, const K& k, const V& b, const K& l) {
          expect_value(mu_mon, t, t.pair(t.bind(a, m, n, fn(k)), n, t.bind(b, n, p, fn(l)), p),
                       t.bind(t.pair(a, m, b, n), m * n, n * p,
                              [&](std::size_t i) { return t.pair(k[i / n], n, l[i % n], p); }),
                       {{"a", sv(a)}, {"k", sk(k)}, {"b", sv(b)}, {"l", sk(l)}});
        }, value_space(t, m), kleisli_space(t, m, n), value_space(t, n), kleisli_space(t, n, p));
      }
  return r;
}

/// value_leq is a preorder and μ, T(f) and c are monotone for it.
template <Monad M>
LawReport check_value_order(const M& t, std::size_t max_size, const CheckOptions& opts = {}) {
  using namespace monad_detail;
  using V = typename M::Value;
  using K = std::vector<V>;
  LawReport r("value-order(" + t.name() + ")");
  auto sv = [&](const V& v) { return t.show(v); };
  auto& refl = r.law("order-reflexive");
  auto& trans = r.law("order-transitive");
  auto& bind_mono = r.law("bind-monotone");
  auto& map_mono = r.law("map-monotone");
  auto& pair_mono = r.law("pair-monotone");
  for (std::size_t m = 1; m <= max_size; ++m) {
    std::string km = std::to_string(m);
    visit(refl, opts, km, [&](const V& v) {
      if (t.leq(v, v))
        refl.pass();
      else
        refl.fail({"", {{"v", sv(v)}}, sv(v), sv(v)});
    }, value_space(t, m));
    visit(trans, opts, km, [&](const V& a, const V& b, const V& c) {
      if (!t.leq(a, b) || !t.leq(b, c)) return;
      expect_value(trans, t, a, c, {{"a", sv(a)}, {"b", sv(b)}, {"c", sv(c)}}, true);
    }, value_space(t, m), value_space(t, m), value_space(t, m));
    for (std::size_t n = 1; n <= max_size; ++n) {
      std::string k2 = km + "," + std::to_string(n);
      visit(bind_mono, opts, k2, [&](const V& a, const V& b, const K& k, const K& l) {
        if (!t.leq(a, b)) return;
        for (std::size_t x = 0; x < m; ++x)
          if (!t.leq(k[x], l[x])) return;
        expect_value(bind_mono, t, t.bind(a, m, n, [&](std::size_t x) { return k[x]; }),
                     t.bind(b, m, n, [&](std::size_t x) { return l[x]; }),
                     {{"a", sv(a)}, {"b", sv(b)}, {"k", show_values(t, k)}, {"l", show_values(t, l)}},
                     true);
      }, value_space(t, m), value_space(t, m), kleisli_space(t, m, n), kleisli_space(t, m, n));
      visit(map_mono, opts, k2, [&](const V& a, const V& b, const Table& f) {
        if (!t.leq(a, b)) return;
        auto fx = [&](std::size_t x) { return f[x]; };
        expect_value(map_mono, t, t.map(a, m, n, fx), t.map(b, m, n, fx),
                     {{"a", sv(a)}, {"b", sv(b)}, {"f", show_table(f)}}, true);
      }, value_space(t, m), value_space(t, m), function_space(m, n));
      visit(pair_mono, opts, k2, [&](const V& a, const V& b, const V& c, const V& d) {
        if (!t.leq(a, b) || !t.leq(c, d)) return;
        expect_value(pair_mono, t, t.pair(a, m, c, n), t.pair(b, m, d, n),
                     {{"a", sv(a)}, {"b", sv(b)}, {"c", sv(c)}, {"d", sv(d)}}, true);
      }, value_space(t, m), value_space(t, m), value_space(t, n), value_space(t, n));
    }
  }
  return r;
}

namespace monad_detail {

template <Monad M>
LawReport gs_monad_equations(const M& t, std::size_t max_size, const CheckOptions& opts,
                             bool leq, const std::string& check, const std::string& dup_law,
                             const std::string& discharge_law) {
  using V = typename M::Value;
  LawReport r(check + "(" + t.name() + ")");
  auto& dup = r.law(dup_law);
  auto& dis = r.law(discharge_law);
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::string kn = std::to_string(n);
    visit(dup, opts, kn, [&](const V& v) {
      expect_value(dup, t, t.map(v, n, n * n, [n](std::size_t x) { return x * n + x; }),
                   t.pair(v, n, v, n), {{"n", kn}, {"v", t.show(v)}}, leq);
    }, value_space(t, n));
    visit(dis, opts, kn, [&](const V& v) {
      expect_value(dis, t, t.map(v, n, 1, [](std::size_t) { return std::size_t{0}; }),
                   t.unit(1, 0), {{"n", kn}, {"v", t.show(v)}}, leq);
    }, value_space(t, n));
  }
  return r;
}

}  // namespace monad_detail

/// T(∇) = c∇ and T(!) = η_I ! on every value of T(n), n ≤ max_size.
template <Monad M>
LawReport check_gs_monoidal_monad(const M& t, std::size_t max_size, const CheckOptions& opts = {}) {
  return monad_detail::gs_monad_equations(t, max_size, opts, false, "gs-monoidal-monad", "T-dup",
                                          "T-discharge");
}

/// T(∇) ≤ c∇ and T(!) ≤ η_I ! under value_leq.
template <Monad M>
LawReport check_colax_cartesian_monad(const M& t, std::size_t max_size,
                                      const CheckOptions& opts = {}) {
  return monad_detail::gs_monad_equations(t, max_size, opts, true, "colax-cartesian-monad",
                                          "T-dup-leq", "T-discharge-leq");
}

}  // namespace gsmon
