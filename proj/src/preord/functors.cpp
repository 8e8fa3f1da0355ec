#include "gsmon/preord/functors.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "gsmon/functor/checks.hpp"

namespace gsmon {

Rel hypograph_of(const PreordMap& f, std::uint64_t max_bits) {
  const std::uint64_t n = f.src.size(), k = f.tgt.size();
  if (saturating_mul(n, k) > max_bits)
    throw Infeasible("hypograph of " + f.label + " has " + std::to_string(n) + "×" +
                     std::to_string(k) + " entries");
  Rel r(n, k);
  std::vector<Point> tgt_points(k);
  for (std::uint64_t y = 0; y < k; ++y) tgt_points[y] = unflatten(f.tgt, y);
  std::map<std::uint64_t, std::uint64_t> first_row;
  for (std::uint64_t x = 0; x < n; ++x) {
    Point fx = f.apply(unflatten(f.src, x));
    auto [it, fresh] = first_row.emplace(flatten(f.tgt, fx), x);
    if (!fresh) {
      for (std::uint64_t y = 0; y < k; ++y)
        if (r.get(it->second, y)) r.set(x, y);
      continue;
    }
    if (f.tgt.factors.size() == 1) {
      const auto& leq = f.tgt.factors[0]->leq;
      for (std::uint64_t y = 0; y < k; ++y)
        if (y == fx[0] || leq(y, fx[0])) r.set(x, y);
      continue;
    }
    for (std::uint64_t y = 0; y < k; ++y)
      if (point_leq(f.tgt, tgt_points[y], fx)) r.set(x, y);
  }
  return r;
}

FunctorData<PreordModel, FinRelModel> hypograph_functor(const PreordModel& source,
                                                        const FinRelModel& target) {
  FunctorData<PreordModel, FinRelModel> R;
  R.source = &source;
  R.target = &target;
  R.name = "R";
  R.on_object = [](const PreordObject& a) { return static_cast<std::size_t>(a.size()); };
  R.on_morphism = [](const PreordMap& f) { return hypograph_of(f); };
  const PreordModel* s = &source;
  struct Cache {
    std::mutex mu;
    std::map<std::string, Rel> laxators;
  };
  auto cache = std::make_shared<Cache>();
  R.laxator = [s, cache](const PreordObject& a, const PreordObject& b) {
    std::string key = a.describe() + "|" + b.describe();
    {
      std::lock_guard lock(cache->mu);
      auto it = cache->laxators.find(key);
      if (it != cache->laxators.end()) return it->second;
    }
    Rel r = hypograph_of(s->identity(s->tensor_objects(a, b)));
    std::lock_guard lock(cache->mu);
    return cache->laxators.emplace(key, std::move(r)).first->second;
  };
  R.unit_lax = [] { return rel_id(1); };
  return R;
}

namespace {

// Relations between sets of size ≤ 8 as 8-bit rows packed in a word.
using Packed = std::uint64_t;

Packed pack(const Rel& r) {
  Packed p = 0;
  for (auto [x, y] : r.pairs()) p |= Packed{1} << (8 * x + y);
  return p;
}

Packed packed_compose(Packed s, Packed r, std::size_t n) {
  Packed out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t row = (r >> (8 * x)) & 0xffu, acc = 0;
    for (std::size_t y = 0; row; ++y, row >>= 1)
      if (row & 1u) acc |= (s >> (8 * y)) & 0xffu;
    out |= acc << (8 * x);
  }
  return out;
}

}  // namespace

LawReport check_hypograph_functoriality(const CheckOptions& opts, std::size_t max_size) {
  if (max_size > 8) throw Infeasible("hypograph check supports preorders of size ≤ 8");
  LawReport r("hypograph");
  std::vector<FinPreord> ps;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (auto& p : all_preorders(n)) ps.push_back(std::move(p));
  const std::size_t P = ps.size();
  std::vector<std::vector<std::vector<MonotoneMap>>> maps(P, std::vector<std::vector<MonotoneMap>>(P));
  std::vector<std::vector<std::vector<Packed>>> hyp(P, std::vector<std::vector<Packed>>(P));
  std::vector<std::vector<std::vector<std::size_t>>> comp_index(P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      maps[i][j] = all_monotone_maps(ps[i], ps[j]);
      for (const auto& f : maps[i][j]) hyp[i][j].push_back(pack(hypograph(f)));
    }
  auto table_index = [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& values) {
    // maps are listed in lexicographic order of their tables
    const auto& ms = maps[i][j];
    auto it = std::lower_bound(ms.begin(), ms.end(), values,
                               [](const MonotoneMap& m, const std::vector<std::size_t>& v) {
                                 return m.values() < v;
                               });
    return static_cast<std::size_t>(it - ms.begin());
  };

  auto& comp = r.law("strict-composition");
  for (std::size_t i = 0; i < P && !comp.failed(); ++i)
    for (std::size_t j = 0; j < P && !comp.failed(); ++j)
      for (std::size_t a = 0; a < maps[i][j].size() && !comp.failed(); ++a)
        for (std::size_t k = 0; k < P && !comp.failed(); ++k)
          for (std::size_t b = 0; b < maps[j][k].size(); ++b) {
            const auto& f = maps[i][j][a];
            const auto& g = maps[j][k][b];
            std::vector<std::size_t> gf(f.values().size());
            for (std::size_t x = 0; x < gf.size(); ++x) gf[x] = g(f(x));
            Packed lhs = hyp[i][k][table_index(i, k, gf)];
            Packed rhs = packed_compose(hyp[j][k][b], hyp[i][j][a], ps[i].size());
            if (lhs == rhs) {
              comp.pass();
            } else {
              comp.fail({"", {{"X", ps[i].key()}, {"Y", ps[j].key()}, {"Z", ps[k].key()}},
                         to_string(hypograph(map_compose(g, f))),
                         to_string(compose(hypograph(g), hypograph(f)))});
              break;
            }
          }

  auto& lax_id = r.law("identity-lax");
  auto& eq_id = r.law("identity-equality-iff-discrete");
  for (const auto& p : ps) {
    Rel rid = hypograph(map_identity(p));
    Items items{{"X", p.key()}};
    if (rel_id(p.size()).subset_of(rid))
      lax_id.pass();
    else
      lax_id.fail({"", items, to_string(rel_id(p.size())), to_string(rid)});
    if ((rid == rel_id(p.size())) == p.is_discrete())
      eq_id.pass();
    else
      eq_id.fail({"", items, to_string(rid), p.is_discrete() ? "discrete" : "not discrete"});
  }

  auto& refl = r.law("order-preserving-reflecting");
  for (std::size_t i = 0; i < P && !refl.failed(); ++i)
    for (std::size_t j = 0; j < P && !refl.failed(); ++j)
      for (std::size_t a = 0; a < maps[i][j].size() && !refl.failed(); ++a)
        for (std::size_t b = 0; b < maps[i][j].size(); ++b) {
          bool le = map_leq(maps[i][j][a], maps[i][j][b]);
          Packed ra = hyp[i][j][a], rb = hyp[i][j][b];
          bool sub = (ra & ~rb) == 0;
          if (le == sub) {
            refl.pass();
          } else {
            refl.fail({"", {{"X", ps[i].key()}, {"Y", ps[j].key()}},
                       le ? "f<=g" : "not f<=g", sub ? "R(f)⊆R(g)" : "not R(f)⊆R(g)"});
            break;
          }
        }

  PreordModel model({FinPreord::chain(2), FinPreord::discrete(2), FinPreord::indiscrete(2)});
  FinRelModel rel({1});
  auto R = hypograph_functor(model, rel);
  r.absorb(check_lax_on_identities(R, opts, true), "R");
  return r;
}

}  // namespace gsmon
