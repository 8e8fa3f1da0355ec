#include "gsmon/preord/finpreord.hpp"

#include "gsmon/core/errors.hpp"

namespace gsmon {

FinPreord::FinPreord(std::size_t n, std::vector<std::uint8_t> leq) : n_(n), leq_(std::move(leq)) {
  if (leq_.size() != n * n) throw NotPreorder("matrix has " + std::to_string(leq_.size()) +
                                              " entries, expected " + std::to_string(n * n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!this->leq(x, x)) throw NotPreorder("not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (!this->leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (this->leq(y, z) && !this->leq(x, z))
          throw NotPreorder("not transitive at " + std::to_string(x) + "<=" + std::to_string(y) +
                            "<=" + std::to_string(z));
    }
  }
}

FinPreord FinPreord::closure(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::uint8_t> m(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) m[x * n + x] = 1;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw NotPreorder("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    m[x * n + y] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k * n + j]) m[i * n + j] = 1;
  return FinPreord(n, std::move(m));
}

FinPreord FinPreord::discrete(std::size_t n) { return closure(n, {}); }

FinPreord FinPreord::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return closure(n, p);
}

FinPreord FinPreord::indiscrete(std::size_t n) {
  return FinPreord(n, std::vector<std::uint8_t>(n * n, 1));
}

bool FinPreord::is_discrete() const { return strict_pairs().empty(); }

std::vector<std::pair<std::size_t, std::size_t>> FinPreord::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (x != y && leq(x, y)) out.emplace_back(x, y);
  return out;
}

std::string FinPreord::key() const {
  std::string s = "P" + std::to_string(n_) + "{";
  bool first = true;
  for (auto [x, y] : strict_pairs()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x) + "<=" + std::to_string(y);
  }
  return s + "}";
}

FinPreord preord_product(const FinPreord& x, const FinPreord& y) {
  std::size_t n = x.size() * y.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b)
      for (std::size_t c = 0; c < x.size(); ++c)
        for (std::size_t d = 0; d < y.size(); ++d)
          m[(a * y.size() + b) * n + c * y.size() + d] = x.leq(a, c) && y.leq(b, d);
  return FinPreord(n, std::move(m));
}

FinPreord preord_terminal() { return FinPreord::discrete(1); }

std::vector<FinPreord> all_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) off.emplace_back(x, y);
  if (off.size() >= 32) throw Infeasible("too many preorders on " + std::to_string(n));
  std::vector<FinPreord> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<std::uint8_t> m(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) m[x * n + x] = 1;
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((mask >> k) & 1u) m[off[k].first * n + off[k].second] = 1;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (m[a * n + b] && m[b * n + c] && !m[a * n + c]) transitive = false;
    if (transitive) out.emplace_back(n, std::move(m));
  }
  return out;
}

nlohmann::ordered_json to_json(const FinPreord& p) {
  nlohmann::ordered_json j;
  j["size"] = p.size();
  j["leq_pairs"] = nlohmann::ordered_json::array();
  for (auto [x, y] : p.strict_pairs()) j["leq_pairs"].push_back({x, y});
  return j;
}

FinPreord preord_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : j.at("leq_pairs")) pairs.emplace_back(p.at(0), p.at(1));
    return FinPreord::closure(j.at("size").get<std::size_t>(), pairs);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("preorder: ") + e.what());
  }
}

MonotoneMap::MonotoneMap(FinPreord src, FinPreord tgt, std::vector<std::size_t> values)
    : src_(std::move(src)), tgt_(std::move(tgt)), values_(std::move(values)) {
  if (values_.size() != src_.size())
    throw DimensionMismatch("map table has " + std::to_string(values_.size()) + " entries for " +
                            std::to_string(src_.size()) + " points");
  for (auto v : values_)
    if (v >= tgt_.size()) throw DimensionMismatch("map value " + std::to_string(v) + " out of range");
  for (std::size_t x = 0; x < src_.size(); ++x)
    for (std::size_t y = 0; y < src_.size(); ++y)
      if (src_.leq(x, y) && !tgt_.leq(values_[x], values_[y]))
        throw NotMonotone(std::to_string(x) + "<=" + std::to_string(y) + " but f(" +
                          std::to_string(x) + ")=" + std::to_string(values_[x]) + " is not below f(" +
                          std::to_string(y) + ")=" + std::to_string(values_[y]));
}

MonotoneMap map_identity(const FinPreord& x) {
  std::vector<std::size_t> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return MonotoneMap(x, x, std::move(v));
}

MonotoneMap map_compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.tgt() == g.src())) throw DimensionMismatch("map_compose: codomain/domain differ");
  std::vector<std::size_t> v(f.src().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(f(i));
  return MonotoneMap(f.src(), g.tgt(), std::move(v));
}

MonotoneMap map_pairing(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.src() == g.src())) throw DimensionMismatch("map_pairing: domains differ");
  std::vector<std::size_t> v(f.src().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(i) * g.tgt().size() + g(i);
  return MonotoneMap(f.src(), preord_product(f.tgt(), g.tgt()), std::move(v));
}

std::pair<MonotoneMap, MonotoneMap> map_projections(const FinPreord& x, const FinPreord& y) {
  auto xy = preord_product(x, y);
  std::vector<std::size_t> p(xy.size()), q(xy.size());
  for (std::size_t i = 0; i < xy.size(); ++i) {
    p[i] = i / y.size();
    q[i] = i % y.size();
  }
  return {MonotoneMap(xy, x, std::move(p)), MonotoneMap(xy, y, std::move(q))};
}

bool map_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.src() == g.src()) || !(f.tgt() == g.tgt()))
    throw DimensionMismatch("map_leq: maps are not parallel");
  for (std::size_t i = 0; i < f.src().size(); ++i)
    if (!f.tgt().leq(f(i), g(i))) return false;
  return true;
}

std::vector<MonotoneMap> all_monotone_maps(const FinPreord& x, const FinPreord& y) {
  std::vector<MonotoneMap> out;
  const std::size_t n = x.size(), k = y.size();
  if (k == 0) {
    if (n == 0) out.emplace_back(x, y, std::vector<std::size_t>{});
    return out;
  }
  std::vector<std::size_t> v(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (x.leq(a, b) && !y.leq(v[a], v[b])) ok = false;
    if (ok) out.emplace_back(x, y, v);
    std::size_t i = n;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++v[i] < k) break;
      v[i] = 0;
    }
  }
}

Rel hypograph(const MonotoneMap& f) {
  Rel r(f.src().size(), f.tgt().size());
  for (std::size_t x = 0; x < f.src().size(); ++x)
    for (std::size_t y = 0; y < f.tgt().size(); ++y)
      if (f.tgt().leq(y, f(x))) r.set(x, y);
  return r;
}

}  // namespace gsmon
