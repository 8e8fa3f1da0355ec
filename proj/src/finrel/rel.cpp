#include "gsmon/finrel/rel.hpp"

#include <algorithm>
#include <bit>

#include "gsmon/core/errors.hpp"

namespace gsmon {

Rel::Rel(std::size_t src, std::size_t tgt)
    : src_(src), tgt_(tgt), words_((tgt + 63) / 64), bits_(src * ((tgt + 63) / 64), 0) {}

Rel Rel::from_pairs(std::size_t src, std::size_t tgt,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Rel r(src, tgt);
  for (auto [a, b] : pairs) {
    if (a >= src || b >= tgt)
      throw DimensionMismatch("pair (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range for " + std::to_string(src) + "->" +
                              std::to_string(tgt));
    r.set(a, b);
  }
  return r;
}

Rel Rel::from_function(std::size_t tgt, const std::vector<long>& values) {
  Rel r(values.size(), tgt);
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] < 0) continue;
    if (static_cast<std::size_t>(values[a]) >= tgt)
      throw DimensionMismatch("function value out of range");
    r.set(a, static_cast<std::size_t>(values[a]));
  }
  return r;
}

Rel Rel::from_mask(std::size_t src, std::size_t tgt, std::uint64_t mask) {
  Rel r(src, tgt);
  if (src * tgt > 64) throw DimensionMismatch("from_mask needs src·tgt ≤ 64");
  if (tgt == 0) return r;
  const std::uint64_t low = tgt == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tgt) - 1;
  for (std::size_t a = 0; a < src; ++a) r.bits_[a] = (mask >> (a * tgt)) & low;
  return r;
}

Rel Rel::full(std::size_t src, std::size_t tgt) {
  Rel r(src, tgt);
  for (std::size_t a = 0; a < src; ++a)
    for (std::size_t b = 0; b < tgt; ++b) r.set(a, b);
  return r;
}

void Rel::set(std::size_t a, std::size_t b, bool v) {
  std::uint64_t bit = std::uint64_t{1} << (b % 64);
  if (v)
    bits_[a * words_ + b / 64] |= bit;
  else
    bits_[a * words_ + b / 64] &= ~bit;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < src_; ++a)
    for (std::size_t b = 0; b < tgt_; ++b)
      if (get(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t Rel::count() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::uint64_t> Rel::mask() const {
  if (src_ * tgt_ > 64) return std::nullopt;
  std::uint64_t m = 0;
  if (tgt_ == 0) return m;
  for (std::size_t a = 0; a < src_; ++a) m |= bits_[a] << (a * tgt_);
  return m;
}

bool Rel::subset_of(const Rel& other) const {
  if (src_ != other.src_ || tgt_ != other.tgt_) throw DimensionMismatch("subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

bool Rel::row_empty(std::size_t a) const {
  const auto* r = row(a);
  return std::all_of(r, r + words_, [](std::uint64_t w) { return w == 0; });
}

std::size_t Rel::row_count(std::size_t a) const {
  std::size_t n = 0;
  const auto* r = row(a);
  for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(std::popcount(r[w]));
  return n;
}

Rel compose(const Rel& s, const Rel& r) {
  if (r.tgt_ != s.src_)
    throw DimensionMismatch("cannot compose " + std::to_string(r.src_) + "->" +
                            std::to_string(r.tgt_) + " with " + std::to_string(s.src_) + "->" +
                            std::to_string(s.tgt_));
  Rel out(r.src_, s.tgt_);
  for (std::size_t a = 0; a < r.src_; ++a) {
    auto* dst = out.row(a);
    const auto* ra = r.row(a);
    for (std::size_t w = 0; w < r.words_; ++w) {
      std::uint64_t bits = ra[w];
      while (bits) {
        std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto* sb = s.row(b);
        for (std::size_t v = 0; v < s.words_; ++v) dst[v] |= sb[v];
      }
    }
  }
  return out;
}

Rel operator|(const Rel& x, const Rel& y) {
  if (x.src_ != y.src_ || x.tgt_ != y.tgt_) throw DimensionMismatch("union");
  Rel out = x;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] |= y.bits_[i];
  return out;
}

Rel rel_compose(const Rel& s, const Rel& r) { return compose(s, r); }

Rel rel_tensor(const Rel& r, const Rel& s) {
  Rel out(r.src() * s.src(), r.tgt() * s.tgt());
  for (std::size_t a = 0; a < r.src(); ++a)
    for (std::size_t b = 0; b < r.tgt(); ++b) {
      if (!r.get(a, b)) continue;
      for (std::size_t x = 0; x < s.src(); ++x)
        for (std::size_t y = 0; y < s.tgt(); ++y)
          if (s.get(x, y)) out.set(a * s.src() + x, b * s.tgt() + y);
    }
  return out;
}

Rel rel_id(std::size_t n) {
  Rel r(n, n);
  for (std::size_t a = 0; a < n; ++a) r.set(a, a);
  return r;
}

Rel rel_symmetry(std::size_t m, std::size_t n) {
  Rel r(m * n, n * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) r.set(a * n + b, b * m + a);
  return r;
}

Rel rel_dup(std::size_t n) {
  Rel r(n, n * n);
  for (std::size_t a = 0; a < n; ++a) r.set(a, a * n + a);
  return r;
}

Rel rel_discharge(std::size_t n) {
  Rel r(n, 1);
  for (std::size_t a = 0; a < n; ++a) r.set(a, 0);
  return r;
}

bool rel_leq(const Rel& r, const Rel& s) { return r.subset_of(s); }

bool is_partial_function(const Rel& r) {
  for (std::size_t a = 0; a < r.src(); ++a)
    if (r.row_count(a) > 1) return false;
  return true;
}

bool is_total_relation(const Rel& r) {
  for (std::size_t a = 0; a < r.src(); ++a)
    if (r.row_empty(a)) return false;
  return true;
}

Rel rel_domain(const Rel& r) {
  Rel d(r.src(), r.src());
  for (std::size_t a = 0; a < r.src(); ++a)
    if (!r.row_empty(a)) d.set(a, a);
  return d;
}

std::string to_string(const Rel& r) {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s + "}:" + std::to_string(r.src()) + "->" + std::to_string(r.tgt());
}

nlohmann::ordered_json to_json(const Rel& r) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({a, b});
  return {{"src", r.src()}, {"tgt", r.tgt()}, {"pairs", pairs}};
}

Rel rel_from_json(const nlohmann::json& j) {
  try {
    auto src = j.at("src").get<std::size_t>();
    auto tgt = j.at("tgt").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw FixtureError("relation pair must be [a,b]");
      pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return Rel::from_pairs(src, tgt, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("relation fixture: ") + e.what());
  }
}

Rel random_rel(std::size_t src, std::size_t tgt, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Rel r(src, tgt);
  for (std::size_t a = 0; a < src; ++a)
    for (std::size_t b = 0; b < tgt; ++b)
      if (coin(rng)) r.set(a, b);
  return r;
}

}  // namespace gsmon
