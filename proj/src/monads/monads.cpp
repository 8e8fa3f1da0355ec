#include "gsmon/monads/monads.hpp"

#include <bit>

#include "gsmon/core/errors.hpp"

namespace gsmon {

namespace {

std::size_t pick(std::size_t n, Rng& rng) {
  if (n == 0) throw Infeasible("no values over the empty set");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

void need_bits(std::size_t n) {
  if (n > 64) throw Infeasible("subset encoding needs at most 64 elements, got " + std::to_string(n));
}

std::size_t index_in(const nlohmann::json& j, std::size_t n) {
  auto x = j.get<std::size_t>();
  if (x >= n) throw FixtureError("index " + std::to_string(x) + " out of range " + std::to_string(n));
  return x;
}

}  // namespace

// identity

IdentityMonad::Value IdentityMonad::value_sample(std::size_t n, Rng& rng) const { return pick(n, rng); }

IdentityMonad::Value IdentityMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  return index_in(j, n);
}

// powerset

std::optional<std::uint64_t> PowersetMonad::value_count(std::size_t n) const {
  if (n >= 64) return std::nullopt;
  return std::uint64_t{1} << n;
}

PowersetMonad::Value PowersetMonad::value_sample(std::size_t n, Rng& rng) const {
  need_bits(n);
  Value v = rng();
  return n == 64 ? v : v & ((Value{1} << n) - 1);
}

bool PowersetMonad::valid(std::size_t n, const Value& v) const {
  return n >= 64 || (v >> n) == 0;
}

PowersetMonad::Value PowersetMonad::unit(std::size_t n, std::size_t x) const {
  need_bits(n);
  return Value{1} << x;
}

PowersetMonad::Value PowersetMonad::bind(const Value& v, std::size_t, std::size_t n,
                                         const KleisliFn<Value>& k) const {
  need_bits(n);
  Value out = 0;
  for (Value bits = v; bits; bits &= bits - 1) out |= k(static_cast<std::size_t>(std::countr_zero(bits)));
  return out;
}

PowersetMonad::Value PowersetMonad::map(const Value& v, std::size_t, std::size_t n,
                                        const IndexFn& f) const {
  need_bits(n);
  Value out = 0;
  for (Value bits = v; bits; bits &= bits - 1)
    out |= Value{1} << f(static_cast<std::size_t>(std::countr_zero(bits)));
  return out;
}

PowersetMonad::Value PowersetMonad::pair(const Value& a, std::size_t m, const Value& b,
                                         std::size_t n) const {
  need_bits(m * n);
  Value out = 0;
  for (Value x = a; x; x &= x - 1)
    for (Value y = b; y; y &= y - 1)
      out |= Value{1} << (static_cast<std::size_t>(std::countr_zero(x)) * n +
                          static_cast<std::size_t>(std::countr_zero(y)));
  return out;
}

std::string PowersetMonad::show(const Value& v) const {
  std::string s = "{";
  bool first = true;
  for (Value bits = v; bits; bits &= bits - 1) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(std::countr_zero(bits));
  }
  return s + "}";
}

PowersetMonad::Value PowersetMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  auto v = j.get<Value>();
  if (!valid(n, v)) throw FixtureError("subset mask " + std::to_string(v) + " exceeds " + std::to_string(n));
  return v;
}

std::optional<std::uint64_t> NonemptyPowersetMonad::value_count(std::size_t n) const {
  if (n >= 64) return std::nullopt;
  return (std::uint64_t{1} << n) - 1;
}

std::optional<std::uint64_t> NonemptyPowersetMonad::value_index(std::size_t, const Value& v) const {
  if (v == 0) return std::nullopt;
  return v - 1;
}

NonemptyPowersetMonad::Value NonemptyPowersetMonad::value_sample(std::size_t n, Rng& rng) const {
  for (;;) {
    Value v = PowersetMonad::value_sample(n, rng);
    if (v) return v;
  }
}

NonemptyPowersetMonad::Value NonemptyPowersetMonad::from_json(const nlohmann::json& j,
                                                              std::size_t n) const {
  auto v = PowersetMonad::from_json(j, n);
  if (v == 0) throw FixtureError("empty subset in nonempty powerset");
  return v;
}

// lifting

LiftingMonad::Value LiftingMonad::value_sample(std::size_t n, Rng& rng) const {
  return static_cast<Value>(pick(n + 1, rng)) - 1;
}

LiftingMonad::Value LiftingMonad::bind(const Value& v, std::size_t, std::size_t,
                                       const KleisliFn<Value>& k) const {
  return v == kBottom ? kBottom : k(static_cast<std::size_t>(v));
}

LiftingMonad::Value LiftingMonad::map(const Value& v, std::size_t, std::size_t,
                                      const IndexFn& f) const {
  return v == kBottom ? kBottom : static_cast<Value>(f(static_cast<std::size_t>(v)));
}

LiftingMonad::Value LiftingMonad::pair(const Value& a, std::size_t, const Value& b,
                                       std::size_t n) const {
  if (a == kBottom || b == kBottom) return kBottom;
  return a * static_cast<Value>(n) + b;
}

nlohmann::json LiftingMonad::to_json(const Value& v) const {
  return v == kBottom ? nlohmann::json(nullptr) : nlohmann::json(v);
}

LiftingMonad::Value LiftingMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  if (j.is_null()) return kBottom;
  return static_cast<Value>(index_in(j, n));
}

// multiset

MultisetMonad::Value MultisetMonad::value_at(std::size_t n, std::uint64_t i) const {
  // base-4 digits
  Value v(n);
  for (std::size_t k = n; k-- > 0;) {
    v[k] = i % 4;
    i /= 4;
  }
  return v;
}

MultisetMonad::Value MultisetMonad::value_sample(std::size_t n, Rng& rng) const {
  Value v(n);
  for (auto& c : v) c = std::uniform_int_distribution<std::uint64_t>(0, 3)(rng);
  return v;
}

MultisetMonad::Value MultisetMonad::unit(std::size_t n, std::size_t x) const {
  Value v(n, 0);
  v[x] = 1;
  return v;
}

MultisetMonad::Value MultisetMonad::bind(const Value& v, std::size_t, std::size_t n,
                                         const KleisliFn<Value>& k) const {
  Value out(n, 0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] == 0) continue;
    Value kx = k(x);
    for (std::size_t y = 0; y < n; ++y) out[y] = checked_add(out[y], checked_mul(v[x], kx[y]));
  }
  return out;
}

MultisetMonad::Value MultisetMonad::map(const Value& v, std::size_t, std::size_t n,
                                        const IndexFn& f) const {
  Value out(n, 0);
  for (std::size_t x = 0; x < v.size(); ++x) out[f(x)] = checked_add(out[f(x)], v[x]);
  return out;
}

MultisetMonad::Value MultisetMonad::pair(const Value& a, std::size_t m, const Value& b,
                                         std::size_t n) const {
  Value out(m * n, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x * n + y] = checked_mul(a[x], b[y]);
  return out;
}

std::string MultisetMonad::show(const Value& v) const {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

MultisetMonad::Value MultisetMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  auto v = j.get<Value>();
  if (v.size() != n) throw FixtureError("multiset has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

// distribution

DistributionMonad::Value DistributionMonad::value_at(std::size_t n, std::uint64_t i) const {
  return unit(n, i % n);
}

DistributionMonad::Value DistributionMonad::value_sample(std::size_t n, Rng& rng) const {
  std::vector<std::int64_t> w(n);
  std::int64_t total = 0;
  for (auto& x : w) total += x = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
  if (total == 0) return unit(n, pick(n, rng));
  Value v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(w[i], total);
  return v;
}

bool DistributionMonad::valid(std::size_t n, const Value& v) const {
  if (v.size() != n) return false;
  Rational sum = 0;
  for (const auto& p : v) {
    if (p < Rational(0)) return false;
    sum += p;
  }
  return sum == Rational(1);
}

DistributionMonad::Value DistributionMonad::unit(std::size_t n, std::size_t x) const {
  Value v(n, Rational(0));
  v[x] = 1;
  return v;
}

DistributionMonad::Value DistributionMonad::bind(const Value& v, std::size_t, std::size_t n,
                                                 const KleisliFn<Value>& k) const {
  Value out(n, Rational(0));
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x].is_zero()) continue;
    Value kx = k(x);
    for (std::size_t y = 0; y < n; ++y) out[y] += v[x] * kx[y];
  }
  return out;
}

DistributionMonad::Value DistributionMonad::map(const Value& v, std::size_t, std::size_t n,
                                                const IndexFn& f) const {
  Value out(n, Rational(0));
  for (std::size_t x = 0; x < v.size(); ++x) out[f(x)] += v[x];
  return out;
}

DistributionMonad::Value DistributionMonad::pair(const Value& a, std::size_t m, const Value& b,
                                                 std::size_t n) const {
  Value out(m * n);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x * n + y] = a[x] * b[y];
  return out;
}

std::string DistributionMonad::show(const Value& v) const {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

nlohmann::json DistributionMonad::to_json(const Value& v) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : v) j.push_back(p.str());
  return j;
}

DistributionMonad::Value DistributionMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  Value v;
  for (const auto& p : j) v.push_back(Rational::parse(p.get<std::string>()));
  if (!valid(n, v)) throw FixtureError("not a probability vector of length " + std::to_string(n));
  return v;
}

// writer

WriterMonad::WriterMonad(std::uint32_t order) : k_(order) {
  if (order == 0) throw FixtureError("writer group order must be positive");
}

WriterMonad::Value WriterMonad::value_at(std::size_t n, std::uint64_t i) const {
  return {static_cast<std::uint32_t>(i / n), static_cast<std::size_t>(i % n)};
}

std::optional<std::uint64_t> WriterMonad::value_index(std::size_t n, const Value& v) const {
  return std::uint64_t{v.g} * n + v.x;
}

WriterMonad::Value WriterMonad::value_sample(std::size_t n, Rng& rng) const {
  return {static_cast<std::uint32_t>(pick(k_, rng)), pick(n, rng)};
}

WriterMonad::Value WriterMonad::bind(const Value& v, std::size_t, std::size_t,
                                     const KleisliFn<Value>& k) const {
  Value w = k(v.x);
  return {(v.g + w.g) % k_, w.x};
}

WriterMonad::Value WriterMonad::map(const Value& v, std::size_t, std::size_t,
                                    const IndexFn& f) const {
  return {v.g, f(v.x)};
}

WriterMonad::Value WriterMonad::pair(const Value& a, std::size_t, const Value& b,
                                     std::size_t n) const {
  return {(a.g + b.g) % k_, a.x * n + b.x};
}

std::string WriterMonad::show(const Value& v) const {
  return "(" + std::to_string(v.g) + "," + std::to_string(v.x) + ")";
}

WriterMonad::Value WriterMonad::from_json(const nlohmann::json& j, std::size_t n) const {
  if (!j.is_array() || j.size() != 2) throw FixtureError("writer value must be [g, x]");
  Value v{j[0].get<std::uint32_t>(), j[1].get<std::size_t>()};
  if (!valid(n, v)) throw FixtureError("writer value out of range");
  return v;
}

AnyMonad monad_by_name(const std::string& name) {
  if (name == "identity") return IdentityMonad{};
  if (name == "powerset") return PowersetMonad{};
  if (name == "nonempty-powerset") return NonemptyPowersetMonad{};
  if (name == "lifting") return LiftingMonad{};
  if (name == "multiset") return MultisetMonad{};
  if (name == "distribution") return DistributionMonad{};
  if (name.rfind("writer-z", 0) == 0) {
    try {
      std::size_t used = 0;
      auto k = std::stoul(name.substr(8), &used);
      if (used == name.size() - 8 && k > 0) return WriterMonad(static_cast<std::uint32_t>(k));
    } catch (const std::logic_error&) {
    }
  }
  throw FixtureError("unknown monad '" + name + "'");
}

std::vector<std::string> monad_names() {
  return {"identity", "powerset", "nonempty-powerset", "lifting", "multiset", "distribution",
          "writer-z2", "writer-z3"};
}

}  // namespace gsmon
