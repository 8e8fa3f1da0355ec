#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gsmon/core/model.hpp"
#include "gsmon/core/rational.hpp"

namespace gsmon {

/// Built-in commutative monads on finite sets.  Every monad exposes the same
/// members; T(n) is the value domain over {0, …, n-1}:
///
///   value_count(n)        |T(n)|, or nullopt when not enumerable
///   value_at / value_index / value_sample / valid
///   unit(n, x)            η_n(x)
///   bind(v, m, n, k)      μ_n(T(k)(v)) for v ∈ T(m), k: m → T(n)
///   map(v, m, n, f)       T(f)(v)
///   pair(a, m, b, n)      c_{m,n}(a, b) ∈ T(m·n), row-major
///   leq                   value preorder (equality where none is natural)
template <class M>
concept Monad = requires(const M& t, const typename M::Value& v, std::size_t n, Rng& rng) {
  { t.name() } -> std::convertible_to<std::string>;
  { t.value_count(n) } -> std::convertible_to<std::optional<std::uint64_t>>;
  { t.value_at(n, std::uint64_t{0}) } -> std::convertible_to<typename M::Value>;
  { t.value_index(n, v) } -> std::convertible_to<std::optional<std::uint64_t>>;
  { t.value_sample(n, rng) } -> std::convertible_to<typename M::Value>;
  { t.valid(n, v) } -> std::convertible_to<bool>;
  { t.unit(n, n) } -> std::convertible_to<typename M::Value>;
  { t.pair(v, n, v, n) } -> std::convertible_to<typename M::Value>;
  { t.leq(v, v) } -> std::convertible_to<bool>;
  { t.show(v) } -> std::convertible_to<std::string>;
};

template <class V>
using KleisliFn = std::function<V(std::size_t)>;
using IndexFn = std::function<std::size_t(std::size_t)>;

class IdentityMonad {
 public:
  using Value = std::size_t;
  std::string name() const { return "identity"; }
  std::optional<std::uint64_t> value_count(std::size_t n) const { return n; }
  Value value_at(std::size_t, std::uint64_t i) const { return i; }
  std::optional<std::uint64_t> value_index(std::size_t, const Value& v) const { return v; }
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const { return v < n; }
  Value unit(std::size_t, std::size_t x) const { return x; }
  Value bind(const Value& v, std::size_t, std::size_t, const KleisliFn<Value>& k) const { return k(v); }
  Value map(const Value& v, std::size_t, std::size_t, const IndexFn& f) const { return f(v); }
  Value pair(const Value& a, std::size_t, const Value& b, std::size_t n) const { return a * n + b; }
  bool leq(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const { return std::to_string(v); }
  nlohmann::json to_json(const Value& v) const { return v; }
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

/// Subsets as bitmasks; on discrete bases this is the down-set powerset.
class PowersetMonad {
 public:
  using Value = std::uint64_t;
  std::string name() const { return "powerset"; }
  std::optional<std::uint64_t> value_count(std::size_t n) const;
  Value value_at(std::size_t, std::uint64_t i) const { return i; }
  std::optional<std::uint64_t> value_index(std::size_t, const Value& v) const { return v; }
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const;
  Value unit(std::size_t n, std::size_t x) const;
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const;
  Value map(const Value& v, std::size_t m, std::size_t n, const IndexFn& f) const;
  Value pair(const Value& a, std::size_t m, const Value& b, std::size_t n) const;
  bool leq(const Value& a, const Value& b) const { return (a & ~b) == 0; }
  std::string show(const Value& v) const;
  nlohmann::json to_json(const Value& v) const { return v; }
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

class NonemptyPowersetMonad : public PowersetMonad {
 public:
  std::string name() const { return "nonempty-powerset"; }
  std::optional<std::uint64_t> value_count(std::size_t n) const;
  Value value_at(std::size_t, std::uint64_t i) const { return i + 1; }
  std::optional<std::uint64_t> value_index(std::size_t, const Value& v) const;
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const { return v != 0 && PowersetMonad::valid(n, v); }
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

/// X + {⊥}; ⊥ is encoded as -1 and is the least element.
class LiftingMonad {
 public:
  using Value = std::int64_t;
  static constexpr Value kBottom = -1;
  std::string name() const { return "lifting"; }
  std::optional<std::uint64_t> value_count(std::size_t n) const { return n + 1; }
  Value value_at(std::size_t, std::uint64_t i) const { return static_cast<Value>(i) - 1; }
  std::optional<std::uint64_t> value_index(std::size_t, const Value& v) const {
    return static_cast<std::uint64_t>(v + 1);
  }
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const {
    return v == kBottom || (v >= 0 && static_cast<std::size_t>(v) < n);
  }
  Value unit(std::size_t, std::size_t x) const { return static_cast<Value>(x); }
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const;
  Value map(const Value& v, std::size_t m, std::size_t n, const IndexFn& f) const;
  Value pair(const Value& a, std::size_t m, const Value& b, std::size_t n) const;
  bool leq(const Value& a, const Value& b) const { return a == kBottom || a == b; }
  std::string show(const Value& v) const { return v == kBottom ? "⊥" : std::to_string(v); }
  nlohmann::json to_json(const Value& v) const;
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

/// Finite multisets: natural-number vectors with checked arithmetic.
class MultisetMonad {
 public:
  using Value = std::vector<std::uint64_t>;
  std::string name() const { return "multiset"; }
  std::optional<std::uint64_t> value_count(std::size_t) const { return std::nullopt; }
  Value value_at(std::size_t n, std::uint64_t i) const;
  std::optional<std::uint64_t> value_index(std::size_t, const Value&) const { return std::nullopt; }
  /// Coefficients drawn from {0, 1, 2, 3}.
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const { return v.size() == n; }
  Value unit(std::size_t n, std::size_t x) const;
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const;
  Value map(const Value& v, std::size_t m, std::size_t n, const IndexFn& f) const;
  Value pair(const Value& a, std::size_t m, const Value& b, std::size_t n) const;
  bool leq(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const;
  nlohmann::json to_json(const Value& v) const { return v; }
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

/// Finitely supported probability distributions with exact rationals.
class DistributionMonad {
 public:
  using Value = std::vector<Rational>;
  std::string name() const { return "distribution"; }
  std::optional<std::uint64_t> value_count(std::size_t) const { return std::nullopt; }
  Value value_at(std::size_t n, std::uint64_t i) const;
  std::optional<std::uint64_t> value_index(std::size_t, const Value&) const { return std::nullopt; }
  /// Integer weights in {0, …, 3}, normalized; all-zero draws give a point mass.
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const;
  Value unit(std::size_t n, std::size_t x) const;
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const;
  Value map(const Value& v, std::size_t m, std::size_t n, const IndexFn& f) const;
  Value pair(const Value& a, std::size_t m, const Value& b, std::size_t n) const;
  bool leq(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const;
  nlohmann::json to_json(const Value& v) const;
  Value from_json(const nlohmann::json& j, std::size_t n) const;
};

/// G × − for the cyclic group G = Z/k, written additively.
class WriterMonad {
 public:
  struct Value {
    std::uint32_t g = 0;
    std::size_t x = 0;
    bool operator==(const Value&) const = default;
  };
  explicit WriterMonad(std::uint32_t order = 2);
  std::uint32_t order() const { return k_; }
  std::string name() const { return "writer-z" + std::to_string(k_); }
  std::optional<std::uint64_t> value_count(std::size_t n) const { return std::uint64_t{k_} * n; }
  /// Index g·n + x.
  Value value_at(std::size_t n, std::uint64_t i) const;
  std::optional<std::uint64_t> value_index(std::size_t n, const Value& v) const;
  Value value_sample(std::size_t n, Rng& rng) const;
  bool valid(std::size_t n, const Value& v) const { return v.g < k_ && v.x < n; }
  Value unit(std::size_t, std::size_t x) const { return {0, x}; }
  Value bind(const Value& v, std::size_t m, std::size_t n, const KleisliFn<Value>& k) const;
  Value map(const Value& v, std::size_t m, std::size_t n, const IndexFn& f) const;
  Value pair(const Value& a, std::size_t m, const Value& b, std::size_t n) const;
  bool leq(const Value& a, const Value& b) const { return a == b; }
  std::string show(const Value& v) const;
  nlohmann::json to_json(const Value& v) const { return {v.g, v.x}; }
  Value from_json(const nlohmann::json& j, std::size_t n) const;

 private:
  std::uint32_t k_;
};

using AnyMonad = std::variant<IdentityMonad, PowersetMonad, NonemptyPowersetMonad, LiftingMonad,
                              MultisetMonad, DistributionMonad, WriterMonad>;

/// identity, powerset, nonempty-powerset, lifting, multiset, distribution,
/// writer-z<k>.  Throws FixtureError on an unknown name.
AnyMonad monad_by_name(const std::string& name);
std::vector<std::string> monad_names();

}  // namespace gsmon
