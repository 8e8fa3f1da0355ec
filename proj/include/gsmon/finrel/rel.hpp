#pragma once

#include <cstddef>
#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gsmon {

/// A relation between the finite ordinals src and tgt, stored as dense bitset
/// rows: row a holds the set {b : a R b}.
/// Word storage with inline room for small relations.
class RelWords {
 public:
  static constexpr std::size_t kInline = 16;
  RelWords() = default;
  RelWords(std::size_t n, std::uint64_t v) : n_(n) {
    if (n > kInline) heap_.assign(n, v);
    else std::fill_n(inline_.begin(), n, v);
  }
  std::size_t size() const { return n_; }
  const std::uint64_t* data() const { return n_ > kInline ? heap_.data() : inline_.data(); }
  std::uint64_t* data() { return n_ > kInline ? heap_.data() : inline_.data(); }
  std::uint64_t& operator[](std::size_t i) { return data()[i]; }
  std::uint64_t operator[](std::size_t i) const { return data()[i]; }
  const std::uint64_t* begin() const { return data(); }
  const std::uint64_t* end() const { return data() + n_; }
  friend bool operator==(const RelWords& x, const RelWords& y) {
    return x.n_ == y.n_ && std::equal(x.begin(), x.end(), y.begin());
  }

 private:
  std::size_t n_ = 0;
  std::array<std::uint64_t, kInline> inline_{};
  std::vector<std::uint64_t> heap_;
};

class Rel {
 public:
  Rel() = default;
  Rel(std::size_t src, std::size_t tgt);

  static Rel from_pairs(std::size_t src, std::size_t tgt,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Graph of a partial function; entries equal to -1 are undefined.
  static Rel from_function(std::size_t tgt, const std::vector<long>& values);
  /// Bit k of `mask` is the pair (k / tgt, k % tgt).  Requires src·tgt ≤ 64.
  static Rel from_mask(std::size_t src, std::size_t tgt, std::uint64_t mask);
  static Rel full(std::size_t src, std::size_t tgt);

  std::size_t src() const { return src_; }
  std::size_t tgt() const { return tgt_; }
  bool get(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(std::size_t a, std::size_t b, bool v = true);

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t count() const;
  /// Inverse of from_mask; nullopt when src·tgt > 64.
  std::optional<std::uint64_t> mask() const;

  bool subset_of(const Rel& other) const;
  bool row_empty(std::size_t a) const;
  std::size_t row_count(std::size_t a) const;

  friend bool operator==(const Rel& x, const Rel& y) {
    return x.src_ == y.src_ && x.tgt_ == y.tgt_ && x.bits_ == y.bits_;
  }

  friend Rel compose(const Rel& s, const Rel& r);
  friend Rel operator|(const Rel& x, const Rel& y);

 private:
  const std::uint64_t* row(std::size_t a) const { return bits_.data() + a * words_; }
  std::uint64_t* row(std::size_t a) { return bits_.data() + a * words_; }

  std::size_t src_ = 0;
  std::size_t tgt_ = 0;
  std::size_t words_ = 0;
  RelWords bits_;
};

/// s ∘ r, i.e. first r then s.  Throws DimensionMismatch.
Rel compose(const Rel& s, const Rel& r);
Rel operator|(const Rel& x, const Rel& y);

Rel rel_compose(const Rel& s, const Rel& r);
/// Kronecker tensor: (a·c' + x) related to (b·d' + y) iff a R b and x S y.
Rel rel_tensor(const Rel& r, const Rel& s);
Rel rel_id(std::size_t n);
Rel rel_symmetry(std::size_t m, std::size_t n);
Rel rel_dup(std::size_t n);
Rel rel_discharge(std::size_t n);
bool rel_leq(const Rel& r, const Rel& s);

bool is_partial_function(const Rel& r);
bool is_total_relation(const Rel& r);
/// {(a,a) : ∃b. a R b}
Rel rel_domain(const Rel& r);

std::string to_string(const Rel& r);
nlohmann::ordered_json to_json(const Rel& r);
Rel rel_from_json(const nlohmann::json& j);

Rel random_rel(std::size_t src, std::size_t tgt, std::mt19937_64& rng, double density = 0.5);

}  // namespace gsmon
