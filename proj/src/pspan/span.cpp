#include "gsmon/pspan/span.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gsmon/core/errors.hpp"

namespace gsmon {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

/// Number of multisets of size s over k elements, saturating.
std::uint64_t multisets(std::uint64_t k, std::uint64_t s) {
  if (s == 0) return 1;
  if (k == 0) return 0;
  // C(k+s-1, s), exact at every step
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    r = r * (k - 1 + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

void check_leg(const std::vector<std::size_t>& leg, std::size_t n, const char* which) {
  for (auto v : leg)
    if (v >= n)
      throw DimensionMismatch(std::string(which) + " leg value " + std::to_string(v) +
                              " out of range " + std::to_string(n));
}

void same_boundary(const Span& s, const Span& t) {
  if (s.src() != t.src() || s.tgt() != t.tgt())
    throw DimensionMismatch("spans " + to_string(s) + " and " + to_string(t) + " differ in boundary");
}

}  // namespace

Span::Span(std::size_t src, std::size_t tgt, std::vector<std::size_t> left, std::vector<std::size_t> right)
    : src_(src), tgt_(tgt), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size())
    throw DimensionMismatch("span legs have " + std::to_string(left_.size()) + " and " +
                            std::to_string(right_.size()) + " entries");
  check_leg(left_, src_, "left");
  check_leg(right_, tgt_, "right");
  std::vector<std::size_t> order(left_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair{left_[a], right_[a]} < std::pair{left_[b], right_[b]};
  });
  std::vector<std::size_t> l, r;
  l.reserve(order.size());
  r.reserve(order.size());
  for (auto i : order) {
    l.push_back(left_[i]);
    r.push_back(right_[i]);
  }
  left_ = std::move(l);
  right_ = std::move(r);
}

std::vector<std::uint64_t> Span::codes() const {
  std::vector<std::uint64_t> c(apex());
  for (std::size_t i = 0; i < apex(); ++i) c[i] = std::uint64_t{left_[i]} * tgt_ + right_[i];
  return c;
}

Span span_canonicalize(std::size_t src, std::size_t tgt, std::vector<std::size_t> left,
                       std::vector<std::size_t> right) {
  return Span(src, tgt, std::move(left), std::move(right));
}

Span span_from_pairs(std::size_t src, std::size_t tgt,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> l, r;
  for (auto [a, b] : pairs) {
    l.push_back(a);
    r.push_back(b);
  }
  return Span(src, tgt, std::move(l), std::move(r));
}

Span span_of_function(std::size_t src, std::size_t tgt, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<std::size_t> l(src), r(src);
  for (std::size_t x = 0; x < src; ++x) {
    l[x] = x;
    r[x] = f(x);
  }
  return Span(src, tgt, std::move(l), std::move(r));
}

Span span_compose(const Span& t, const Span& s) {
  if (s.tgt() != t.src())
    throw DimensionMismatch("span compose: " + std::to_string(s.tgt()) + " vs " + std::to_string(t.src()));
  std::vector<std::size_t> l, r;
  for (std::size_t a = 0; a < s.apex(); ++a)
    for (std::size_t b = 0; b < t.apex(); ++b)
      if (s.right()[a] == t.left()[b]) {
        l.push_back(s.left()[a]);
        r.push_back(t.right()[b]);
      }
  return Span(s.src(), t.tgt(), std::move(l), std::move(r));
}

Span span_tensor(const Span& s, const Span& t) {
  std::vector<std::size_t> l, r;
  l.reserve(s.apex() * t.apex());
  r.reserve(s.apex() * t.apex());
  for (std::size_t a = 0; a < s.apex(); ++a)
    for (std::size_t b = 0; b < t.apex(); ++b) {
      l.push_back(s.left()[a] * t.src() + t.left()[b]);
      r.push_back(s.right()[a] * t.tgt() + t.right()[b]);
    }
  return Span(s.src() * t.src(), s.tgt() * t.tgt(), std::move(l), std::move(r));
}

Span span_id(std::size_t n) {
  return span_of_function(n, n, [](std::size_t x) { return x; });
}

Span span_symmetry(std::size_t m, std::size_t n) {
  return span_of_function(m * n, n * m, [m, n](std::size_t i) { return (i % n) * m + i / n; });
}

Span span_dup(std::size_t n) {
  return span_of_function(n, n * n, [n](std::size_t x) { return x * n + x; });
}

Span span_discharge(std::size_t n) {
  return span_of_function(n, 1, [](std::size_t) { return std::size_t{0}; });
}

bool span_leq_search(const Span& s, const Span& t) {
  same_boundary(s, t);
  const std::size_t m = s.apex(), n = t.apex();
  // backtracking over apex maps α, extending one element at a time
  std::vector<std::size_t> alpha(m, 0);
  std::size_t a = 0;
  while (a < m) {
    while (alpha[a] < n &&
           (t.left()[alpha[a]] != s.left()[a] || t.right()[alpha[a]] != s.right()[a]))
      ++alpha[a];
    if (alpha[a] < n) {
      ++a;
      continue;
    }
    if (a == 0) return false;
    alpha[a] = 0;
    ++alpha[--a];
  }
  return true;
}

bool span_leq_support(const Span& s, const Span& t) {
  same_boundary(s, t);
  auto tc = t.codes();
  for (auto c : s.codes())
    if (!std::binary_search(tc.begin(), tc.end(), c)) return false;
  return true;
}

bool span_leq(const Span& s, const Span& t) { return span_leq_support(s, t); }

bool span_is_weakly_functional(const Span& s) {
  // canonical order groups equal left values together
  for (std::size_t i = 1; i < s.apex(); ++i)
    if (s.left()[i] == s.left()[i - 1] && s.right()[i] != s.right()[i - 1]) return false;
  return true;
}

bool span_is_weakly_total(const Span& s) {
  std::vector<bool> hit(s.src(), false);
  for (auto l : s.left()) hit[l] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string to_string(const Span& s) {
  std::string out = std::to_string(s.src()) + "<-" + std::to_string(s.apex()) + "->" +
                    std::to_string(s.tgt()) + "{";
  for (std::size_t i = 0; i < s.apex(); ++i)
    out += (i ? "," : "") + std::string("(") + std::to_string(s.left()[i]) + "," +
           std::to_string(s.right()[i]) + ")";
  return out + "}";
}

nlohmann::ordered_json to_json(const Span& s) {
  nlohmann::ordered_json j;
  j["src"] = s.src();
  j["tgt"] = s.tgt();
  j["left"] = s.left();
  j["right"] = s.right();
  return j;
}

Span span_from_json(const nlohmann::json& j) {
  try {
    return Span(j.at("src").get<std::size_t>(), j.at("tgt").get<std::size_t>(),
                j.at("left").get<std::vector<std::size_t>>(), j.at("right").get<std::vector<std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed span fixture: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw FixtureError(std::string("invalid span fixture: ") + e.what());
  }
}

std::uint64_t span_count(std::size_t src, std::size_t tgt, std::size_t bound) {
  std::uint64_t k = std::uint64_t{src} * tgt, total = 0;
  for (std::size_t s = 0; s <= bound; ++s) total = sat_add(total, multisets(k, s));
  return total;
}

Span span_at(std::size_t src, std::size_t tgt, std::size_t bound, std::uint64_t i) {
  const std::uint64_t k = std::uint64_t{src} * tgt;
  std::size_t size = 0;
  for (;; ++size) {
    if (size > bound) throw Infeasible("span index " + std::to_string(i) + " out of range");
    auto c = multisets(k, size);
    if (i < c) break;
    i -= c;
  }
  std::vector<std::size_t> l, r;
  std::uint64_t lo = 0;
  for (std::size_t j = 0; j < size; ++j) {
    for (std::uint64_t v = lo;; ++v) {
      auto c = multisets(k - v, size - j - 1);
      if (i < c) {
        l.push_back(v / tgt);
        r.push_back(v % tgt);
        lo = v;
        break;
      }
      i -= c;
    }
  }
  return Span(src, tgt, std::move(l), std::move(r));
}

std::optional<std::uint64_t> span_index(const Span& s, std::size_t bound) {
  if (s.apex() > bound) return std::nullopt;
  const std::uint64_t k = std::uint64_t{s.src()} * s.tgt();
  std::uint64_t i = 0;
  for (std::size_t z = 0; z < s.apex(); ++z) i = sat_add(i, multisets(k, z));
  auto codes = s.codes();
  std::uint64_t lo = 0;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    for (std::uint64_t v = lo; v < codes[j]; ++v) i = sat_add(i, multisets(k - v, codes.size() - j - 1));
    lo = codes[j];
  }
  return i;
}

Span random_span(std::size_t src, std::size_t tgt, std::size_t bound, Rng& rng) {
  if (src == 0 || tgt == 0) return Span(src, tgt, {}, {});
  auto size = std::uniform_int_distribution<std::size_t>(0, bound)(rng);
  std::vector<std::size_t> l(size), r(size);
  for (std::size_t j = 0; j < size; ++j) {
    l[j] = std::uniform_int_distribution<std::size_t>(0, src - 1)(rng);
    r[j] = std::uniform_int_distribution<std::size_t>(0, tgt - 1)(rng);
  }
  return Span(src, tgt, std::move(l), std::move(r));
}

}  // namespace gsmon
