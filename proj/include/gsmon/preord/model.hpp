#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gsmon/core/model.hpp"
#include "gsmon/preord/finpreord.hpp"

namespace gsmon {

/// One factor of a product preorder.  Factors are identified by `key`; two
/// factors with the same key must describe the same preorder.
struct PreordFactor {
  std::string key;
  std::uint64_t size = 0;
  std::function<bool(std::uint64_t, std::uint64_t)> leq;
  std::function<std::string(std::uint64_t)> show;
};
using FactorPtr = std::shared_ptr<const PreordFactor>;

FactorPtr make_factor(const FinPreord& p);

/// A finite product of factors; the empty product is the unit.  Tensor is
/// concatenation, so the monoidal structure is strict.
struct PreordObject {
  std::vector<FactorPtr> factors;

  /// Number of points, saturating at UINT64_MAX.
  std::uint64_t size() const;
  std::string describe() const;
  bool operator==(const PreordObject& o) const;
};

PreordObject preord_object(const FinPreord& p);

/// One coordinate per factor.
using Point = std::vector<std::uint64_t>;

/// Row-major index of a point, matching FinRel's pairing.
std::uint64_t flatten(const PreordObject& o, const Point& p);
Point unflatten(const PreordObject& o, std::uint64_t i);
bool point_leq(const PreordObject& o, const Point& p, const Point& q);
std::string show_point(const PreordObject& o, const Point& p);

struct PreordMap {
  PreordObject src;
  PreordObject tgt;
  std::function<Point(const Point&)> apply;
  std::string label;
};

struct PreordOptions {
  std::uint64_t point_budget = 4096;
  std::uint64_t point_samples = 256;
  /// Largest tgt^src function space enumerated to list monotone maps.
  std::uint64_t enum_bound = 65536;
  /// Products of fixture factors up to this many points count as contained.
  std::uint64_t contains_bound = 4;
};

/// Preord restricted to products of finite preorders, with the pointwise
/// order on monotone maps.  Maps are compared on every point up to
/// `point_budget` source points and on seeded samples above it.
class PreordModel {
 public:
  using Object = PreordObject;
  using Morphism = PreordMap;

  using Options = PreordOptions;

  explicit PreordModel(std::vector<PreordObject> objects = {}, Options opts = {});
  explicit PreordModel(const std::vector<FinPreord>& objects, Options opts = {});

  const std::vector<PreordObject>& objects() const { return objects_; }
  bool contains(const PreordObject& a) const;
  PreordObject unit() const { return {}; }
  PreordObject tensor_objects(const PreordObject& a, const PreordObject& b) const;
  const PreordObject& dom(const PreordMap& f) const { return f.src; }
  const PreordObject& cod(const PreordMap& f) const { return f.tgt; }
  PreordMap identity(const PreordObject& a) const;
  PreordMap compose(const PreordMap& g, const PreordMap& f) const;
  PreordMap tensor(const PreordMap& f, const PreordMap& g) const;
  PreordMap symmetry(const PreordObject& a, const PreordObject& b) const;
  PreordMap dup(const PreordObject& a) const;
  PreordMap discharge(const PreordObject& a) const;
  bool equal(const PreordMap& f, const PreordMap& g) const;
  bool has_order() const { return true; }
  bool leq(const PreordMap& f, const PreordMap& g) const;
  HomSize hom_size(const PreordObject& a, const PreordObject& b) const;
  PreordMap hom_at(const PreordObject& a, const PreordObject& b, std::uint64_t i) const;
  PreordMap hom_sample(const PreordObject& a, const PreordObject& b, Rng& rng) const;
  std::optional<std::uint64_t> hom_index(const PreordMap& f) const;
  std::string describe(const PreordMap& f) const { return f.label; }
  std::string describe_object(const PreordObject& a) const { return a.describe(); }

  /// Whether f is monotone, checked like `equal`.
  bool is_monotone(const PreordMap& f) const;
  /// A map given by a table on flattened points.
  PreordMap from_table(const PreordObject& a, const PreordObject& b,
                       std::vector<std::uint64_t> table, std::string label) const;
  /// Number of map comparisons that fell back to sampling.
  std::uint64_t sampled_comparisons() const { return sampled_.load(); }
  const Options& options() const { return opts_; }

 private:
  struct Hom {
    std::vector<std::vector<std::uint64_t>> tables;
    std::map<std::vector<std::uint64_t>, std::uint64_t> index;
  };
  const Hom* hom(const PreordObject& a, const PreordObject& b) const;
  template <class Fn>
  bool all_points(const PreordMap& f, const PreordMap& g, Fn&& fn) const;

  std::vector<PreordObject> objects_;
  std::vector<std::string> factor_keys_;
  Options opts_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::unique_ptr<Hom>> homs_;
  mutable std::atomic<std::uint64_t> sampled_{0};
};

}  // namespace gsmon
