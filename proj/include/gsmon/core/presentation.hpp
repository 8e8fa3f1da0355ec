#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/model.hpp"

namespace gsmon {

struct ObjectId {
  std::uint32_t v = std::numeric_limits<std::uint32_t>::max();
  friend auto operator<=>(ObjectId, ObjectId) = default;
};
struct MorphismId {
  std::uint32_t v = std::numeric_limits<std::uint32_t>::max();
  friend auto operator<=>(MorphismId, MorphismId) = default;
};

/// An explicit finite gs-monoidal category given by tables.  Tensor products
/// leaving the object list map to an "outside" object that is never in the
/// fixture.  Unit rules (I⊗A = A, id∘f = f, f⊗id_I = f, γ_{A,I} = id_A,
/// ∇_I = !_I = id_I) are filled in on load unless given explicitly.
class TablePresentation {
 public:
  using Object = ObjectId;
  using Morphism = MorphismId;

  static TablePresentation from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  const std::vector<ObjectId>& objects() const { return object_list_; }
  ObjectId unit() const { return unit_; }
  ObjectId tensor_objects(ObjectId a, ObjectId b) const;
  ObjectId dom(MorphismId f) const { return mor(f).dom; }
  ObjectId cod(MorphismId f) const { return mor(f).cod; }
  MorphismId identity(ObjectId a) const;
  MorphismId compose(MorphismId g, MorphismId f) const;
  MorphismId tensor(MorphismId f, MorphismId g) const;
  MorphismId symmetry(ObjectId a, ObjectId b) const;
  MorphismId dup(ObjectId a) const;
  MorphismId discharge(ObjectId a) const;
  bool equal(MorphismId f, MorphismId g) const { return f == g; }
  bool has_order() const { return has_leq_; }
  bool leq(MorphismId f, MorphismId g) const;
  HomSize hom_size(ObjectId a, ObjectId b) const;
  MorphismId hom_at(ObjectId a, ObjectId b, std::uint64_t i) const;
  MorphismId hom_sample(ObjectId a, ObjectId b, Rng& rng) const;
  std::optional<std::uint64_t> hom_index(MorphismId f) const { return mor(f).local; }
  std::string describe(MorphismId f) const { return mor(f).name; }
  std::string describe_object(ObjectId a) const;

  ObjectId object(const std::string& name) const;
  MorphismId morphism(const std::string& name) const;
  std::size_t morphism_count() const { return mors_.size(); }

  /// Builds a table presentation from any model; every table is filled over
  /// the model's fixture.  Throws Infeasible above `max_entries` table cells.
  template <GsModel M>
  static TablePresentation materialize(const M& m, std::uint64_t max_entries = 1u << 22);

 private:
  struct Mor {
    std::string name;
    ObjectId dom, cod;
    std::uint64_t local = 0;
  };
  const Mor& mor(MorphismId f) const {
    if (f.v >= mors_.size()) throw MalformedPresentation("unknown morphism id");
    return mors_[f.v];
  }
  std::vector<MorphismId>& hom(ObjectId a, ObjectId b) { return homs_[key(a, b)]; }
  std::uint64_t key(ObjectId a, ObjectId b) const {
    return std::uint64_t{a.v} * object_names_.size() + b.v;
  }
  static std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
    return (std::uint64_t{x} << 32) | y;
  }
  void add_object(const std::string& name);
  MorphismId add_morphism(const std::string& name, ObjectId dom, ObjectId cod);
  void finish();

  std::vector<std::string> object_names_;
  std::vector<ObjectId> object_list_;
  std::map<std::string, ObjectId> object_by_name_;
  ObjectId unit_;
  std::vector<ObjectId> tensor_obj_;  // n×n, outside when undefined
  std::vector<Mor> mors_;
  std::map<std::string, MorphismId> mor_by_name_;
  std::unordered_map<std::uint64_t, std::vector<MorphismId>> homs_;
  std::vector<MorphismId> identity_, dup_, discharge_;
  std::unordered_map<std::uint64_t, MorphismId> compose_, tensor_, symmetry_;
  bool has_leq_ = false;
  std::unordered_map<std::uint64_t, std::vector<std::uint8_t>> leq_;  // per hom, N×N
};

template <GsModel M>
TablePresentation TablePresentation::materialize(const M& m, std::uint64_t max_entries) {
  TablePresentation p;
  const auto objs = m.objects();
  std::vector<std::string> names;
  for (const auto& o : objs) {
    names.push_back(m.describe_object(o));
    p.add_object(names.back());
  }
  auto index_of = [&](const ObjectOf<M>& o) -> std::optional<std::uint32_t> {
    for (std::uint32_t i = 0; i < objs.size(); ++i)
      if (objs[i] == o) return i;
    return std::nullopt;
  };
  auto u = index_of(m.unit());
  if (!u) throw MalformedPresentation("unit is not in the fixture");
  p.unit_ = ObjectId{*u};
  const std::size_t n = objs.size();
  p.tensor_obj_.assign(n * n, ObjectId{});
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (auto t = index_of(m.tensor_objects(objs[a], objs[b]))) p.tensor_obj_[a * n + b] = {*t};

  std::uint64_t entries = 0;
  auto bump = [&](std::uint64_t k) {
    entries += k;
    if (entries > max_entries)
      throw Infeasible("materialized tables exceed " + std::to_string(max_entries) + " entries");
  };
  // morphisms per hom, indexed by hom_index order
  std::vector<std::vector<MorphismOf<M>>> values(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      HomSize size = m.hom_size(objs[a], objs[b]);
      if (!size) throw Infeasible("hom-set " + names[a] + "->" + names[b] + " is not enumerable");
      bump(*size);
      for (std::uint64_t i = 0; i < *size; ++i) {
        auto f = m.hom_at(objs[a], objs[b], i);
        values[a * n + b].push_back(f);
        p.add_morphism(m.describe(f), ObjectId{a}, ObjectId{b});
      }
    }
  auto find = [&](const MorphismOf<M>& f) -> MorphismId {
    auto a = index_of(m.dom(f)), b = index_of(m.cod(f));
    if (!a || !b) throw MalformedPresentation("morphism leaves the fixture");
    const auto& hv = values[*a * n + *b];
    const auto& ids = p.homs_[p.key(ObjectId{*a}, ObjectId{*b})];
    if (auto idx = m.hom_index(f); idx && *idx < hv.size() && m.equal(hv[*idx], f))
      return ids[*idx];
    for (std::size_t i = 0; i < hv.size(); ++i)
      if (m.equal(hv[i], f)) return ids[i];
    throw MalformedPresentation("morphism " + m.describe(f) + " not found in its hom-set");
  };
  p.identity_.resize(n);
  p.dup_.assign(n, MorphismId{});
  p.discharge_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    p.identity_[a] = find(m.identity(objs[a]));
    p.discharge_[a] = find(m.discharge(objs[a]));
    if (p.tensor_obj_[a * n + a] != ObjectId{}) p.dup_[a] = find(m.dup(objs[a]));
    for (std::uint32_t b = 0; b < n; ++b)
      if (p.tensor_obj_[a * n + b] != ObjectId{} && p.tensor_obj_[b * n + a] != ObjectId{})
        p.symmetry_[pair_key(a, b)] = find(m.symmetry(objs[a], objs[b]));
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto& fs = values[a * n + b];
        const auto& gs = values[b * n + c];
        bump(fs.size() * gs.size());
        const auto& fid = p.homs_[p.key(ObjectId{a}, ObjectId{b})];
        const auto& gid = p.homs_[p.key(ObjectId{b}, ObjectId{c})];
        for (std::size_t i = 0; i < fs.size(); ++i)
          for (std::size_t j = 0; j < gs.size(); ++j)
            p.compose_[pair_key(gid[j].v, fid[i].v)] = find(m.compose(gs[j], fs[i]));
      }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          if (p.tensor_obj_[a * n + c] == ObjectId{} || p.tensor_obj_[b * n + d] == ObjectId{})
            continue;
          const auto& fs = values[a * n + b];
          const auto& gs = values[c * n + d];
          bump(fs.size() * gs.size());
          const auto& fid = p.homs_[p.key(ObjectId{a}, ObjectId{b})];
          const auto& gid = p.homs_[p.key(ObjectId{c}, ObjectId{d})];
          for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < gs.size(); ++j)
              p.tensor_[pair_key(fid[i].v, gid[j].v)] = find(m.tensor(fs[i], gs[j]));
        }
  if (m.has_order()) {
    p.has_leq_ = true;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto& fs = values[a * n + b];
        bump(fs.size() * fs.size());
        auto& mat = p.leq_[p.key(ObjectId{a}, ObjectId{b})];
        mat.assign(fs.size() * fs.size(), 0);
        for (std::size_t i = 0; i < fs.size(); ++i)
          for (std::size_t j = 0; j < fs.size(); ++j) mat[i * fs.size() + j] = m.leq(fs[i], fs[j]);
      }
  }
  return p;
}

}  // namespace gsmon
