#include "gsmon/core/presentation.hpp"

#include <algorithm>

namespace gsmon {

namespace {

using json = nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw MalformedPresentation(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw MalformedPresentation(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& tuple(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw MalformedPresentation(std::string(what) + " entries must be arrays of length " +
                                std::to_string(n));
  return j;
}

}  // namespace

void TablePresentation::add_object(const std::string& name) {
  if (object_by_name_.count(name)) throw MalformedPresentation("duplicate object '" + name + "'");
  ObjectId id{static_cast<std::uint32_t>(object_names_.size())};
  object_names_.push_back(name);
  object_list_.push_back(id);
  object_by_name_[name] = id;
}

MorphismId TablePresentation::add_morphism(const std::string& name, ObjectId dom, ObjectId cod) {
  if (mor_by_name_.count(name)) throw MalformedPresentation("duplicate morphism '" + name + "'");
  MorphismId id{static_cast<std::uint32_t>(mors_.size())};
  auto& h = hom(dom, cod);
  mors_.push_back(Mor{name, dom, cod, h.size()});
  h.push_back(id);
  mor_by_name_[name] = id;
  return id;
}

ObjectId TablePresentation::object(const std::string& name) const {
  auto it = object_by_name_.find(name);
  if (it == object_by_name_.end()) throw MalformedPresentation("unknown object '" + name + "'");
  return it->second;
}

MorphismId TablePresentation::morphism(const std::string& name) const {
  auto it = mor_by_name_.find(name);
  if (it == mor_by_name_.end()) throw MalformedPresentation("unknown morphism '" + name + "'");
  return it->second;
}

std::string TablePresentation::describe_object(ObjectId a) const {
  if (a.v >= object_names_.size()) return "<outside>";
  return object_names_[a.v];
}

ObjectId TablePresentation::tensor_objects(ObjectId a, ObjectId b) const {
  if (a.v >= object_names_.size() || b.v >= object_names_.size()) return ObjectId{};
  return tensor_obj_[a.v * object_names_.size() + b.v];
}

MorphismId TablePresentation::identity(ObjectId a) const {
  if (a.v >= identity_.size()) throw MalformedPresentation("identity of an unknown object");
  return identity_[a.v];
}

MorphismId TablePresentation::compose(MorphismId g, MorphismId f) const {
  if (cod(f) != dom(g))
    throw MalformedPresentation("composite " + describe(g) + " ∘ " + describe(f) + " ill-typed");
  auto it = compose_.find(pair_key(g.v, f.v));
  if (it == compose_.end())
    throw MalformedPresentation("composite " + describe(g) + " ∘ " + describe(f) + " undefined");
  return it->second;
}

MorphismId TablePresentation::tensor(MorphismId f, MorphismId g) const {
  auto it = tensor_.find(pair_key(f.v, g.v));
  if (it == tensor_.end())
    throw MalformedPresentation("tensor " + describe(f) + " ⊗ " + describe(g) + " undefined");
  return it->second;
}

MorphismId TablePresentation::symmetry(ObjectId a, ObjectId b) const {
  auto it = symmetry_.find(pair_key(a.v, b.v));
  if (it == symmetry_.end())
    throw MissingStructure("symmetry " + describe_object(a) + "," + describe_object(b));
  return it->second;
}

MorphismId TablePresentation::dup(ObjectId a) const {
  if (a.v >= dup_.size() || dup_[a.v] == MorphismId{})
    throw MissingStructure("dup on " + describe_object(a));
  return dup_[a.v];
}

MorphismId TablePresentation::discharge(ObjectId a) const {
  if (a.v >= discharge_.size() || discharge_[a.v] == MorphismId{})
    throw MissingStructure("discharge on " + describe_object(a));
  return discharge_[a.v];
}

bool TablePresentation::leq(MorphismId f, MorphismId g) const {
  if (!has_leq_) throw MissingPreorder("presentation has no preorder");
  if (dom(f) != dom(g) || cod(f) != cod(g)) return false;
  auto it = leq_.find(key(dom(f), cod(f)));
  std::size_t n = homs_.at(key(dom(f), cod(f))).size();
  return it->second[mor(f).local * n + mor(g).local] != 0;
}

HomSize TablePresentation::hom_size(ObjectId a, ObjectId b) const {
  auto it = homs_.find(key(a, b));
  return it == homs_.end() ? 0 : it->second.size();
}

MorphismId TablePresentation::hom_at(ObjectId a, ObjectId b, std::uint64_t i) const {
  return homs_.at(key(a, b)).at(i);
}

MorphismId TablePresentation::hom_sample(ObjectId a, ObjectId b, Rng& rng) const {
  const auto& h = homs_.at(key(a, b));
  std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
  return h[pick(rng)];
}

TablePresentation TablePresentation::from_json(const nlohmann::json& j) {
  TablePresentation p;
  try {
    for (const auto& o : field(j, "objects")) p.add_object(str(o, "object"));
    p.unit_ = p.object(str(field(j, "unit"), "unit"));
    const std::size_t n = p.object_names_.size();
    p.tensor_obj_.assign(n * n, ObjectId{});
    for (auto a : p.object_list_) {
      p.tensor_obj_[p.unit_.v * n + a.v] = a;
      p.tensor_obj_[a.v * n + p.unit_.v] = a;
    }
    if (j.contains("tensor"))
      for (const auto& t : j.at("tensor")) {
        tuple(t, 3, "tensor");
        auto a = p.object(str(t[0], "object")), b = p.object(str(t[1], "object"));
        p.tensor_obj_[a.v * n + b.v] = p.object(str(t[2], "object"));
      }
    for (const auto& m : field(j, "morphisms"))
      p.add_morphism(str(field(m, "name"), "morphism name"), p.object(str(field(m, "dom"), "dom")),
                     p.object(str(field(m, "cod"), "cod")));

    auto typed = [&](MorphismId f, ObjectId a, ObjectId b, const std::string& what) {
      if (p.dom(f) != a || p.cod(f) != b)
        throw MalformedPresentation(what + " '" + p.describe(f) + "' has the wrong type");
    };
    auto per_object = [&](const char* name, std::vector<MorphismId>& out) {
      out.assign(n, MorphismId{});
      if (!j.contains(name)) return;
      for (const auto& [k, v] : j.at(name).items()) out[p.object(k).v] = p.morphism(str(v, name));
    };
    per_object("identity", p.identity_);
    per_object("dup", p.dup_);
    per_object("discharge", p.discharge_);
    for (auto a : p.object_list_) {
      if (p.identity_[a.v] == MorphismId{})
        throw MalformedPresentation("object '" + p.describe_object(a) + "' has no identity");
      typed(p.identity_[a.v], a, a, "identity");
      if (p.dup_[a.v] != MorphismId{}) {
        auto aa = p.tensor_objects(a, a);
        if (aa == ObjectId{}) throw MalformedPresentation("dup on an object whose square is absent");
        typed(p.dup_[a.v], a, aa, "dup");
      }
      if (p.discharge_[a.v] != MorphismId{}) typed(p.discharge_[a.v], a, p.unit_, "discharge");
    }
    auto id_unit = p.identity_[p.unit_.v];
    if (p.dup_[p.unit_.v] == MorphismId{}) p.dup_[p.unit_.v] = id_unit;
    if (p.discharge_[p.unit_.v] == MorphismId{}) p.discharge_[p.unit_.v] = id_unit;

    if (j.contains("symmetry"))
      for (const auto& t : j.at("symmetry")) {
        tuple(t, 3, "symmetry");
        auto a = p.object(str(t[0], "object")), b = p.object(str(t[1], "object"));
        auto s = p.morphism(str(t[2], "symmetry"));
        auto ab = p.tensor_objects(a, b), ba = p.tensor_objects(b, a);
        if (ab == ObjectId{} || ba == ObjectId{})
          throw MalformedPresentation("symmetry on objects whose tensor is absent");
        typed(s, ab, ba, "symmetry");
        p.symmetry_[pair_key(a.v, b.v)] = s;
      }
    for (auto a : p.object_list_) {
      p.symmetry_.try_emplace(pair_key(a.v, p.unit_.v), p.identity_[a.v]);
      p.symmetry_.try_emplace(pair_key(p.unit_.v, a.v), p.identity_[a.v]);
    }

    if (j.contains("compose"))
      for (const auto& t : j.at("compose")) {
        tuple(t, 3, "compose");
        auto g = p.morphism(str(t[0], "morphism")), f = p.morphism(str(t[1], "morphism"));
        auto h = p.morphism(str(t[2], "morphism"));
        if (p.cod(f) != p.dom(g))
          throw MalformedPresentation("compose entry " + p.describe(g) + " ∘ " + p.describe(f) +
                                      ": cod/dom mismatch");
        typed(h, p.dom(f), p.cod(g), "composite");
        p.compose_[pair_key(g.v, f.v)] = h;
      }
    for (std::uint32_t i = 0; i < p.mors_.size(); ++i) {
      MorphismId f{i};
      p.compose_.try_emplace(pair_key(p.identity_[p.cod(f).v].v, i), f);
      p.compose_.try_emplace(pair_key(i, p.identity_[p.dom(f).v].v), f);
    }

    if (j.contains("tensor_mor"))
      for (const auto& t : j.at("tensor_mor")) {
        tuple(t, 3, "tensor_mor");
        auto f = p.morphism(str(t[0], "morphism")), g = p.morphism(str(t[1], "morphism"));
        auto h = p.morphism(str(t[2], "morphism"));
        auto a = p.tensor_objects(p.dom(f), p.dom(g)), b = p.tensor_objects(p.cod(f), p.cod(g));
        if (a == ObjectId{} || b == ObjectId{})
          throw MalformedPresentation("tensor entry leaves the object list");
        typed(h, a, b, "tensor");
        p.tensor_[pair_key(f.v, g.v)] = h;
      }
    for (std::uint32_t i = 0; i < p.mors_.size(); ++i) {
      p.tensor_.try_emplace(pair_key(i, id_unit.v), MorphismId{i});
      p.tensor_.try_emplace(pair_key(id_unit.v, i), MorphismId{i});
    }

    if (j.contains("leq")) {
      p.has_leq_ = true;
      for (auto& [k, ids] : p.homs_) {
        auto& mat = p.leq_[k];
        mat.assign(ids.size() * ids.size(), 0);
        for (std::size_t i = 0; i < ids.size(); ++i) mat[i * ids.size() + i] = 1;
      }
      for (const auto& t : j.at("leq")) {
        tuple(t, 2, "leq");
        auto f = p.morphism(str(t[0], "morphism")), g = p.morphism(str(t[1], "morphism"));
        if (p.dom(f) != p.dom(g) || p.cod(f) != p.cod(g))
          throw MalformedPresentation("leq pair " + p.describe(f) + " <= " + p.describe(g) +
                                      " crosses hom-sets");
        std::size_t sz = p.homs_.at(p.key(p.dom(f), p.cod(f))).size();
        p.leq_[p.key(p.dom(f), p.cod(f))][p.mor(f).local * sz + p.mor(g).local] = 1;
      }
      for (auto& [k, mat] : p.leq_) {
        std::size_t sz = p.homs_.at(k).size();
        for (std::size_t m = 0; m < sz; ++m)
          for (std::size_t i = 0; i < sz; ++i)
            if (mat[i * sz + m])
              for (std::size_t l = 0; l < sz; ++l)
                if (mat[m * sz + l]) mat[i * sz + l] = 1;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedPresentation(e.what());
  }
  return p;
}

nlohmann::ordered_json TablePresentation::to_json() const {
  using oj = nlohmann::ordered_json;
  const std::size_t n = object_names_.size();
  oj j;
  j["objects"] = object_names_;
  j["unit"] = object_names_.at(unit_.v);
  oj tensor = oj::array();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (tensor_obj_[a * n + b] != ObjectId{} && a != unit_.v && b != unit_.v)
        tensor.push_back({object_names_[a], object_names_[b],
                          object_names_[tensor_obj_[a * n + b].v]});
  j["tensor"] = tensor;
  oj mors = oj::array();
  for (const auto& m : mors_)
    mors.push_back({{"name", m.name}, {"dom", object_names_[m.dom.v]}, {"cod", object_names_[m.cod.v]}});
  j["morphisms"] = mors;
  auto per_object = [&](const std::vector<MorphismId>& v) {
    oj o = oj::object();
    for (std::uint32_t a = 0; a < n; ++a)
      if (a < v.size() && v[a] != MorphismId{}) o[object_names_[a]] = mors_[v[a].v].name;
    return o;
  };
  j["identity"] = per_object(identity_);
  j["dup"] = per_object(dup_);
  j["discharge"] = per_object(discharge_);
  auto triples = [&](const auto& table, auto first_name, auto second_name) {
    std::vector<std::pair<std::uint64_t, MorphismId>> entries(table.begin(), table.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    oj out = oj::array();
    for (const auto& [k, v] : entries)
      out.push_back({first_name(static_cast<std::uint32_t>(k >> 32)),
                     second_name(static_cast<std::uint32_t>(k & 0xffffffffu)), mors_[v.v].name});
    return out;
  };
  auto mname = [&](std::uint32_t i) { return mors_[i].name; };
  auto oname = [&](std::uint32_t i) { return object_names_[i]; };
  j["symmetry"] = triples(symmetry_, oname, oname);
  j["compose"] = triples(compose_, mname, mname);
  j["tensor_mor"] = triples(tensor_, mname, mname);
  if (has_leq_) {
    oj leq = oj::array();
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        auto it = homs_.find(key(ObjectId{a}, ObjectId{b}));
        if (it == homs_.end()) continue;
        const auto& ids = it->second;
        const auto& mat = leq_.at(it->first);
        for (std::size_t i = 0; i < ids.size(); ++i)
          for (std::size_t l = 0; l < ids.size(); ++l)
            if (i != l && mat[i * ids.size() + l])
              leq.push_back({mors_[ids[i].v].name, mors_[ids[l].v].name});
      }
    j["leq"] = leq;
  }
  return j;
}

}  // namespace gsmon
