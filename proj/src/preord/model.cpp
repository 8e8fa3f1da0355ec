#include "gsmon/preord/model.hpp"

#include <algorithm>

#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"

namespace gsmon {

FactorPtr make_factor(const FinPreord& p) {
  auto f = std::make_shared<PreordFactor>();
  f->key = p.key();
  f->size = p.size();
  f->leq = [p](std::uint64_t x, std::uint64_t y) { return p.leq(x, y); };
  f->show = [](std::uint64_t x) { return std::to_string(x); };
  return f;
}

std::uint64_t PreordObject::size() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n = saturating_mul(n, f->size);
  return n;
}

std::string PreordObject::describe() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "×";
    s += factors[i]->key;
  }
  return s;
}

bool PreordObject::operator==(const PreordObject& o) const {
  if (factors.size() != o.factors.size()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] != o.factors[i] && factors[i]->key != o.factors[i]->key) return false;
  return true;
}

PreordObject preord_object(const FinPreord& p) { return {{make_factor(p)}}; }

std::uint64_t flatten(const PreordObject& o, const Point& p) {
  std::uint64_t i = 0;
  for (std::size_t k = 0; k < o.factors.size(); ++k) i = i * o.factors[k]->size + p[k];
  return i;
}

Point unflatten(const PreordObject& o, std::uint64_t i) {
  Point p(o.factors.size());
  for (std::size_t k = o.factors.size(); k-- > 0;) {
    p[k] = i % o.factors[k]->size;
    i /= o.factors[k]->size;
  }
  return p;
}

bool point_leq(const PreordObject& o, const Point& p, const Point& q) {
  for (std::size_t k = 0; k < o.factors.size(); ++k)
    if (p[k] != q[k] && !o.factors[k]->leq(p[k], q[k])) return false;
  return true;
}

std::string show_point(const PreordObject& o, const Point& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += o.factors[k]->show(p[k]);
  }
  return s + ")";
}

namespace {

Point random_point(const PreordObject& o, Rng& rng) {
  Point p(o.factors.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (o.factors[k]->size == 0) throw Infeasible("empty preorder " + o.factors[k]->key);
    p[k] = std::uniform_int_distribution<std::uint64_t>(0, o.factors[k]->size - 1)(rng);
  }
  return p;
}

}  // namespace

PreordModel::PreordModel(std::vector<PreordObject> objects, Options opts)
    : objects_(std::move(objects)), opts_(opts) {
  if (std::find(objects_.begin(), objects_.end(), PreordObject{}) == objects_.end())
    objects_.insert(objects_.begin(), PreordObject{});
  for (const auto& o : objects_)
    for (const auto& f : o.factors) factor_keys_.push_back(f->key);
  std::sort(factor_keys_.begin(), factor_keys_.end());
  factor_keys_.erase(std::unique(factor_keys_.begin(), factor_keys_.end()), factor_keys_.end());
}

PreordModel::PreordModel(const std::vector<FinPreord>& objects, Options opts)
    : PreordModel(
          [&] {
            std::vector<PreordObject> v;
            for (const auto& p : objects) v.push_back(preord_object(p));
            return v;
          }(),
          opts) {}

bool PreordModel::contains(const PreordObject& a) const {
  if (std::find(objects_.begin(), objects_.end(), a) != objects_.end()) return true;
  if (a.size() > opts_.contains_bound) return false;
  return std::all_of(a.factors.begin(), a.factors.end(), [&](const FactorPtr& f) {
    return std::binary_search(factor_keys_.begin(), factor_keys_.end(), f->key);
  });
}

PreordObject PreordModel::tensor_objects(const PreordObject& a, const PreordObject& b) const {
  PreordObject c = a;
  c.factors.insert(c.factors.end(), b.factors.begin(), b.factors.end());
  return c;
}

PreordMap PreordModel::identity(const PreordObject& a) const {
  return {a, a, [](const Point& p) { return p; }, "id_" + a.describe()};
}

PreordMap PreordModel::compose(const PreordMap& g, const PreordMap& f) const {
  if (!(f.tgt == g.src))
    throw TypeMismatch("cannot compose " + g.label + " after " + f.label + ": " + f.tgt.describe() +
                       " vs " + g.src.describe());
  auto ga = g.apply, fa = f.apply;
  return {f.src, g.tgt, [ga, fa](const Point& p) { return ga(fa(p)); },
          "(" + g.label + "∘" + f.label + ")"};
}

PreordMap PreordModel::tensor(const PreordMap& f, const PreordMap& g) const {
  auto fa = f.apply, ga = g.apply;
  std::size_t k = f.src.factors.size();
  return {tensor_objects(f.src, g.src), tensor_objects(f.tgt, g.tgt),
          [fa, ga, k](const Point& p) {
            Point out = fa(Point(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k)));
            Point rest = ga(Point(p.begin() + static_cast<std::ptrdiff_t>(k), p.end()));
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
          },
          "(" + f.label + "⊗" + g.label + ")"};
}

PreordMap PreordModel::symmetry(const PreordObject& a, const PreordObject& b) const {
  std::size_t k = a.factors.size();
  return {tensor_objects(a, b), tensor_objects(b, a),
          [k](const Point& p) {
            Point out(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
            out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
            return out;
          },
          "γ_{" + a.describe() + "," + b.describe() + "}"};
}

PreordMap PreordModel::dup(const PreordObject& a) const {
  return {a, tensor_objects(a, a),
          [](const Point& p) {
            Point out = p;
            out.insert(out.end(), p.begin(), p.end());
            return out;
          },
          "∇_" + a.describe()};
}

PreordMap PreordModel::discharge(const PreordObject& a) const {
  return {a, PreordObject{}, [](const Point&) { return Point{}; }, "!_" + a.describe()};
}

template <class Fn>
bool PreordModel::all_points(const PreordMap& f, const PreordMap& g, Fn&& fn) const {
  if (!(f.src == g.src) || !(f.tgt == g.tgt)) return false;
  const std::uint64_t n = f.src.size();
  if (n <= opts_.point_budget) {
    for (std::uint64_t i = 0; i < n; ++i) {
      Point p = unflatten(f.src, i);
      if (!fn(f.apply(p), g.apply(p))) return false;
    }
    return true;
  }
  ++sampled_;
  Rng rng(derive_seed(0, f.src.describe() + "|" + f.label + "|" + g.label));
  for (std::uint64_t t = 0; t < opts_.point_samples; ++t) {
    Point p = random_point(f.src, rng);
    if (!fn(f.apply(p), g.apply(p))) return false;
  }
  return true;
}

bool PreordModel::equal(const PreordMap& f, const PreordMap& g) const {
  return all_points(f, g, [](const Point& x, const Point& y) { return x == y; });
}

bool PreordModel::leq(const PreordMap& f, const PreordMap& g) const {
  const auto& t = f.tgt;
  return all_points(f, g, [&t](const Point& x, const Point& y) { return point_leq(t, x, y); });
}

bool PreordModel::is_monotone(const PreordMap& f) const {
  const std::uint64_t n = f.src.size();
  auto check = [&](const Point& p, const Point& q) {
    return !point_leq(f.src, p, q) || point_leq(f.tgt, f.apply(p), f.apply(q));
  };
  if (n <= 256) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        if (!check(unflatten(f.src, i), unflatten(f.src, j))) return false;
    return true;
  }
  Rng rng(derive_seed(0, "monotone|" + f.label));
  for (std::uint64_t t = 0; t < opts_.point_samples; ++t)
    if (!check(random_point(f.src, rng), random_point(f.src, rng))) return false;
  return true;
}

PreordMap PreordModel::from_table(const PreordObject& a, const PreordObject& b,
                                  std::vector<std::uint64_t> table, std::string label) const {
  if (table.size() != a.size())
    throw DimensionMismatch("table has " + std::to_string(table.size()) + " entries for " +
                            std::to_string(a.size()) + " points");
  auto t = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  return {a, b, [a, b, t](const Point& p) { return unflatten(b, (*t)[flatten(a, p)]); },
          std::move(label)};
}

const PreordModel::Hom* PreordModel::hom(const PreordObject& a, const PreordObject& b) const {
  const std::uint64_t n = a.size(), k = b.size();
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < n && space <= opts_.enum_bound; ++i) space = saturating_mul(space, k);
  if (space > opts_.enum_bound) return nullptr;
  std::string key = a.describe() + "→" + b.describe();
  std::lock_guard lock(mu_);
  auto it = homs_.find(key);
  if (it != homs_.end()) return it->second.get();
  auto h = std::make_unique<Hom>();
  std::vector<std::uint8_t> la(n * n), lb(k * k);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) la[i * n + j] = point_leq(a, unflatten(a, i), unflatten(a, j));
  for (std::uint64_t i = 0; i < k; ++i)
    for (std::uint64_t j = 0; j < k; ++j) lb[i * k + j] = point_leq(b, unflatten(b, i), unflatten(b, j));
  if (k > 0 || n == 0) {
    std::vector<std::uint64_t> v(n, 0);
    for (bool more = true; more;) {
      bool ok = true;
      for (std::uint64_t i = 0; i < n && ok; ++i)
        for (std::uint64_t j = 0; j < n && ok; ++j)
          if (la[i * n + j] && !lb[v[i] * k + v[j]]) ok = false;
      if (ok) {
        h->index.emplace(v, h->tables.size());
        h->tables.push_back(v);
      }
      more = false;
      for (std::uint64_t i = n; i-- > 0;) {
        if (++v[i] < k) {
          more = true;
          break;
        }
        v[i] = 0;
      }
    }
  }
  return homs_.emplace(key, std::move(h)).first->second.get();
}

HomSize PreordModel::hom_size(const PreordObject& a, const PreordObject& b) const {
  const Hom* h = hom(a, b);
  if (!h) return std::nullopt;
  return h->tables.size();
}

PreordMap PreordModel::hom_at(const PreordObject& a, const PreordObject& b, std::uint64_t i) const {
  const Hom* h = hom(a, b);
  if (!h) throw Infeasible("hom(" + a.describe() + ", " + b.describe() + ") is not enumerable");
  if (i >= h->tables.size()) throw DimensionMismatch("hom index out of range");
  std::string label = "[";
  for (std::size_t x = 0; x < h->tables[i].size(); ++x)
    label += (x ? "," : "") + std::to_string(h->tables[i][x]);
  label += "]:" + a.describe() + "→" + b.describe();
  return from_table(a, b, h->tables[i], label);
}

PreordMap PreordModel::hom_sample(const PreordObject& a, const PreordObject& b, Rng& rng) const {
  if (const Hom* h = hom(a, b)) {
    if (h->tables.empty()) throw Infeasible("hom(" + a.describe() + ", " + b.describe() + ") is empty");
    return hom_at(a, b, std::uniform_int_distribution<std::uint64_t>(0, h->tables.size() - 1)(rng));
  }
  Point c = random_point(b, rng);
  return {a, b, [c](const Point&) { return c; }, "const" + show_point(b, c)};
}

std::optional<std::uint64_t> PreordModel::hom_index(const PreordMap& f) const {
  const Hom* h = hom(f.src, f.tgt);
  if (!h) return std::nullopt;
  std::vector<std::uint64_t> v(f.src.size());
  for (std::uint64_t i = 0; i < v.size(); ++i) v[i] = flatten(f.tgt, f.apply(unflatten(f.src, i)));
  auto it = h->index.find(v);
  if (it == h->index.end()) return std::nullopt;
  return it->second;
}

}  // namespace gsmon
