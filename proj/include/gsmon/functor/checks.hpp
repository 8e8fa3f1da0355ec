#pragma once

#include <array>
#include <string>

#include "gsmon/core/checks.hpp"
#include "gsmon/core/enumerate.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/law_report.hpp"
#include "gsmon/functor/functor.hpp"

namespace gsmon {

enum class IdentityMode { Strict, Lax };
enum class GsFlavor { Lax, Oplax, Strong, Strict };

namespace functor_detail {

template <GsModel S, GsModel T>
struct Ctx {
  const FunctorData<S, T>& F;
  const S& s;
  const T& t;
  const CheckOptions& opts;
  IdentityMode mode;

  ObjectOf<T> Fo(const ObjectOf<S>& a) const { return F.on_object(a); }
  MorphismOf<T> Fm(const MorphismOf<S>& f) const { return F.on_morphism(f); }
  ObjectOf<S> sT(const ObjectOf<S>& a, const ObjectOf<S>& b) const { return s.tensor_objects(a, b); }
  ObjectOf<T> tT(const ObjectOf<T>& a, const ObjectOf<T>& b) const { return t.tensor_objects(a, b); }
  /// id_{FA}, or F(id_A) for lax-on-identities mappings.
  MorphismOf<T> iota(const ObjectOf<S>& a) const {
    return mode == IdentityMode::Lax ? Fm(s.identity(a)) : t.identity(Fo(a));
  }
  bool in(std::initializer_list<ObjectOf<S>> objs) const { return detail::all_in(s, objs); }
  std::string so(const ObjectOf<S>& a) const { return s.describe_object(a); }
  std::string sd(const MorphismOf<S>& f) const { return s.describe(f); }
  Items objs(std::initializer_list<std::pair<const char*, ObjectOf<S>>> xs) const {
    Items out;
    for (const auto& [k, v] : xs) out.emplace_back(k, so(v));
    return out;
  }
  void eq(LawResult& law, const MorphismOf<T>& l, const MorphismOf<T>& r, Items items) const {
    if (t.equal(l, r))
      law.pass();
    else
      law.fail({"", std::move(items), t.describe(l), t.describe(r)});
  }
  void le(LawResult& law, const MorphismOf<T>& l, const MorphismOf<T>& r, Items items) const {
    if (t.leq(l, r))
      law.pass();
    else
      law.fail({"", std::move(items), t.describe(l), t.describe(r)});
  }
  void typed(LawResult& law, const MorphismOf<T>& f, const ObjectOf<T>& a, const ObjectOf<T>& b,
             Items items) const {
    if (t.dom(f) == a && t.cod(f) == b)
      law.pass();
    else
      law.fail({"", std::move(items), t.describe_object(t.dom(f)) + " -> " + t.describe_object(t.cod(f)),
                t.describe_object(a) + " -> " + t.describe_object(b)});
  }
};

template <GsModel S, GsModel T>
void functor_laws(LawReport& r, const Ctx<S, T>& c) {
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  auto& typing = r.law("functor-typing");
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    visit(typing, c.opts, detail::key_of(c.s, {o[0], o[1]}), [&](const SMor& f) {
      c.typed(typing, c.Fm(f), c.Fo(o[0]), c.Fo(o[1]), {{"f", c.sd(f)}});
    }, hom_space(c.s, o[0], o[1], c.opts));
  });
  if (c.mode == IdentityMode::Strict) {
    auto& law = r.law("preserves-identity");
    for (const auto& a : c.s.objects())
      c.eq(law, c.Fm(c.s.identity(a)), c.t.identity(c.Fo(a)), c.objs({{"A", a}}));
  } else {
    if (!c.t.has_order()) throw MissingPreorder("lax identities need a target preorder");
    auto& law = r.law("identity-lax");
    for (const auto& a : c.s.objects())
      c.le(law, c.t.identity(c.Fo(a)), c.Fm(c.s.identity(a)), c.objs({{"A", a}}));
  }
  auto& comp = r.law("preserves-composition");
  for_each_objects<3>(c.s, [&](const std::array<SObj, 3>& o) {
    visit(comp, c.opts, detail::key_of(c.s, {o[0], o[1], o[2]}), [&](const SMor& f, const SMor& g) {
      c.eq(comp, c.Fm(c.s.compose(g, f)), c.t.compose(c.Fm(g), c.Fm(f)),
           {{"f", c.sd(f)}, {"g", c.sd(g)}});
    }, hom_space(c.s, o[0], o[1], c.opts), hom_space(c.s, o[1], o[2], c.opts));
  });
}

template <GsModel S, GsModel T>
void monotone_laws(LawReport& r, const Ctx<S, T>& c) {
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  if (!c.s.has_order() || !c.t.has_order())
    throw MissingPreorder("monotonicity needs preorders on source and target");
  auto& law = r.law("monotone");
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    HomOrder<S> order(c.s, o[0], o[1], c.opts);
    visit(law, c.opts, detail::key_of(c.s, {o[0], o[1]}), [&](const std::pair<SMor, SMor>& fg) {
      if (!c.s.leq(fg.first, fg.second)) return;
      c.le(law, c.Fm(fg.first), c.Fm(fg.second), {{"f", c.sd(fg.first)}, {"g", c.sd(fg.second)}});
    }, order.pairs(c.s, c.opts));
  });
}

template <GsModel S, GsModel T>
void lax_laws(LawReport& r, const Ctx<S, T>& c) {
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  if (!c.F.has_lax()) throw MissingStructure(c.F.name + " has no laxator");
  const SObj I = c.s.unit();
  const auto& psi = c.F.laxator;
  auto& typing = r.law("laxator-typing");
  c.typed(typing, c.F.unit_lax(), c.t.unit(), c.Fo(I), {{"map", "psi0"}});
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    if (!c.in({c.sT(o[0], o[1])})) return;
    c.typed(typing, psi(o[0], o[1]), c.tT(c.Fo(o[0]), c.Fo(o[1])), c.Fo(c.sT(o[0], o[1])),
            c.objs({{"A", o[0]}, {"B", o[1]}}));
  });
  auto& nat = r.law("laxator-natural");
  for_each_objects<4>(c.s, [&](const std::array<SObj, 4>& o) {
    // f: A->B, g: C->D
    if (!c.in({c.sT(o[0], o[2]), c.sT(o[1], o[3])})) return;
    visit(nat, c.opts, detail::key_of(c.s, {o[0], o[1], o[2], o[3]}),
          [&](const SMor& f, const SMor& g) {
            c.eq(nat, c.t.compose(psi(o[1], o[3]), c.t.tensor(c.Fm(f), c.Fm(g))),
                 c.t.compose(c.Fm(c.s.tensor(f, g)), psi(o[0], o[2])),
                 {{"f", c.sd(f)}, {"g", c.sd(g)}});
          },
          hom_space(c.s, o[0], o[1], c.opts), hom_space(c.s, o[2], o[3], c.opts));
  });
  auto& assoc = r.law("laxator-associative");
  for_each_objects<3>(c.s, [&](const std::array<SObj, 3>& o) {
    const auto &a = o[0], &b = o[1], &d = o[2];
    if (!c.in({c.sT(a, b), c.sT(b, d), c.sT(c.sT(a, b), d)})) return;
    c.eq(assoc, c.t.compose(psi(c.sT(a, b), d), c.t.tensor(psi(a, b), c.iota(d))),
         c.t.compose(psi(a, c.sT(b, d)), c.t.tensor(c.iota(a), psi(b, d))),
         c.objs({{"A", a}, {"B", b}, {"C", d}}));
  });
  auto& ul = r.law("laxator-unit-left");
  auto& ur = r.law("laxator-unit-right");
  auto& sym = r.law("laxator-symmetric");
  for (const auto& a : c.s.objects()) {
    auto Fid = c.Fm(c.s.identity(a));
    c.eq(ul, c.t.compose(psi(I, a), c.t.tensor(c.F.unit_lax(), c.iota(a))), Fid, c.objs({{"A", a}}));
    c.eq(ur, c.t.compose(psi(a, I), c.t.tensor(c.iota(a), c.F.unit_lax())), Fid, c.objs({{"A", a}}));
  }
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    const auto &a = o[0], &b = o[1];
    if (!c.in({c.sT(a, b), c.sT(b, a)})) return;
    c.eq(sym, c.t.compose(c.Fm(c.s.symmetry(a, b)), psi(a, b)),
         c.t.compose(psi(b, a), c.t.symmetry(c.Fo(a), c.Fo(b))), c.objs({{"A", a}, {"B", b}}));
  });
}

template <GsModel S, GsModel T>
void oplax_laws(LawReport& r, const Ctx<S, T>& c) {
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  if (!c.F.has_oplax()) throw MissingStructure(c.F.name + " has no oplaxator");
  const SObj I = c.s.unit();
  const auto& phi = c.F.oplaxator;
  auto& typing = r.law("oplaxator-typing");
  c.typed(typing, c.F.unit_oplax(), c.Fo(I), c.t.unit(), {{"map", "phi0"}});
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    if (!c.in({c.sT(o[0], o[1])})) return;
    c.typed(typing, phi(o[0], o[1]), c.Fo(c.sT(o[0], o[1])), c.tT(c.Fo(o[0]), c.Fo(o[1])),
            c.objs({{"A", o[0]}, {"B", o[1]}}));
  });
  auto& nat = r.law("oplaxator-natural");
  for_each_objects<4>(c.s, [&](const std::array<SObj, 4>& o) {
    if (!c.in({c.sT(o[0], o[2]), c.sT(o[1], o[3])})) return;
    visit(nat, c.opts, detail::key_of(c.s, {o[0], o[1], o[2], o[3]}),
          [&](const SMor& f, const SMor& g) {
            c.eq(nat, c.t.compose(c.t.tensor(c.Fm(f), c.Fm(g)), phi(o[0], o[2])),
                 c.t.compose(phi(o[1], o[3]), c.Fm(c.s.tensor(f, g))),
                 {{"f", c.sd(f)}, {"g", c.sd(g)}});
          },
          hom_space(c.s, o[0], o[1], c.opts), hom_space(c.s, o[2], o[3], c.opts));
  });
  auto& assoc = r.law("oplaxator-associative");
  for_each_objects<3>(c.s, [&](const std::array<SObj, 3>& o) {
    const auto &a = o[0], &b = o[1], &d = o[2];
    if (!c.in({c.sT(a, b), c.sT(b, d), c.sT(c.sT(a, b), d)})) return;
    c.eq(assoc, c.t.compose(c.t.tensor(phi(a, b), c.iota(d)), phi(c.sT(a, b), d)),
         c.t.compose(c.t.tensor(c.iota(a), phi(b, d)), phi(a, c.sT(b, d))),
         c.objs({{"A", a}, {"B", b}, {"C", d}}));
  });
  auto& ul = r.law("oplaxator-unit-left");
  auto& ur = r.law("oplaxator-unit-right");
  auto& sym = r.law("oplaxator-symmetric");
  for (const auto& a : c.s.objects()) {
    auto Fid = c.Fm(c.s.identity(a));
    c.eq(ul, c.t.compose(c.t.tensor(c.F.unit_oplax(), c.iota(a)), phi(I, a)), Fid, c.objs({{"A", a}}));
    c.eq(ur, c.t.compose(c.t.tensor(c.iota(a), c.F.unit_oplax()), phi(a, I)), Fid, c.objs({{"A", a}}));
  }
  for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
    const auto &a = o[0], &b = o[1];
    if (!c.in({c.sT(a, b), c.sT(b, a)})) return;
    c.eq(sym, c.t.compose(phi(b, a), c.Fm(c.s.symmetry(a, b))),
         c.t.compose(c.t.symmetry(c.Fo(a), c.Fo(b)), phi(a, b)), c.objs({{"A", a}, {"B", b}}));
  });
}

enum class Rel2 { Equal, Leq };

template <GsModel S, GsModel T>
void lax_triangles(LawReport& r, const Ctx<S, T>& c, Rel2 how, const char* dup_name,
                   const char* dis_name) {
  auto& dup = r.law(dup_name);
  auto& dis = r.law(dis_name);
  for (const auto& a : c.s.objects()) {
    auto Fa = c.Fo(a);
    auto items = c.objs({{"A", a}});
    auto rhs_dis = c.t.compose(c.F.unit_lax(), c.t.discharge(Fa));
    if (how == Rel2::Equal)
      c.eq(dis, c.Fm(c.s.discharge(a)), rhs_dis, items);
    else
      c.le(dis, c.Fm(c.s.discharge(a)), rhs_dis, items);
    if (!c.in({c.sT(a, a)})) continue;
    auto rhs = c.t.compose(c.F.laxator(a, a), c.t.dup(Fa));
    if (how == Rel2::Equal)
      c.eq(dup, c.Fm(c.s.dup(a)), rhs, items);
    else
      c.le(dup, c.Fm(c.s.dup(a)), rhs, items);
  }
}

template <GsModel S, GsModel T>
void oplax_triangles(LawReport& r, const Ctx<S, T>& c, Rel2 how, const char* dup_name,
                     const char* dis_name) {
  auto& dup = r.law(dup_name);
  auto& dis = r.law(dis_name);
  for (const auto& a : c.s.objects()) {
    auto Fa = c.Fo(a);
    auto items = c.objs({{"A", a}});
    auto lhs_dis = c.t.compose(c.F.unit_oplax(), c.Fm(c.s.discharge(a)));
    if (how == Rel2::Equal)
      c.eq(dis, lhs_dis, c.t.discharge(Fa), items);
    else
      c.le(dis, lhs_dis, c.t.discharge(Fa), items);
    if (!c.in({c.sT(a, a)})) continue;
    auto lhs = c.t.compose(c.F.oplaxator(a, a), c.Fm(c.s.dup(a)));
    if (how == Rel2::Equal)
      c.eq(dup, lhs, c.t.dup(Fa), items);
    else
      c.le(dup, lhs, c.t.dup(Fa), items);
  }
}

template <GsModel S, GsModel T>
void bilax_laws(LawReport& r, const Ctx<S, T>& c) {
  using SObj = ObjectOf<S>;
  const auto& psi = c.F.laxator;
  const auto& phi = c.F.oplaxator;
  const SObj I = c.s.unit();
  auto& braid = r.law("bilax-braiding");
  for_each_objects<4>(c.s, [&](const std::array<SObj, 4>& o) {
    const auto &a = o[0], &b = o[1], &cc = o[2], &d = o[3];
    auto ab = c.sT(a, b), cd = c.sT(cc, d), ac = c.sT(a, cc), bd = c.sT(b, d);
    if (!c.in({ab, cd, ac, bd, c.sT(ab, cd), c.sT(b, cc), c.sT(cc, b), c.sT(a, c.sT(cc, b)),
               c.sT(ac, bd)}))
      return;
    auto t = [&](auto x, auto y) { return c.t.tensor(x, y); };
    auto lhs = c.t.compose(
        t(psi(a, cc), psi(b, d)),
        c.t.compose(t(t(c.t.identity(c.Fo(a)), c.t.symmetry(c.Fo(b), c.Fo(cc))), c.t.identity(c.Fo(d))),
                    t(phi(a, b), phi(cc, d))));
    auto mid = c.s.tensor(c.s.tensor(c.s.identity(a), c.s.symmetry(b, cc)), c.s.identity(d));
    auto rhs = c.t.compose(phi(ac, bd), c.t.compose(c.Fm(mid), psi(ab, cd)));
    c.eq(braid, lhs, rhs, c.objs({{"A", a}, {"B", b}, {"C", cc}, {"D", d}}));
  });
  auto& u1 = r.law("bilax-unit-dup");
  auto& u2 = r.law("bilax-unit-codup");
  auto& u3 = r.law("bilax-unit-scalar");
  c.eq(u1, c.t.compose(phi(I, I), c.F.unit_lax()), c.t.tensor(c.F.unit_lax(), c.F.unit_lax()), {});
  c.eq(u2, c.t.compose(c.F.unit_oplax(), psi(I, I)), c.t.tensor(c.F.unit_oplax(), c.F.unit_oplax()),
       {});
  c.eq(u3, c.t.compose(c.F.unit_oplax(), c.F.unit_lax()), c.t.identity(c.t.unit()), {});
}

}  // namespace functor_detail

/// Functoriality, plus monotonicity when both sides carry preorders.
template <GsModel S, GsModel T>
LawReport check_functor(const FunctorData<S, T>& F, const CheckOptions& opts = {},
                        IdentityMode mode = IdentityMode::Strict) {
  functor_detail::Ctx<S, T> c{F, *F.source, *F.target, opts, mode};
  LawReport r("functor " + F.name);
  functor_detail::functor_laws(r, c);
  if (c.s.has_order() && c.t.has_order()) functor_detail::monotone_laws(r, c);
  return r;
}

template <GsModel S, GsModel T>
LawReport check_lax_monoidal(const FunctorData<S, T>& F, const CheckOptions& opts = {},
                             IdentityMode mode = IdentityMode::Strict) {
  if (!F.has_lax()) throw MissingStructure(F.name + " has no laxator");
  functor_detail::Ctx<S, T> c{F, *F.source, *F.target, opts, mode};
  LawReport r("lax-monoidal " + F.name);
  functor_detail::functor_laws(r, c);
  functor_detail::lax_laws(r, c);
  return r;
}

template <GsModel S, GsModel T>
LawReport check_oplax_monoidal(const FunctorData<S, T>& F, const CheckOptions& opts = {}) {
  if (!F.has_oplax()) throw MissingStructure(F.name + " has no oplaxator");
  functor_detail::Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  LawReport r("oplax-monoidal " + F.name);
  functor_detail::functor_laws(r, c);
  functor_detail::oplax_laws(r, c);
  return r;
}

template <GsModel S, GsModel T>
LawReport check_gs_functor(const FunctorData<S, T>& F, GsFlavor flavor,
                           const CheckOptions& opts = {}) {
  using namespace functor_detail;
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  const char* names[] = {"lax", "oplax", "strong", "strict"};
  LawReport r(std::string("gs-functor(") + names[static_cast<int>(flavor)] + ") " + F.name);
  functor_laws(r, c);
  if (flavor == GsFlavor::Lax || flavor == GsFlavor::Strong) {
    lax_laws(r, c);
    lax_triangles(r, c, Rel2::Equal, "gs-lax-dup", "gs-lax-discharge");
  }
  if (flavor == GsFlavor::Oplax || flavor == GsFlavor::Strong) {
    oplax_laws(r, c);
    oplax_triangles(r, c, Rel2::Equal, "gs-oplax-dup", "gs-oplax-discharge");
  }
  if (flavor == GsFlavor::Strong) {
    auto& inv = r.law("structure-inverse");
    const SObj I = c.s.unit();
    for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
      const auto &a = o[0], &b = o[1];
      auto ab = c.sT(a, b);
      if (!c.in({ab})) return;
      auto items = c.objs({{"A", a}, {"B", b}});
      c.eq(inv, c.t.compose(F.oplaxator(a, b), F.laxator(a, b)),
           c.t.identity(c.tT(c.Fo(a), c.Fo(b))), items);
      c.eq(inv, c.t.compose(F.laxator(a, b), F.oplaxator(a, b)), c.t.identity(c.Fo(ab)), items);
    });
    c.eq(inv, c.t.compose(F.unit_oplax(), F.unit_lax()), c.t.identity(c.t.unit()), {});
    c.eq(inv, c.t.compose(F.unit_lax(), F.unit_oplax()), c.t.identity(c.Fo(I)), {});
  }
  if (flavor == GsFlavor::Strict) {
    const SObj I = c.s.unit();
    auto& objs = r.law("strict-objects");
    auto& structure = r.law("strict-structure-identities");
    auto& dup = r.law("strict-dup");
    auto& dis = r.law("strict-discharge");
    auto& sym = r.law("strict-symmetry");
    auto& ten = r.law("strict-tensor");
    if (c.Fo(I) == c.t.unit())
      objs.pass();
    else
      objs.fail({"", {{"A", "I"}}, c.t.describe_object(c.Fo(I)), c.t.describe_object(c.t.unit())});
    if (F.has_lax()) c.eq(structure, F.unit_lax(), c.t.identity(c.t.unit()), {{"map", "psi0"}});
    if (F.has_oplax()) c.eq(structure, F.unit_oplax(), c.t.identity(c.t.unit()), {{"map", "phi0"}});
    for (const auto& a : c.s.objects()) {
      auto items = c.objs({{"A", a}});
      c.eq(dis, c.Fm(c.s.discharge(a)), c.t.discharge(c.Fo(a)), items);
      if (c.in({c.sT(a, a)})) c.eq(dup, c.Fm(c.s.dup(a)), c.t.dup(c.Fo(a)), items);
    }
    for_each_objects<2>(c.s, [&](const std::array<SObj, 2>& o) {
      const auto &a = o[0], &b = o[1];
      auto ab = c.sT(a, b);
      if (!c.in({ab})) return;
      auto items = c.objs({{"A", a}, {"B", b}});
      if (c.Fo(ab) == c.tT(c.Fo(a), c.Fo(b)))
        objs.pass();
      else
        objs.fail({"", items, c.t.describe_object(c.Fo(ab)),
                   c.t.describe_object(c.tT(c.Fo(a), c.Fo(b)))});
      if (F.has_lax()) c.eq(structure, F.laxator(a, b), c.t.identity(c.Fo(ab)), items);
      if (F.has_oplax()) c.eq(structure, F.oplaxator(a, b), c.t.identity(c.Fo(ab)), items);
      if (c.in({c.sT(b, a)}))
        c.eq(sym, c.Fm(c.s.symmetry(a, b)), c.t.symmetry(c.Fo(a), c.Fo(b)), items);
    });
    for_each_objects<4>(c.s, [&](const std::array<SObj, 4>& o) {
      if (!c.in({c.sT(o[0], o[2]), c.sT(o[1], o[3])})) return;
      visit(ten, opts, detail::key_of(c.s, {o[0], o[1], o[2], o[3]}),
            [&](const SMor& f, const SMor& g) {
              c.eq(ten, c.Fm(c.s.tensor(f, g)), c.t.tensor(c.Fm(f), c.Fm(g)),
                   {{"f", c.sd(f)}, {"g", c.sd(g)}});
            },
            hom_space(c.s, o[0], o[1], opts), hom_space(c.s, o[2], o[3], opts));
    });
  }
  return r;
}

template <GsModel S, GsModel T>
LawReport check_bilax(const FunctorData<S, T>& F, const CheckOptions& opts = {}) {
  using namespace functor_detail;
  if (!F.has_lax() || !F.has_oplax()) throw MissingStructure(F.name + " needs ψ and φ");
  Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  LawReport r("bilax " + F.name);
  functor_laws(r, c);
  lax_laws(r, c);
  oplax_laws(r, c);
  bilax_laws(r, c);
  return r;
}

template <GsModel S, GsModel T>
LawReport check_colax_cartesian(const FunctorData<S, T>& F, const CheckOptions& opts = {},
                                IdentityMode mode = IdentityMode::Strict) {
  using namespace functor_detail;
  if (!F.source->has_order() || !F.target->has_order())
    throw MissingPreorder("colax cartesian needs preorders on both sides");
  if (!F.has_lax()) throw MissingStructure(F.name + " has no laxator");
  Ctx<S, T> c{F, *F.source, *F.target, opts, mode};
  LawReport r(std::string(mode == IdentityMode::Lax ? "colax-cartesian-lax-on-identities "
                                                    : "colax-cartesian ") +
              F.name);
  functor_laws(r, c);
  monotone_laws(r, c);
  lax_laws(r, c);
  lax_triangles(r, c, Rel2::Leq, "colax-dup", "colax-discharge");
  return r;
}

template <GsModel S, GsModel T>
LawReport check_colax_opcartesian(const FunctorData<S, T>& F, const CheckOptions& opts = {}) {
  using namespace functor_detail;
  if (!F.source->has_order() || !F.target->has_order())
    throw MissingPreorder("colax opcartesian needs preorders on both sides");
  if (!F.has_oplax()) throw MissingStructure(F.name + " has no oplaxator");
  Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  LawReport r("colax-opcartesian " + F.name);
  functor_laws(r, c);
  monotone_laws(r, c);
  oplax_laws(r, c);
  oplax_triangles(r, c, Rel2::Leq, "colax-op-dup", "colax-op-discharge");
  return r;
}

template <GsModel S, GsModel T>
LawReport check_colax_bicartesian(const FunctorData<S, T>& F, const CheckOptions& opts = {}) {
  using namespace functor_detail;
  if (!F.source->has_order() || !F.target->has_order())
    throw MissingPreorder("colax bicartesian needs preorders on both sides");
  if (!F.has_lax() || !F.has_oplax()) throw MissingStructure(F.name + " needs ψ and φ");
  Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  LawReport r("colax-bicartesian " + F.name);
  functor_laws(r, c);
  monotone_laws(r, c);
  lax_laws(r, c);
  oplax_laws(r, c);
  lax_triangles(r, c, Rel2::Leq, "colax-dup", "colax-discharge");
  oplax_triangles(r, c, Rel2::Leq, "colax-op-dup", "colax-op-discharge");
  bilax_laws(r, c);
  return r;
}

/// Strict composition, lax identities, and the lax monoidal diagrams with
/// id_{FA} replaced by F(id_A); optionally the colax cartesian inequalities.
template <GsModel S, GsModel T>
LawReport check_lax_on_identities(const FunctorData<S, T>& F, const CheckOptions& opts = {},
                                  bool colax_cartesian = false) {
  using namespace functor_detail;
  if (!F.target->has_order()) throw MissingPreorder("lax identities need a target preorder");
  Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Lax};
  LawReport r("lax-on-identities " + F.name);
  functor_laws(r, c);
  if (c.s.has_order()) monotone_laws(r, c);
  lax_laws(r, c);
  if (colax_cartesian) lax_triangles(r, c, Rel2::Leq, "colax-dup", "colax-discharge");
  return r;
}

/// φ_{B,D} ∘ F(f⊗g) ≤ (Ff⊗Fg) ∘ φ_{A,C}: the oplaxator as a lax natural
/// transformation.  A diagnostic, not part of any functor flavor.
template <GsModel S, GsModel T>
LawReport check_oplaxator_lax_naturality(const FunctorData<S, T>& F, const CheckOptions& opts = {}) {
  using SObj = ObjectOf<S>;
  using SMor = MorphismOf<S>;
  if (!F.has_oplax()) throw MissingStructure(F.name + " has no oplaxator");
  if (!F.target->has_order()) throw MissingPreorder("lax naturality needs a target preorder");
  functor_detail::Ctx<S, T> c{F, *F.source, *F.target, opts, IdentityMode::Strict};
  LawReport r("oplaxator-lax-naturality " + F.name);
  auto& law = r.law("oplaxator-lax-natural");
  for_each_objects<4>(c.s, [&](const std::array<SObj, 4>& o) {
    if (!c.in({c.sT(o[0], o[2]), c.sT(o[1], o[3])})) return;
    visit(law, opts, detail::key_of(c.s, {o[0], o[1], o[2], o[3]}),
          [&](const SMor& f, const SMor& g) {
            c.le(law, c.t.compose(F.oplaxator(o[1], o[3]), c.Fm(c.s.tensor(f, g))),
                 c.t.compose(c.t.tensor(c.Fm(f), c.Fm(g)), F.oplaxator(o[0], o[2])),
                 {{"f", c.sd(f)}, {"g", c.sd(g)}});
          },
          hom_space(c.s, o[0], o[1], opts), hom_space(c.s, o[2], o[3], opts));
  });
  return r;
}

}  // namespace gsmon
