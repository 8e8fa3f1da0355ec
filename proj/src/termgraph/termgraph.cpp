#include "gsmon/termgraph/termgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gsmon/core/errors.hpp"

namespace gsmon {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string word_text(const Signature& sig, const Word& w) {
  if (w.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "·" : "") + sig.sorts.at(w[i]);
  return s;
}

}  // namespace

void Signature::validate() const {
  for (const auto& op : ops)
    for (const Word* w : {&op.in, &op.out})
      for (auto s : *w)
        if (s >= sorts.size()) throw SortMismatch("op " + op.name + " references sort " + std::to_string(s));
}

std::size_t Signature::sort_index(const std::string& name) const {
  auto it = std::find(sorts.begin(), sorts.end(), name);
  if (it == sorts.end()) throw SortMismatch("unknown sort " + name);
  return static_cast<std::size_t>(it - sorts.begin());
}

std::size_t Signature::op_index(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return i;
  throw TypeMismatch("unknown op " + name);
}

TermGraph::TermGraph(SignaturePtr sig, Word input, std::vector<std::size_t> wire_sorts, std::vector<TgBox> boxes,
                     std::vector<std::size_t> outputs)
    : sig_(std::move(sig)),
      input_(std::move(input)),
      wire_sorts_(std::move(wire_sorts)),
      boxes_(std::move(boxes)),
      outputs_(std::move(outputs)) {
  const std::size_t n = wire_sorts_.size(), nin = input_.size();
  if (n < nin) throw InterfaceMismatch("fewer wires than input positions");
  for (auto s : wire_sorts_)
    if (s >= sig_->sorts.size()) throw SortMismatch("wire sort " + std::to_string(s) + " undeclared");
  for (std::size_t i = 0; i < nin; ++i)
    if (wire_sorts_[i] != input_[i]) throw SortMismatch("input wire " + std::to_string(i) + " has the wrong sort");
  producer_.assign(n, {kNone, kNone});
  for (std::size_t b = 0; b < boxes_.size(); ++b) {
    const auto& box = boxes_[b];
    if (box.op >= sig_->ops.size()) throw InterfaceMismatch("box " + std::to_string(b) + " has an unknown op");
    const auto& op = sig_->ops[box.op];
    if (box.in.size() != op.in.size() || box.out.size() != op.out.size())
      throw InterfaceMismatch("box " + std::to_string(b) + " has the wrong arity for " + op.name);
    for (std::size_t p = 0; p < box.in.size(); ++p) {
      if (box.in[p] >= n) throw InterfaceMismatch("box " + std::to_string(b) + " reads a missing wire");
      if (wire_sorts_[box.in[p]] != op.in[p])
        throw SortMismatch("box " + std::to_string(b) + " input " + std::to_string(p) + " has the wrong sort");
    }
    for (std::size_t p = 0; p < box.out.size(); ++p) {
      auto w = box.out[p];
      if (w >= n || w < nin) throw InterfaceMismatch("box " + std::to_string(b) + " writes an invalid wire");
      if (producer_[w].first != kNone) throw InterfaceMismatch("wire " + std::to_string(w) + " has two producers");
      if (wire_sorts_[w] != op.out[p])
        throw SortMismatch("box " + std::to_string(b) + " output " + std::to_string(p) + " has the wrong sort");
      producer_[w] = {b, p};
    }
  }
  for (std::size_t w = nin; w < n; ++w)
    if (producer_[w].first == kNone) throw InterfaceMismatch("wire " + std::to_string(w) + " has no producer");
  for (auto w : outputs_)
    if (w >= n) throw InterfaceMismatch("output references a missing wire");
  if (tg_layering(*this).size() != boxes_.size()) throw InterfaceMismatch("graph has a cycle");
}

Word TermGraph::output() const {
  Word w;
  for (auto o : outputs_) w.push_back(wire_sorts_[o]);
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> TermGraph::producer(std::size_t wire) const {
  if (wire < input_.size()) return std::nullopt;
  return producer_[wire];
}

std::size_t TermGraph::consumer_count(std::size_t wire) const {
  std::size_t c = static_cast<std::size_t>(std::count(outputs_.begin(), outputs_.end(), wire));
  for (const auto& b : boxes_) c += static_cast<std::size_t>(std::count(b.in.begin(), b.in.end(), wire));
  return c;
}

namespace {

TermGraph interface_graph(const SignaturePtr& sig, const Word& w, std::vector<std::size_t> outputs) {
  return TermGraph(sig, w, w, {}, std::move(outputs));
}

}  // namespace

TermGraph tg_from_op(const SignaturePtr& sig, std::size_t op) {
  const auto& o = sig->ops.at(op);
  Word sorts = o.in;
  TgBox box{op, {}, {}};
  for (std::size_t i = 0; i < o.in.size(); ++i) box.in.push_back(i);
  std::vector<std::size_t> outputs;
  for (std::size_t p = 0; p < o.out.size(); ++p) {
    box.out.push_back(sorts.size());
    outputs.push_back(sorts.size());
    sorts.push_back(o.out[p]);
  }
  return TermGraph(sig, o.in, std::move(sorts), {box}, std::move(outputs));
}

TermGraph tg_id(const SignaturePtr& sig, const Word& w) {
  std::vector<std::size_t> out(w.size());
  std::iota(out.begin(), out.end(), 0);
  return interface_graph(sig, w, std::move(out));
}

TermGraph tg_symmetry(const SignaturePtr& sig, const Word& w1, const Word& w2) {
  Word w = w1;
  w.insert(w.end(), w2.begin(), w2.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w2.size(); ++i) out.push_back(w1.size() + i);
  for (std::size_t i = 0; i < w1.size(); ++i) out.push_back(i);
  return interface_graph(sig, w, std::move(out));
}

TermGraph tg_dup(const SignaturePtr& sig, const Word& w) {
  std::vector<std::size_t> out(w.size());
  std::iota(out.begin(), out.end(), 0);
  out.insert(out.end(), out.begin(), out.end());
  return interface_graph(sig, w, std::move(out));
}

TermGraph tg_discharge(const SignaturePtr& sig, const Word& w) { return interface_graph(sig, w, {}); }

TermGraph tg_compose(const TermGraph& t, const TermGraph& s) {
  if (!(*t.signature() == *s.signature())) throw InterfaceMismatch("graphs over different signatures");
  const Word mid = s.output();
  if (mid.size() != t.input().size())
    throw InterfaceMismatch("compose: interface of length " + std::to_string(mid.size()) + " vs " +
                            std::to_string(t.input().size()));
  if (mid != t.input()) throw SortMismatch("compose: interface sorts differ");
  std::vector<std::size_t> sorts = s.wire_sorts();
  std::vector<std::size_t> map(t.wire_count());
  for (std::size_t i = 0; i < t.input().size(); ++i) map[i] = s.outputs()[i];
  for (std::size_t w = t.input().size(); w < t.wire_count(); ++w) {
    map[w] = sorts.size();
    sorts.push_back(t.wire_sorts()[w]);
  }
  std::vector<TgBox> boxes = s.boxes();
  for (const auto& b : t.boxes()) {
    TgBox nb{b.op, {}, {}};
    for (auto w : b.in) nb.in.push_back(map[w]);
    for (auto w : b.out) nb.out.push_back(map[w]);
    boxes.push_back(std::move(nb));
  }
  std::vector<std::size_t> outputs;
  for (auto w : t.outputs()) outputs.push_back(map[w]);
  return TermGraph(s.signature(), s.input(), std::move(sorts), std::move(boxes), std::move(outputs));
}

TermGraph tg_tensor(const TermGraph& s, const TermGraph& t) {
  if (!(*t.signature() == *s.signature())) throw InterfaceMismatch("graphs over different signatures");
  const std::size_t si = s.input().size(), ti = t.input().size();
  Word input = s.input();
  input.insert(input.end(), t.input().begin(), t.input().end());
  std::vector<std::size_t> smap(s.wire_count()), tmap(t.wire_count());
  std::vector<std::size_t> sorts = input;
  for (std::size_t i = 0; i < si; ++i) smap[i] = i;
  for (std::size_t i = 0; i < ti; ++i) tmap[i] = si + i;
  for (std::size_t w = si; w < s.wire_count(); ++w) {
    smap[w] = sorts.size();
    sorts.push_back(s.wire_sorts()[w]);
  }
  for (std::size_t w = ti; w < t.wire_count(); ++w) {
    tmap[w] = sorts.size();
    sorts.push_back(t.wire_sorts()[w]);
  }
  std::vector<TgBox> boxes;
  std::vector<std::size_t> outputs;
  for (auto [g, map] : {std::pair{&s, &smap}, std::pair{&t, &tmap}}) {
    for (const auto& b : g->boxes()) {
      TgBox nb{b.op, {}, {}};
      for (auto w : b.in) nb.in.push_back((*map)[w]);
      for (auto w : b.out) nb.out.push_back((*map)[w]);
      boxes.push_back(std::move(nb));
    }
  }
  for (auto w : s.outputs()) outputs.push_back(smap[w]);
  for (auto w : t.outputs()) outputs.push_back(tmap[w]);
  return TermGraph(s.signature(), std::move(input), std::move(sorts), std::move(boxes), std::move(outputs));
}

std::vector<std::size_t> tg_layering(const TermGraph& t, TieBreak tie) {
  const auto& boxes = t.boxes();
  std::vector<bool> produced(t.wire_count(), false), placed(boxes.size(), false);
  for (std::size_t i = 0; i < t.input().size(); ++i) produced[i] = true;
  std::vector<std::size_t> order;
  for (;;) {
    std::size_t pick = kNone;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (placed[b]) continue;
      bool ready = std::all_of(boxes[b].in.begin(), boxes[b].in.end(), [&](std::size_t w) { return produced[w]; });
      if (!ready) continue;
      pick = b;
      if (tie == TieBreak::Least) break;
    }
    if (pick == kNone) break;
    placed[pick] = true;
    order.push_back(pick);
    for (auto w : boxes[pick].out) produced[w] = true;
  }
  return order;
}

std::vector<bool> tg_unreachable_boxes(const TermGraph& t) {
  std::vector<bool> live_wire(t.wire_count(), false), live_box(t.boxes().size(), false);
  for (auto w : t.outputs()) live_wire[w] = true;
  auto order = tg_layering(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& b = t.boxes()[*it];
    if (std::any_of(b.out.begin(), b.out.end(), [&](std::size_t w) { return live_wire[w]; })) {
      live_box[*it] = true;
      for (auto w : b.in) live_wire[w] = true;
    }
  }
  std::vector<bool> out(live_box.size());
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = !live_box[b];
  return out;
}

namespace {

using Sig = std::vector<std::int64_t>;

/// Replaces each signature by its rank among the distinct signatures.
std::vector<std::int64_t> rank(const std::vector<Sig>& sigs) {
  std::map<Sig, std::int64_t> ids;
  for (const auto& s : sigs) ids.emplace(s, 0);
  std::int64_t next = 0;
  for (auto& [k, v] : ids) v = next++;
  std::vector<std::int64_t> out;
  out.reserve(sigs.size());
  for (const auto& s : sigs) out.push_back(ids.at(s));
  return out;
}

std::size_t distinct(const std::vector<std::int64_t>& v) {
  auto s = v;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

struct Refined {
  std::vector<std::int64_t> box;
  std::vector<std::int64_t> wire;
};

/// Colour refinement on boxes and wires, seeded by op, sort and interface
/// position, propagated along producers, consumers and output positions.
Refined refine(const TermGraph& t) {
  const std::size_t nin = t.input().size();
  const auto& boxes = t.boxes();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> consumers(t.wire_count());
  for (std::size_t b = 0; b < boxes.size(); ++b)
    for (std::size_t p = 0; p < boxes[b].in.size(); ++p) consumers[boxes[b].in[p]].push_back({b, p});
  std::vector<std::vector<std::int64_t>> outpos(t.wire_count());
  for (std::size_t i = 0; i < t.outputs().size(); ++i) outpos[t.outputs()[i]].push_back(static_cast<std::int64_t>(i));

  Refined c;
  {
    std::vector<Sig> bs, ws;
    for (const auto& b : boxes) bs.push_back({static_cast<std::int64_t>(b.op)});
    for (std::size_t w = 0; w < t.wire_count(); ++w)
      ws.push_back({w < nin ? 0 : 1, static_cast<std::int64_t>(w < nin ? w : t.wire_sorts()[w])});
    c.box = rank(bs);
    c.wire = rank(ws);
  }
  for (;;) {
    std::vector<Sig> bs, ws;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      Sig s{c.box[b]};
      for (auto w : boxes[b].in) s.push_back(c.wire[w]);
      s.push_back(-1);
      for (auto w : boxes[b].out) s.push_back(c.wire[w]);
      bs.push_back(std::move(s));
    }
    for (std::size_t w = 0; w < t.wire_count(); ++w) {
      Sig s{c.wire[w]};
      if (auto p = t.producer(w)) {
        s.push_back(c.box[p->first]);
        s.push_back(static_cast<std::int64_t>(p->second));
      }
      std::vector<std::pair<std::int64_t, std::int64_t>> cons;
      for (auto [b, p] : consumers[w]) cons.push_back({c.box[b], static_cast<std::int64_t>(p)});
      std::sort(cons.begin(), cons.end());
      s.push_back(-1);
      for (auto [x, y] : cons) {
        s.push_back(x);
        s.push_back(y);
      }
      s.push_back(-2);
      s.insert(s.end(), outpos[w].begin(), outpos[w].end());
      ws.push_back(std::move(s));
    }
    Refined next{rank(bs), rank(ws)};
    bool stable = distinct(next.box) == distinct(c.box) && distinct(next.wire) == distinct(c.wire);
    c = std::move(next);
    if (stable) break;
  }
  return c;
}

struct CanonSearch {
  const TermGraph& t;
  Refined colour;
  std::size_t stride;
  std::vector<std::int64_t> box_rank;
  std::vector<bool> placed;
  std::vector<std::int64_t> cur;
  std::optional<std::vector<std::int64_t>> best;

  std::int64_t ref(std::size_t w) const {
    if (auto p = t.producer(w))
      return static_cast<std::int64_t>(t.input().size() + box_rank[p->first] * stride + p->second);
    return static_cast<std::int64_t>(w);
  }

  /// -1: prefix below best, 0: equal prefix, 1: above best.
  int against_best() const {
    if (!best) return -1;
    auto n = std::min(cur.size(), best->size());
    for (std::size_t i = 0; i < n; ++i)
      if (cur[i] != (*best)[i]) return cur[i] < (*best)[i] ? -1 : 1;
    return 0;
  }

  void run(std::size_t depth) {
    if (against_best() > 0) return;
    const auto& boxes = t.boxes();
    if (depth == boxes.size()) {
      auto mark = cur.size();
      cur.push_back(-1);
      for (auto w : t.outputs()) cur.push_back(ref(w));
      if (!best || cur < *best) best = cur;
      cur.resize(mark);
      return;
    }
    std::int64_t least = -1;
    std::vector<std::size_t> cands;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (placed[b]) continue;
      bool ready = std::all_of(boxes[b].in.begin(), boxes[b].in.end(), [&](std::size_t w) {
        auto p = t.producer(w);
        return !p || placed[p->first];
      });
      if (!ready) continue;
      if (least < 0 || colour.box[b] < least) {
        least = colour.box[b];
        cands.clear();
      }
      if (colour.box[b] == least) cands.push_back(b);
    }
    for (auto b : cands) {
      placed[b] = true;
      box_rank[b] = static_cast<std::int64_t>(depth);
      auto mark = cur.size();
      cur.push_back(static_cast<std::int64_t>(boxes[b].op));
      cur.push_back(colour.box[b]);
      for (auto w : boxes[b].in) cur.push_back(ref(w));
      run(depth + 1);
      cur.resize(mark);
      placed[b] = false;
    }
  }
};

}  // namespace

std::vector<std::int64_t> tg_certificate(const TermGraph& t) {
  std::size_t stride = 1;
  for (const auto& b : t.boxes()) stride = std::max(stride, b.out.size());
  CanonSearch s{t, refine(t), stride, std::vector<std::int64_t>(t.boxes().size(), -1),
                std::vector<bool>(t.boxes().size(), false), {}, std::nullopt};
  s.run(0);
  return *s.best;
}

bool tg_equal(const TermGraph& s, const TermGraph& t) {
  if (!(*s.signature() == *t.signature())) return false;
  if (s.input() != t.input() || s.output() != t.output()) return false;
  if (s.boxes().size() != t.boxes().size() || s.wire_count() != t.wire_count()) return false;
  return tg_certificate(s) == tg_certificate(t);
}

bool tg_isomorphic_search(const TermGraph& s, const TermGraph& t) {
  if (!(*s.signature() == *t.signature())) return false;
  if (s.input() != t.input() || s.output() != t.output()) return false;
  if (s.boxes().size() != t.boxes().size() || s.wire_count() != t.wire_count()) return false;
  const auto order = tg_layering(s);
  std::vector<std::size_t> wmap(s.wire_count(), kNone);
  for (std::size_t i = 0; i < s.input().size(); ++i) wmap[i] = i;
  std::vector<bool> used(t.boxes().size(), false);
  auto go = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) {
      for (std::size_t i = 0; i < s.outputs().size(); ++i)
        if (wmap[s.outputs()[i]] != t.outputs()[i]) return false;
      return true;
    }
    const auto& b = s.boxes()[order[k]];
    for (std::size_t c = 0; c < t.boxes().size(); ++c) {
      const auto& d = t.boxes()[c];
      if (used[c] || d.op != b.op) continue;
      bool ok = true;
      for (std::size_t p = 0; p < b.in.size() && ok; ++p) ok = wmap[b.in[p]] == d.in[p];
      if (!ok) continue;
      used[c] = true;
      for (std::size_t p = 0; p < b.out.size(); ++p) wmap[b.out[p]] = d.out[p];
      if (self(self, k + 1)) return true;
      for (auto w : b.out) wmap[w] = kNone;
      used[c] = false;
    }
    return false;
  };
  return go(go, 0);
}

TermGraph tg_relabel(const TermGraph& t, const std::vector<std::size_t>& box_perm,
                     const std::vector<std::size_t>& wire_perm) {
  const std::size_t nin = t.input().size();
  auto wmap = [&](std::size_t w) { return w < nin ? w : nin + wire_perm[w - nin]; };
  std::vector<std::size_t> sorts(t.wire_count());
  for (std::size_t w = 0; w < t.wire_count(); ++w) sorts[wmap(w)] = t.wire_sorts()[w];
  std::vector<TgBox> boxes(t.boxes().size());
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const auto& old = t.boxes()[b];
    TgBox nb{old.op, {}, {}};
    for (auto w : old.in) nb.in.push_back(wmap(w));
    for (auto w : old.out) nb.out.push_back(wmap(w));
    boxes[box_perm[b]] = std::move(nb);
  }
  std::vector<std::size_t> outputs;
  for (auto w : t.outputs()) outputs.push_back(wmap(w));
  return TermGraph(t.signature(), t.input(), std::move(sorts), std::move(boxes), std::move(outputs));
}

std::string to_string(const Signature& sig, const Word& w) { return word_text(sig, w); }

std::string to_string(const TermGraph& t) {
  const auto& sig = *t.signature();
  std::string s = word_text(sig, t.input()) + " -> " + word_text(sig, t.output()) + " {";
  for (std::size_t b = 0; b < t.boxes().size(); ++b) {
    const auto& box = t.boxes()[b];
    s += (b ? "; " : "") + sig.ops[box.op].name + "(";
    for (std::size_t i = 0; i < box.in.size(); ++i) s += (i ? "," : "") + std::to_string(box.in[i]);
    s += ")->";
    for (std::size_t i = 0; i < box.out.size(); ++i) s += (i ? "," : "") + std::to_string(box.out[i]);
  }
  s += " | out ";
  for (std::size_t i = 0; i < t.outputs().size(); ++i) s += (i ? "," : "") + std::to_string(t.outputs()[i]);
  return s + "}";
}

namespace {

nlohmann::ordered_json sort_names(const Signature& sig, const Word& w) {
  auto j = nlohmann::ordered_json::array();
  for (auto s : w) j.push_back(sig.sorts.at(s));
  return j;
}

Word word_from_json(const Signature& sig, const nlohmann::json& j) {
  Word w;
  for (const auto& s : j) w.push_back(sig.sort_index(s.get<std::string>()));
  return w;
}

}  // namespace

nlohmann::ordered_json to_json(const Signature& sig) {
  nlohmann::ordered_json j;
  j["sorts"] = sig.sorts;
  j["ops"] = nlohmann::ordered_json::array();
  for (const auto& op : sig.ops) {
    nlohmann::ordered_json o;
    o["name"] = op.name;
    o["in"] = sort_names(sig, op.in);
    o["out"] = sort_names(sig, op.out);
    j["ops"].push_back(o);
  }
  return j;
}

Signature signature_from_json(const nlohmann::json& j) {
  try {
    Signature sig;
    sig.sorts = j.at("sorts").get<std::vector<std::string>>();
    for (const auto& o : j.at("ops"))
      sig.ops.push_back({o.at("name").get<std::string>(), word_from_json(sig, o.at("in")),
                         word_from_json(sig, o.at("out"))});
    return sig;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed signature fixture: ") + e.what());
  } catch (const SortMismatch& e) {
    throw FixtureError(std::string("invalid signature fixture: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const TermGraph& t) {
  const auto& sig = *t.signature();
  std::vector<nlohmann::ordered_json> consumers(t.wire_count(), nlohmann::ordered_json::array());
  for (std::size_t b = 0; b < t.boxes().size(); ++b)
    for (std::size_t p = 0; p < t.boxes()[b].in.size(); ++p)
      consumers[t.boxes()[b].in[p]].push_back(nlohmann::ordered_json{"box", b, p});
  for (std::size_t i = 0; i < t.outputs().size(); ++i)
    consumers[t.outputs()[i]].push_back(nlohmann::ordered_json{"out", i});
  nlohmann::ordered_json j;
  j["input"] = sort_names(sig, t.input());
  j["wires"] = nlohmann::ordered_json::array();
  for (std::size_t w = 0; w < t.wire_count(); ++w) {
    nlohmann::ordered_json wire;
    wire["sort"] = sig.sorts[t.wire_sorts()[w]];
    if (auto p = t.producer(w))
      wire["producer"] = nlohmann::ordered_json{"box", p->first, p->second};
    else
      wire["producer"] = nlohmann::ordered_json{"in", w};
    wire["consumers"] = consumers[w];
    j["wires"].push_back(wire);
  }
  j["boxes"] = nlohmann::ordered_json::array();
  for (const auto& b : t.boxes()) {
    nlohmann::ordered_json box;
    box["op"] = sig.ops[b.op].name;
    box["in"] = b.in;
    box["out"] = b.out;
    j["boxes"].push_back(box);
  }
  j["outputs"] = t.outputs();
  return j;
}

TermGraph termgraph_from_json(const SignaturePtr& sig, const nlohmann::json& j) {
  try {
    Word input = word_from_json(*sig, j.at("input"));
    std::vector<std::size_t> sorts;
    for (const auto& w : j.at("wires")) sorts.push_back(sig->sort_index(w.at("sort").get<std::string>()));
    std::vector<TgBox> boxes;
    for (const auto& b : j.at("boxes"))
      boxes.push_back({sig->op_index(b.at("op").get<std::string>()), b.at("in").get<std::vector<std::size_t>>(),
                       b.at("out").get<std::vector<std::size_t>>()});
    TermGraph t(sig, std::move(input), std::move(sorts), std::move(boxes),
                j.at("outputs").get<std::vector<std::size_t>>());
    auto canonical = to_json(t);
    for (std::size_t w = 0; w < t.wire_count(); ++w) {
      const auto& wire = j["wires"][w];
      for (const char* field : {"producer", "consumers"})
        if (wire.contains(field) && nlohmann::json(canonical["wires"][w][field]) != wire[field])
          throw FixtureError("wire " + std::to_string(w) + " " + field + " disagrees with the boxes");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("malformed term graph fixture: ") + e.what());
  } catch (const InterfaceMismatch& e) {
    throw FixtureError(std::string("invalid term graph fixture: ") + e.what());
  } catch (const SortMismatch& e) {
    throw FixtureError(std::string("invalid term graph fixture: ") + e.what());
  } catch (const TypeMismatch& e) {
    throw FixtureError(std::string("invalid term graph fixture: ") + e.what());
  }
}

SignaturePtr random_signature(Rng& rng) {
  auto sig = std::make_shared<Signature>();
  std::size_t nsorts = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  for (std::size_t s = 0; s < nsorts; ++s) sig->sorts.push_back(std::string(1, static_cast<char>('A' + s)));
  for (std::size_t s = 0; s < nsorts; ++s) sig->ops.push_back({"c" + sig->sorts[s], {}, {s}});
  std::size_t extra = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::uniform_int_distribution<std::size_t> sort(0, nsorts - 1), in_arity(1, 2), out_arity(1, 2);
  for (std::size_t k = 0; k < extra; ++k) {
    TgOp op{"f" + std::to_string(k), {}, {}};
    for (std::size_t i = in_arity(rng); i > 0; --i) op.in.push_back(sort(rng));
    for (std::size_t i = out_arity(rng); i > 0; --i) op.out.push_back(sort(rng));
    sig->ops.push_back(std::move(op));
  }
  return sig;
}

Word random_word(const Signature& sig, std::size_t max_len, Rng& rng) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  std::uniform_int_distribution<std::size_t> sort(0, sig.sorts.size() - 1);
  for (auto& s : w) s = sort(rng);
  return w;
}

TermGraph random_termgraph(const SignaturePtr& sig, const Word& input, const Word& output, Rng& rng,
                           std::size_t max_boxes) {
  std::vector<std::size_t> sorts = input;
  std::vector<TgBox> boxes;
  auto of_sort = [&](std::size_t s) {
    std::vector<std::size_t> ws;
    for (std::size_t w = 0; w < sorts.size(); ++w)
      if (sorts[w] == s) ws.push_back(w);
    return ws;
  };
  auto pick = [&](const std::vector<std::size_t>& ws) {
    return ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
  };
  auto add_box = [&](std::size_t op) {
    TgBox b{op, {}, {}};
    for (auto s : sig->ops[op].in) {
      auto ws = of_sort(s);
      if (ws.empty()) return false;
      b.in.push_back(pick(ws));
    }
    for (auto s : sig->ops[op].out) {
      b.out.push_back(sorts.size());
      sorts.push_back(s);
    }
    boxes.push_back(std::move(b));
    return true;
  };
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_boxes)(rng);
  std::uniform_int_distribution<std::size_t> op(0, sig->ops.size() - 1);
  for (std::size_t k = 0, tries = 0; k < n && tries < 4 * max_boxes + 4; ++tries)
    if (add_box(op(rng))) ++k;
  // makes a wire of sort s available through ops whose inputs can be made available in turn
  auto ensure = [&](auto&& self, std::size_t s, std::size_t depth) -> bool {
    if (!of_sort(s).empty()) return true;
    if (depth == 0) return false;
    for (std::size_t o = 0; o < sig->ops.size(); ++o) {
      const auto& out = sig->ops[o].out;
      if (std::find(out.begin(), out.end(), s) == out.end()) continue;
      bool ok = true;
      for (auto in : sig->ops[o].in) ok = ok && self(self, in, depth - 1);
      if (ok && add_box(o)) return true;
    }
    return false;
  };
  std::vector<std::size_t> outputs;
  for (auto s : output) {
    if (!ensure(ensure, s, sig->sorts.size() + 1)) throw Infeasible("no graph produces sort " + sig->sorts[s]);
    outputs.push_back(pick(of_sort(s)));
  }
  return TermGraph(sig, input, std::move(sorts), std::move(boxes), std::move(outputs));
}

TermGraphModel::TermGraphModel(SignaturePtr sig, std::vector<Word> objects, std::size_t max_boxes)
    : sig_(std::move(sig)), objects_(std::move(objects)), max_boxes_(max_boxes) {
  if (std::find(objects_.begin(), objects_.end(), Word{}) == objects_.end()) objects_.insert(objects_.begin(), Word{});
}

Word TermGraphModel::tensor_objects(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

TermGraph TermGraphModel::hom_at(const Word& a, const Word& b, std::uint64_t) const {
  throw Infeasible("hom(" + to_string(*sig_, a) + ", " + to_string(*sig_, b) + ") of term graphs is not enumerable");
}

}  // namespace gsmon
