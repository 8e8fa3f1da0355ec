#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsmon/core/model.hpp"

namespace gsmon {

/// A word over the sorts of a signature, as sort indices.
using Word = std::vector<std::size_t>;

struct TgOp {
  std::string name;
  Word in;
  Word out;
  bool operator==(const TgOp&) const = default;
};

struct Signature {
  std::vector<std::string> sorts;
  std::vector<TgOp> ops;

  /// Throws SortMismatch if an op references an undeclared sort.
  void validate() const;
  std::size_t sort_index(const std::string& name) const;
  std::size_t op_index(const std::string& name) const;
  bool operator==(const Signature&) const = default;
};

using SignaturePtr = std::shared_ptr<const Signature>;

struct TgBox {
  std::size_t op;
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
};

/// An acyclic box-and-wire graph.  Wires 0..|input|-1 are produced by the
/// input interface; every other wire by exactly one box output port.  The
/// output interface lists wires, with repetition for sharing and omission for
/// discarding.
class TermGraph {
 public:
  /// Throws SortMismatch on ill-sorted ports and InterfaceMismatch on wires
  /// with zero or several producers, dangling references or cycles.
  TermGraph(SignaturePtr sig, Word input, std::vector<std::size_t> wire_sorts, std::vector<TgBox> boxes,
            std::vector<std::size_t> outputs);

  const SignaturePtr& signature() const { return sig_; }
  const Word& input() const { return input_; }
  Word output() const;
  const std::vector<std::size_t>& wire_sorts() const { return wire_sorts_; }
  std::size_t wire_count() const { return wire_sorts_.size(); }
  const std::vector<TgBox>& boxes() const { return boxes_; }
  const std::vector<std::size_t>& outputs() const { return outputs_; }
  /// (box, port) producing the wire; nullopt for input wires.
  std::optional<std::pair<std::size_t, std::size_t>> producer(std::size_t wire) const;
  /// Number of box input slots and output positions reading the wire.
  std::size_t consumer_count(std::size_t wire) const;

 private:
  SignaturePtr sig_;
  Word input_;
  std::vector<std::size_t> wire_sorts_;
  std::vector<TgBox> boxes_;
  std::vector<std::size_t> outputs_;
  std::vector<std::pair<std::size_t, std::size_t>> producer_;
};

TermGraph tg_from_op(const SignaturePtr& sig, std::size_t op);
TermGraph tg_id(const SignaturePtr& sig, const Word& w);
TermGraph tg_symmetry(const SignaturePtr& sig, const Word& w1, const Word& w2);
TermGraph tg_dup(const SignaturePtr& sig, const Word& w);
TermGraph tg_discharge(const SignaturePtr& sig, const Word& w);
/// t∘s: s's output wires glued to t's input wires.  Throws InterfaceMismatch
/// on a length mismatch and SortMismatch on a sort mismatch.
TermGraph tg_compose(const TermGraph& t, const TermGraph& s);
TermGraph tg_tensor(const TermGraph& s, const TermGraph& t);

/// Complete isomorphism invariant: the least certificate over all orderings
/// of boxes compatible with colour refinement.
std::vector<std::int64_t> tg_certificate(const TermGraph& t);
/// Interface-preserving isomorphism via canonical labeling.
bool tg_equal(const TermGraph& s, const TermGraph& t);
/// Interface-preserving isomorphism via direct backtracking over box maps.
bool tg_isomorphic_search(const TermGraph& s, const TermGraph& t);

/// Renumbers boxes by `box_perm` (old -> new) and the non-input wires by
/// `wire_perm` (indexed from the first non-input wire).
TermGraph tg_relabel(const TermGraph& t, const std::vector<std::size_t>& box_perm,
                     const std::vector<std::size_t>& wire_perm);

enum class TieBreak { Least, Greatest };
/// Topological order of boxes taking the least (or greatest) ready box.
std::vector<std::size_t> tg_layering(const TermGraph& t, TieBreak tie = TieBreak::Least);
/// Boxes none of whose outputs reach the output interface.  Diagnostic only;
/// such boxes are never removed.
std::vector<bool> tg_unreachable_boxes(const TermGraph& t);

std::string to_string(const Signature& sig, const Word& w);
std::string to_string(const TermGraph& t);
nlohmann::ordered_json to_json(const Signature& sig);
/// {"sorts": [...], "ops": [{"name", "in": [sort...], "out": [sort...]}]};
/// throws FixtureError.
Signature signature_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const TermGraph& t);
/// {"input": [sort...], "wires": [{"sort", "producer", "consumers"}],
/// "boxes": [{"op", "in": [wire...], "out": [wire...]}], "outputs": [wire...]};
/// consumers are optional and checked when present.  Throws FixtureError.
TermGraph termgraph_from_json(const SignaturePtr& sig, const nlohmann::json& j);

/// One or two sorts, a constant per sort and up to three further ops.
SignaturePtr random_signature(Rng& rng);
Word random_word(const Signature& sig, std::size_t max_len, Rng& rng);
/// A random graph with the given interfaces and at most `max_boxes` boxes
/// beyond those needed to produce the output sorts.  Throws Infeasible when
/// an output sort cannot be produced.
TermGraph random_termgraph(const SignaturePtr& sig, const Word& input, const Word& output, Rng& rng,
                           std::size_t max_boxes = 3);

/// The free gs-monoidal category on a signature; objects are words and
/// hom-sets are sampled.
class TermGraphModel {
 public:
  using Object = Word;
  using Morphism = TermGraph;

  TermGraphModel(SignaturePtr sig, std::vector<Word> objects, std::size_t max_boxes = 2);

  const std::vector<Word>& objects() const { return objects_; }
  bool contains(const Word&) const { return true; }
  Word unit() const { return {}; }
  Word tensor_objects(const Word& a, const Word& b) const;
  Word dom(const TermGraph& f) const { return f.input(); }
  Word cod(const TermGraph& f) const { return f.output(); }
  TermGraph identity(const Word& a) const { return tg_id(sig_, a); }
  TermGraph compose(const TermGraph& g, const TermGraph& f) const { return tg_compose(g, f); }
  TermGraph tensor(const TermGraph& f, const TermGraph& g) const { return tg_tensor(f, g); }
  TermGraph symmetry(const Word& a, const Word& b) const { return tg_symmetry(sig_, a, b); }
  TermGraph dup(const Word& a) const { return tg_dup(sig_, a); }
  TermGraph discharge(const Word& a) const { return tg_discharge(sig_, a); }
  bool equal(const TermGraph& f, const TermGraph& g) const { return tg_equal(f, g); }
  bool has_order() const { return false; }
  bool leq(const TermGraph& f, const TermGraph& g) const { return tg_equal(f, g); }
  HomSize hom_size(const Word&, const Word&) const { return std::nullopt; }
  TermGraph hom_at(const Word& a, const Word& b, std::uint64_t i) const;
  TermGraph hom_sample(const Word& a, const Word& b, Rng& rng) const {
    return random_termgraph(sig_, a, b, rng, max_boxes_);
  }
  std::optional<std::uint64_t> hom_index(const TermGraph&) const { return std::nullopt; }
  std::string describe(const TermGraph& f) const { return to_string(f); }
  std::string describe_object(const Word& a) const { return to_string(*sig_, a); }

 private:
  SignaturePtr sig_;
  std::vector<Word> objects_;
  std::size_t max_boxes_;
};

}  // namespace gsmon
