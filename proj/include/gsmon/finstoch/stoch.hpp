#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "gsmon/core/law_report.hpp"
#include "gsmon/core/model.hpp"
#include "gsmon/core/rational.hpp"
#include "gsmon/finrel/rel.hpp"

namespace Eigen {

template <>
struct NumTraits<gsmon::Rational> : GenericNumTraits<gsmon::Rational> {
  using Real = gsmon::Rational;
  using NonInteger = gsmon::Rational;
  using Literal = gsmon::Rational;
  using Nested = gsmon::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gsmon {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// A stochastic map src -> tgt: entry (x, y) is f(y|x), rows sum to exactly 1.
class StochMatrix {
 public:
  StochMatrix() = default;
  /// Throws RowSumViolation on a negative entry or a row not summing to 1.
  explicit StochMatrix(RatMatrix m);
  /// A function as a 0/1 matrix.
  static StochMatrix from_function(std::size_t src, std::size_t tgt, const std::vector<std::size_t>& f);

  std::size_t src() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t tgt() const { return static_cast<std::size_t>(m_.cols()); }
  const Rational& operator()(std::size_t x, std::size_t y) const { return m_(x, y); }
  const RatMatrix& matrix() const { return m_; }
  bool operator==(const StochMatrix& o) const;

 private:
  RatMatrix m_;
};

/// g∘f as the matrix product f·g.  Throws DimensionMismatch.
StochMatrix stoch_compose(const StochMatrix& g, const StochMatrix& f);
/// Kronecker product under row-major pairing.
StochMatrix stoch_tensor(const StochMatrix& f, const StochMatrix& g);
StochMatrix stoch_id(std::size_t n);
StochMatrix stoch_symmetry(std::size_t m, std::size_t n);
StochMatrix stoch_dup(std::size_t n);
StochMatrix stoch_discharge(std::size_t n);

/// (x, y) related iff f(y|x) > 0.
Rel support(const StochMatrix& f);
bool support_leq(const StochMatrix& f, const StochMatrix& g);
/// Every row of a total relation spread uniformly over its image.
StochMatrix uniform_on_rows(const Rel& r);

/// Integer weights in {0,…,3} per entry, normalized; zero rows are redrawn.
StochMatrix random_stoch(std::size_t src, std::size_t tgt, Rng& rng);
/// A random matrix whose support contains that of f.
StochMatrix random_stoch_above(const StochMatrix& f, Rng& rng);
/// Every stochastic matrix whose entries lie in {0, 1/3, 1/2, 2/3, 1}.
std::vector<StochMatrix> small_denominator_matrices(std::size_t src, std::size_t tgt);

std::string to_string(const StochMatrix& f);
nlohmann::ordered_json to_json(const StochMatrix& f);
/// {"src", "tgt", "rows": [["p/q", …], …]}; throws FixtureError.
StochMatrix stoch_from_json(const nlohmann::json& j);

/// FinStoch on a list of sizes, ordered by support inclusion.  Hom-sets are
/// infinite and only sampled.
class FinStochModel {
 public:
  using Object = std::size_t;
  using Morphism = StochMatrix;

  explicit FinStochModel(std::vector<std::size_t> objects, std::vector<std::size_t> auxiliary = {});

  const std::vector<std::size_t>& objects() const { return objects_; }
  bool contains(std::size_t a) const;
  std::size_t unit() const { return 1; }
  std::size_t tensor_objects(std::size_t a, std::size_t b) const { return a * b; }
  std::size_t dom(const StochMatrix& f) const { return f.src(); }
  std::size_t cod(const StochMatrix& f) const { return f.tgt(); }
  StochMatrix identity(std::size_t a) const { return stoch_id(a); }
  StochMatrix compose(const StochMatrix& g, const StochMatrix& f) const { return stoch_compose(g, f); }
  StochMatrix tensor(const StochMatrix& f, const StochMatrix& g) const { return stoch_tensor(f, g); }
  StochMatrix symmetry(std::size_t a, std::size_t b) const { return stoch_symmetry(a, b); }
  StochMatrix dup(std::size_t a) const { return stoch_dup(a); }
  StochMatrix discharge(std::size_t a) const { return stoch_discharge(a); }
  bool equal(const StochMatrix& f, const StochMatrix& g) const { return f == g; }
  bool has_order() const { return true; }
  bool leq(const StochMatrix& f, const StochMatrix& g) const { return support_leq(f, g); }
  HomSize hom_size(std::size_t, std::size_t) const { return std::nullopt; }
  StochMatrix hom_at(std::size_t a, std::size_t b, std::uint64_t i) const;
  StochMatrix hom_sample(std::size_t a, std::size_t b, Rng& rng) const { return random_stoch(a, b, rng); }
  StochMatrix sample_above(const StochMatrix& f, Rng& rng) const { return random_stoch_above(f, rng); }
  std::optional<std::uint64_t> hom_index(const StochMatrix&) const { return std::nullopt; }
  std::string describe(const StochMatrix& f) const { return to_string(f); }
  std::string describe_object(std::size_t a) const { return std::to_string(a); }

 private:
  std::vector<std::size_t> objects_;
  std::vector<std::size_t> auxiliary_;
};

/// The support comparison on sizes 1..max_size with `samples` seeded
/// matrices per law: oplax cartesian inequalities and the closure rules of
/// the generated preorder under support_leq; support is a strict
/// gs-monoidal functor onto total relations; every total relation is
/// realized; f ≈ g iff their supports agree; exact row sums under ∘ and ⊗.
LawReport check_support_oplax(std::uint64_t samples = 200, std::size_t max_size = 3,
                              std::uint64_t seed = 0);

}  // namespace gsmon
