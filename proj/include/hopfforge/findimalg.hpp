/**
 * @file findimalg.hpp
 * @brief Structure-constant algebras, coalgebras and Hopf algebras.
 *
 * Every structure map is stored on basis elements as a sparse coordinate
 * vector. Tensor-square coordinates use the pair index j * dim + k for
 * e_j (x) e_k. The verifiers are exhaustive over basis tuples, so a passing
 * report is a proof for the given structure constants.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/cyclotomic.hpp"
#include "hopfforge/linalg.hpp"
#include "json.hpp"

namespace hopfforge {

struct AlgebraData {
  const FieldContext* ctx = nullptr;
  std::size_t dim = 0;
  std::vector<SparseVec> mult;  ///< mult[i * dim + j] = e_i e_j
  SparseVec unit;

  AlgebraData() = default;
  AlgebraData(const FieldContext& c, std::size_t d) : ctx(&c), dim(d), mult(d * d) {}

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
};

struct CoalgebraData {
  const FieldContext* ctx = nullptr;
  std::size_t dim = 0;
  std::vector<SparseVec> comult;  ///< comult[i] over pair indices
  SparseVec counit;               ///< counit[i] = eps(e_i)

  CoalgebraData() = default;
  CoalgebraData(const FieldContext& c, std::size_t d) : ctx(&c), dim(d), comult(d) {}

  SparseVec coproduct(const SparseVec& x) const;
  CycScalar counit_of(const SparseVec& x) const;
};

struct HopfData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  std::vector<SparseVec> antipode;  ///< antipode[i] = S(e_i)

  std::size_t dim() const noexcept { return algebra.dim; }
  const FieldContext& ctx() const { return *algebra.ctx; }
  SparseVec apply_antipode(const SparseVec& x) const;
};

struct AxiomCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;
};

/// Per-axiom tallies; a check with zero failures over all tuples is a proof.
class AxiomReport {
 public:
  static constexpr std::size_t kWitnessCap = 8;

  AxiomCheck& item(const std::string& name);
  void record(const std::string& name, bool ok, const std::string& witness);
  void merge(const AxiomReport& other);

  bool passed() const;
  bool passed(const std::string& name) const;
  const std::vector<AxiomCheck>& checks() const noexcept { return checks_; }
  /// Name of the first failing axiom, empty when everything passed.
  std::string first_failure() const;
  nlohmann::json to_json() const;

 private:
  std::vector<AxiomCheck> checks_;
};

AxiomReport verify_algebra(const AlgebraData& a);
AxiomReport verify_coalgebra(const CoalgebraData& c);
/// Algebra, coalgebra, bialgebra and both antipode identities.
AxiomReport verify_hopf(const HopfData& h);

/// Smallest k <= bound with S^k = I, or nullopt when it exceeds the bound.
std::optional<unsigned> antipode_order(const HopfData& h, unsigned bound);

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const CoalgebraData& c);
bool check_grouplike(const HopfData& h, const SparseVec& v);

HopfData tensor_hopf(const HopfData& h1, const HopfData& h2);
HopfData dual_hopf(const HopfData& h);
/// Exact equality of all structure constants.
bool structurally_equal(const HopfData& a, const HopfData& b);

/// Hopf subalgebra test for the span of the given vectors.
bool spans_hopf_subalgebra(const HopfData& h, const std::vector<SparseVec>& basis);

/// H / K^+H for a normal Hopf subalgebra K given by spanning vectors.
/// The complement basis is the set of non-pivot standard basis vectors of
/// the echelon form of K^+H, in increasing index order.
HopfData quotient_by_normal(const HopfData& h, const std::vector<SparseVec>& sub_basis);

struct HopfQuotient {
  HopfData Q;
  std::vector<SparseVec> projection;  ///< projection[a] = image of e_a in Q
};

/// quotient_by_normal together with the canonical projection.
HopfQuotient quotient_with_projection(const HopfData& h, const std::vector<SparseVec>& sub_basis);

struct WedderburnReport {
  bool semisimple = false;
  std::size_t radical_dim = 0;
  std::size_t center_dim = 0;
  /// block size n -> number of blocks isomorphic to M_n
  std::map<std::size_t, std::size_t> blocks;
  std::size_t total_dim() const;
  nlohmann::json to_json() const;
};

/// Radical via the trace form of the regular representation, then block
/// sizes from the characteristic polynomial of a separating central element.
/// Block sizes are those of the algebra after extension to an algebraic
/// closure, which coincide with the k-blocks whenever k splits the algebra.
WedderburnReport wedderburn_oracle(const AlgebraData& a);

/// Matrix of left multiplication by x: column j holds x e_j.
DenseMatrix left_mult_matrix(const AlgebraData& a, const SparseVec& x);

nlohmann::json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const nlohmann::json& j);

/// Hopf algebra k of dimension one.
HopfData trivial_hopf(const FieldContext& ctx);

}  // namespace hopfforge
