/**
 * @file lattice.hpp
 * @brief Hopf subalgebras of A = k[calG] x k[G] spanned by pairs b x g,
 * normality through adjoint actions, lower normal series and the
 * solvability certificates.
 *
 * A pair (b, g) is addressed by its basis index b * |G| + g in A. Every
 * subcoalgebra of A is a sum of the comatrix blocks C(O_b)(1 x g), which
 * are pairwise distinct simple subcoalgebras, so every Hopf subalgebra is
 * spanned by the pairs it contains.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfforge/biproduct.hpp"
#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "json.hpp"

namespace hopfforge {

/// G = Ker(pi) and G abelian.
bool trivial_action_hypothesis(const BiproductInstance& inst);

struct SubHopfDescriptor {
  std::vector<std::size_t> pairs;  ///< sorted basis indices b * |G| + g
  Subgroup calG_A;                 ///< projection to calG
  Subgroup G_A;                    ///< projection to G
  Subgroup N_A;                    ///< {g : (1, g) in pairs}
  Subgroup calN_A;                 ///< kernel of f_A
  /// f_A(b) = smallest g with (b, g) in pairs, for b in calG_A; npos elsewhere.
  std::vector<std::size_t> f_map;

  std::size_t dim() const noexcept { return pairs.size(); }
  bool contains(std::size_t index) const;
  /// pairs == calN_A x N_A
  bool is_lower_bound_equal(const BiproductInstance& inst) const;
  std::vector<SparseVec> basis(const FieldContext& ctx) const;
  nlohmann::json to_json(const BiproductInstance& inst) const;
};

/// Pairs given as (b, g) element indices.
using PairSeed = std::vector<std::pair<std::size_t, std::size_t>>;

/// Smallest pair set containing the seed and 1 x 1, closed under theta-orbit
/// translates by U_r and under products of basis elements; under the trivial
/// action hypothesis also under inverses. The span is verified to be a Hopf
/// subalgebra and, under the hypothesis, the f_A data and the bounds
/// L_A <= A <= U_A are verified.
SubHopfDescriptor closure(const BiproductInstance& inst, const PairSeed& seed);

/// Closures of singletons and of all joins, smallest dimension first.
/// Throws CapExceeded when dim(A) exceeds order_cap() or more than max_count
/// subalgebras appear.
std::vector<SubHopfDescriptor> enumerate_hopf_subalgebras(const BiproductInstance& inst,
                                                          std::size_t max_count = 4096);

struct NormalityReport {
  bool normal = false;
  bool left = false;                ///< A > sub <= sub
  bool right = false;               ///< sub < A <= sub
  std::string method;               ///< "criterion" or "adjoint"
  std::optional<bool> brute_force;  ///< adjoint stability computed directly
};

/// Left: (b b' b^{-1}) x g' in the pair set for all b in calG. Right:
/// (b' < b_{lambda^l}) x u_r^{-l} g' in the span for every orbit and l.
/// Without the trivial action hypothesis only the direct adjoint test is
/// available. With cross_check the direct test also runs and a disagreement
/// throws InternalConsistencyError.
NormalityReport is_normal(const BiproductInstance& inst, const SubHopfDescriptor& sub, bool cross_check = false);

/// a_1 x S(a_2) and S(a_1) x a_2 stay in the span of sub for all basis a of
/// the span of acting (all of A when acting is empty).
bool adjoint_stable(const HopfData& A, const std::vector<std::size_t>& sub, const std::vector<std::size_t>& acting);

/// The Hopf algebra structure of the span of basis vectors closed under
/// all structure maps, in the order given.
HopfData restrict_to_basis(const HopfData& A, const std::vector<std::size_t>& indices);

/// Grouplike group of a Hopf algebra spanned by the given grouplike
/// candidates, or nullopt when they do not span it.
std::optional<FiniteGroup> grouplike_certificate(const HopfData& Q, const std::vector<SparseVec>& candidates);

struct FactorReport {
  std::string name;
  std::size_t dim = 0;
  bool commutative = false;
  bool cocommutative = false;
  nlohmann::json grouplike_invariants;  ///< null when no group-algebra certificate
  nlohmann::json expected_invariants;
  bool certified = false;

  nlohmann::json to_json() const;
};

struct SeriesReport {
  std::vector<std::string> chain;       ///< k, H, A1, A
  std::vector<std::size_t> dims;
  std::vector<FactorReport> factors;    ///< one per step, bottom first
  bool ok = false;

  nlohmann::json to_json() const;
};

/// k <= H = k1 x k[U] <= A1 = k[calG] x k[U] <= A. Each step is checked
/// normal by the adjoint test; A / A1^+A must be k[G/U] and A1 / H^+A1 must
/// be k[calG] by grouplike certificates. Throws InternalConsistencyError on
/// any failure.
SeriesReport lower_normal_series(const BiproductInstance& inst);

struct SolvabilityReport {
  bool solvable = false;
  std::vector<std::size_t> derived_orders;  ///< |calG^{(l)}|
  std::vector<FactorReport> factors;        ///< A_l / A_{l+1}^+ A_l, top first
  std::size_t perfect_order = 1;            ///< order of the stable term

  nlohmann::json to_json() const;
};

/// Chain A_l = k[calG^{(l-1)}] x k[U] with commutative factors when the
/// derived series of calG reaches 1. Needs G abelian.
SolvabilityReport certify_solvable(const BiproductInstance& inst);

struct UniqueNormalReport {
  std::vector<SubHopfDescriptor> normal;
  std::size_t enumerated = 0;
  FactorReport quotient;  ///< A / H^+A against k[calG]

  nlohmann::json to_json(const BiproductInstance& inst) const;
};

/// For calG simple nonabelian and theta of prime order p under the trivial
/// action hypothesis: the normal Hopf subalgebras are exactly k, k1 x k[G]
/// and A. Throws PreconditionError("simple_nonabelian") or ("prime_order")
/// when inapplicable and InternalConsistencyError on any extra subalgebra.
UniqueNormalReport verify_unique_normal(const BiproductInstance& inst, bool cross_check = false);

}  // namespace hopfforge
