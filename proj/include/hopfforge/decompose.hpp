/**
 * @file decompose.hpp
 * @brief Coalgebra decomposition of A = k[calG] x k[G] into comatrix
 * coalgebras, grouplikes, and the algebra structure of smash products
 * B # k[G] over a finite abelian G: ideal families, minimal ideals and
 * matrix units.
 *
 * Elements of the abelian group are addressed through its presentation
 * Z_{n_1} + ... + Z_{n_t}; an index into that set is an encoded exponent
 * vector (AbelianPresentation::encode).
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/biproduct.hpp"
#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "json.hpp"

namespace hopfforge {

// ---------------------------------------------------------------- coalgebra

struct ComatrixBlock {
  std::size_t orbit_index = 0;
  std::vector<std::size_t> orbit;  ///< b, theta(b), ..., theta^{r-1}(b)
  unsigned r = 1;
  std::size_t coset_rep = 0;       ///< g in G; the block is C(O, U_r)(1 x g)
  std::vector<SparseVec> c;        ///< c[i * r + j] = c_ij in A

  const SparseVec& at(unsigned i, unsigned j) const { return c[i * r + j]; }
};

/// c_ij = sum_l theta^i(b) x (lambda^{l(i-j)} / r) u_r^l g with u_r = u^{L/r}
/// and lambda = zeta_r. Throws InternalConsistencyError when the comatrix
/// identities or independence fail.
ComatrixBlock comatrix_block(const BiproductInstance& inst, std::size_t orbit_index, std::size_t coset_rep);

struct CoalgebraDecomposition {
  std::vector<ComatrixBlock> blocks;
  std::map<unsigned, std::size_t> multiplicities;  ///< r -> number of C_r blocks

  nlohmann::json to_json() const;
};

/// One block per orbit and per coset of U_r in G (smallest element as
/// representative); checks that the blocks give a direct sum equal to A.
CoalgebraDecomposition coalgebra_decomposition(const BiproductInstance& inst);

struct GrouplikeData {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (b, g) with theta(b) = b
  std::vector<SparseVec> vectors;                          ///< b x g in A
  FiniteGroup group;                                       ///< element i = pairs[i]

  nlohmann::json to_json() const;
};

/// {b x g : theta(b) = b, g in G} with the group structure read off from
/// multiplication in A.
GrouplikeData grouplikes(const BiproductInstance& inst);

// ------------------------------------------------------------------ algebra

/// B # k[G] for abelian G with an attached presentation.
struct SmashProduct {
  FiniteGroup G;
  HopfData H;                      ///< k[G]
  AlgebraData B;
  std::vector<SparseVec> action;   ///< action[g * dim(B) + b] = g . e_b
  AlgebraData algebra;             ///< index b * |G| + g
  IdempotentBasis e;
  /// Orthogonal idempotent basis of B; empty when B is not a power of k.
  std::vector<SparseVec> F;
  /// F_perm[x * |F| + f] = index of g^{(x)} . F[f] in F, x a presentation index.
  std::vector<std::size_t> F_perm;

  const FieldContext& ctx() const { return H.ctx(); }
  std::size_t dim_B() const noexcept { return B.dim; }
  std::size_t order() const noexcept { return G.order(); }
  const AbelianPresentation& presentation() const { return e.presentation; }
  bool is_power_of_k() const noexcept { return !F.empty(); }

  /// h . b for h in k[G].
  SparseVec act(const SparseVec& h, const SparseVec& b) const;
  /// b # h in algebra coordinates.
  SparseVec pure(const SparseVec& b, const SparseVec& h) const;
  /// g^{(x)} as a basis vector of k[G].
  SparseVec group_vector(std::size_t x) const;
  /// Presentation index of m - z, n + z and so on.
  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t sub(std::size_t x, std::size_t y) const;
};

/// Verifies that the action is a module-algebra action of k[G] and, when F
/// is given, that F is an orthogonal idempotent basis of B permuted by G.
/// Named preconditions: abelian_G, module_algebra, power_of_k.
SmashProduct make_smash(const FiniteGroup& G, const AlgebraData& B, const std::vector<SparseVec>& action,
                        std::vector<SparseVec> F = {});

/// The algebra of inst.A seen as k[calG] # k[G]; F is the character basis
/// when calG is abelian. Throws UnsupportedRoute("abelian_G") otherwise.
SmashProduct smash_from_instance(const BiproductInstance& inst);

/// (k[calG] (x) k[U]) # k[<theta>] with theta acting on the first
/// tensorand; needs abelian calG and a Gtheta instance.
SmashProduct agtheta_smash(const BiproductInstance& inst);

/// Items: orthogonal, sum_is_one, group_eigen (g^{(m)} e_n = lambda^{(-mn)} e_n),
/// coproduct (Delta e_m = sum_j e_j (x) e_{m-j}), counit.
AxiomReport verify_idempotent_basis(const FiniteGroup& G, const IdempotentBasis& e, const FieldContext& ctx);

/// (e_m . b)(e_n . c) = e_{m+n} . (b (e_n . c)) on every basis triple.
AxiomReport verify_idempotent_sum_identity(const SmashProduct& s);

/// family[x] is a basis (in B coordinates) of I_x for presentation index x.
using IdealFamily = std::vector<std::vector<SparseVec>>;

/// I_m = {b : b # e_m in I}. Throws PreconditionError("not_an_ideal") naming
/// a product that leaves the span.
IdealFamily ideal_family_from_ideal(const SmashProduct& s, const std::vector<SparseVec>& ideal_basis);

/// sum_m I_m # e_m. Throws PreconditionError("family_condition_i") or
/// ("family_condition_ii") when the family is not admissible.
std::vector<SparseVec> ideal_from_family(const SmashProduct& s, const IdealFamily& family);

/// Two-sided ideal of the algebra generated by the given vectors.
SpanBasis generated_ideal(const AlgebraData& a, const std::vector<SparseVec>& gens);

struct StabilizerData {
  std::vector<std::size_t> N;  ///< {x : g^{(x)} . f = f}
  std::vector<std::size_t> I;  ///< {z : lambda^{(zy)} = 1 for all y in N}
};

StabilizerData stabilizer_data(const SmashProduct& s, std::size_t f);

struct MinimalIdealBlock {
  std::size_t f = 0;
  std::size_t m = 0;
  unsigned r = 1;
  std::vector<std::size_t> S;      ///< section: orbit[i] = g^{(S[i])} . f
  std::vector<std::size_t> orbit;  ///< indices into F
  StabilizerData stab;
  std::vector<SparseVec> E;        ///< E[u * r + v]
  SpanBasis span{0};

  const SparseVec& at(unsigned u, unsigned v) const { return E[u * r + v]; }
};

/// E_uv = sum_{z in I_f} lambda^{(z(u-v))} g^{(u)}.f # e_{m-z}, with S chosen
/// greedily in increasing presentation order. Verifies the matrix-unit
/// relations, agreement with r (g^{(u)}.f # e_m)(g^{(v)}.f # 1), the basis
/// claim and two-sidedness.
MinimalIdealBlock minimal_ideal(const SmashProduct& s, std::size_t f, std::size_t m);

/// Ideal generated by each basis vector of the block equals the block.
bool certify_minimal(const SmashProduct& s, const MinimalIdealBlock& block);

/// M_{f,m} = M_{f',m'} iff O_f = O_{f'} and m - m' in I_f.
bool same_minimal_ideal_predicted(const SmashProduct& s, std::size_t f, std::size_t m, std::size_t f2,
                                  std::size_t m2);

struct MinimalIdealSweep {
  std::size_t blocks = 0;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::size_t distinct = 0;
};

/// Builds every M_{f,m} and compares span equality with the predicted
/// criterion on all ordered pairs.
MinimalIdealSweep minimal_ideal_sweep(const SmashProduct& s);

struct AlgebraDecomposition {
  std::vector<std::vector<std::size_t>> orbits;  ///< G-orbits of F
  std::map<std::size_t, std::size_t> blocks;     ///< n -> number of M_n blocks
  std::optional<WedderburnReport> oracle;
  std::string route;

  nlohmann::json to_json() const;
};

/// Orbit lengths n_l give |G|/n_l copies of M_{n_l}. When oracle_check is set
/// the multiset is compared with wedderburn_oracle(s.algebra) and a mismatch
/// throws InternalConsistencyError.
AlgebraDecomposition algebra_decomposition(const SmashProduct& s, bool oracle_check = true);

/// algebra_decomposition of agtheta_smash(inst), always compared against
/// wedderburn_oracle(inst.A.algebra). Throws UnsupportedRoute for
/// nonabelian calG or a non-Gtheta instance.
AlgebraDecomposition agtheta_algebra_route(const BiproductInstance& inst);

/// Best available algebra decomposition: the direct smash route when G and
/// calG are abelian, else the oracle alone.
AlgebraDecomposition algebra_decomposition_of(const BiproductInstance& inst, bool oracle_check);

/// {"dim", "conductor", "coalgebra", "algebra", "grouplikes"}
nlohmann::json decomposition_report(const BiproductInstance& inst, bool oracle_check);

}  // namespace hopfforge
