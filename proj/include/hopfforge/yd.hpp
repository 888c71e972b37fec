/**
 * @file yd.hpp
 * @brief Yetter-Drinfel'd structures over a Hopf algebra H and the
 * classification of two-dimensional Hopf algebras in that category.
 *
 * Coordinates in H (x) B use the pair index h * dim(B) + b.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "json.hpp"

namespace hopfforge {

/// Linear functional on H given by its values on the basis.
using Functional = std::vector<CycScalar>;

struct YDStructure {
  HopfData H;
  AlgebraData B_alg;
  CoalgebraData B_coalg;
  /// Empty when B carries no designated antipode.
  std::vector<SparseVec> B_antipode;
  /// action[h * dim(B) + b] = e_h . e_b
  std::vector<SparseVec> action;
  /// coaction[b] = rho(e_b) over pair indices of H (x) B
  std::vector<SparseVec> coaction;

  std::size_t dim_B() const noexcept { return B_alg.dim; }
  const FieldContext& ctx() const { return H.ctx(); }

  SparseVec act(const SparseVec& h, const SparseVec& b) const;
  SparseVec coact(const SparseVec& b) const;
};

/// Trivial action h.b = eps(h)b and trivial coaction b |-> 1 (x) b.
YDStructure trivial_yd(const HopfData& H, const HopfData& B);

/// Items: module, comodule, module_algebra, module_coalgebra,
/// comodule_algebra, comodule_coalgebra, yd_compatibility.
AxiomReport verify_yd(const YDStructure& s);

/// The YD items together with the algebra and coalgebra axioms of B,
/// multiplicativity of the braided coproduct
/// Delta(bb') = b_1 (b_2(-1) . b'_1) (x) b_2(0) b'_2, the unit and counit laws,
/// and both antipode identities when B_antipode is set.
AxiomReport verify_braided_bialgebra(const YDStructure& s);

struct Rank2Witness {
  Functional alpha;
  std::size_t y = 0;  ///< basis index of a grouplike of H
  Functional beta;    ///< zero for every Hopf witness
  CycScalar varpi{FieldContext::get(1)};  ///< n^2 = varpi 1; zero for every Hopf witness
  bool valid = false;

  nlohmann::json to_json() const;
};

/// True when alpha is an algebra map H -> k.
bool is_algebra_map(const HopfData& H, const Functional& alpha);

/// alpha -> h <- alpha^{-1} = y h y^{-1} on every basis element, with
/// alpha -> h = h_1 alpha(h_2) and h <- alpha = alpha(h_1) h_2.
bool conjugation_condition(const HopfData& H, const Functional& alpha, std::size_t y);

/// Witness check for an explicit candidate: alpha an algebra map, y a
/// grouplike basis element, alpha(y) = -1 and the conjugation condition.
Rank2Witness rank2_check(const HopfData& H, const Functional& alpha, std::size_t y);

/// All valid (alpha, y) for H = k[G]: alpha ranges over linear characters
/// (through the abelianization), y over G. The trivial k[Z_2] solution
/// always exists and is not listed.
std::vector<Rank2Witness> rank2_classify(const FiniteGroup& G, const FieldContext& ctx);

/// rank2_check applied to each candidate; only valid witnesses are kept.
std::vector<Rank2Witness> rank2_classify_candidates(
    const HopfData& H, const std::vector<std::pair<Functional, std::size_t>>& candidates);

/// Linear characters of any finite group, trivial one first.
std::vector<Functional> linear_characters(const FiniteGroup& G, const FieldContext& ctx);

/// B = span{1, n}, n^2 = 0, Delta n = n (x) 1 + 1 (x) n, h.n = alpha(h)n,
/// rho(n) = y (x) n, S(n) = -n. No validity check: used to build the
/// counterexamples as well.
YDStructure rank2_structure(const HopfData& H, const Functional& alpha, std::size_t y);

/// rank2_structure for a valid witness; throws
/// PreconditionError("classification_violation") otherwise.
YDStructure build_B_alpha_y(const HopfData& H, const Rank2Witness& w);

/// k[Z_2] as a Hopf algebra in the YD category with trivial structures,
/// basis {1, g}.
YDStructure rank2_group_solution(const HopfData& H);

struct TwoDimModuleAlgebraReport {
  Functional alpha;
  Functional beta;
  CycScalar varpi{FieldContext::get(1)};
  AxiomReport report;  ///< module, module_algebra, beta_alpha_anticommute, beta_square
};

/// B = span{1, n} with n^2 = varpi 1 and h.n given by h_dot_n[h] in the
/// coordinates (1, n). Extracts alpha, beta from h.n = beta(h)1 + alpha(h)n
/// and checks beta alpha = -alpha beta and beta^2 = varpi(eps - alpha^2) in
/// the convolution algebra H^*.
TwoDimModuleAlgebraReport verify_module_algebra_2dim(const HopfData& H, const CycScalar& varpi,
                                                     const std::vector<SparseVec>& h_dot_n);

/// Solutions Lambda of b Lambda = eps(b) Lambda for all b with eps(Lambda) = 1.
std::optional<SparseVec> normalized_left_integral(const AlgebraData& a, const CoalgebraData& c);

/// Sweedler's four-dimensional Hopf algebra, basis {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.
HopfData sweedler_hopf(const FieldContext& ctx);

}  // namespace hopfforge
