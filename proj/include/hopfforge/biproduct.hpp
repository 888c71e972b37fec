/**
 * @file biproduct.hpp
 * @brief Smash products, smash coproducts, biproducts B x H, and the
 * builders for A = k[calG] x k[G] from a group automorphism theta.
 *
 * Basis of B x H: index b * dim(H) + h. For the group builders B is taken
 * in the group-element basis of k[calG] and the eigenbasis of theta is
 * kept as a change of basis.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "hopfforge/yd.hpp"
#include "json.hpp"

namespace hopfforge {

/// (b # h)(b' # h') = b(h_1 . b') # h_2 h'
AlgebraData smash_product_algebra(const HopfData& H, const AlgebraData& B, const std::vector<SparseVec>& action);

/// Delta(c # h) = (c_1 # c_2(-1) h_1) (x) (c_2(0) # h_2)
CoalgebraData smash_coproduct_coalgebra(const HopfData& H, const CoalgebraData& C,
                                        const std::vector<SparseVec>& coaction);

/// Smash product, smash coproduct and
/// S(c x h) = (1 x S_H(c(-1) h))(S_B(c(0)) x 1). Requires s.B_antipode.
HopfData biproduct_hopf(const YDStructure& s);

struct EigenVector {
  std::size_t orbit = 0;   ///< index into orbit_table
  unsigned ell = 0;        ///< eigenvalue lambda^ell, lambda = zeta_N^{N/r}
  unsigned degree = 0;     ///< rho(b) = u^degree (x) b
  SparseVec coords;        ///< b_{lambda^ell} in the group-element basis of k[calG]
};

struct BiproductInstance {
  std::string name;
  nlohmann::json spec;  ///< construction spec that rebuilds this instance
  HopfData A;
  YDStructure yd;
  FiniteGroup calG;
  GroupAutomorphism theta;
  FiniteGroup G;
  std::vector<GroupAutomorphism> pi;  ///< pi[g] acting on calG
  unsigned L = 1;                     ///< |U| = order of theta
  std::vector<std::size_t> U_embed;   ///< U_embed[j] = image of zeta_L^j in G
  std::vector<std::vector<std::size_t>> orbit_table;
  std::vector<EigenVector> eigenbasis;

  const FieldContext& ctx() const { return A.ctx(); }
  std::size_t index(std::size_t b, std::size_t g) const { return b * G.order() + g; }
  std::size_t u() const { return U_embed.size() > 1 ? U_embed[1] : G.identity(); }
  /// U_r = <u^{L/r}>, the r-th roots of unity inside G.
  Subgroup U_r(unsigned r) const;
  /// True when every pi(g) is the identity.
  bool trivial_action() const;
  nlohmann::json report() const;
};

/// Assembles A = k[calG] x k[G] with g . b = pi(g)(b) and
/// rho(b) = u^{ell L / r} (x) b on the eigenvector b = b_{lambda^ell} of an
/// orbit of length r, where L = ord(theta) and u is the image of zeta_L.
/// Named preconditions: pi_homomorphism, pi_commutes_with_theta, u_order,
/// u_central_in_kernel; a missing root of unity raises ConductorError.
BiproductInstance build_A_general(const FiniteGroup& calG, const GroupAutomorphism& theta, const FiniteGroup& G,
                                  const std::vector<GroupAutomorphism>& pi, std::size_t u,
                                  const FieldContext& ctx);

/// G = U x <theta> = Z_L x Z_L, pi the projection onto <theta>, U the first
/// factor.
BiproductInstance build_A_Gtheta(const FiniteGroup& calG, const GroupAutomorphism& theta, const FieldContext& ctx);

/// Extends images of generators to pi: G -> Aut(calG); throws
/// PreconditionError("pi_homomorphism") when the assignment is not well defined.
std::vector<GroupAutomorphism> extend_action(const FiniteGroup& G, const FiniteGroup& calG,
                                             const std::vector<std::size_t>& generators,
                                             const std::vector<GroupAutomorphism>& images);

/// Smallest conductor for the instance data: lcm of ord(theta), exp(G), and
/// exp(calG) when calG is abelian.
unsigned auto_conductor(const FiniteGroup& calG, const GroupAutomorphism& theta, const FiniteGroup& G);

struct ExampleParams {
  unsigned n = 0;          ///< 0 selects the example default
  unsigned m = 0;
  unsigned conductor = 0;  ///< 0 selects auto_conductor
};

/// Registry names: ex3_1 ... ex3_7, ex3_5_z9, a5, trivial.
std::vector<std::string> example_names();
/// Construction spec for a registry example.
nlohmann::json example_spec(const std::string& name, const ExampleParams& p = {});
/// Builds from a construction spec:
/// {"calG": group, "theta": aut, "mode": "Gtheta" | "general", "G": group,
///  "pi": {"generators": [...], "images": [aut, ...]}, "embed": {"u": g},
///  "conductor": N (optional)}.
/// An automorphism is an array of element images, "identity", "inversion",
/// "swap" (for a product of two equal factors) or {"conjugation_by": g}.
BiproductInstance build_from_spec(const nlohmann::json& spec, const std::string& name = "custom");
BiproductInstance build_example(const std::string& name, const ExampleParams& p = {});

GroupAutomorphism parse_automorphism(const FiniteGroup& g, const nlohmann::json& spec);

}  // namespace hopfforge
