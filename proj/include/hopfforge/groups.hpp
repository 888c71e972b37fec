/**
 * @file groups.hpp
 * @brief Finite groups by multiplication table, automorphisms, orbits,
 * characters and idempotents of abelian group algebras.
 *
 * Element 0 need not be the identity for table input, but every constructor
 * in this file that builds its own table puts the identity at index 0.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/cyclotomic.hpp"
#include "hopfforge/findimalg.hpp"
#include "json.hpp"

namespace hopfforge {

/// Sorted element indices of a subgroup.
using Subgroup = std::vector<std::size_t>;

/// Z_{n_1} + ... + Z_{n_t} -> G, m |-> g_1^{m_1} ... g_t^{m_t}.
struct AbelianPresentation {
  std::vector<unsigned> orders;
  std::vector<std::size_t> generators;

  std::size_t size() const;
  /// Mixed-radix index of m, first factor most significant.
  std::size_t encode(const std::vector<long>& m) const;
  std::vector<long> decode(std::size_t index) const;
};

/// Group order cap: HOPFFORGE_ORDER_CAP when set, else 256.
std::size_t order_cap();

class FiniteGroup {
 public:
  /// Empty placeholder of order 0; assign a real group before use.
  FiniteGroup() = default;
  /// Verifies closure, associativity, identity and inverses.
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table, std::string name = {});
  static FiniteGroup cyclic(unsigned n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Closure of the generators under composition (ab)(x) = a(b(x)).
  static FiniteGroup from_permutations(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                                       std::string name = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::optional<AbelianPresentation>& presentation() const noexcept { return pres_; }
  /// Attaches a presentation after checking it is an isomorphism.
  void set_presentation(AbelianPresentation p);
  /// g^{(m)} for the attached presentation.
  std::size_t element_of(const std::vector<long>& m) const;
  /// Exponent vector of an element in the attached presentation.
  std::vector<long> coordinates_of(std::size_t g) const;

  /// Permutation images when the group came from generators.
  const std::vector<std::vector<unsigned>>& permutations() const noexcept { return perms_; }

  bool is_abelian() const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;

 private:
  void finish();

  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::string name_;
  std::optional<AbelianPresentation> pres_;
  std::vector<std::size_t> coords_index_;  // presentation index -> element
  std::vector<std::size_t> element_coords_;  // element -> presentation index
  std::vector<std::vector<unsigned>> perms_;
};

/// Automorphism given by its permutation of element indices.
struct GroupAutomorphism {
  std::vector<std::size_t> perm;

  std::size_t operator()(std::size_t x) const { return perm[x]; }
  bool is_identity() const;
  /// Checks bijectivity and perm(ab) = perm(a)perm(b); throws MalformedInput.
  static GroupAutomorphism checked(const FiniteGroup& g, std::vector<std::size_t> perm);
  static GroupAutomorphism identity(const FiniteGroup& g);
  static GroupAutomorphism inversion(const FiniteGroup& g);
  /// x |-> g x g^{-1}
  static GroupAutomorphism conjugation(const FiniteGroup& grp, std::size_t g);

  GroupAutomorphism compose(const GroupAutomorphism& after) const;
  GroupAutomorphism power(long k) const;
  std::size_t order() const;
};

/// <theta>-orbits, each listed as b, theta(b), ... from its smallest index;
/// orbits sorted by that first element.
std::vector<std::vector<std::size_t>> orbits(const FiniteGroup& g, const GroupAutomorphism& theta);

/// k[G]: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
HopfData group_algebra_hopf(const FiniteGroup& g, const FieldContext& ctx);

struct IdempotentBasis {
  AbelianPresentation presentation;
  std::vector<SparseVec> vectors;  ///< vectors[encode(m)] = e_m in k[G]
  SparseVec integral;              ///< e_0
};

/// e_m = sum_r (lambda^{(mr)} / |G|) g^{(r)}, lambda_j = zeta_N^{N/n_j}.
IdempotentBasis idempotent_basis(const FiniteGroup& g, const FieldContext& ctx);

/// lambda^{(m)} = prod_j lambda_j^{m_j} for a presentation.
CycScalar formal_root_power(const AbelianPresentation& p, const FieldContext& ctx, const std::vector<long>& m);

/// A linear character of an abelian group with values zeta_e^{values[g]}.
struct Character {
  unsigned exponent = 1;
  std::vector<unsigned> values;

  CycScalar value(const FieldContext& ctx, std::size_t g) const;
  bool is_trivial() const;
};

/// All |G| characters, built by extending from the trivial subgroup one
/// generator at a time. Requires the conductor to be divisible by exp(G).
std::vector<Character> characters(const FiniteGroup& g, const FieldContext& ctx);

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h);
/// H, H', H'', ... until it stabilizes.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elems);
bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h);
/// True when the only normal subgroups are 1 and G (and G is nontrivial).
bool is_simple(const FiniteGroup& g);
/// Quotient table by a normal subgroup, cosets ordered by smallest member.
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n);
/// The subgroup as a group in its own right, elements in sorted order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// element order -> number of elements of that order
std::map<std::size_t, std::size_t> order_profile(const FiniteGroup& g);
/// Elementary divisors (prime powers, sorted) of an abelian group.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);
/// Same elementary divisors as the abelian group prod Z_{n_i}.
std::vector<std::size_t> elementary_divisors(const std::vector<std::size_t>& cyclic_orders);
/// Isomorphism-class certificate used for group comparisons: abelian
/// invariants when abelian, else order, commutativity flag and order profile.
nlohmann::json group_invariants(const FiniteGroup& g);

/// {"kind": "cyclic" | "product" | "perm_gens" | "table", ...}
FiniteGroup parse_group_spec(const nlohmann::json& spec);

}  // namespace hopfforge
