// Randomized property suites shared by the property test binary and the
// acceptance run. Each suite returns the number of failing cases.
#pragma once

#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hopfforge/decompose.hpp"
#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "hopfforge/yd.hpp"
#include "oracles.hpp"

namespace props {

using namespace hopfforge;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

inline const FieldContext& random_field(std::mt19937& rng) {
  return FieldContext::get(1 + static_cast<unsigned>(rng() % 15));
}

inline FiniteGroup random_group(std::mt19937& rng, bool abelian_only) {
  const auto specs = abelian_only ? oracle::small_abelian_specs() : oracle::small_group_specs();
  return parse_group_spec(specs[rng() % specs.size()]);
}

inline Outcome field_axioms(std::size_t cases, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (std::size_t t = 0; t < cases; ++t) {
    const FieldContext& k = random_field(rng);
    const CycScalar a = oracle::random_scalar(k, rng), b = oracle::random_scalar(k, rng),
                    c = oracle::random_scalar(k, rng);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + k.zero() == a && a * k.one() == a && (a - a).is_zero() &&
              a + (-a) == k.zero();
    if (!a.is_zero()) ok = ok && (a * a.inv()).is_one() && (b / a) * a == b;
    ok = ok && oracle::near(oracle::embed(a * b + c), oracle::embed(a) * oracle::embed(b) + oracle::embed(c));
    out.record(ok, "conductor " + std::to_string(k.conductor()) + ": " + a.to_string() + ", " + b.to_string());
  }
  return out;
}

inline HopfData random_hopf(std::mt19937& rng) {
  const FieldContext& k = FieldContext::get(2 * (1 + static_cast<unsigned>(rng() % 4)));
  switch (rng() % 4) {
    case 0:
      return sweedler_hopf(k);
    case 1:
      return tensor_hopf(group_algebra_hopf(FiniteGroup::cyclic(1 + rng() % 3), k), sweedler_hopf(k));
    default:
      return group_algebra_hopf(random_group(rng, false), k);
  }
}

/// Adds a nonzero multiple of a basis term to one structure constant.
inline HopfData perturb(const HopfData& h, std::mt19937& rng) {
  HopfData p = h;
  const FieldContext& k = h.ctx();
  const std::size_t d = h.dim();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  CycScalar c = k.integer(1 + static_cast<long>(rng() % 4));
  if (rng() % 2) c = -c;
  switch (rng() % 4) {
    case 0:
      add_term(p.antipode[pick(d)], pick(d), c);
      break;
    case 1:
      add_term(p.algebra.mult[pick(d * d)], pick(d), c);
      break;
    case 2:
      add_term(p.coalgebra.comult[pick(d)], pick(d * d), c);
      break;
    default:
      add_term(p.coalgebra.counit, pick(d), c);
      break;
  }
  return p;
}

inline Outcome hopf_axiom_exhaustiveness(std::size_t cases, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (std::size_t t = 0; t < cases; ++t) {
    const HopfData h = random_hopf(rng);
    const bool clean = verify_hopf(h).passed();
    const HopfData p = perturb(h, rng);
    const bool caught = !verify_hopf(p).passed() || structurally_equal(p, h);
    out.record(clean && caught, "dim " + std::to_string(h.dim()) + (clean ? ": perturbation missed" : ": clean fails"));
  }
  return out;
}

inline Outcome dual_involutivity(std::size_t cases, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (std::size_t t = 0; t < cases; ++t) {
    const HopfData h = random_hopf(rng);
    const HopfData d = dual_hopf(h);
    const bool ok = verify_hopf(d).passed() && structurally_equal(dual_hopf(d), h) &&
                    is_commutative(d.algebra) == is_cocommutative(h.coalgebra) &&
                    antipode_order(d, 16) == antipode_order(h, 16);
    out.record(ok, "dim " + std::to_string(h.dim()));
  }
  return out;
}

inline Outcome idempotent_identities(std::size_t cases, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (std::size_t t = 0; t < cases; ++t) {
    const FiniteGroup g = random_group(rng, true);
    const FieldContext& k = FieldContext::get(static_cast<unsigned>(g.exponent() * (1 + rng() % 3)));
    const IdempotentBasis e = idempotent_basis(g, k);
    bool ok = verify_idempotent_basis(g, e, k).passed();
    const HopfData h = group_algebra_hopf(g, k);
    const AbelianPresentation& p = e.presentation;
    // g^(m) e_n = lambda^(-mn) e_n with lambda_j a primitive n_j-th root of unity
    for (int trial = 0; trial < 4 && ok; ++trial) {
      const std::size_t mi = rng() % p.size(), ni = rng() % p.size();
      const auto m = p.decode(mi), n = p.decode(ni);
      CycScalar lam = k.one();
      for (std::size_t j = 0; j < p.orders.size(); ++j) lam *= k.root_of_unity(p.orders[j], -m[j] * n[j]);
      const SparseVec lhs = h.algebra.multiply(unit_vector(k, g.element_of(m)), e.vectors[ni]);
      ok = lhs == scaled(e.vectors[ni], lam);
    }
    out.record(ok, "order " + std::to_string(g.order()));
  }
  return out;
}

/// Commuting permutation action of an abelian group on {0..n-1} through
/// powers of one permutation.
inline std::vector<std::vector<std::size_t>> random_permutation_action(const FiniteGroup& g, std::size_t n,
                                                                       std::mt19937& rng) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::size_t d = 1;
  for (const auto& [len, count] : oracle::cycle_type(sigma)) d = std::lcm(d, len);
  const AbelianPresentation& p = *g.presentation();
  std::vector<std::size_t> power(p.orders.size());
  for (std::size_t j = 0; j < p.orders.size(); ++j)
    power[j] = (d / std::gcd(d, std::size_t{p.orders[j]})) * (rng() % d);
  std::vector<std::vector<std::size_t>> out(g.order(), std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto m = g.coordinates_of(x);
    std::size_t e = 0;
    for (std::size_t j = 0; j < m.size(); ++j) e += static_cast<std::size_t>(m[j]) * power[j];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t v = i;
      for (std::size_t s = 0; s < e % d; ++s) v = sigma[v];
      out[x][i] = v;
    }
  }
  return out;
}

inline SmashProduct random_smash(std::mt19937& rng) {
  const FiniteGroup g = random_group(rng, true);
  const FieldContext& k = FieldContext::get(static_cast<unsigned>(g.exponent()));
  if (rng() % 2) {
    const std::size_t n = 1 + rng() % 6;
    const AlgebraData b = oracle::functions_algebra(k, n);
    const auto perm = random_permutation_action(g, n, rng);
    std::vector<SparseVec> action(g.order() * n), F;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t i = 0; i < n; ++i) action[x * n + i] = unit_vector(k, perm[x][i]);
    for (std::size_t i = 0; i < n; ++i) F.push_back(unit_vector(k, i));
    return make_smash(g, b, action, F);
  }
  // k[calG] with calG abelian, acted on through permutations that are
  // automorphisms: powers of inversion
  const FiniteGroup cal = random_group(rng, true);
  const HopfData bh = group_algebra_hopf(cal, k);
  const AbelianPresentation& p = *g.presentation();
  std::vector<long> flips(p.orders.size());
  for (std::size_t j = 0; j < flips.size(); ++j) flips[j] = p.orders[j] % 2 == 0 ? static_cast<long>(rng() % 2) : 0;
  std::vector<SparseVec> action(g.order() * cal.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto m = g.coordinates_of(x);
    long parity = 0;
    for (std::size_t j = 0; j < m.size(); ++j) parity += m[j] * flips[j];
    for (std::size_t b = 0; b < cal.order(); ++b)
      action[x * cal.order() + b] = unit_vector(k, parity % 2 ? cal.inv(b) : b);
  }
  return make_smash(g, bh.algebra, action);
}

inline Outcome idempotent_sum_identity(std::size_t cases, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (std::size_t t = 0; t < cases; ++t) {
    const SmashProduct s = random_smash(rng);
    bool ok = verify_idempotent_sum_identity(s).passed();
    const FieldContext& k = s.ctx();
    // direct spot checks of (e_m.b)(e_n.c) = e_{m+n}.(b(e_n.c))
    for (int trial = 0; trial < 4 && ok; ++trial) {
      const std::size_t m = rng() % s.order(), n = rng() % s.order();
      const SparseVec b = unit_vector(k, rng() % s.dim_B()), c = unit_vector(k, rng() % s.dim_B());
      const SparseVec lhs = s.B.multiply(s.act(s.e.vectors[m], b), s.act(s.e.vectors[n], c));
      const SparseVec rhs = s.act(s.e.vectors[s.add(m, n)], s.B.multiply(b, s.act(s.e.vectors[n], c)));
      ok = lhs == rhs;
    }
    out.record(ok, "|G| " + std::to_string(s.order()) + ", dim B " + std::to_string(s.dim_B()));
  }
  return out;
}

}  // namespace props
