#include "hopfforge/lattice.hpp"

#include <algorithm>
#include <set>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Basis products and orbit translates of A on pair indices.
class PairTables {
 public:
  explicit PairTables(const BiproductInstance& inst) : inst_(inst), n_(inst.A.dim()), nG_(inst.G.order()) {
    orbit_of_.assign(inst.calG.order(), 0);
    for (std::size_t o = 0; o < inst.orbit_table.size(); ++o)
      for (std::size_t b : inst.orbit_table[o]) orbit_of_[b] = o;
    hyp_ = trivial_action_hypothesis(inst);
    prod_.resize(n_ * n_);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) {
        const std::size_t b = p / nG_, g = p % nG_, b2 = q / nG_, g2 = q % nG_;
        prod_[p * n_ + q] = inst.index(inst.calG.mul(b, inst.pi[g](b2)), inst.G.mul(g, g2));
      }
    translates_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      const std::size_t b = p / nG_, g = p % nG_;
      const auto& orbit = inst.orbit_table[orbit_of_[b]];
      for (std::size_t u : inst.U_r(static_cast<unsigned>(orbit.size())))
        for (std::size_t c : orbit) translates_[p].push_back(inst.index(c, inst.G.mul(u, g)));
    }
  }

  std::size_t dim() const noexcept { return n_; }

  std::vector<std::size_t> close(const std::vector<std::size_t>& seed) const {
    std::vector<char> in(n_, 0);
    std::vector<std::size_t> list, queue;
    auto add = [&](std::size_t p) {
      if (in[p]) return;
      in[p] = 1;
      list.push_back(p);
      queue.push_back(p);
    };
    add(inst_.index(inst_.calG.identity(), inst_.G.identity()));
    for (std::size_t p : seed) add(p);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t p = queue[q];
      for (std::size_t t : translates_[p]) add(t);
      if (hyp_) add(inst_.index(inst_.calG.inv(p / nG_), inst_.G.inv(p % nG_)));
      const std::size_t len = list.size();
      for (std::size_t i = 0; i < len; ++i) {
        add(prod_[p * n_ + list[i]]);
        add(prod_[list[i] * n_ + p]);
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  }

 private:
  const BiproductInstance& inst_;
  std::size_t n_, nG_;
  bool hyp_ = false;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> prod_;
  std::vector<std::vector<std::size_t>> translates_;
};

bool in_sorted(const std::vector<std::size_t>& v, std::size_t x) { return std::binary_search(v.begin(), v.end(), x); }

Subgroup sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SubHopfDescriptor describe(const BiproductInstance& inst, std::vector<std::size_t> pairs) {
  const std::size_t nG = inst.G.order();
  SubHopfDescriptor d;
  d.pairs = std::move(pairs);
  std::vector<std::size_t> bs, gs, ns;
  d.f_map.assign(inst.calG.order(), npos);
  for (std::size_t p : d.pairs) {
    const std::size_t b = p / nG, g = p % nG;
    bs.push_back(b);
    gs.push_back(g);
    if (b == inst.calG.identity()) ns.push_back(g);
    if (d.f_map[b] == npos) d.f_map[b] = g;
  }
  d.calG_A = sorted_unique(bs);
  d.G_A = sorted_unique(gs);
  d.N_A = sorted_unique(ns);
  for (std::size_t b : d.calG_A)
    if (in_sorted(d.N_A, d.f_map[b])) d.calN_A.push_back(b);

  if (!trivial_action_hypothesis(inst)) return d;
  const FiniteGroup& G = inst.G;
  auto same_coset = [&](std::size_t g, std::size_t h) { return in_sorted(d.N_A, G.mul(G.inv(g), h)); };
  for (std::size_t p : d.pairs)
    if (!same_coset(d.f_map[p / nG], p % nG)) throw InternalConsistencyError("f_A is not well defined");
  for (std::size_t b : d.calG_A) {
    if (!same_coset(d.f_map[inst.theta(b)], d.f_map[b])) throw InternalConsistencyError("f_A o theta != f_A");
    for (std::size_t c : d.calG_A)
      if (!same_coset(G.mul(d.f_map[b], d.f_map[c]), d.f_map[inst.calG.mul(b, c)]))
        throw InternalConsistencyError("f_A is not a homomorphism");
  }
  for (std::size_t b : d.calN_A)
    for (std::size_t g : d.N_A)
      if (!d.contains(inst.index(b, g))) throw InternalConsistencyError("L_A is not contained in A");
  return d;
}

std::vector<std::size_t> pairs_of(const BiproductInstance& inst, const Subgroup& bs, const Subgroup& gs) {
  std::vector<std::size_t> out;
  for (std::size_t b : bs)
    for (std::size_t g : gs) out.push_back(inst.index(b, g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<SparseVec> unit_vectors(const FieldContext& ctx, const std::vector<std::size_t>& idx) {
  std::vector<SparseVec> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(unit_vector(ctx, i));
  return out;
}

FactorReport make_factor(std::string name, const HopfData& Q, const std::vector<SparseVec>& candidates,
                         const FiniteGroup& expected, bool need_commutative) {
  FactorReport f;
  f.name = std::move(name);
  f.dim = Q.dim();
  f.commutative = is_commutative(Q.algebra);
  f.cocommutative = is_cocommutative(Q.coalgebra);
  f.expected_invariants = group_invariants(expected);
  if (auto grp = grouplike_certificate(Q, candidates)) f.grouplike_invariants = group_invariants(*grp);
  f.certified = f.cocommutative && !f.grouplike_invariants.is_null() &&
                f.grouplike_invariants == f.expected_invariants && (!need_commutative || f.commutative);
  return f;
}

/// Quotient K / K'^+K for pair sets K' <= K, with candidates the images of
/// the listed pairs of K.
HopfQuotient pair_quotient(const BiproductInstance& inst, const std::vector<std::size_t>& K,
                           const std::vector<std::size_t>& Ksub) {
  const FieldContext& ctx = inst.ctx();
  const HopfData HK = restrict_to_basis(inst.A, K);
  std::vector<SparseVec> sub;
  for (std::size_t p : Ksub) {
    const auto it = std::lower_bound(K.begin(), K.end(), p);
    sub.push_back(unit_vector(ctx, static_cast<std::size_t>(it - K.begin())));
  }
  return quotient_with_projection(HK, sub);
}

std::vector<SparseVec> projected(const HopfQuotient& q, const std::vector<std::size_t>& K,
                                 const std::vector<std::size_t>& which) {
  std::vector<SparseVec> out;
  for (std::size_t p : which) {
    const auto it = std::lower_bound(K.begin(), K.end(), p);
    out.push_back(q.projection[static_cast<std::size_t>(it - K.begin())]);
  }
  return out;
}

}  // namespace

bool trivial_action_hypothesis(const BiproductInstance& inst) { return inst.trivial_action() && inst.G.is_abelian(); }

bool SubHopfDescriptor::contains(std::size_t index) const { return in_sorted(pairs, index); }

bool SubHopfDescriptor::is_lower_bound_equal(const BiproductInstance&) const {
  return pairs.size() == calN_A.size() * N_A.size();
}

std::vector<SparseVec> SubHopfDescriptor::basis(const FieldContext& ctx) const { return unit_vectors(ctx, pairs); }

nlohmann::json SubHopfDescriptor::to_json(const BiproductInstance& inst) const {
  const std::size_t nG = inst.G.order();
  nlohmann::json pj = nlohmann::json::array();
  for (std::size_t p : pairs) pj.push_back({p / nG, p % nG});
  return {{"dim", dim()},
          {"pairs", pj},
          {"calG_A_order", calG_A.size()},
          {"G_A_order", G_A.size()},
          {"N_A_order", N_A.size()},
          {"calN_A_order", calN_A.size()},
          {"is_lower_bound_equal", is_lower_bound_equal(inst)}};
}

SubHopfDescriptor closure(const BiproductInstance& inst, const PairSeed& seed) {
  const PairTables t(inst);
  std::vector<std::size_t> s;
  for (const auto& [b, g] : seed) {
    if (b >= inst.calG.order() || g >= inst.G.order()) throw MalformedInput("seed pair out of range");
    s.push_back(inst.index(b, g));
  }
  SubHopfDescriptor d = describe(inst, t.close(s));
  if (!spans_hopf_subalgebra(inst.A, d.basis(inst.ctx())))
    throw InternalConsistencyError("closed pair set does not span a Hopf subalgebra");
  return d;
}

std::vector<SubHopfDescriptor> enumerate_hopf_subalgebras(const BiproductInstance& inst, std::size_t max_count) {
  if (inst.A.dim() > order_cap())
    throw CapExceeded("dim(A) = " + std::to_string(inst.A.dim()) + " exceeds the order cap");
  const PairTables t(inst);
  std::vector<std::vector<std::size_t>> found;
  std::set<std::vector<std::size_t>> seen;
  auto offer = [&](std::vector<std::size_t> s) {
    if (!seen.insert(s).second) return;
    if (found.size() >= max_count) throw CapExceeded("more than " + std::to_string(max_count) + " Hopf subalgebras");
    found.push_back(std::move(s));
  };
  offer(t.close({}));
  for (std::size_t p = 0; p < t.dim(); ++p) offer(t.close({p}));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = found[i];
      const auto& b = found[j];
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end()))
        continue;
      std::vector<std::size_t> u;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      offer(t.close(u));
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<SubHopfDescriptor> out;
  out.reserve(found.size());
  for (auto& s : found) {
    SubHopfDescriptor d = describe(inst, std::move(s));
    if (!spans_hopf_subalgebra(inst.A, d.basis(inst.ctx())))
      throw InternalConsistencyError("closed pair set does not span a Hopf subalgebra");
    out.push_back(std::move(d));
  }
  return out;
}

bool adjoint_stable(const HopfData& A, const std::vector<std::size_t>& sub, const std::vector<std::size_t>& acting) {
  const std::size_t d = A.dim();
  std::vector<char> in(d, 0);
  for (std::size_t s : sub) in[s] = 1;
  auto inside = [&](const SparseVec& v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& e) { return in[e.first] != 0; });
  };
  std::vector<std::size_t> act = acting;
  if (act.empty())
    for (std::size_t a = 0; a < d; ++a) act.push_back(a);
  for (std::size_t a : act) {
    const SparseVec& delta = A.coalgebra.comult[a];
    for (std::size_t s : sub) {
      SparseVec left, right;
      for (const auto& [p, c] : delta) {
        const std::size_t a1 = p / d, a2 = p % d;
        add_scaled(left, A.algebra.multiply(A.algebra.product(a1, s), A.antipode[a2]), c);
        add_scaled(right, A.algebra.multiply(A.algebra.multiply(A.antipode[a1], unit_vector(A.ctx(), s)),
                                             unit_vector(A.ctx(), a2)),
                   c);
      }
      if (!inside(left) || !inside(right)) return false;
    }
  }
  return true;
}

NormalityReport is_normal(const BiproductInstance& inst, const SubHopfDescriptor& sub, bool cross_check) {
  NormalityReport rep;
  if (!trivial_action_hypothesis(inst)) {
    rep.method = "adjoint";
    rep.normal = adjoint_stable(inst.A, sub.pairs, {});
    rep.left = rep.right = rep.normal;
    rep.brute_force = rep.normal;
    return rep;
  }
  rep.method = "criterion";
  const FieldContext& ctx = inst.ctx();
  const FiniteGroup& cG = inst.calG;
  const FiniteGroup& G = inst.G;
  const std::size_t nG = G.order();

  rep.left = true;
  for (std::size_t b = 0; b < cG.order() && rep.left; ++b)
    for (std::size_t p : sub.pairs)
      if (!sub.contains(inst.index(cG.conjugate(b, p / nG), p % nG))) {
        rep.left = false;
        break;
      }

  rep.right = true;
  for (std::size_t b = 0; b < cG.order() && rep.right; ++b) {
    std::vector<std::size_t> orbit{b};
    for (std::size_t c = inst.theta(b); c != b; c = inst.theta(c)) orbit.push_back(c);
    const unsigned r = static_cast<unsigned>(orbit.size());
    const std::size_t ur = G.power(inst.u(), inst.L / r);
    const mpq_class inv_r(1, r);
    for (unsigned l = 0; l < r && rep.right; ++l) {
      const std::size_t shift = G.power(ur, -static_cast<long>(l));
      for (std::size_t p : sub.pairs) {
        SparseVec v;
        for (unsigned i = 0; i < r; ++i) {
          const std::size_t conj = cG.mul(cG.mul(cG.inv(orbit[i]), p / nG), orbit[i]);
          add_term(v, inst.index(conj, G.mul(shift, p % nG)),
                   ctx.root_of_unity(r, -static_cast<long>(l) * static_cast<long>(i)) * inv_r);
        }
        if (!std::all_of(v.begin(), v.end(), [&](const auto& e) { return sub.contains(e.first); })) {
          rep.right = false;
          break;
        }
      }
    }
  }
  rep.normal = rep.left && rep.right;
  if (cross_check) {
    rep.brute_force = adjoint_stable(inst.A, sub.pairs, {});
    if (*rep.brute_force != rep.normal)
      throw InternalConsistencyError("normality criterion disagrees with the adjoint computation");
  }
  return rep;
}

HopfData restrict_to_basis(const HopfData& A, const std::vector<std::size_t>& indices) {
  const std::size_t d = A.dim(), q = indices.size();
  const FieldContext& ctx = A.ctx();
  std::vector<std::size_t> pos(d, npos);
  for (std::size_t t = 0; t < q; ++t) pos[indices[t]] = t;
  auto remap = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) {
      if (pos[i] == npos) throw MalformedInput("basis subset is not closed under the structure maps");
      out.emplace(pos[i], c);
    }
    return out;
  };
  HopfData out;
  out.algebra = AlgebraData(ctx, q);
  out.coalgebra = CoalgebraData(ctx, q);
  out.antipode.resize(q);
  for (std::size_t s = 0; s < q; ++s) {
    for (std::size_t t = 0; t < q; ++t) out.algebra.mult[s * q + t] = remap(A.algebra.product(indices[s], indices[t]));
    SparseVec delta;
    for (const auto& [p, c] : A.coalgebra.comult[indices[s]]) {
      if (pos[p / d] == npos || pos[p % d] == npos)
        throw MalformedInput("basis subset is not closed under the coproduct");
      delta.emplace(pos[p / d] * q + pos[p % d], c);
    }
    out.coalgebra.comult[s] = std::move(delta);
    auto e = A.coalgebra.counit.find(indices[s]);
    if (e != A.coalgebra.counit.end()) out.coalgebra.counit.emplace(s, e->second);
    out.antipode[s] = remap(A.antipode[indices[s]]);
  }
  out.algebra.unit = remap(A.algebra.unit);
  return out;
}

std::optional<FiniteGroup> grouplike_certificate(const HopfData& Q, const std::vector<SparseVec>& candidates) {
  std::vector<SparseVec> gl;
  for (const auto& c : candidates)
    if (check_grouplike(Q, c) && std::find(gl.begin(), gl.end(), c) == gl.end()) gl.push_back(c);
  if (gl.size() != Q.dim() || span_of(Q.dim(), gl).dim() != Q.dim()) return std::nullopt;
  const std::size_t n = gl.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = std::find(gl.begin(), gl.end(), Q.algebra.multiply(gl[i], gl[j]));
      if (it == gl.end()) return std::nullopt;
      table[i][j] = static_cast<std::size_t>(it - gl.begin());
    }
  return FiniteGroup::from_table(table);
}

nlohmann::json FactorReport::to_json() const {
  return {{"name", name},
          {"dim", dim},
          {"commutative", commutative},
          {"cocommutative", cocommutative},
          {"grouplike_invariants", grouplike_invariants},
          {"expected_invariants", expected_invariants},
          {"certified", certified}};
}

nlohmann::json SeriesReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : factors) f.push_back(x.to_json());
  return {{"chain", chain}, {"dims", dims}, {"factors", f}, {"ok", ok}};
}

SeriesReport lower_normal_series(const BiproductInstance& inst) {
  const FieldContext& ctx = inst.ctx();
  const FiniteGroup& G = inst.G;
  const Subgroup U = sorted_unique(inst.U_embed);
  const std::size_t e_cal = inst.calG.identity(), e_G = G.identity();

  const std::vector<std::size_t> all = iota(inst.A.dim());
  const Subgroup calG_all = iota(inst.calG.order());
  const auto H = pairs_of(inst, {e_cal}, U);
  const auto A1 = pairs_of(inst, calG_all, U);

  SeriesReport rep;
  rep.chain = {"k", "k1 x k[U]", "k[calG] x k[U]", "A"};
  rep.dims = {1, H.size(), A1.size(), all.size()};
  for (const auto* s : {&H, &A1})
    if (!spans_hopf_subalgebra(inst.A, unit_vectors(ctx, *s)))
      throw InternalConsistencyError("series member is not a Hopf subalgebra");
  if (!adjoint_stable(inst.A, H, A1)) throw InternalConsistencyError("k1 x k[U] is not normal in A1");
  if (A1.size() != all.size() && !adjoint_stable(inst.A, A1, {}))
    throw InternalConsistencyError("A1 is not normal in A");

  const HopfData HH = restrict_to_basis(inst.A, H);
  rep.factors.push_back(make_factor("k1 x k[U]", HH, unit_vectors(ctx, iota(H.size())), subgroup_as_group(G, U), false));

  const HopfQuotient q1 = pair_quotient(inst, A1, H);
  rep.factors.push_back(
      make_factor("A1 / H^+A1", q1.Q, projected(q1, A1, pairs_of(inst, calG_all, {e_G})), inst.calG, false));

  const HopfQuotient q2 = pair_quotient(inst, all, A1);
  std::vector<std::size_t> ones;
  for (std::size_t g = 0; g < G.order(); ++g) ones.push_back(inst.index(e_cal, g));
  rep.factors.push_back(make_factor("A / A1^+A", q2.Q, projected(q2, all, ones), quotient_group(G, U), false));

  rep.ok = std::all_of(rep.factors.begin(), rep.factors.end(), [](const FactorReport& f) { return f.certified; });
  if (!rep.ok) throw InternalConsistencyError("lower normal series factor is not the expected group algebra");
  return rep;
}

nlohmann::json SolvabilityReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : factors) f.push_back(x.to_json());
  return {{"solvable", solvable}, {"derived_orders", derived_orders}, {"factors", f}, {"perfect_order", perfect_order}};
}

SolvabilityReport certify_solvable(const BiproductInstance& inst) {
  if (!inst.G.is_abelian()) throw PreconditionError("abelian_G", "lower solvability needs G abelian");
  SolvabilityReport rep;
  const auto series = derived_series(inst.calG);
  for (const auto& s : series) rep.derived_orders.push_back(s.size());
  rep.perfect_order = series.back().size();
  rep.solvable = rep.perfect_order == 1;
  if (!rep.solvable) return rep;

  const FiniteGroup& G = inst.G;
  const Subgroup U = sorted_unique(inst.U_embed);
  const std::vector<std::size_t> all = iota(inst.A.dim());
  std::vector<std::vector<std::size_t>> chain{all};
  for (const auto& s : series) chain.push_back(pairs_of(inst, s, U));

  const HopfQuotient top = pair_quotient(inst, all, chain[1]);
  std::vector<std::size_t> ones;
  for (std::size_t g = 0; g < G.order(); ++g) ones.push_back(inst.index(inst.calG.identity(), g));
  rep.factors.push_back(make_factor("A / A1^+A", top.Q, projected(top, all, ones), quotient_group(G, U), true));

  for (std::size_t l = 1; l + 1 < chain.size(); ++l) {
    if (!adjoint_stable(inst.A, chain[l + 1], chain[l]))
      throw InternalConsistencyError("derived series member is not normal in its predecessor");
    const HopfQuotient q = pair_quotient(inst, chain[l], chain[l + 1]);
    const Subgroup& big = series[l - 1];
    std::vector<std::size_t> reps;
    for (std::size_t b : big) reps.push_back(inst.index(b, G.identity()));
    // calG^{(l-1)} / calG^{(l)}, with calG^{(l)} reindexed inside calG^{(l-1)}
    const FiniteGroup sub = subgroup_as_group(inst.calG, big);
    Subgroup inner;
    for (std::size_t b : series[l])
      inner.push_back(static_cast<std::size_t>(std::lower_bound(big.begin(), big.end(), b) - big.begin()));
    rep.factors.push_back(make_factor("A" + std::to_string(l) + " / A" + std::to_string(l + 1) + "^+A" +
                                          std::to_string(l),
                                      q.Q, projected(q, chain[l], reps), quotient_group(sub, inner), true));
  }
  const HopfData bottom = restrict_to_basis(inst.A, chain.back());
  rep.factors.push_back(make_factor("k1 x k[U]", bottom, unit_vectors(inst.ctx(), iota(chain.back().size())),
                                    subgroup_as_group(G, U), true));
  if (!std::all_of(rep.factors.begin(), rep.factors.end(), [](const FactorReport& f) { return f.certified; }))
    throw InternalConsistencyError("solvable chain has a factor that is not a commutative group algebra");
  return rep;
}

nlohmann::json UniqueNormalReport::to_json(const BiproductInstance& inst) const {
  nlohmann::json n = nlohmann::json::array();
  for (const auto& d : normal) n.push_back(d.to_json(inst));
  return {{"enumerated", enumerated}, {"normal", n}, {"quotient", quotient.to_json()}};
}

UniqueNormalReport verify_unique_normal(const BiproductInstance& inst, bool cross_check) {
  if (!trivial_action_hypothesis(inst))
    throw PreconditionError("trivial_action", "needs G = Ker(pi) with G abelian");
  if (inst.calG.is_abelian() || !is_simple(inst.calG))
    throw PreconditionError("simple_nonabelian", "calG must be a nonabelian simple group");
  const std::size_t p = inst.theta.order();
  bool prime = p >= 2;
  for (std::size_t q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
  if (!prime) throw PreconditionError("prime_order", "theta must have prime order");
  if (inst.G.order() != p || inst.L != p) throw PreconditionError("prime_order", "G must be U, cyclic of order p");

  UniqueNormalReport rep;
  const auto subs = enumerate_hopf_subalgebras(inst);
  rep.enumerated = subs.size();
  for (const auto& d : subs)
    if (is_normal(inst, d, cross_check).normal) rep.normal.push_back(d);

  const auto H = pairs_of(inst, {inst.calG.identity()}, iota(inst.G.order()));
  const bool exact = rep.normal.size() == 3 && rep.normal[0].dim() == 1 && rep.normal[1].pairs == H &&
                     rep.normal[2].dim() == inst.A.dim();
  if (!exact) throw InternalConsistencyError("normal Hopf subalgebras differ from k, k1 x k[G], A");

  const std::vector<std::size_t> all = iota(inst.A.dim());
  const HopfQuotient q = pair_quotient(inst, all, H);
  std::vector<std::size_t> reps;
  for (std::size_t b = 0; b < inst.calG.order(); ++b) reps.push_back(inst.index(b, inst.G.identity()));
  rep.quotient = make_factor("A / H^+A", q.Q, projected(q, all, reps), inst.calG, false);
  if (!rep.quotient.certified) throw InternalConsistencyError("A / H^+A is not k[calG]");
  return rep;
}

}  // namespace hopfforge
