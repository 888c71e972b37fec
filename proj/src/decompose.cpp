#include "hopfforge/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t dim) {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_term(out, i * dim + j, x * y);
  return out;
}

std::vector<SparseVec> rows_of(const SpanBasis& s) {
  std::vector<SparseVec> out;
  out.reserve(s.dim());
  for (const auto& [p, row] : s.rows()) out.push_back(row);
  return out;
}

nlohmann::json multiset_json(const std::map<std::size_t, std::size_t>& m, const char* key) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [n, mult] : m) out.push_back({{key, n}, {"mult", mult}});
  return out;
}

/// 1 / |calG| sum_x chi(x^{-1}) x for every character of an abelian group.
std::vector<SparseVec> character_idempotents(const FiniteGroup& g, const FieldContext& ctx) {
  const auto chars = characters(g, ctx);
  const mpq_class inv_n(1, static_cast<unsigned long>(g.order()));
  std::vector<SparseVec> out;
  out.reserve(chars.size());
  for (const auto& chi : chars) {
    SparseVec f;
    for (std::size_t x = 0; x < g.order(); ++x) add_term(f, x, chi.value(ctx, g.inv(x)) * inv_n);
    out.push_back(std::move(f));
  }
  return out;
}

/// lambda^{(zw)} with w possibly negative componentwise.
CycScalar pairing(const AbelianPresentation& p, const FieldContext& ctx, const std::vector<long>& z,
                  const std::vector<long>& w) {
  std::vector<long> zw(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const long n = static_cast<long>(p.orders[j]);
    zw[j] = (((z[j] * w[j]) % n) + n) % n;
  }
  return formal_root_power(p, ctx, zw);
}

}  // namespace

// ---------------------------------------------------------------- coalgebra

ComatrixBlock comatrix_block(const BiproductInstance& inst, std::size_t orbit_index, std::size_t coset_rep) {
  if (orbit_index >= inst.orbit_table.size()) throw MalformedInput("orbit index out of range");
  if (coset_rep >= inst.G.order()) throw MalformedInput("coset representative out of range");
  const FieldContext& ctx = inst.ctx();
  ComatrixBlock blk;
  blk.orbit_index = orbit_index;
  blk.orbit = inst.orbit_table[orbit_index];
  blk.r = static_cast<unsigned>(blk.orbit.size());
  blk.coset_rep = coset_rep;
  const unsigned r = blk.r;
  ctx.require_roots_of_order(r);
  const std::size_t ur = inst.G.power(inst.u(), inst.L / r);
  const mpq_class inv_r(1, r);

  blk.c.resize(static_cast<std::size_t>(r) * r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) {
      SparseVec& cij = blk.c[i * r + j];
      for (unsigned l = 0; l < r; ++l) {
        const long e = static_cast<long>(l) * (static_cast<long>(i) - static_cast<long>(j));
        const std::size_t g = inst.G.mul(inst.G.power(ur, l), coset_rep);
        add_term(cij, inst.index(blk.orbit[i], g), ctx.root_of_unity(r, e) * inv_r);
      }
    }

  const std::size_t da = inst.A.dim();
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) {
      SparseVec expect;
      for (unsigned l = 0; l < r; ++l) add_scaled(expect, tensor(blk.at(i, l), blk.at(l, j), da), ctx.one());
      if (inst.A.coalgebra.coproduct(blk.at(i, j)) != expect)
        throw InternalConsistencyError("comatrix coproduct fails at c_" + std::to_string(i) + std::to_string(j));
      if (inst.A.coalgebra.counit_of(blk.at(i, j)) != (i == j ? ctx.one() : ctx.zero()))
        throw InternalConsistencyError("comatrix counit fails at c_" + std::to_string(i) + std::to_string(j));
    }
  if (span_of(da, blk.c).dim() != blk.c.size())
    throw InternalConsistencyError("comatrix entries are linearly dependent");
  return blk;
}

nlohmann::json CoalgebraDecomposition::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [r, mult] : multiplicities) out.push_back({{"r", r}, {"mult", mult}});
  return out;
}

CoalgebraDecomposition coalgebra_decomposition(const BiproductInstance& inst) {
  CoalgebraDecomposition out;
  const std::size_t da = inst.A.dim();
  SpanBasis total(da);
  std::size_t inserted = 0;
  for (std::size_t o = 0; o < inst.orbit_table.size(); ++o) {
    const unsigned r = static_cast<unsigned>(inst.orbit_table[o].size());
    const Subgroup Ur = inst.U_r(r);
    std::vector<bool> covered(inst.G.order(), false);
    for (std::size_t g = 0; g < inst.G.order(); ++g) {
      if (covered[g]) continue;
      for (std::size_t x : Ur) covered[inst.G.mul(x, g)] = true;
      ComatrixBlock blk = comatrix_block(inst, o, g);
      for (const auto& v : blk.c) {
        total.insert(v);
        ++inserted;
      }
      ++out.multiplicities[r];
      out.blocks.push_back(std::move(blk));
    }
  }
  std::size_t sum = 0;
  for (const auto& [r, mult] : out.multiplicities) sum += mult * r * r;
  if (sum != da || inserted != da || total.dim() != da)
    throw InternalConsistencyError("comatrix blocks do not decompose A as a direct sum");
  return out;
}

nlohmann::json GrouplikeData::to_json() const {
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& [b, g] : pairs) pj.push_back({b, g});
  return {{"order", group.order()}, {"invariants", group_invariants(group)}, {"pairs", pj}};
}

GrouplikeData grouplikes(const BiproductInstance& inst) {
  GrouplikeData out;
  const FieldContext& ctx = inst.ctx();
  for (std::size_t b = 0; b < inst.calG.order(); ++b) {
    if (inst.theta(b) != b) continue;
    for (std::size_t g = 0; g < inst.G.order(); ++g) out.pairs.emplace_back(b, g);
  }
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    const std::size_t idx = inst.index(out.pairs[i].first, out.pairs[i].second);
    position[idx] = i;
    out.vectors.push_back(unit_vector(ctx, idx));
    if (!check_grouplike(inst.A, out.vectors.back()))
      throw InternalConsistencyError("fixed point of theta does not give a grouplike");
  }
  const std::size_t n = out.pairs.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& p = inst.A.algebra.product(inst.index(out.pairs[i].first, out.pairs[i].second),
                                                  inst.index(out.pairs[j].first, out.pairs[j].second));
      if (p.size() != 1 || !p.begin()->second.is_one() || !position.count(p.begin()->first))
        throw InternalConsistencyError("grouplikes are not closed under multiplication");
      table[i][j] = position.at(p.begin()->first);
    }
  out.group = FiniteGroup::from_table(table, "G(A)");
  return out;
}

// ------------------------------------------------------------------ algebra

SparseVec SmashProduct::act(const SparseVec& h, const SparseVec& b) const {
  const std::size_t db = dim_B();
  SparseVec out;
  for (const auto& [g, x] : h)
    for (const auto& [c, y] : b) add_scaled(out, action[g * db + c], x * y);
  return out;
}

SparseVec SmashProduct::pure(const SparseVec& b, const SparseVec& h) const { return tensor(b, h, order()); }

SparseVec SmashProduct::group_vector(std::size_t x) const {
  return unit_vector(ctx(), G.element_of(presentation().decode(x)));
}

std::size_t SmashProduct::add(std::size_t x, std::size_t y) const {
  auto a = presentation().decode(x);
  const auto b = presentation().decode(y);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return presentation().encode(a);
}

std::size_t SmashProduct::sub(std::size_t x, std::size_t y) const {
  auto a = presentation().decode(x);
  const auto b = presentation().decode(y);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  return presentation().encode(a);
}

SmashProduct make_smash(const FiniteGroup& G, const AlgebraData& B, const std::vector<SparseVec>& action,
                        std::vector<SparseVec> F) {
  if (!G.is_abelian() || !G.presentation())
    throw UnsupportedRoute("abelian_G", "the acting group must be abelian with a cyclic decomposition");
  const FieldContext& ctx = *B.ctx;
  const std::size_t db = B.dim, n = G.order();
  if (action.size() != n * db) throw MalformedInput("action table has the wrong size");

  SmashProduct s;
  s.G = G;
  s.H = group_algebra_hopf(G, ctx);
  s.B = B;
  s.action = action;
  s.e = idempotent_basis(G, ctx);

  for (std::size_t g = 0; g < n; ++g) {
    if (s.act(unit_vector(ctx, g), B.unit) != B.unit)
      throw PreconditionError("module_algebra", "g . 1 != 1 for g = " + std::to_string(g));
    for (std::size_t b = 0; b < db; ++b) {
      if (g == G.identity() && action[g * db + b] != unit_vector(ctx, b))
        throw PreconditionError("module_algebra", "the identity acts nontrivially");
      for (std::size_t h = 0; h < n; ++h)
        if (s.act(unit_vector(ctx, g), action[h * db + b]) != action[G.mul(g, h) * db + b])
          throw PreconditionError("module_algebra", "(gh).b != g.(h.b)");
      for (std::size_t c = 0; c < db; ++c) {
        const SparseVec lhs = s.act(unit_vector(ctx, g), B.product(b, c));
        const SparseVec rhs = B.multiply(action[g * db + b], action[g * db + c]);
        if (lhs != rhs) throw PreconditionError("module_algebra", "g acts by a non-multiplicative map");
      }
    }
  }
  s.algebra = smash_product_algebra(s.H, B, action);

  if (!F.empty()) {
    if (F.size() != db) throw PreconditionError("power_of_k", "idempotent set is not a basis");
    SparseVec sum;
    for (std::size_t i = 0; i < db; ++i) {
      add_scaled(sum, F[i], ctx.one());
      for (std::size_t j = 0; j < db; ++j) {
        const SparseVec p = B.multiply(F[i], F[j]);
        if (p != (i == j ? F[i] : SparseVec{}))
          throw PreconditionError("power_of_k", "idempotents are not orthogonal");
      }
    }
    if (sum != B.unit) throw PreconditionError("power_of_k", "idempotents do not sum to 1");
    s.F = std::move(F);
    s.F_perm.assign(n * db, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const SparseVec gx = s.group_vector(x);
      for (std::size_t f = 0; f < db; ++f) {
        const SparseVec img = s.act(gx, s.F[f]);
        auto hit = std::find(s.F.begin(), s.F.end(), img);
        if (hit == s.F.end()) throw PreconditionError("power_of_k", "G does not permute the idempotent basis");
        s.F_perm[x * db + f] = static_cast<std::size_t>(hit - s.F.begin());
      }
    }
  }
  return s;
}

SmashProduct smash_from_instance(const BiproductInstance& inst) {
  if (!inst.G.is_abelian() || !inst.G.presentation())
    throw UnsupportedRoute("abelian_G", "the smash product route needs G abelian with a cyclic decomposition");
  std::vector<SparseVec> F;
  if (inst.calG.is_abelian()) F = character_idempotents(inst.calG, inst.ctx());
  return make_smash(inst.G, inst.yd.B_alg, inst.yd.action, std::move(F));
}

SmashProduct agtheta_smash(const BiproductInstance& inst) {
  if (!inst.calG.is_abelian()) throw UnsupportedRoute("abelian_calG", "calG must be abelian");
  if (inst.spec.value("mode", std::string("Gtheta")) != "Gtheta")
    throw UnsupportedRoute("Gtheta_instance", "the instance was not built with G = U x <theta>");
  const FieldContext& ctx = inst.ctx();
  const unsigned L = inst.L;
  const FiniteGroup P = FiniteGroup::direct_product(inst.calG, FiniteGroup::cyclic(L));
  const FiniteGroup T = FiniteGroup::cyclic(L);
  const HopfData kP = group_algebra_hopf(P, ctx);
  const std::size_t db = P.order();
  std::vector<SparseVec> action(T.order() * db);
  for (std::size_t t = 0; t < T.order(); ++t) {
    const GroupAutomorphism th = inst.theta.power(static_cast<long>(t));
    for (std::size_t x = 0; x < inst.calG.order(); ++x)
      for (std::size_t j = 0; j < L; ++j) action[t * db + x * L + j] = unit_vector(ctx, th(x) * L + j);
  }
  return make_smash(T, kP.algebra, action, character_idempotents(P, ctx));
}

AxiomReport verify_idempotent_basis(const FiniteGroup& G, const IdempotentBasis& e, const FieldContext& ctx) {
  AxiomReport rep;
  const HopfData H = group_algebra_hopf(G, ctx);
  const AbelianPresentation& p = e.presentation;
  const std::size_t n = G.order();
  bool orth = true, eigen = true, cop = true, cou = true;
  std::string w_orth, w_eigen, w_cop, w_cou;
  SparseVec sum;
  for (std::size_t m = 0; m < n; ++m) {
    add_scaled(sum, e.vectors[m], ctx.one());
    for (std::size_t k = 0; k < n && orth; ++k)
      if (H.algebra.multiply(e.vectors[m], e.vectors[k]) != (m == k ? e.vectors[m] : SparseVec{})) {
        orth = false;
        w_orth = "e_" + std::to_string(m) + " e_" + std::to_string(k);
      }
    const auto mv = p.decode(m);
    for (std::size_t x = 0; x < n && eigen; ++x) {
      auto xv = p.decode(x);
      for (auto& c : xv) c = -c;
      const SparseVec lhs = H.algebra.multiply(unit_vector(ctx, G.element_of(p.decode(x))), e.vectors[m]);
      if (lhs != scaled(e.vectors[m], pairing(p, ctx, xv, mv))) {
        eigen = false;
        w_eigen = "g^(" + std::to_string(x) + ") e_" + std::to_string(m);
      }
    }
    SparseVec expect;
    for (std::size_t j = 0; j < n; ++j) {
      auto d = mv;
      const auto jv = p.decode(j);
      for (std::size_t t = 0; t < d.size(); ++t) d[t] -= jv[t];
      add_scaled(expect, tensor(e.vectors[j], e.vectors[p.encode(d)], n), ctx.one());
    }
    if (cop && H.coalgebra.coproduct(e.vectors[m]) != expect) {
      cop = false;
      w_cop = "Delta e_" + std::to_string(m);
    }
    if (cou && H.coalgebra.counit_of(e.vectors[m]) != (m == 0 ? ctx.one() : ctx.zero())) {
      cou = false;
      w_cou = "eps e_" + std::to_string(m);
    }
  }
  rep.record("orthogonal", orth, w_orth);
  rep.record("sum_is_one", sum == H.algebra.unit, sum == H.algebra.unit ? "" : "sum of e_m");
  rep.record("group_eigen", eigen, w_eigen);
  rep.record("coproduct", cop, w_cop);
  rep.record("counit", cou, w_cou);
  return rep;
}

AxiomReport verify_idempotent_sum_identity(const SmashProduct& s) {
  AxiomReport rep;
  const std::size_t n = s.order(), db = s.dim_B();
  const FieldContext& ctx = s.ctx();
  std::vector<std::vector<SparseVec>> eb(n, std::vector<SparseVec>(db));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < db; ++b) eb[m][b] = s.act(s.e.vectors[m], unit_vector(ctx, b));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t c = 0; c < db; ++c) {
          const SparseVec lhs = s.B.multiply(eb[m][b], eb[k][c]);
          const SparseVec rhs = s.act(s.e.vectors[s.add(m, k)], s.B.multiply(unit_vector(ctx, b), eb[k][c]));
          if (lhs != rhs) {
            rep.record("idempotent_sum", false,
                       "m=" + std::to_string(m) + " n=" + std::to_string(k) + " b=" + std::to_string(b) +
                           " c=" + std::to_string(c));
            return rep;
          }
        }
  rep.record("idempotent_sum", true, "");
  return rep;
}

namespace {

struct FamilyViolation {
  std::string condition;
  std::string witness;
};

std::optional<FamilyViolation> family_violation(const SmashProduct& s, const IdealFamily& family) {
  const std::size_t n = s.order(), db = s.dim_B();
  const FieldContext& ctx = s.ctx();
  std::vector<SpanBasis> spans;
  spans.reserve(n);
  for (const auto& part : family) spans.push_back(span_of(db, part));
  for (std::size_t m = 0; m < n; ++m)
    for (const auto& x : family[m]) {
      for (std::size_t b = 0; b < db; ++b)
        if (!spans[m].contains(s.B.multiply(unit_vector(ctx, b), x)))
          return FamilyViolation{"family_condition_i", "B I_" + std::to_string(m) + " not in I_" + std::to_string(m)};
      for (std::size_t g = 0; g < n; ++g)
        if (!spans[m].contains(s.act(unit_vector(ctx, g), x)))
          return FamilyViolation{"family_condition_i", "I_" + std::to_string(m) + " is not G-stable"};
      for (std::size_t r = 0; r < n; ++r) {
        const SparseVec& em_r = s.e.vectors[s.sub(m, r)];
        for (std::size_t b = 0; b < db; ++b)
          if (!spans[r].contains(s.B.multiply(x, s.act(em_r, unit_vector(ctx, b)))))
            return FamilyViolation{"family_condition_ii",
                                   "I_" + std::to_string(m) + "(e_{m-r}.B) not in I_" + std::to_string(r)};
      }
    }
  return std::nullopt;
}

std::optional<std::string> ideal_violation(const AlgebraData& a, const SpanBasis& ideal) {
  const FieldContext& ctx = *a.ctx;
  std::size_t k = 0;
  for (const auto& [p, v] : ideal.rows()) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      const SparseVec ei = unit_vector(ctx, i);
      if (!ideal.contains(a.multiply(ei, v))) return "e_" + std::to_string(i) + " * ideal[" + std::to_string(k) + "]";
      if (!ideal.contains(a.multiply(v, ei))) return "ideal[" + std::to_string(k) + "] * e_" + std::to_string(i);
    }
    ++k;
  }
  return std::nullopt;
}

SpanBasis family_span(const SmashProduct& s, const IdealFamily& family) {
  SpanBasis out(s.algebra.dim);
  for (std::size_t m = 0; m < family.size(); ++m)
    for (const auto& x : family[m]) out.insert(s.pure(x, s.e.vectors[m]));
  return out;
}

}  // namespace

IdealFamily ideal_family_from_ideal(const SmashProduct& s, const std::vector<SparseVec>& ideal_basis) {
  const SpanBasis I = span_of(s.algebra.dim, ideal_basis);
  if (auto bad = ideal_violation(s.algebra, I)) throw PreconditionError("not_an_ideal", *bad + " leaves the span");
  const std::size_t n = s.order(), db = s.dim_B();
  const FieldContext& ctx = s.ctx();
  IdealFamily family(n);
  for (std::size_t m = 0; m < n; ++m) {
    // b = sum c_i e_i lies in I_m iff sum c_i reduce(e_i # e_m) = 0
    std::vector<SparseVec> residual(db);
    for (std::size_t i = 0; i < db; ++i) residual[i] = I.reduce(s.pure(unit_vector(ctx, i), s.e.vectors[m]));
    std::map<std::size_t, SparseVec> equations;
    for (std::size_t i = 0; i < db; ++i)
      for (const auto& [k, c] : residual[i]) add_term(equations[k], i, c);
    SpanBasis eq(db);
    for (const auto& [k, row] : equations) eq.insert(row);
    family[m] = rows_of(span_of(db, eq.null_space(ctx)));
  }
  if (auto bad = family_violation(s, family))
    throw InternalConsistencyError("ideal family fails " + bad->condition + ": " + bad->witness);
  if (!family_span(s, family).same_span(I)) throw InternalConsistencyError("sum of I_m # e_m differs from I");
  return family;
}

std::vector<SparseVec> ideal_from_family(const SmashProduct& s, const IdealFamily& family) {
  if (family.size() != s.order()) throw MalformedInput("ideal family needs one subspace per element of G");
  for (const auto& part : family)
    for (const auto& x : part)
      if (!x.empty() && x.rbegin()->first >= s.dim_B()) throw MalformedInput("family vector outside B");
  if (auto bad = family_violation(s, family)) throw PreconditionError(bad->condition, bad->witness);
  const SpanBasis I = family_span(s, family);
  if (auto bad = ideal_violation(s.algebra, I))
    throw InternalConsistencyError("admissible family gives a non-ideal at " + *bad);
  return rows_of(I);
}

SpanBasis generated_ideal(const AlgebraData& a, const std::vector<SparseVec>& gens) {
  const FieldContext& ctx = *a.ctx;
  SpanBasis left(a.dim);
  for (const auto& x : gens)
    for (std::size_t i = 0; i < a.dim; ++i) left.insert(a.multiply(unit_vector(ctx, i), x));
  SpanBasis out(a.dim);
  for (const auto& [p, v] : left.rows())
    for (std::size_t j = 0; j < a.dim; ++j) out.insert(a.multiply(v, unit_vector(ctx, j)));
  return out;
}

StabilizerData stabilizer_data(const SmashProduct& s, std::size_t f) {
  if (!s.is_power_of_k()) throw PreconditionError("power_of_k", "B has no idempotent basis");
  if (f >= s.F.size()) throw MalformedInput("idempotent index out of range");
  const AbelianPresentation& p = s.presentation();
  const std::size_t n = s.order(), nf = s.F.size();
  long M = 1;
  for (auto o : p.orders) M = std::lcm(M, static_cast<long>(o));
  StabilizerData out;
  for (std::size_t x = 0; x < n; ++x)
    if (s.F_perm[x * nf + f] == f) out.N.push_back(x);
  for (std::size_t z = 0; z < n; ++z) {
    const auto zv = p.decode(z);
    bool ok = true;
    for (std::size_t y : out.N) {
      const auto yv = p.decode(y);
      long e = 0;
      for (std::size_t j = 0; j < zv.size(); ++j) e += (M / static_cast<long>(p.orders[j])) * zv[j] * yv[j];
      if (e % M != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.I.push_back(z);
  }
  std::set<std::size_t> orbit;
  for (std::size_t x = 0; x < n; ++x) orbit.insert(s.F_perm[x * nf + f]);
  if (out.N.size() * out.I.size() != n || out.I.size() != orbit.size())
    throw InternalConsistencyError("|N_f| |I_f| = |G| and |I_f| = |orbit| fail");
  return out;
}

MinimalIdealBlock minimal_ideal(const SmashProduct& s, std::size_t f, std::size_t m) {
  MinimalIdealBlock blk;
  blk.stab = stabilizer_data(s, f);
  if (m >= s.order()) throw MalformedInput("m out of range");
  const FieldContext& ctx = s.ctx();
  const AbelianPresentation& p = s.presentation();
  const std::size_t n = s.order(), nf = s.F.size(), da = s.algebra.dim;
  blk.f = f;
  blk.m = m;
  std::vector<bool> seen(nf, false);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t fx = s.F_perm[x * nf + f];
    if (seen[fx]) continue;
    seen[fx] = true;
    blk.S.push_back(x);
    blk.orbit.push_back(fx);
  }
  const unsigned r = static_cast<unsigned>(blk.S.size());
  blk.r = r;
  if (blk.stab.I.size() != r) throw InternalConsistencyError("|I_f| differs from the orbit length");

  blk.E.resize(static_cast<std::size_t>(r) * r);
  for (unsigned u = 0; u < r; ++u)
    for (unsigned v = 0; v < r; ++v) {
      auto w = p.decode(blk.S[u]);
      const auto sv = p.decode(blk.S[v]);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= sv[j];
      SparseVec& E = blk.E[u * r + v];
      for (std::size_t z : blk.stab.I)
        add_scaled(E, s.pure(s.F[blk.orbit[u]], s.e.vectors[s.sub(m, z)]), pairing(p, ctx, p.decode(z), w));
    }

  const CycScalar rr = ctx.integer(r);
  for (unsigned u = 0; u < r; ++u)
    for (unsigned v = 0; v < r; ++v) {
      const SparseVec def = scaled(s.algebra.multiply(s.pure(s.F[blk.orbit[u]], s.e.vectors[m]),
                                                      s.pure(s.F[blk.orbit[v]], s.H.algebra.unit)),
                                   rr);
      if (def != blk.at(u, v)) throw InternalConsistencyError("E_uv differs from r (g^u.f # e_m)(g^v.f # 1)");
      for (unsigned t = 0; t < r; ++t)
        for (unsigned w = 0; w < r; ++w) {
          const SparseVec prod = s.algebra.multiply(blk.at(u, v), blk.at(t, w));
          if (prod != (v == t ? blk.at(u, w) : SparseVec{}))
            throw InternalConsistencyError("matrix-unit relation fails");
        }
    }

  blk.span = span_of(da, blk.E);
  SpanBasis basis(da);
  for (unsigned u = 0; u < r; ++u)
    for (std::size_t z : blk.stab.I) basis.insert(s.pure(s.F[blk.orbit[u]], s.e.vectors[s.sub(m, z)]));
  if (blk.span.dim() != static_cast<std::size_t>(r) * r || basis.dim() != blk.span.dim() ||
      !basis.same_span(blk.span))
    throw InternalConsistencyError("g^u.f # e_{m-z} is not a basis of the block");
  if (auto bad = ideal_violation(s.algebra, blk.span))
    throw InternalConsistencyError("minimal ideal is not two-sided at " + *bad);
  return blk;
}

bool certify_minimal(const SmashProduct& s, const MinimalIdealBlock& block) {
  for (const auto& x : block.E)
    if (!generated_ideal(s.algebra, {x}).same_span(block.span)) return false;
  return true;
}

bool same_minimal_ideal_predicted(const SmashProduct& s, std::size_t f, std::size_t m, std::size_t f2,
                                  std::size_t m2) {
  const std::size_t n = s.order(), nf = s.F.size();
  bool same_orbit = false;
  for (std::size_t x = 0; x < n && !same_orbit; ++x) same_orbit = s.F_perm[x * nf + f] == f2;
  if (!same_orbit) return false;
  const auto I = stabilizer_data(s, f).I;
  return std::binary_search(I.begin(), I.end(), s.sub(m, m2));
}

MinimalIdealSweep minimal_ideal_sweep(const SmashProduct& s) {
  if (!s.is_power_of_k()) throw PreconditionError("power_of_k", "B has no idempotent basis");
  const std::size_t n = s.order(), nf = s.F.size();
  std::vector<MinimalIdealBlock> blocks;
  blocks.reserve(n * nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t m = 0; m < n; ++m) blocks.push_back(minimal_ideal(s, f, m));
  MinimalIdealSweep out;
  out.blocks = blocks.size();
  std::vector<bool> duplicate(blocks.size(), false);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      ++out.pairs;
      const bool equal = blocks[i].span.same_span(blocks[j].span);
      if (equal) duplicate[j] = true;
      if (equal != same_minimal_ideal_predicted(s, blocks[i].f, blocks[i].m, blocks[j].f, blocks[j].m))
        ++out.mismatches;
    }
  out.distinct = static_cast<std::size_t>(std::count(duplicate.begin(), duplicate.end(), false));
  return out;
}

nlohmann::json AlgebraDecomposition::to_json() const {
  nlohmann::json out = {{"route", route}, {"blocks", multiset_json(blocks, "n")}};
  if (oracle) out["oracle"] = oracle->to_json();
  return out;
}

namespace {

void compare_with_oracle(const std::map<std::size_t, std::size_t>& blocks, const WedderburnReport& o,
                         const std::string& what) {
  if (!o.semisimple || o.blocks != blocks) {
    nlohmann::json ours = multiset_json(blocks, "n");
    throw InternalConsistencyError(what + " disagrees with the Wedderburn oracle: " + ours.dump() + " vs " +
                                   o.to_json().dump());
  }
}

}  // namespace

AlgebraDecomposition algebra_decomposition(const SmashProduct& s, bool oracle_check) {
  if (!s.is_power_of_k()) throw PreconditionError("power_of_k", "B has no idempotent basis");
  const std::size_t n = s.order(), nf = s.F.size();
  AlgebraDecomposition out;
  out.route = "smash";
  std::vector<bool> seen(nf, false);
  std::size_t total = 0;
  for (std::size_t f = 0; f < nf; ++f) {
    if (seen[f]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t x = 0; x < n; ++x) orbit.insert(s.F_perm[x * nf + f]);
    for (std::size_t g : orbit) seen[g] = true;
    const std::size_t len = orbit.size();
    if (n % len != 0) throw InternalConsistencyError("orbit length does not divide |G|");
    out.blocks[len] += n / len;
    total += (n / len) * len * len;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  if (total != s.algebra.dim) throw InternalConsistencyError("block dimensions do not add up to dim(B # H)");
  if (oracle_check) {
    out.oracle = wedderburn_oracle(s.algebra);
    compare_with_oracle(out.blocks, *out.oracle, "smash decomposition");
  }
  return out;
}

AlgebraDecomposition agtheta_algebra_route(const BiproductInstance& inst) {
  AlgebraDecomposition out = algebra_decomposition(agtheta_smash(inst), false);
  out.route = "agtheta";
  out.oracle = wedderburn_oracle(inst.A.algebra);
  compare_with_oracle(out.blocks, *out.oracle, "tensor-factor route");
  return out;
}

AlgebraDecomposition algebra_decomposition_of(const BiproductInstance& inst, bool oracle_check) {
  if (inst.G.is_abelian() && inst.G.presentation() && inst.calG.is_abelian())
    return algebra_decomposition(smash_from_instance(inst), oracle_check);
  AlgebraDecomposition out;
  if (oracle_check) {
    out.route = "oracle";
    out.oracle = wedderburn_oracle(inst.A.algebra);
    if (!out.oracle->semisimple) throw InternalConsistencyError("A is not semisimple");
    out.blocks = out.oracle->blocks;
  } else {
    out.route = "none";
  }
  return out;
}

nlohmann::json decomposition_report(const BiproductInstance& inst, bool oracle_check) {
  const CoalgebraDecomposition co = coalgebra_decomposition(inst);
  const AlgebraDecomposition al = algebra_decomposition_of(inst, oracle_check);
  const GrouplikeData gl = grouplikes(inst);
  return {{"name", inst.name},
          {"dim", inst.A.dim()},
          {"conductor", inst.ctx().conductor()},
          {"coalgebra", co.to_json()},
          {"algebra", multiset_json(al.blocks, "n")},
          {"algebra_route", al.route},
          {"oracle_check", oracle_check},
          {"grouplikes", {{"order", gl.group.order()}, {"invariants", group_invariants(gl.group)}}}};
}

}  // namespace hopfforge
