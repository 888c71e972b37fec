#include "hopfforge/yd.hpp"

#include <string>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

std::string idx(std::initializer_list<std::size_t> v) {
  std::string s = "(";
  bool first = true;
  for (auto i : v) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

void check_shape(const YDStructure& s) {
  const std::size_t dh = s.H.dim(), db = s.dim_B();
  if (db == 0 || s.B_coalg.dim != db) throw MalformedInput("B algebra and coalgebra dimensions differ");
  if (s.action.size() != dh * db) throw MalformedInput("action tensor has the wrong size");
  if (s.coaction.size() != db) throw MalformedInput("coaction tensor has the wrong size");
  for (const auto& v : s.action)
    if (!v.empty() && v.rbegin()->first >= db) throw MalformedInput("action leaves B");
  for (const auto& v : s.coaction)
    if (!v.empty() && v.rbegin()->first >= dh * db) throw MalformedInput("coaction leaves H (x) B");
  if (!s.B_antipode.empty() && s.B_antipode.size() != db) throw MalformedInput("B antipode has the wrong size");
}

// Product in B (x) B with the braided multiplication
// (x (x) y)(z (x) w) = x (y(-1) . z) (x) y(0) w.
SparseVec braided_product(const YDStructure& s, const SparseVec& u, const SparseVec& v) {
  const std::size_t db = s.dim_B();
  const auto& ctx = s.ctx();
  SparseVec out;
  for (const auto& [p, a] : u) {
    const std::size_t x = p / db, y = p % db;
    for (const auto& [q, b] : v) {
      const std::size_t z = q / db, w = q % db;
      for (const auto& [r, c] : s.coaction[y]) {
        const SparseVec moved = s.act(unit_vector(ctx, r / db), unit_vector(ctx, z));
        if (moved.empty()) continue;
        const SparseVec left = s.B_alg.multiply(unit_vector(ctx, x), moved);
        const SparseVec& right = s.B_alg.product(r % db, w);
        const CycScalar k = a * b * c;
        for (const auto& [i, li] : left)
          for (const auto& [j, rj] : right) add_term(out, i * db + j, k * li * rj);
      }
    }
  }
  return out;
}

// sum_f f(h_1) g(h_2)
CycScalar convolve(const HopfData& H, const Functional& f, const Functional& g, std::size_t h) {
  CycScalar acc = H.ctx().zero();
  const std::size_t d = H.dim();
  for (const auto& [p, c] : H.coalgebra.comult[h]) acc += c * f[p / d] * g[p % d];
  return acc;
}

CycScalar evaluate(const Functional& f, const SparseVec& v, const FieldContext& ctx) {
  CycScalar acc = ctx.zero();
  for (const auto& [i, c] : v) acc += c * f[i];
  return acc;
}

}  // namespace

SparseVec YDStructure::act(const SparseVec& h, const SparseVec& b) const {
  const std::size_t db = dim_B();
  SparseVec out;
  for (const auto& [i, x] : h)
    for (const auto& [j, y] : b) add_scaled(out, action[i * db + j], x * y);
  return out;
}

SparseVec YDStructure::coact(const SparseVec& b) const {
  SparseVec out;
  for (const auto& [j, y] : b) add_scaled(out, coaction[j], y);
  return out;
}

YDStructure trivial_yd(const HopfData& H, const HopfData& B) {
  if (&H.ctx() != &B.ctx()) throw PreconditionError("conductor_mismatch", "H and B live over different fields");
  YDStructure s;
  s.H = H;
  s.B_alg = B.algebra;
  s.B_coalg = B.coalgebra;
  s.B_antipode = B.antipode;
  const std::size_t dh = H.dim(), db = B.dim();
  const auto& ctx = H.ctx();
  s.action.resize(dh * db);
  for (std::size_t h = 0; h < dh; ++h) {
    const CycScalar e = H.coalgebra.counit_of(unit_vector(ctx, h));
    for (std::size_t b = 0; b < db; ++b)
      if (!e.is_zero()) s.action[h * db + b] = scaled(unit_vector(ctx, b), e);
  }
  s.coaction.resize(db);
  for (std::size_t b = 0; b < db; ++b)
    for (const auto& [i, c] : H.algebra.unit) add_term(s.coaction[b], i * db + b, c);
  return s;
}

AxiomReport verify_yd(const YDStructure& s) {
  check_shape(s);
  const auto& ctx = s.ctx();
  const HopfData& H = s.H;
  const std::size_t dh = H.dim(), db = s.dim_B();
  AxiomReport rep;
  auto eh = [&](std::size_t i) { return unit_vector(ctx, i); };

  // module
  for (std::size_t b = 0; b < db; ++b)
    rep.record("module", s.act(H.algebra.unit, eh(b)) == eh(b), "unit on " + std::to_string(b));
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t k = 0; k < dh; ++k)
      for (std::size_t b = 0; b < db; ++b)
        rep.record("module", s.act(eh(h), s.act(eh(k), eh(b))) == s.act(H.algebra.product(h, k), eh(b)),
                   "h,k,b " + idx({h, k, b}));

  // comodule
  for (std::size_t b = 0; b < db; ++b) {
    SparseVec lhs, rhs, counit;
    for (const auto& [p, c] : s.coaction[b]) {
      const std::size_t h = p / db, x = p % db;
      for (const auto& [q, c2] : H.coalgebra.comult[h]) add_term(lhs, q * db + x, c * c2);
      for (const auto& [q, c2] : s.coaction[x]) add_term(rhs, h * dh * db + q, c * c2);
      if (auto e = H.coalgebra.counit.find(h); e != H.coalgebra.counit.end()) add_term(counit, x, c * e->second);
    }
    rep.record("comodule", lhs == rhs && counit == eh(b), "b " + std::to_string(b));
  }

  // module algebra
  for (std::size_t h = 0; h < dh; ++h) {
    const CycScalar e = H.coalgebra.counit_of(eh(h));
    rep.record("module_algebra", s.act(eh(h), s.B_alg.unit) == scaled(s.B_alg.unit, e),
               "unit under " + std::to_string(h));
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t c = 0; c < db; ++c) {
        SparseVec rhs;
        for (const auto& [p, x] : H.coalgebra.comult[h])
          add_scaled(rhs, s.B_alg.multiply(s.act(eh(p / dh), eh(b)), s.act(eh(p % dh), eh(c))), x);
        rep.record("module_algebra", s.act(eh(h), s.B_alg.product(b, c)) == rhs, "h,b,b' " + idx({h, b, c}));
      }
  }

  // module coalgebra
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t b = 0; b < db; ++b) {
      const SparseVec hb = s.act(eh(h), eh(b));
      SparseVec rhs;
      for (const auto& [p, x] : H.coalgebra.comult[h])
        for (const auto& [q, y] : s.B_coalg.comult[b]) {
          const SparseVec l = s.act(eh(p / dh), eh(q / db));
          const SparseVec r = s.act(eh(p % dh), eh(q % db));
          for (const auto& [i, li] : l)
            for (const auto& [j, rj] : r) add_term(rhs, i * db + j, x * y * li * rj);
        }
      const bool counit_ok = s.B_coalg.counit_of(hb) ==
                             H.coalgebra.counit_of(eh(h)) * s.B_coalg.counit_of(eh(b));
      rep.record("module_coalgebra", s.B_coalg.coproduct(hb) == rhs && counit_ok, "h,b " + idx({h, b}));
    }

  // comodule algebra
  {
    SparseVec unit_unit;
    for (const auto& [i, x] : H.algebra.unit)
      for (const auto& [j, y] : s.B_alg.unit) add_term(unit_unit, i * db + j, x * y);
    rep.record("comodule_algebra", s.coact(s.B_alg.unit) == unit_unit, "unit");
  }
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t c = 0; c < db; ++c) {
      SparseVec rhs;
      for (const auto& [p, x] : s.coaction[b])
        for (const auto& [q, y] : s.coaction[c]) {
          const SparseVec& hh = H.algebra.product(p / db, q / db);
          const SparseVec& bb = s.B_alg.product(p % db, q % db);
          for (const auto& [i, hi] : hh)
            for (const auto& [j, bj] : bb) add_term(rhs, i * db + j, x * y * hi * bj);
        }
      rep.record("comodule_algebra", s.coact(s.B_alg.product(b, c)) == rhs, "b,b' " + idx({b, c}));
    }

  // comodule coalgebra
  for (std::size_t b = 0; b < db; ++b) {
    SparseVec lhs, rhs, counit;
    for (const auto& [p, x] : s.coaction[b]) {
      const std::size_t h = p / db, m = p % db;
      for (const auto& [q, y] : s.B_coalg.comult[m]) add_term(lhs, h * db * db + q, x * y);
      add_scaled(counit, unit_vector(ctx, h), x * s.B_coalg.counit_of(eh(m)));
    }
    for (const auto& [q, y] : s.B_coalg.comult[b])
      for (const auto& [p1, x1] : s.coaction[q / db])
        for (const auto& [p2, x2] : s.coaction[q % db])
          for (const auto& [i, hi] : H.algebra.product(p1 / db, p2 / db))
            add_term(rhs, (i * db + p1 % db) * db + p2 % db, y * x1 * x2 * hi);
    const bool counit_ok = counit == scaled(H.algebra.unit, s.B_coalg.counit_of(eh(b)));
    rep.record("comodule_coalgebra", lhs == rhs && counit_ok, "b " + std::to_string(b));
  }

  // h_1 m(-1) (x) h_2 . m(0) = (h_1 . m)(-1) h_2 (x) (h_1 . m)(0)
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t m = 0; m < db; ++m) {
      SparseVec lhs, rhs;
      for (const auto& [p, x] : H.coalgebra.comult[h]) {
        const std::size_t h1 = p / dh, h2 = p % dh;
        for (const auto& [q, y] : s.coaction[m]) {
          const SparseVec& hm = H.algebra.product(h1, q / db);
          const SparseVec moved = s.act(eh(h2), eh(q % db));
          for (const auto& [i, a] : hm)
            for (const auto& [j, c] : moved) add_term(lhs, i * db + j, x * y * a * c);
        }
        const SparseVec rho = s.coact(s.act(eh(h1), eh(m)));
        for (const auto& [q, y] : rho)
          for (const auto& [i, a] : H.algebra.product(q / db, h2)) add_term(rhs, i * db + q % db, x * y * a);
      }
      rep.record("yd_compatibility", lhs == rhs, "h,m " + idx({h, m}));
    }
  return rep;
}

AxiomReport verify_braided_bialgebra(const YDStructure& s) {
  AxiomReport rep = verify_yd(s);
  rep.merge(verify_algebra(s.B_alg));
  rep.merge(verify_coalgebra(s.B_coalg));
  const auto& ctx = s.ctx();
  const std::size_t db = s.dim_B();
  auto e = [&](std::size_t i) { return unit_vector(ctx, i); };

  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t c = 0; c < db; ++c) {
      const SparseVec& bc = s.B_alg.product(b, c);
      rep.record("braided_comultiplication_multiplicative",
                 s.B_coalg.coproduct(bc) == braided_product(s, s.B_coalg.comult[b], s.B_coalg.comult[c]),
                 "b,b' " + idx({b, c}));
      rep.record("counit_multiplicative",
                 s.B_coalg.counit_of(bc) == s.B_coalg.counit_of(e(b)) * s.B_coalg.counit_of(e(c)),
                 "b,b' " + idx({b, c}));
    }
  SparseVec unit_sq;
  for (const auto& [i, x] : s.B_alg.unit)
    for (const auto& [j, y] : s.B_alg.unit) add_term(unit_sq, i * db + j, x * y);
  rep.record("comultiplication_unital", s.B_coalg.coproduct(s.B_alg.unit) == unit_sq, "unit");
  rep.record("counit_unital", s.B_coalg.counit_of(s.B_alg.unit).is_one(), "unit");

  if (!s.B_antipode.empty()) {
    for (std::size_t b = 0; b < db; ++b) {
      SparseVec left, right;
      for (const auto& [p, x] : s.B_coalg.comult[b]) {
        add_scaled(left, s.B_alg.multiply(s.B_antipode[p / db], e(p % db)), x);
        add_scaled(right, s.B_alg.multiply(e(p / db), s.B_antipode[p % db]), x);
      }
      const SparseVec target = scaled(s.B_alg.unit, s.B_coalg.counit_of(e(b)));
      rep.record("antipode_left", left == target, "b " + std::to_string(b));
      rep.record("antipode_right", right == target, "b " + std::to_string(b));
    }
  }
  return rep;
}

nlohmann::json Rank2Witness::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : alpha) a.push_back(scalar_to_json(v));
  return {{"alpha", a}, {"y", y}, {"valid", valid}};
}

bool is_algebra_map(const HopfData& H, const Functional& alpha) {
  const auto& ctx = H.ctx();
  if (alpha.size() != H.dim()) return false;
  if (!evaluate(alpha, H.algebra.unit, ctx).is_one()) return false;
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (std::size_t j = 0; j < H.dim(); ++j)
      if (evaluate(alpha, H.algebra.product(i, j), ctx) != alpha[i] * alpha[j]) return false;
  return true;
}

bool conjugation_condition(const HopfData& H, const Functional& alpha, std::size_t y) {
  const auto& ctx = H.ctx();
  const std::size_t d = H.dim();
  Functional alpha_inv(d, ctx.zero());
  for (std::size_t i = 0; i < d; ++i) alpha_inv[i] = evaluate(alpha, H.antipode[i], ctx);
  const SparseVec ey = unit_vector(ctx, y);
  const SparseVec y_inv = H.apply_antipode(ey);
  for (std::size_t h = 0; h < d; ++h) {
    // alpha^{-1}(h_1) h_2 alpha(h_3)
    SparseVec lhs;
    for (const auto& [p, c] : H.coalgebra.comult[h]) {
      const CycScalar left = c * alpha_inv[p / d];
      if (left.is_zero()) continue;
      for (const auto& [q, c2] : H.coalgebra.comult[p % d]) add_term(lhs, q / d, left * c2 * alpha[q % d]);
    }
    const SparseVec rhs = H.algebra.multiply(H.algebra.multiply(ey, unit_vector(ctx, h)), y_inv);
    if (lhs != rhs) return false;
  }
  return true;
}

Rank2Witness rank2_check(const HopfData& H, const Functional& alpha, std::size_t y) {
  const auto& ctx = H.ctx();
  Rank2Witness w;
  w.alpha = alpha;
  w.y = y;
  w.beta.assign(H.dim(), ctx.zero());
  w.varpi = ctx.zero();
  w.valid = y < H.dim() && is_algebra_map(H, alpha) && check_grouplike(H, unit_vector(ctx, y)) &&
            alpha[y] == -ctx.one() && conjugation_condition(H, alpha, y);
  return w;
}

std::vector<Functional> linear_characters(const FiniteGroup& G, const FieldContext& ctx) {
  const Subgroup all = generated_subgroup(G, [&] {
    std::vector<std::size_t> v(G.order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }());
  const Subgroup derived = commutator_subgroup(G, all);
  // cosets ordered by smallest member, matching quotient_group
  std::vector<std::size_t> coset_of(G.order(), G.order());
  std::size_t count = 0;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (coset_of[x] != G.order()) continue;
    for (auto d : derived) coset_of[G.mul(x, d)] = count;
    ++count;
  }
  const FiniteGroup ab = quotient_group(G, derived);
  std::vector<Functional> out;
  for (const auto& chi : characters(ab, ctx)) {
    Functional f;
    f.reserve(G.order());
    for (std::size_t g = 0; g < G.order(); ++g) f.push_back(chi.value(ctx, coset_of[g]));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Rank2Witness> rank2_classify(const FiniteGroup& G, const FieldContext& ctx) {
  const HopfData H = group_algebra_hopf(G, ctx);
  std::vector<Rank2Witness> out;
  for (const auto& alpha : linear_characters(G, ctx))
    for (std::size_t y = 0; y < G.order(); ++y) {
      if (alpha[y] != -ctx.one()) continue;
      Rank2Witness w = rank2_check(H, alpha, y);
      if (w.valid) out.push_back(std::move(w));
    }
  return out;
}

std::vector<Rank2Witness> rank2_classify_candidates(
    const HopfData& H, const std::vector<std::pair<Functional, std::size_t>>& candidates) {
  std::vector<Rank2Witness> out;
  for (const auto& [alpha, y] : candidates) {
    Rank2Witness w = rank2_check(H, alpha, y);
    if (w.valid) out.push_back(std::move(w));
  }
  return out;
}

YDStructure rank2_structure(const HopfData& H, const Functional& alpha, std::size_t y) {
  const auto& ctx = H.ctx();
  const std::size_t dh = H.dim();
  if (alpha.size() != dh || y >= dh) throw MalformedInput("rank-2 data does not match dim H");
  YDStructure s;
  s.H = H;
  s.B_alg = AlgebraData(ctx, 2);
  s.B_alg.mult[0] = unit_vector(ctx, 0);
  s.B_alg.mult[1] = unit_vector(ctx, 1);
  s.B_alg.mult[2] = unit_vector(ctx, 1);
  s.B_alg.unit = unit_vector(ctx, 0);
  s.B_coalg = CoalgebraData(ctx, 2);
  s.B_coalg.comult[0] = unit_vector(ctx, 0);
  s.B_coalg.comult[1] = {{1, ctx.one()}, {2, ctx.one()}};  // n (x) 1 + 1 (x) n
  s.B_coalg.counit = unit_vector(ctx, 0);
  s.B_antipode = {unit_vector(ctx, 0), scaled(unit_vector(ctx, 1), -ctx.one())};
  s.action.resize(dh * 2);
  for (std::size_t h = 0; h < dh; ++h) {
    const CycScalar e = H.coalgebra.counit_of(unit_vector(ctx, h));
    if (!e.is_zero()) s.action[h * 2] = scaled(unit_vector(ctx, 0), e);
    if (!alpha[h].is_zero()) s.action[h * 2 + 1] = scaled(unit_vector(ctx, 1), alpha[h]);
  }
  s.coaction.resize(2);
  for (const auto& [i, c] : H.algebra.unit) add_term(s.coaction[0], i * 2, c);
  s.coaction[1] = {{y * 2 + 1, ctx.one()}};
  return s;
}

YDStructure build_B_alpha_y(const HopfData& H, const Rank2Witness& w) {
  if (!rank2_check(H, w.alpha, w.y).valid)
    throw PreconditionError("classification_violation",
                            "alpha must be a character with alpha(y) = -1 and y must satisfy the "
                            "conjugation condition");
  return rank2_structure(H, w.alpha, w.y);
}

YDStructure rank2_group_solution(const HopfData& H) {
  return trivial_yd(H, group_algebra_hopf(FiniteGroup::cyclic(2), H.ctx()));
}

TwoDimModuleAlgebraReport verify_module_algebra_2dim(const HopfData& H, const CycScalar& varpi,
                                                     const std::vector<SparseVec>& h_dot_n) {
  const auto& ctx = H.ctx();
  const std::size_t dh = H.dim();
  if (h_dot_n.size() != dh) throw MalformedInput("one image of n per basis element of H is required");
  for (const auto& v : h_dot_n)
    if (!v.empty() && v.rbegin()->first >= 2) throw MalformedInput("h.n must lie in span{1, n}");

  AlgebraData B(ctx, 2);
  B.mult[0] = unit_vector(ctx, 0);
  B.mult[1] = unit_vector(ctx, 1);
  B.mult[2] = unit_vector(ctx, 1);
  if (!varpi.is_zero()) B.mult[3] = scaled(unit_vector(ctx, 0), varpi);
  B.unit = unit_vector(ctx, 0);

  std::vector<SparseVec> action(dh * 2);
  for (std::size_t h = 0; h < dh; ++h) {
    const CycScalar e = H.coalgebra.counit_of(unit_vector(ctx, h));
    if (!e.is_zero()) action[h * 2] = scaled(unit_vector(ctx, 0), e);
    action[h * 2 + 1] = h_dot_n[h];
  }
  auto act = [&](const SparseVec& h, const SparseVec& b) {
    SparseVec out;
    for (const auto& [i, x] : h)
      for (const auto& [j, y] : b) add_scaled(out, action[i * 2 + j], x * y);
    return out;
  };
  auto e = [&](std::size_t i) { return unit_vector(ctx, i); };

  TwoDimModuleAlgebraReport out;
  AxiomReport& rep = out.report;
  for (std::size_t b = 0; b < 2; ++b)
    rep.record("module", act(H.algebra.unit, e(b)) == e(b), "unit on " + std::to_string(b));
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t k = 0; k < dh; ++k)
      for (std::size_t b = 0; b < 2; ++b)
        rep.record("module", act(e(h), act(e(k), e(b))) == act(H.algebra.product(h, k), e(b)),
                   "h,k,b " + idx({h, k, b}));
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        SparseVec rhs;
        for (const auto& [p, x] : H.coalgebra.comult[h])
          add_scaled(rhs, B.multiply(act(e(p / dh), e(b)), act(e(p % dh), e(c))), x);
        rep.record("module_algebra", act(e(h), B.product(b, c)) == rhs, "h,b,b' " + idx({h, b, c}));
      }

  out.varpi = varpi;
  out.alpha.assign(dh, ctx.zero());
  out.beta.assign(dh, ctx.zero());
  Functional eps(dh, ctx.zero());
  for (std::size_t h = 0; h < dh; ++h) {
    if (auto it = h_dot_n[h].find(0); it != h_dot_n[h].end()) out.beta[h] = it->second;
    if (auto it = h_dot_n[h].find(1); it != h_dot_n[h].end()) out.alpha[h] = it->second;
    eps[h] = H.coalgebra.counit_of(e(h));
  }
  for (std::size_t h = 0; h < dh; ++h) {
    rep.record("beta_alpha_anticommute",
               convolve(H, out.beta, out.alpha, h) == -convolve(H, out.alpha, out.beta, h),
               "h " + std::to_string(h));
    rep.record("beta_square",
               convolve(H, out.beta, out.beta, h) == varpi * (eps[h] - convolve(H, out.alpha, out.alpha, h)),
               "h " + std::to_string(h));
  }
  return out;
}

std::optional<SparseVec> normalized_left_integral(const AlgebraData& a, const CoalgebraData& c) {
  const auto& ctx = *a.ctx;
  const std::size_t d = a.dim;
  // Row i of (L_b - eps(b) I) for each basis b, as equations in the unknowns.
  SpanBasis equations(d);
  for (std::size_t b = 0; b < d; ++b) {
    const CycScalar eb = c.counit_of(unit_vector(ctx, b));
    std::vector<SparseVec> rows(d);
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [i, x] : a.product(b, j)) add_term(rows[i], j, x);
      add_term(rows[j], j, -eb);
    }
    for (const auto& r : rows)
      if (!r.empty()) equations.insert(r);
  }
  for (const auto& v : equations.null_space(ctx)) {
    const CycScalar e = c.counit_of(v);
    if (!e.is_zero()) return scaled(v, e.inv());
  }
  return std::nullopt;
}

HopfData sweedler_hopf(const FieldContext& ctx) {
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  HopfData h;
  h.algebra = AlgebraData(ctx, 4);
  h.coalgebra = CoalgebraData(ctx, 4);
  auto one = ctx.one();
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int sign) {
    h.algebra.mult[i * 4 + j] = {{k, sign > 0 ? one : -one}};
  };
  for (std::size_t j = 0; j < 4; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1);
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);
  set(1, 3, 2, 1);
  set(2, 0, 2, 1);
  set(2, 1, 3, -1);  // xg = -gx
  set(3, 0, 3, 1);
  set(3, 1, 2, -1);  // gxg = -x
  h.algebra.unit = unit_vector(ctx, 0);
  h.coalgebra.comult[0] = {{0, one}};
  h.coalgebra.comult[1] = {{1 * 4 + 1, one}};
  h.coalgebra.comult[2] = {{2 * 4 + 0, one}, {1 * 4 + 2, one}};
  h.coalgebra.comult[3] = {{3 * 4 + 1, one}, {0 * 4 + 3, one}};
  h.coalgebra.counit = {{0, one}, {1, one}};
  h.antipode = {unit_vector(ctx, 0), unit_vector(ctx, 1), {{3, -one}}, {{2, one}}};
  return h;
}

}  // namespace hopfforge
