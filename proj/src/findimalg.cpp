#include "hopfforge/findimalg.hpp"

#include <cmath>
#include <sstream>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ")";
  return os.str();
}

// Product in A (x) A of two pair-indexed vectors.
SparseVec tensor_square_product(const AlgebraData& a, const SparseVec& x, const SparseVec& y) {
  const std::size_t d = a.dim;
  SparseVec out;
  for (const auto& [p, c] : x) {
    const std::size_t xa = p / d, xb = p % d;
    for (const auto& [q, c2] : y) {
      const SparseVec& left = a.product(xa, q / d);
      if (left.empty()) continue;
      const SparseVec& right = a.product(xb, q % d);
      if (right.empty()) continue;
      const CycScalar cc = c * c2;
      for (const auto& [s, ls] : left)
        for (const auto& [t, rt] : right) add_term(out, s * d + t, cc * ls * rt);
    }
  }
  return out;
}

void check_index_range(const SparseVec& v, std::size_t bound, const char* what) {
  if (!v.empty() && v.rbegin()->first >= bound)
    throw MalformedInput(std::string(what) + " has an index outside the basis range");
}

void check_algebra_shape(const AlgebraData& a) {
  if (a.ctx == nullptr || a.dim == 0) throw MalformedInput("algebra has no field context or zero dimension");
  if (a.mult.size() != a.dim * a.dim) throw MalformedInput("multiplication tensor has the wrong size");
  for (const auto& v : a.mult) check_index_range(v, a.dim, "multiplication tensor");
  check_index_range(a.unit, a.dim, "unit");
}

void check_coalgebra_shape(const CoalgebraData& c) {
  if (c.ctx == nullptr || c.dim == 0) throw MalformedInput("coalgebra has no field context or zero dimension");
  if (c.comult.size() != c.dim) throw MalformedInput("comultiplication tensor has the wrong size");
  for (const auto& v : c.comult) check_index_range(v, c.dim * c.dim, "comultiplication tensor");
  check_index_range(c.counit, c.dim, "counit");
}

// For every functional f in fs: (f (x) I) v when left, (I (x) f) v otherwise.
bool annihilated(const std::vector<SparseVec>& fs, const SparseVec& v, std::size_t d, bool left) {
  for (const auto& f : fs) {
    SparseVec contracted;
    for (const auto& [p, c] : v) {
      const std::size_t a = p / d, b = p % d;
      auto hit = f.find(left ? a : b);
      if (hit != f.end()) add_term(contracted, left ? b : a, c * hit->second);
    }
    if (!contracted.empty()) return false;
  }
  return true;
}

}  // namespace

SparseVec AlgebraData::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, product(i, j), a * b);
  return out;
}

SparseVec CoalgebraData::coproduct(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, a] : x) add_scaled(out, comult[i], a);
  return out;
}

CycScalar CoalgebraData::counit_of(const SparseVec& x) const {
  CycScalar s = ctx->zero();
  for (const auto& [i, a] : x) {
    auto hit = counit.find(i);
    if (hit != counit.end()) s += a * hit->second;
  }
  return s;
}

SparseVec HopfData::apply_antipode(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, a] : x) add_scaled(out, antipode[i], a);
  return out;
}

AxiomCheck& AxiomReport::item(const std::string& name) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  checks_.push_back(AxiomCheck{name, 0, 0, {}});
  return checks_.back();
}

void AxiomReport::record(const std::string& name, bool ok, const std::string& witness) {
  AxiomCheck& c = item(name);
  ++c.checked;
  if (ok) return;
  ++c.failed;
  if (c.witnesses.size() < kWitnessCap) c.witnesses.push_back(witness);
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& o : other.checks_) {
    AxiomCheck& c = item(o.name);
    c.checked += o.checked;
    c.failed += o.failed;
    for (const auto& w : o.witnesses)
      if (c.witnesses.size() < kWitnessCap) c.witnesses.push_back(w);
  }
}

bool AxiomReport::passed() const {
  for (const auto& c : checks_)
    if (c.failed != 0) return false;
  return true;
}

bool AxiomReport::passed(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c.failed == 0;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks_)
    if (c.failed != 0) return c.name;
  return {};
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks_)
    items.push_back({{"axiom", c.name},
                     {"checked", c.checked},
                     {"failed", c.failed},
                     {"witnesses", c.witnesses}});
  return {{"passed", passed()}, {"checks", std::move(items)}};
}

AxiomReport verify_algebra(const AlgebraData& a) {
  check_algebra_shape(a);
  AxiomReport rep;
  const std::size_t d = a.dim;
  rep.item("associativity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVec& ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVec lhs;
        for (const auto& [s, c] : ij) add_scaled(lhs, a.product(s, k), c);
        SparseVec rhs;
        for (const auto& [s, c] : a.product(j, k)) add_scaled(rhs, a.product(i, s), c);
        rep.record("associativity", lhs == rhs, "triple " + tuple_str({i, j, k}));
      }
    }
  for (std::size_t i = 0; i < d; ++i) {
    const SparseVec e = unit_vector(*a.ctx, i);
    rep.record("unit", a.multiply(a.unit, e) == e && a.multiply(e, a.unit) == e,
               "basis " + std::to_string(i));
  }
  return rep;
}

AxiomReport verify_coalgebra(const CoalgebraData& c) {
  check_coalgebra_shape(c);
  AxiomReport rep;
  const std::size_t d = c.dim;
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec lhs, rhs;
    for (const auto& [p, x] : c.comult[i]) {
      const std::size_t j = p / d, k = p % d;
      for (const auto& [q, y] : c.comult[j]) add_term(lhs, q * d + k, x * y);
      for (const auto& [q, y] : c.comult[k]) add_term(rhs, j * d * d + q, x * y);
    }
    rep.record("coassociativity", lhs == rhs, "basis " + std::to_string(i));

    SparseVec left_counit, right_counit;
    for (const auto& [p, x] : c.comult[i]) {
      const std::size_t j = p / d, k = p % d;
      if (auto e = c.counit.find(j); e != c.counit.end()) add_term(left_counit, k, x * e->second);
      if (auto e = c.counit.find(k); e != c.counit.end()) add_term(right_counit, j, x * e->second);
    }
    const SparseVec ei = unit_vector(*c.ctx, i);
    rep.record("counit", left_counit == ei && right_counit == ei, "basis " + std::to_string(i));
  }
  return rep;
}

AxiomReport verify_hopf(const HopfData& h) {
  const AlgebraData& a = h.algebra;
  const CoalgebraData& c = h.coalgebra;
  AxiomReport rep = verify_algebra(a);
  rep.merge(verify_coalgebra(c));
  if (c.dim != a.dim) throw MalformedInput("algebra and coalgebra dimensions differ");
  if (h.antipode.size() != a.dim) throw MalformedInput("antipode has the wrong size");
  for (const auto& v : h.antipode) check_index_range(v, a.dim, "antipode");
  const std::size_t d = a.dim;
  const auto& ctx = *a.ctx;

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVec& ij = a.product(i, j);
      const std::string w = "pair " + tuple_str({i, j});
      rep.record("comultiplication_multiplicative",
                 c.coproduct(ij) == tensor_square_product(a, c.comult[i], c.comult[j]), w);
      const CycScalar ei = c.counit_of(unit_vector(ctx, i));
      const CycScalar ej = c.counit_of(unit_vector(ctx, j));
      rep.record("counit_multiplicative", c.counit_of(ij) == ei * ej, w);
    }
  SparseVec unit_sq;
  for (const auto& [i, x] : a.unit)
    for (const auto& [j, y] : a.unit) add_term(unit_sq, i * d + j, x * y);
  rep.record("comultiplication_unital", c.coproduct(a.unit) == unit_sq, "unit");
  rep.record("counit_unital", c.counit_of(a.unit).is_one(), "unit");

  for (std::size_t i = 0; i < d; ++i) {
    SparseVec left, right;
    for (const auto& [p, x] : c.comult[i]) {
      const std::size_t j = p / d, k = p % d;
      add_scaled(left, a.multiply(h.antipode[j], unit_vector(ctx, k)), x);
      add_scaled(right, a.multiply(unit_vector(ctx, j), h.antipode[k]), x);
    }
    const SparseVec target = scaled(a.unit, c.counit_of(unit_vector(ctx, i)));
    rep.record("antipode_left", left == target, "basis " + std::to_string(i));
    rep.record("antipode_right", right == target, "basis " + std::to_string(i));
  }
  return rep;
}

std::optional<unsigned> antipode_order(const HopfData& h, unsigned bound) {
  const auto& ctx = h.ctx();
  std::vector<SparseVec> power = h.antipode;
  for (unsigned k = 1; k <= bound; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < h.dim() && identity; ++i)
      identity = power[i] == unit_vector(ctx, i);
    if (identity) return k;
    for (auto& col : power) col = h.apply_antipode(col);
  }
  return std::nullopt;
}

bool is_commutative(const AlgebraData& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

bool is_cocommutative(const CoalgebraData& c) {
  const std::size_t d = c.dim;
  for (const auto& v : c.comult) {
    SparseVec flipped;
    for (const auto& [p, x] : v) flipped.emplace((p % d) * d + p / d, x);
    if (flipped != v) return false;
  }
  return true;
}

bool check_grouplike(const HopfData& h, const SparseVec& v) {
  if (v.empty()) return false;
  const std::size_t d = h.dim();
  SparseVec vv;
  for (const auto& [i, x] : v)
    for (const auto& [j, y] : v) vv.emplace(i * d + j, x * y);
  return h.coalgebra.coproduct(v) == vv && h.coalgebra.counit_of(v).is_one();
}

HopfData tensor_hopf(const HopfData& h1, const HopfData& h2) {
  if (&h1.ctx() != &h2.ctx()) throw PreconditionError("conductor_mismatch", "tensor factors use different fields");
  const auto& ctx = h1.ctx();
  const std::size_t d1 = h1.dim(), d2 = h2.dim(), d = d1 * d2;
  HopfData t;
  t.algebra = AlgebraData(ctx, d);
  t.coalgebra = CoalgebraData(ctx, d);
  t.antipode.resize(d);
  auto idx = [d2](std::size_t a, std::size_t b) { return a * d2 + b; };
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t a2 = 0; a2 < d1; ++a2)
        for (std::size_t b2 = 0; b2 < d2; ++b2) {
          SparseVec& out = t.algebra.mult[idx(a, b) * d + idx(a2, b2)];
          for (const auto& [s, x] : h1.algebra.product(a, a2))
            for (const auto& [u, y] : h2.algebra.product(b, b2)) add_term(out, idx(s, u), x * y);
        }
  for (const auto& [s, x] : h1.algebra.unit)
    for (const auto& [u, y] : h2.algebra.unit) add_term(t.algebra.unit, idx(s, u), x * y);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      SparseVec& out = t.coalgebra.comult[idx(a, b)];
      for (const auto& [p, x] : h1.coalgebra.comult[a])
        for (const auto& [q, y] : h2.coalgebra.comult[b])
          add_term(out, idx(p / d1, q / d2) * d + idx(p % d1, q % d2), x * y);
      const CycScalar e = h1.coalgebra.counit_of(unit_vector(ctx, a)) *
                          h2.coalgebra.counit_of(unit_vector(ctx, b));
      add_term(t.coalgebra.counit, idx(a, b), e);
      for (const auto& [s, x] : h1.antipode[a])
        for (const auto& [u, y] : h2.antipode[b]) add_term(t.antipode[idx(a, b)], idx(s, u), x * y);
    }
  return t;
}

HopfData dual_hopf(const HopfData& h) {
  const auto& ctx = h.ctx();
  const std::size_t d = h.dim();
  HopfData t;
  t.algebra = AlgebraData(ctx, d);
  t.coalgebra = CoalgebraData(ctx, d);
  t.antipode.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [p, x] : h.coalgebra.comult[i]) add_term(t.algebra.mult[p], i, x);
  t.algebra.unit = h.coalgebra.counit;
  for (std::size_t p = 0; p < d * d; ++p)
    for (const auto& [k, x] : h.algebra.mult[p]) add_term(t.coalgebra.comult[k], p, x);
  t.coalgebra.counit = h.algebra.unit;
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [i, x] : h.antipode[j]) add_term(t.antipode[i], j, x);
  return t;
}

bool structurally_equal(const HopfData& a, const HopfData& b) {
  return a.dim() == b.dim() && &a.ctx() == &b.ctx() && a.algebra.mult == b.algebra.mult &&
         a.algebra.unit == b.algebra.unit && a.coalgebra.comult == b.coalgebra.comult &&
         a.coalgebra.counit == b.coalgebra.counit && a.antipode == b.antipode;
}

bool spans_hopf_subalgebra(const HopfData& h, const std::vector<SparseVec>& basis) {
  const std::size_t d = h.dim();
  const SpanBasis k = span_of(d, basis);
  if (!k.contains(h.algebra.unit)) return false;
  std::vector<SparseVec> rows;
  for (const auto& [p, r] : k.rows()) rows.push_back(r);
  for (const auto& x : rows) {
    if (!k.contains(h.apply_antipode(x))) return false;
    for (const auto& y : rows)
      if (!k.contains(h.algebra.multiply(x, y))) return false;
  }
  const std::vector<SparseVec> annihilator = k.null_space(h.ctx());
  for (const auto& x : rows) {
    const SparseVec dx = h.coalgebra.coproduct(x);
    if (!annihilated(annihilator, dx, d, true) || !annihilated(annihilator, dx, d, false)) return false;
  }
  return true;
}

HopfData quotient_by_normal(const HopfData& h, const std::vector<SparseVec>& sub_basis) {
  return quotient_with_projection(h, sub_basis).Q;
}

HopfQuotient quotient_with_projection(const HopfData& h, const std::vector<SparseVec>& sub_basis) {
  if (!spans_hopf_subalgebra(h, sub_basis))
    throw NotHopfSubalgebra("the given vectors do not span a Hopf subalgebra");
  const auto& ctx = h.ctx();
  const std::size_t d = h.dim();
  const SpanBasis k = span_of(d, sub_basis);

  std::vector<SparseVec> k_plus;
  for (const auto& [p, r] : k.rows()) {
    SparseVec v = difference(r, scaled(h.algebra.unit, h.coalgebra.counit_of(r)));
    if (!v.empty()) k_plus.push_back(std::move(v));
  }
  SpanBasis right_ideal(d), left_ideal(d);
  for (const auto& x : k_plus)
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVec e = unit_vector(ctx, j);
      right_ideal.insert(h.algebra.multiply(x, e));
      left_ideal.insert(h.algebra.multiply(e, x));
    }
  if (!right_ideal.same_span(left_ideal))
    throw PreconditionError("normal_subalgebra", "K^+H differs from HK^+, so K is not normal");

  const std::vector<std::size_t> complement = right_ideal.non_pivot_columns();
  const std::size_t q = complement.size();
  if (d % k.dim() != 0 || q != d / k.dim())
    throw InternalConsistencyError("quotient dimension " + std::to_string(q) + " is not dim H / dim K = " +
                                   std::to_string(d) + "/" + std::to_string(k.dim()));
  std::vector<std::size_t> position(d, q);
  for (std::size_t t = 0; t < q; ++t) position[complement[t]] = t;
  auto project = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : right_ideal.reduce(v)) out.emplace(position[i], c);
    return out;
  };
  std::vector<SparseVec> proj_basis(d);
  for (std::size_t a = 0; a < d; ++a) proj_basis[a] = project(unit_vector(ctx, a));

  HopfData out;
  out.algebra = AlgebraData(ctx, q);
  out.coalgebra = CoalgebraData(ctx, q);
  out.antipode.resize(q);
  for (std::size_t s = 0; s < q; ++s) {
    const std::size_t cs = complement[s];
    for (std::size_t t = 0; t < q; ++t)
      out.algebra.mult[s * q + t] = project(h.algebra.product(cs, complement[t]));
    SparseVec delta;
    for (const auto& [p, x] : h.coalgebra.comult[cs])
      for (const auto& [u, y] : proj_basis[p / d])
        for (const auto& [v, z] : proj_basis[p % d]) add_term(delta, u * q + v, x * y * z);
    out.coalgebra.comult[s] = std::move(delta);
    add_term(out.coalgebra.counit, s, h.coalgebra.counit_of(unit_vector(ctx, cs)));
    out.antipode[s] = project(h.antipode[cs]);
  }
  out.algebra.unit = project(h.algebra.unit);
  if (!verify_hopf(out).passed())
    throw InternalConsistencyError("quotient structure fails the Hopf axioms");
  return {std::move(out), std::move(proj_basis)};
}

DenseMatrix left_mult_matrix(const AlgebraData& a, const SparseVec& x) {
  DenseMatrix m(*a.ctx, a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j)
    for (const auto& [i, c] : a.multiply(x, unit_vector(*a.ctx, j))) m.at(i, j) = c;
  return m;
}

std::size_t WedderburnReport::total_dim() const {
  std::size_t s = 0;
  for (const auto& [n, count] : blocks) s += n * n * count;
  return s;
}

nlohmann::json WedderburnReport::to_json() const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [n, count] : blocks) b.push_back({{"n", n}, {"mult", count}});
  return {{"semisimple", semisimple}, {"radical_dim", radical_dim}, {"center_dim", center_dim}, {"blocks", b}};
}

namespace {

SparseVec evaluate_poly(const AlgebraData& a, const Poly& p, const SparseVec& z) {
  SparseVec acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = a.multiply(acc, z);
    add_scaled(acc, a.unit, p[i]);
  }
  return acc;
}

}  // namespace

WedderburnReport wedderburn_oracle(const AlgebraData& a) {
  check_algebra_shape(a);
  const auto& ctx = *a.ctx;
  const std::size_t d = a.dim;
  WedderburnReport rep;

  std::vector<CycScalar> tr(d, ctx.zero());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      if (auto hit = a.product(k, j).find(j); hit != a.product(k, j).end()) tr[k] += hit->second;
  SpanBasis trace_form(d);
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < d; ++j) {
      CycScalar t = ctx.zero();
      for (const auto& [k, c] : a.product(i, j)) t += c * tr[k];
      add_term(row, j, t);
    }
    trace_form.insert(row);
  }
  rep.radical_dim = d - trace_form.dim();
  rep.semisimple = rep.radical_dim == 0;
  if (!rep.semisimple) return rep;

  // Center: sum_i x_i (e_i e_j - e_j e_i) = 0 for every j.
  SpanBasis commutator_eqs(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::map<std::size_t, SparseVec> by_coord;
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [t, c] : a.product(i, j)) add_term(by_coord[t], i, c);
      for (const auto& [t, c] : a.product(j, i)) add_term(by_coord[t], i, -c);
    }
    for (const auto& [t, row] : by_coord)
      if (!row.empty()) commutator_eqs.insert(row);
  }
  const std::vector<SparseVec> center = commutator_eqs.null_space(ctx);
  rep.center_dim = center.size();

  std::vector<SparseVec> candidates = center;
  for (long power = 1; power <= 4; ++power) {
    SparseVec z;
    for (std::size_t i = 0; i < center.size(); ++i) {
      long w = 1;
      for (long e = 0; e < power; ++e) w *= static_cast<long>(i + 1);
      add_scaled(z, center[i], ctx.integer(w));
    }
    candidates.push_back(std::move(z));
  }

  for (const auto& z : candidates) {
    const Poly chi = characteristic_polynomial(left_mult_matrix(a, z));
    const auto classes = squarefree_decomposition(chi);
    std::size_t distinct = 0;
    for (const auto& [m, q] : classes) distinct += q.size() - 1;
    if (distinct != rep.center_dim) continue;

    Poly separable{ctx.one()};
    for (const auto& [m, q] : classes) separable = poly_mul(separable, q);
    SparseVec idempotent_sum;
    for (const auto& [m, q] : classes) {
      const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
      if (n * n != m)
        throw FieldNotSplitting("eigenvalue multiplicity " + std::to_string(m) + " is not a perfect square");
      rep.blocks[n] += q.size() - 1;

      // CRT idempotent: 1 modulo q, 0 modulo the other classes
      const Poly others = poly_divmod(separable, q).first;
      const auto [g, s, t] = poly_ext_gcd(others, q);
      if (g.size() != 1) throw InternalConsistencyError("multiplicity classes share a root");
      const Poly e_poly = poly_divmod(poly_mul(s, others), separable).second;
      const SparseVec e = evaluate_poly(a, e_poly, z);
      if (a.multiply(e, e) != e)
        throw InternalConsistencyError("central idempotent of a multiplicity class is not idempotent");
      if (rank_of(left_mult_matrix(a, e)) != m * (q.size() - 1))
        throw InternalConsistencyError("block ideal dimension disagrees with the eigenvalue count");
      add_scaled(idempotent_sum, e, ctx.one());
    }
    if (idempotent_sum != a.unit)
      throw InternalConsistencyError("central idempotents do not sum to 1");
    return rep;
  }
  throw InternalConsistencyError("no separating central element among the deterministic candidates");
}

namespace {

nlohmann::json sparse_to_json(const SparseVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, c] : v) out.push_back({i, scalar_to_json(c)});
  return out;
}

SparseVec sparse_from_json(const nlohmann::json& j, const FieldContext& ctx, std::size_t bound) {
  SparseVec v;
  for (const auto& e : j) {
    const std::size_t i = e.at(0).get<std::size_t>();
    if (i >= bound) throw MalformedInput("sparse vector index out of range");
    CycScalar c = scalar_from_json(e.at(1));
    if (&c.context() != &ctx) throw MalformedInput("scalar conductor differs from the structure conductor");
    add_term(v, i, c);
  }
  return v;
}

}  // namespace

nlohmann::json hopf_to_json(const HopfData& h) {
  const std::size_t d = h.dim();
  nlohmann::json mult = nlohmann::json::array(), comult = nlohmann::json::array(),
                 antipode = nlohmann::json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : h.algebra.product(i, j)) mult.push_back({i, j, k, scalar_to_json(c)});
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [p, c] : h.coalgebra.comult[i]) comult.push_back({i, p / d, p % d, scalar_to_json(c)});
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [j, c] : h.antipode[i]) antipode.push_back({i, j, scalar_to_json(c)});
  return {{"dim", d},
          {"conductor", h.ctx().conductor()},
          {"mult", std::move(mult)},
          {"unit", sparse_to_json(h.algebra.unit)},
          {"comult", std::move(comult)},
          {"counit", sparse_to_json(h.coalgebra.counit)},
          {"antipode", std::move(antipode)}};
}

HopfData hopf_from_json(const nlohmann::json& j) {
  try {
    const auto& ctx = FieldContext::get(j.at("conductor").get<unsigned>());
    const std::size_t d = j.at("dim").get<std::size_t>();
    if (d == 0) throw MalformedInput("dimension must be positive");
    HopfData h;
    h.algebra = AlgebraData(ctx, d);
    h.coalgebra = CoalgebraData(ctx, d);
    h.antipode.resize(d);
    auto read_index = [d](const nlohmann::json& e, std::size_t pos) {
      const std::size_t v = e.at(pos).get<std::size_t>();
      if (v >= d) throw MalformedInput("basis index out of range");
      return v;
    };
    auto read_scalar = [&ctx](const nlohmann::json& e) {
      CycScalar c = scalar_from_json(e);
      if (&c.context() != &ctx) throw MalformedInput("scalar conductor differs from the structure conductor");
      return c;
    };
    for (const auto& e : j.at("mult"))
      add_term(h.algebra.mult[read_index(e, 0) * d + read_index(e, 1)], read_index(e, 2), read_scalar(e.at(3)));
    for (const auto& e : j.at("comult"))
      add_term(h.coalgebra.comult[read_index(e, 0)], read_index(e, 1) * d + read_index(e, 2), read_scalar(e.at(3)));
    for (const auto& e : j.at("antipode"))
      add_term(h.antipode[read_index(e, 0)], read_index(e, 1), read_scalar(e.at(2)));
    h.algebra.unit = sparse_from_json(j.at("unit"), ctx, d);
    h.coalgebra.counit = sparse_from_json(j.at("counit"), ctx, d);
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("Hopf data JSON: ") + e.what());
  }
}

HopfData trivial_hopf(const FieldContext& ctx) {
  HopfData h;
  h.algebra = AlgebraData(ctx, 1);
  h.coalgebra = CoalgebraData(ctx, 1);
  h.algebra.mult[0] = unit_vector(ctx, 0);
  h.algebra.unit = unit_vector(ctx, 0);
  h.coalgebra.comult[0] = unit_vector(ctx, 0);
  h.coalgebra.counit = unit_vector(ctx, 0);
  h.antipode = {unit_vector(ctx, 0)};
  return h;
}

}  // namespace hopfforge
