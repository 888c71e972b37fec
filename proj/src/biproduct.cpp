#include "hopfforge/biproduct.hpp"

#include <algorithm>

#include "hopfforge/errors.hpp"

namespace hopfforge {

AlgebraData smash_product_algebra(const HopfData& H, const AlgebraData& B, const std::vector<SparseVec>& action) {
  const auto& ctx = H.ctx();
  const std::size_t dh = H.dim(), db = B.dim, da = dh * db;
  if (action.size() != dh * db) throw MalformedInput("action tensor has the wrong size");
  AlgebraData out(ctx, da);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t h = 0; h < dh; ++h)
      for (std::size_t b2 = 0; b2 < db; ++b2)
        for (std::size_t h2 = 0; h2 < dh; ++h2) {
          SparseVec prod;
          for (const auto& [p, c] : H.coalgebra.comult[h]) {
            const SparseVec& moved = action[(p / dh) * db + b2];
            if (moved.empty()) continue;
            const SparseVec left = B.multiply(unit_vector(ctx, b), moved);
            const SparseVec& right = H.algebra.product(p % dh, h2);
            for (const auto& [i, x] : left)
              for (const auto& [j, y] : right) add_term(prod, i * dh + j, c * x * y);
          }
          out.mult[(b * dh + h) * da + b2 * dh + h2] = std::move(prod);
        }
  for (const auto& [i, x] : B.unit)
    for (const auto& [j, y] : H.algebra.unit) add_term(out.unit, i * dh + j, x * y);
  return out;
}

CoalgebraData smash_coproduct_coalgebra(const HopfData& H, const CoalgebraData& C,
                                        const std::vector<SparseVec>& coaction) {
  const auto& ctx = H.ctx();
  const std::size_t dh = H.dim(), dc = C.dim, da = dh * dc;
  if (coaction.size() != dc) throw MalformedInput("coaction tensor has the wrong size");
  CoalgebraData out(ctx, da);
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t h = 0; h < dh; ++h) {
      SparseVec delta;
      for (const auto& [p, a] : C.comult[c]) {
        const std::size_t c1 = p / dc, c2 = p % dc;
        for (const auto& [q, b] : coaction[c2]) {
          const std::size_t hk = q / dc, c20 = q % dc;
          for (const auto& [s, x] : H.coalgebra.comult[h])
            for (const auto& [k, y] : H.algebra.product(hk, s / dh))
              add_term(delta, (c1 * dh + k) * da + c20 * dh + s % dh, a * b * x * y);
        }
      }
      out.comult[c * dh + h] = std::move(delta);
      const CycScalar e = C.counit_of(unit_vector(ctx, c)) * H.coalgebra.counit_of(unit_vector(ctx, h));
      if (!e.is_zero()) out.counit.emplace(c * dh + h, e);
    }
  return out;
}

HopfData biproduct_hopf(const YDStructure& s) {
  if (s.B_antipode.size() != s.dim_B()) throw MalformedInput("biproduct needs the antipode of B");
  const HopfData& H = s.H;
  const std::size_t dh = H.dim(), db = s.dim_B(), da = dh * db;
  HopfData A;
  A.algebra = smash_product_algebra(H, s.B_alg, s.action);
  A.coalgebra = smash_coproduct_coalgebra(H, s.B_coalg, s.coaction);
  A.antipode.resize(da);
  for (std::size_t c = 0; c < db; ++c)
    for (std::size_t h = 0; h < dh; ++h) {
      SparseVec acc;
      for (const auto& [q, x] : s.coaction[c]) {
        SparseVec left;  // 1 x S_H(c(-1) h)
        for (const auto& [k, y] : H.apply_antipode(H.algebra.product(q / db, h)))
          for (const auto& [i, z] : s.B_alg.unit) add_term(left, i * dh + k, y * z);
        SparseVec right;  // S_B(c(0)) x 1
        for (const auto& [i, y] : s.B_antipode[q % db])
          for (const auto& [k, z] : H.algebra.unit) add_term(right, i * dh + k, y * z);
        add_scaled(acc, A.algebra.multiply(left, right), x);
      }
      A.antipode[c * dh + h] = std::move(acc);
    }
  return A;
}

Subgroup BiproductInstance::U_r(unsigned r) const {
  if (r == 0 || L % r != 0) throw MalformedInput("r does not divide |U|");
  Subgroup out;
  for (unsigned j = 0; j < L; j += L / r) out.push_back(U_embed[j]);
  std::sort(out.begin(), out.end());
  return out;
}

bool BiproductInstance::trivial_action() const {
  for (const auto& p : pi)
    if (!p.is_identity()) return false;
  return true;
}

nlohmann::json BiproductInstance::report() const {
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& o : orbit_table) lengths.push_back(o.size());
  nlohmann::json grading = nlohmann::json::array();
  for (const auto& e : eigenbasis)
    grading.push_back({{"orbit", e.orbit}, {"ell", e.ell}, {"degree", e.degree}});
  return {{"name", name},
          {"dim", A.dim()},
          {"conductor", ctx().conductor()},
          {"calG_order", calG.order()},
          {"G_order", G.order()},
          {"U_order", L},
          {"orbit_lengths", lengths},
          {"grading", grading}};
}

namespace {

bool same_perm(const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.perm == b.perm; }

}  // namespace

BiproductInstance build_A_general(const FiniteGroup& calG, const GroupAutomorphism& theta, const FiniteGroup& G,
                                  const std::vector<GroupAutomorphism>& pi, std::size_t u,
                                  const FieldContext& ctx) {
  const std::size_t nb = calG.order(), ng = G.order();
  const GroupAutomorphism th = GroupAutomorphism::checked(calG, theta.perm);
  if (pi.size() != ng) throw PreconditionError("pi_homomorphism", "pi needs one automorphism per element of G");
  for (std::size_t g = 0; g < ng; ++g) GroupAutomorphism::checked(calG, pi[g].perm);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      if (!same_perm(pi[G.mul(g, h)], pi[h].compose(pi[g])))
        throw PreconditionError("pi_homomorphism", "pi(gh) != pi(g)pi(h) at g=" + std::to_string(g) +
                                                       ", h=" + std::to_string(h));
  for (std::size_t g = 0; g < ng; ++g)
    if (!same_perm(th.compose(pi[g]), pi[g].compose(th)))
      throw PreconditionError("pi_commutes_with_theta",
                              "pi(g) theta != theta pi(g) for g=" + std::to_string(g));

  const unsigned L = static_cast<unsigned>(th.order());
  ctx.require_roots_of_order(L);
  if (u >= ng || G.element_order(u) != L)
    throw PreconditionError("u_order", "the image of zeta_L must have order L = ord(theta) = " + std::to_string(L));
  for (std::size_t g = 0; g < ng; ++g)
    if (G.mul(u, g) != G.mul(g, u))
      throw PreconditionError("u_central_in_kernel", "U is not central in G");
  if (!pi[u].is_identity()) throw PreconditionError("u_central_in_kernel", "U is not contained in Ker(pi)");

  BiproductInstance inst;
  inst.calG = calG;
  inst.theta = th;
  inst.G = G;
  inst.pi = pi;
  inst.L = L;
  for (unsigned j = 0; j < L; ++j) inst.U_embed.push_back(G.power(u, j));
  inst.orbit_table = orbits(calG, th);

  const HopfData H = group_algebra_hopf(G, ctx);
  const HopfData B = group_algebra_hopf(calG, ctx);
  YDStructure s;
  s.H = H;
  s.B_alg = B.algebra;
  s.B_coalg = B.coalgebra;
  s.B_antipode = B.antipode;
  s.action.resize(ng * nb);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t b = 0; b < nb; ++b) s.action[g * nb + b] = unit_vector(ctx, pi[g](b));
  s.coaction.resize(nb);

  for (std::size_t o = 0; o < inst.orbit_table.size(); ++o) {
    const auto& orb = inst.orbit_table[o];
    const unsigned r = static_cast<unsigned>(orb.size());
    const CycScalar inv_r = ctx.rational(1, r);
    for (unsigned ell = 0; ell < r; ++ell) {
      EigenVector ev;
      ev.orbit = o;
      ev.ell = ell;
      ev.degree = ell * (L / r);
      for (unsigned i = 0; i < r; ++i)
        add_term(ev.coords, orb[i], ctx.root_of_unity(r, -static_cast<long>(ell * i)) * inv_r);
      inst.eigenbasis.push_back(std::move(ev));
    }
    // rho(theta^i b) = sum_{ell, j} (lambda^{ell(i-j)} / r) u^{ell L / r} (x) theta^j b
    for (unsigned i = 0; i < r; ++i)
      for (unsigned ell = 0; ell < r; ++ell) {
        const std::size_t g = inst.U_embed[ell * (L / r)];
        for (unsigned j = 0; j < r; ++j)
          add_term(s.coaction[orb[i]], g * nb + orb[j],
                   ctx.root_of_unity(r, static_cast<long>(ell) * (static_cast<long>(i) - j)) * inv_r);
      }
  }

  const AxiomReport yd_rep = verify_braided_bialgebra(s);
  if (!yd_rep.passed())
    throw InternalConsistencyError("k[calG] fails the braided Hopf axioms at " + yd_rep.first_failure());
  inst.A = biproduct_hopf(s);
  inst.yd = std::move(s);
  const AxiomReport rep = verify_hopf(inst.A);
  if (!rep.passed()) throw InternalConsistencyError("biproduct fails the Hopf axioms at " + rep.first_failure());
  const auto ord = antipode_order(inst.A, 2);
  if (!ord) throw InternalConsistencyError("biproduct antipode is not involutory");
  return inst;
}

BiproductInstance build_A_Gtheta(const FiniteGroup& calG, const GroupAutomorphism& theta, const FieldContext& ctx) {
  const unsigned L = static_cast<unsigned>(theta.order());
  FiniteGroup G = FiniteGroup::direct_product(FiniteGroup::cyclic(L), FiniteGroup::cyclic(L));
  G.set_name("Z" + std::to_string(L) + "xZ" + std::to_string(L));
  std::vector<GroupAutomorphism> pi;
  pi.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) pi.push_back(theta.power(static_cast<long>(g % L)));
  return build_A_general(calG, theta, G, pi, G.element_of({1, 0}), ctx);
}

std::vector<GroupAutomorphism> extend_action(const FiniteGroup& G, const FiniteGroup& calG,
                                             const std::vector<std::size_t>& generators,
                                             const std::vector<GroupAutomorphism>& images) {
  if (generators.size() != images.size())
    throw PreconditionError("pi_homomorphism", "one image per generator is required");
  std::vector<GroupAutomorphism> pi(G.order());
  std::vector<bool> set(G.order(), false);
  pi[G.identity()] = GroupAutomorphism::identity(calG);
  set[G.identity()] = true;
  std::vector<std::size_t> queue{G.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t x = queue[q];
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const std::size_t y = G.mul(x, generators[i]);
      GroupAutomorphism cand = images[i].compose(pi[x]);
      if (!set[y]) {
        pi[y] = std::move(cand);
        set[y] = true;
        queue.push_back(y);
      } else if (!same_perm(pi[y], cand)) {
        throw PreconditionError("pi_homomorphism", "generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != G.order()) throw PreconditionError("pi_homomorphism", "the listed elements do not generate G");
  return pi;
}

unsigned auto_conductor(const FiniteGroup& calG, const GroupAutomorphism& theta, const FiniteGroup& G) {
  std::uint64_t n = lcm_u64(theta.order(), G.exponent());
  if (calG.is_abelian()) n = lcm_u64(n, calG.exponent());
  return static_cast<unsigned>(n);
}

namespace {

std::size_t resolve_element(const FiniteGroup& g, const nlohmann::json& ref) {
  if (ref.is_number_unsigned() || ref.is_number_integer()) {
    const auto v = ref.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw MalformedInput("element index out of range");
    return static_cast<std::size_t>(v);
  }
  if (ref.is_array()) {
    const auto perm = ref.get<std::vector<unsigned>>();
    const auto& perms = g.permutations();
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == perm) return i;
    throw MalformedInput("permutation is not an element of the group");
  }
  throw MalformedInput("element reference must be an index or a permutation");
}

nlohmann::json klein() {
  return {{"kind", "product"}, {"factors", {{{"kind", "cyclic"}, {"n", 2}}, {{"kind", "cyclic"}, {"n", 2}}}}};
}

nlohmann::json cyclic_spec(unsigned n) { return {{"kind", "cyclic"}, {"n", n}}; }

}  // namespace

GroupAutomorphism parse_automorphism(const FiniteGroup& g, const nlohmann::json& spec) {
  try {
    if (spec.is_string()) {
      const auto s = spec.get<std::string>();
      if (s == "identity") return GroupAutomorphism::identity(g);
      if (s == "inversion") return GroupAutomorphism::inversion(g);
      if (s == "swap") {
        std::size_t k = 1;
        while (k * k < g.order()) ++k;
        if (k * k != g.order()) throw MalformedInput("swap needs a product of two equal factors");
        std::vector<std::size_t> p(g.order());
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) p[a * k + b] = b * k + a;
        return GroupAutomorphism::checked(g, std::move(p));
      }
      throw MalformedInput("unknown automorphism '" + s + "'");
    }
    if (spec.is_object() && spec.contains("conjugation_by"))
      return GroupAutomorphism::conjugation(g, resolve_element(g, spec.at("conjugation_by")));
    if (spec.is_array()) return GroupAutomorphism::checked(g, spec.get<std::vector<std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("automorphism spec: ") + e.what());
  }
  throw MalformedInput("unrecognized automorphism spec");
}

std::vector<std::string> example_names() {
  return {"trivial", "ex3_1", "ex3_2", "ex3_3", "ex3_4", "ex3_5", "ex3_5_z9", "ex3_6", "ex3_7", "a5"};
}

nlohmann::json example_spec(const std::string& name, const ExampleParams& p) {
  nlohmann::json s;
  if (name == "trivial") {
    s = {{"calG", cyclic_spec(1)}, {"theta", "identity"}, {"mode", "Gtheta"}};
  } else if (name == "ex3_1") {
    s = {{"calG", {{"kind", "perm_gens"}, {"degree", 3}, {"gens", {{1, 0, 2}, {1, 2, 0}}}}},
         {"theta", {{"conjugation_by", {1, 0, 2}}}},
         {"mode", "Gtheta"}};
  } else if (name == "ex3_2") {
    const unsigned n = p.n ? p.n : 3;
    if (n < 3 || n % 2 == 0) throw PreconditionError("example_parameter", "ex3_2 needs odd n >= 3");
    s = {{"calG", cyclic_spec(n)}, {"theta", "inversion"}, {"mode", "Gtheta"}};
  } else if (name == "ex3_3") {
    const unsigned n = p.n ? p.n : 4;
    if (n < 4 || n % 2 != 0) throw PreconditionError("example_parameter", "ex3_3 needs even n >= 4");
    s = {{"calG", cyclic_spec(n)}, {"theta", "inversion"}, {"mode", "Gtheta"}};
  } else if (name == "ex3_4") {
    const unsigned n = p.n ? p.n : 2;
    if (n < 2) throw PreconditionError("example_parameter", "ex3_4 needs n >= 2");
    s = {{"calG", {{"kind", "product"}, {"factors", {cyclic_spec(n), cyclic_spec(n)}}}},
         {"theta", "swap"},
         {"mode", "Gtheta"}};
  } else if (name == "ex3_5") {
    s = {{"calG", klein()}, {"theta", {0, 2, 3, 1}}, {"mode", "Gtheta"}};
  } else if (name == "ex3_5_z9") {
    s = {{"calG", klein()},
         {"theta", {0, 2, 3, 1}},
         {"mode", "general"},
         {"G", cyclic_spec(9)},
         {"pi", {{"generators", {1}}, {"images", nlohmann::json::array({nlohmann::json{0, 2, 3, 1}})}}},
         {"embed", {{"u", 3}}}};
  } else if (name == "ex3_6") {
    // D_4 = <r, s>, N = <r> = Ker(pi), U = <r^2>
    s = {{"calG", klein()},
         {"theta", "swap"},
         {"mode", "general"},
         {"G", {{"kind", "perm_gens"}, {"degree", 4}, {"gens", {{1, 2, 3, 0}, {2, 1, 0, 3}}}}},
         {"pi", {{"generators", {{1, 2, 3, 0}, {2, 1, 0, 3}}}, {"images", {"identity", "swap"}}}},
         {"embed", {{"u", {2, 3, 0, 1}}}}};
  } else if (name == "ex3_7") {
    const unsigned m = p.m ? p.m : 3;
    if (m < 3) throw PreconditionError("example_parameter", "ex3_7 needs m >= 3 so that inversion is not trivial");
    s = {{"calG", cyclic_spec(m)},
         {"theta", "inversion"},
         {"mode", "general"},
         {"G", cyclic_spec(4)},
         {"pi", {{"generators", {1}}, {"images", {"inversion"}}}},
         {"embed", {{"u", 2}}}};
  } else if (name == "a5") {
    s = {{"calG", {{"kind", "perm_gens"}, {"degree", 5}, {"gens", {{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}}}}},
         {"theta", {{"conjugation_by", {1, 0, 3, 2, 4}}}},
         {"mode", "general"},
         {"G", cyclic_spec(2)},
         {"pi", {{"generators", {1}}, {"images", {"identity"}}}},
         {"embed", {{"u", 1}}}};
  } else {
    throw PreconditionError("example_name", "unknown example '" + name + "'");
  }
  if (p.conductor) s["conductor"] = p.conductor;
  return s;
}

BiproductInstance build_from_spec(const nlohmann::json& spec, const std::string& name) {
  try {
    const FiniteGroup calG = parse_group_spec(spec.at("calG"));
    const GroupAutomorphism theta = parse_automorphism(calG, spec.at("theta"));
    const std::string mode = spec.value("mode", "Gtheta");
    BiproductInstance inst;
    if (mode == "Gtheta") {
      const unsigned L = static_cast<unsigned>(theta.order());
      const FiniteGroup G = FiniteGroup::direct_product(FiniteGroup::cyclic(L), FiniteGroup::cyclic(L));
      const unsigned n = spec.contains("conductor") ? spec.at("conductor").get<unsigned>()
                                                    : auto_conductor(calG, theta, G);
      inst = build_A_Gtheta(calG, theta, FieldContext::get(n));
    } else if (mode == "general") {
      const FiniteGroup G = parse_group_spec(spec.at("G"));
      const auto& pj = spec.at("pi");
      std::vector<std::size_t> gens;
      std::vector<GroupAutomorphism> images;
      for (const auto& g : pj.at("generators")) gens.push_back(resolve_element(G, g));
      for (const auto& a : pj.at("images")) images.push_back(parse_automorphism(calG, a));
      const auto pi = extend_action(G, calG, gens, images);
      const std::size_t u = resolve_element(G, spec.at("embed").at("u"));
      const unsigned n = spec.contains("conductor") ? spec.at("conductor").get<unsigned>()
                                                    : auto_conductor(calG, theta, G);
      inst = build_A_general(calG, theta, G, pi, u, FieldContext::get(n));
    } else {
      throw MalformedInput("unknown construction mode '" + mode + "'");
    }
    inst.name = name;
    inst.spec = spec;
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("construction spec: ") + e.what());
  }
}

BiproductInstance build_example(const std::string& name, const ExampleParams& p) {
  return build_from_spec(example_spec(name, p), name);
}

}  // namespace hopfforge
