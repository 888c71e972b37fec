#include "doctest.h"
#include "hopfforge/decompose.hpp"
#include "hopfforge/errors.hpp"
#include "oracles.hpp"

using namespace hopfforge;

namespace {

using Blocks = std::map<std::size_t, std::size_t>;

std::map<std::size_t, std::size_t> coalgebra_blocks(const CoalgebraDecomposition& d) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [r, m] : d.multiplicities) out[r] = m;
  return out;
}

/// Two-sided ideal test done directly on basis products.
bool is_two_sided_ideal(const AlgebraData& a, const std::vector<SparseVec>& basis) {
  const SpanBasis span = span_of(a.dim, basis);
  for (const auto& v : basis)
    for (std::size_t i = 0; i < a.dim; ++i) {
      const SparseVec e = unit_vector(*a.ctx, i);
      if (!span.contains(a.multiply(e, v)) || !span.contains(a.multiply(v, e))) return false;
    }
  return true;
}

SmashProduct dim20() { return smash_from_instance(build_example("ex3_2", {5})); }

}  // namespace

TEST_CASE("coalgebra blocks agree with the dual algebra") {
  for (const auto& name : example_names()) {
    if (name == "a5") continue;  // covered by the acceptance run
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    const CoalgebraDecomposition d = coalgebra_decomposition(inst);
    CHECK(coalgebra_blocks(d) == oracle::coalgebra_blocks_via_dual(inst.A));
    std::size_t total = 0;
    for (const auto& [r, m] : d.multiplicities) total += m * r * r;
    CHECK(total == inst.A.dim());
  }
}

TEST_CASE("ex3_2 and ex3_5 coalgebra multiplicities") {
  CHECK(coalgebra_blocks(coalgebra_decomposition(build_example("ex3_2"))) == Blocks{{1, 4}, {2, 2}});
  CHECK(coalgebra_blocks(coalgebra_decomposition(build_example("ex3_5"))) == Blocks{{1, 9}, {3, 3}});
}

TEST_CASE("comatrix identities recomputed from the coproduct") {
  const BiproductInstance inst = build_example("ex3_5");
  const auto& k = inst.ctx();
  const std::size_t d = inst.A.dim();
  for (const auto& b : coalgebra_decomposition(inst).blocks) {
    for (unsigned i = 0; i < b.r; ++i)
      for (unsigned j = 0; j < b.r; ++j) {
        SparseVec expect;
        for (unsigned l = 0; l < b.r; ++l)
          for (const auto& [p, x] : b.at(i, l))
            for (const auto& [q, y] : b.at(l, j)) add_term(expect, p * d + q, x * y);
        CHECK(inst.A.coalgebra.coproduct(b.at(i, j)) == expect);
        CHECK(inst.A.coalgebra.counit_of(b.at(i, j)) == (i == j ? k.one() : k.zero()));
      }
  }
}

TEST_CASE("grouplikes agree with the basis search") {
  for (const char* name : {"ex3_2", "ex3_5", "ex3_5_z9", "ex3_6", "ex3_7"}) {
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    const GrouplikeData g = grouplikes(inst);
    const auto by_hand = oracle::basis_grouplikes(inst.A);
    CHECK(g.group.order() == by_hand.elements.size());
    CHECK(group_invariants(g.group) == group_invariants(by_hand.group));
    for (const auto& v : g.vectors) CHECK(check_grouplike(inst.A, v));
  }
}

TEST_CASE("algebra decompositions agree with the Wedderburn oracle") {
  CHECK(algebra_decomposition(smash_from_instance(build_example("ex3_2"))).blocks == Blocks{{1, 4}, {2, 2}});
  CHECK(algebra_decomposition(dim20()).blocks == Blocks{{1, 4}, {2, 4}});
  CHECK(algebra_decomposition(smash_from_instance(build_example("ex3_5"))).blocks == Blocks{{1, 9}, {3, 3}});
  for (const char* name : {"ex3_3", "ex3_4", "ex3_5_z9", "ex3_7"}) {
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    CHECK(algebra_decomposition(smash_from_instance(inst), false).blocks ==
          wedderburn_oracle(inst.A.algebra).blocks);
  }
}

TEST_CASE("the smash route over k[calG] (x) k[U] agrees") {
  const AlgebraDecomposition a = agtheta_algebra_route(build_example("ex3_2"));
  CHECK(a.blocks == Blocks{{1, 4}, {2, 2}});
  CHECK(agtheta_algebra_route(build_example("ex3_2", {5})).blocks == Blocks{{1, 4}, {2, 4}});
  CHECK(agtheta_algebra_route(build_example("ex3_5")).blocks == Blocks{{1, 9}, {3, 3}});
  CHECK_THROWS_AS(agtheta_algebra_route(build_example("ex3_7")), UnsupportedRoute);
}

TEST_CASE("algebra routes by instance") {
  CHECK(algebra_decomposition_of(build_example("ex3_2"), true).route == "smash");
  CHECK(algebra_decomposition_of(build_example("ex3_1"), true).route == "oracle");
  CHECK(algebra_decomposition_of(build_example("ex3_6"), true).route == "oracle");
  CHECK_THROWS_AS(smash_from_instance(build_example("ex3_6")), UnsupportedRoute);
}

TEST_CASE("identity theta gives an all-ones report") {
  const nlohmann::json spec{{"calG", {{"kind", "cyclic"}, {"n", 3}}}, {"theta", "identity"}, {"mode", "Gtheta"}};
  const nlohmann::json r = decomposition_report(build_from_spec(spec, "flat"), true);
  CHECK(r.at("coalgebra") == nlohmann::json::array({{{"r", 1}, {"mult", 3}}}));
  CHECK(r.at("algebra") == nlohmann::json::array({{{"n", 1}, {"mult", 3}}}));
}

TEST_CASE("idempotent bases of the acting groups") {
  const SmashProduct s = dim20();
  CHECK(verify_idempotent_basis(s.G, s.e, s.ctx()).passed());
  CHECK(verify_idempotent_sum_identity(s).passed());
}

TEST_CASE("stabilizers in the dim-20 instance") {
  const SmashProduct s = dim20();
  REQUIRE(s.is_power_of_k());
  for (std::size_t f = 0; f < s.F.size(); ++f) {
    const StabilizerData st = stabilizer_data(s, f);
    std::vector<std::size_t> fixing;
    for (std::size_t x = 0; x < s.order(); ++x)
      if (s.act(s.group_vector(x), s.F[f]) == s.F[f]) fixing.push_back(x);
    CHECK(st.N == fixing);
    // orbit length times stabilizer order is |G|, and |I_f| is the orbit length
    CHECK(st.I.size() * st.N.size() == s.order());
    // the trivial character is fixed by everything; I_f is then {0}
    if (s.F[f] == s.B.unit || st.N.size() == s.order()) CHECK(st.I == std::vector<std::size_t>{0});
  }
}

TEST_CASE("matrix units of every minimal ideal") {
  for (auto s : {smash_from_instance(build_example("ex3_2")), dim20()}) {
    for (std::size_t f = 0; f < s.F.size(); ++f)
      for (std::size_t m = 0; m < s.order(); ++m) {
        const MinimalIdealBlock b = minimal_ideal(s, f, m);
        CHECK(b.stab.I.size() == b.r);
        CHECK(b.span.dim() == b.r * b.r);
        for (unsigned u = 0; u < b.r; ++u)
          for (unsigned v = 0; v < b.r; ++v)
            for (unsigned x = 0; x < b.r; ++x)
              for (unsigned y = 0; y < b.r; ++y)
                CHECK(s.algebra.multiply(b.at(u, v), b.at(x, y)) == (v == x ? b.at(u, y) : SparseVec{}));
        CHECK(is_two_sided_ideal(s.algebra, b.E));
        CHECK(certify_minimal(s, b));
      }
  }
}

TEST_CASE("minimal ideal equality sweep") {
  const MinimalIdealSweep sw = minimal_ideal_sweep(smash_from_instance(build_example("ex3_2")));
  CHECK(sw.blocks == 12);
  CHECK(sw.mismatches == 0);
  CHECK(sw.distinct == 6);
  const MinimalIdealSweep s20 = minimal_ideal_sweep(dim20());
  CHECK(s20.mismatches == 0);
  CHECK(s20.distinct == 4 + 4);
}

TEST_CASE("ideal and family round trip on minimal ideals") {
  for (auto s : {smash_from_instance(build_example("ex3_2")), dim20()}) {
    for (std::size_t f = 0; f < s.F.size(); ++f)
      for (std::size_t m = 0; m < s.order(); ++m) {
        const MinimalIdealBlock b = minimal_ideal(s, f, m);
        const IdealFamily fam = ideal_family_from_ideal(s, b.E);
        CHECK(span_of(s.algebra.dim, ideal_from_family(s, fam)).same_span(b.span));
      }
  }
}

TEST_CASE("perturbed families are rejected exactly when they fail to give an ideal") {
  const SmashProduct s = dim20();
  const auto& k = s.ctx();
  std::size_t rejected = 0, tried = 0;
  for (std::size_t f = 0; f < s.F.size(); ++f) {
    const MinimalIdealBlock b = minimal_ideal(s, f, 0);
    const IdealFamily fam = ideal_family_from_ideal(s, b.E);
    for (std::size_t x = 0; x < s.order(); ++x)
      for (std::size_t j = 0; j < s.dim_B(); ++j) {
        const SparseVec extra = unit_vector(k, j);
        if (span_of(s.dim_B(), fam[x]).contains(extra)) continue;
        IdealFamily bad = fam;
        bad[x].push_back(extra);
        std::vector<SparseVec> sum;
        for (std::size_t y = 0; y < s.order(); ++y)
          for (const auto& v : bad[y]) sum.push_back(s.pure(v, s.e.vectors[y]));
        ++tried;
        if (is_two_sided_ideal(s.algebra, sum)) {
          CHECK_NOTHROW(ideal_from_family(s, bad));
        } else {
          ++rejected;
          CHECK_THROWS_AS(ideal_from_family(s, bad), PreconditionError);
        }
      }
  }
  CHECK(tried > 0);
  CHECK(rejected > 0);
  CHECK_THROWS_AS(ideal_family_from_ideal(s, {unit_vector(k, 1)}), PreconditionError);
}

TEST_CASE("smash preconditions") {
  const auto& k = FieldContext::get(2);
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const AlgebraData b = oracle::functions_algebra(k, 2);
  // swap of the two idempotents is a module-algebra action
  std::vector<SparseVec> swap{unit_vector(k, 0), unit_vector(k, 1), unit_vector(k, 1), unit_vector(k, 0)};
  const SmashProduct s = make_smash(z2, b, swap, {unit_vector(k, 0), unit_vector(k, 1)});
  CHECK(algebra_decomposition(s).blocks == Blocks{{2, 1}});
  // e_0 -> 2 e_0 is not multiplicative
  std::vector<SparseVec> bad{unit_vector(k, 0), unit_vector(k, 1), scaled(unit_vector(k, 0), k.integer(2)),
                             unit_vector(k, 1)};
  CHECK_THROWS_AS(make_smash(z2, b, bad), PreconditionError);
  const FiniteGroup s3 = parse_group_spec(oracle::small_group_specs()[11]);
  CHECK_THROWS_AS(make_smash(s3, b, {}), UnsupportedRoute);
}
