#include "doctest.h"
#include "hopfforge/errors.hpp"
#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "hopfforge/yd.hpp"
#include "oracles.hpp"

using namespace hopfforge;

namespace {

HopfData sym3(const FieldContext& k) {
  return group_algebra_hopf(parse_group_spec(oracle::small_group_specs()[11]), k);
}

}  // namespace

TEST_CASE("group algebras satisfy every Hopf axiom") {
  const auto& k = FieldContext::get(1);
  for (const auto& spec : oracle::small_group_specs()) {
    const FiniteGroup g = parse_group_spec(spec);
    const HopfData h = group_algebra_hopf(g, k);
    const AxiomReport r = verify_hopf(h);
    CHECK_MESSAGE(r.passed(), spec.dump(), " ", r.first_failure());
    CHECK(is_cocommutative(h.coalgebra));
    CHECK(is_commutative(h.algebra) == g.is_abelian());
    for (std::size_t x = 0; x < g.order(); ++x) CHECK(check_grouplike(h, unit_vector(k, x)));
  }
}

TEST_CASE("a corrupted antipode is caught") {
  const auto& k = FieldContext::get(1);
  HopfData h = group_algebra_hopf(FiniteGroup::cyclic(3), k);
  h.antipode[1] = unit_vector(k, 1);
  const AxiomReport r = verify_hopf(h);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().find("antipode") != std::string::npos);
}

TEST_CASE("Sweedler algebra: antipode of order four, not semisimple") {
  const auto& k = FieldContext::get(2);
  const HopfData h = sweedler_hopf(k);
  CHECK(verify_hopf(h).passed());
  CHECK(antipode_order(h, 16) == 4u);
  CHECK(antipode_order(h, 3) == std::nullopt);
  const WedderburnReport w = wedderburn_oracle(h.algebra);
  CHECK_FALSE(w.semisimple);
  CHECK(w.radical_dim == 2);
}

TEST_CASE("Sweedler algebra is self-dual up to structure") {
  const auto& k = FieldContext::get(2);
  const HopfData h = sweedler_hopf(k);
  const HopfData d = dual_hopf(h);
  CHECK(verify_hopf(d).passed());
  CHECK(structurally_equal(dual_hopf(d), h));
  CHECK(antipode_order(d, 16) == 4u);
}

TEST_CASE("Wedderburn oracle on k[S3] and its dual") {
  const auto& k = FieldContext::get(3);
  const HopfData h = sym3(k);
  const WedderburnReport w = wedderburn_oracle(h.algebra);
  CHECK(w.semisimple);
  CHECK(w.center_dim == 3);
  CHECK(w.blocks == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
  const WedderburnReport d = wedderburn_oracle(dual_hopf(h).algebra);
  CHECK(d.blocks == std::map<std::size_t, std::size_t>{{1, 6}});
}

TEST_CASE("tensor products multiply dimensions and keep the axioms") {
  const auto& k = FieldContext::get(2);
  const HopfData t = tensor_hopf(group_algebra_hopf(FiniteGroup::cyclic(2), k), sweedler_hopf(k));
  CHECK(t.dim() == 8);
  CHECK(verify_hopf(t).passed());
  CHECK(antipode_order(t, 16) == 4u);
}

TEST_CASE("quotient of k[Z6] by k[Z3] is k[Z2]") {
  const auto& k = FieldContext::get(1);
  const FiniteGroup g = FiniteGroup::cyclic(6);
  const HopfData h = group_algebra_hopf(g, k);
  const std::vector<SparseVec> sub{unit_vector(k, 0), unit_vector(k, 2), unit_vector(k, 4)};
  REQUIRE(spans_hopf_subalgebra(h, sub));
  const HopfQuotient q = quotient_with_projection(h, sub);
  CHECK(q.Q.dim() == 2);
  CHECK(verify_hopf(q.Q).passed());
  CHECK(q.projection.size() == 6);
  CHECK(q.projection[0] == q.projection[2]);
  CHECK(q.projection[1] == q.projection[3]);
  CHECK(q.projection[0] != q.projection[1]);
}

TEST_CASE("non-subalgebra spans are rejected") {
  const auto& k = FieldContext::get(1);
  const HopfData h = group_algebra_hopf(FiniteGroup::cyclic(4), k);
  CHECK_FALSE(spans_hopf_subalgebra(h, {unit_vector(k, 0), unit_vector(k, 1)}));
  SparseVec half;
  add_term(half, 0, k.one());
  add_term(half, 2, k.one());
  CHECK_FALSE(spans_hopf_subalgebra(h, {half}));
}

TEST_CASE("hopf json round trip") {
  const auto& k = FieldContext::get(4);
  const HopfData h = sweedler_hopf(k);
  CHECK(structurally_equal(hopf_from_json(hopf_to_json(h)), h));
}

TEST_CASE("trivial Hopf algebra") {
  const HopfData h = trivial_hopf(FieldContext::get(1));
  CHECK(h.dim() == 1);
  CHECK(verify_hopf(h).passed());
  CHECK(antipode_order(h, 2) == 1u);
}
