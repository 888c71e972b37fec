#include <set>

#include "doctest.h"
#include "hopfforge/errors.hpp"
#include "hopfforge/lattice.hpp"
#include "oracles.hpp"

using namespace hopfforge;

namespace {

using PairSets = std::set<std::vector<std::size_t>>;

/// Every set of basis pairs, containing 1 x 1, whose span is a Hopf subalgebra.
PairSets brute_force_pair_sets(const BiproductInstance& inst) {
  const std::size_t d = inst.A.dim(), one = inst.index(inst.calG.identity(), inst.G.identity());
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < d; ++i)
    if (i != one) others.push_back(i);
  PairSets out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
    std::vector<std::size_t> s{one};
    for (std::size_t j = 0; j < others.size(); ++j)
      if (mask >> j & 1) s.push_back(others[j]);
    std::sort(s.begin(), s.end());
    std::vector<SparseVec> basis;
    for (std::size_t i : s) basis.push_back(unit_vector(inst.ctx(), i));
    if (spans_hopf_subalgebra(inst.A, basis)) out.insert(s);
  }
  return out;
}

PairSets pair_sets(const std::vector<SubHopfDescriptor>& subs) {
  PairSets out;
  for (const auto& d : subs) out.insert(d.pairs);
  return out;
}

std::size_t subgroup_count(const FiniteGroup& g) {
  std::size_t count = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << g.order()); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < g.order() && closed; ++a)
      for (std::size_t b = 0; b < g.order() && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) closed = mask >> g.mul(a, b) & 1;
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration matches the exhaustive pair-set search") {
  for (const char* name : {"ex3_2", "ex3_7", "ex3_3"}) {
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    CHECK(pair_sets(enumerate_hopf_subalgebras(inst)) == brute_force_pair_sets(inst));
  }
}

TEST_CASE("ex3_2 lattice") {
  const BiproductInstance inst = build_example("ex3_2");
  const auto subs = enumerate_hopf_subalgebras(inst);
  CHECK(subs.size() == 7);
  std::vector<std::size_t> dims;
  for (const auto& d : subs) dims.push_back(d.dim());
  CHECK(dims == std::vector<std::size_t>{1, 2, 2, 2, 4, 6, 12});
  std::size_t normal = 0;
  for (const auto& d : subs) normal += is_normal(inst, d, true).normal;
  CHECK(normal == 4);
}

TEST_CASE("normality criteria agree with the adjoint test under the hypothesis") {
  for (const char* name : {"trivial", "ex3_1"}) {
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    REQUIRE(trivial_action_hypothesis(inst) == (std::string(name) == "trivial"));
  }
  const nlohmann::json s3{{"kind", "perm_gens"}, {"degree", 3}, {"gens", {{1, 0, 2}, {1, 2, 0}}}};
  const nlohmann::json spec{{"calG", s3},
                            {"theta", {{"conjugation_by", {1, 0, 2}}}},
                            {"mode", "general"},
                            {"G", {{"kind", "cyclic"}, {"n", 2}}},
                            {"pi", {{"generators", {1}}, {"images", {"identity"}}}},
                            {"embed", {{"u", 1}}}};
  const BiproductInstance inst = build_from_spec(spec, "s3_z2");
  REQUIRE(trivial_action_hypothesis(inst));
  const auto subs = enumerate_hopf_subalgebras(inst);
  CHECK(pair_sets(subs) == brute_force_pair_sets(inst));
  for (const auto& d : subs) {
    const NormalityReport r = is_normal(inst, d, true);
    CHECK(r.method == "criterion");
    REQUIRE(r.brute_force.has_value());
    CHECK(*r.brute_force == r.normal);
    CHECK(r.normal == (r.left && r.right));
  }
}

TEST_CASE("identity theta recovers the subgroup lattice") {
  for (std::size_t i : {8u, 11u, 12u}) {
    const nlohmann::json g = oracle::small_group_specs()[i];
    const nlohmann::json spec{{"calG", g}, {"theta", "identity"}, {"mode", "Gtheta"}};
    const BiproductInstance inst = build_from_spec(spec, "flat");
    CHECK(enumerate_hopf_subalgebras(inst).size() == subgroup_count(parse_group_spec(g)));
  }
  CHECK(enumerate_hopf_subalgebras(build_example("trivial")).size() == 1);
}

TEST_CASE("closures and descriptors") {
  const BiproductInstance inst = build_example("ex3_2");
  const SubHopfDescriptor all = closure(inst, {{1, 0}});
  CHECK(all.dim() == 6);  // the orbit {1, 2} forces U = <u> and calG
  CHECK(all.calG_A.size() == 3);
  CHECK(all.contains(inst.index(2, inst.u())));
  const SubHopfDescriptor unit = closure(inst, {});
  CHECK(unit.dim() == 1);
  CHECK(unit.is_lower_bound_equal(inst));
  CHECK_THROWS_AS(closure(inst, {{7, 0}}), MalformedInput);
  const auto j = all.to_json(inst);
  CHECK(j.at("dim") == 6);
  CHECK(j.at("pairs").size() == 6);
}

TEST_CASE("lower normal series on the registry") {
  for (const auto& name : example_names()) {
    if (name == "a5") continue;
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    const SeriesReport s = lower_normal_series(inst);
    CHECK(s.ok);
    for (const auto& f : s.factors) {
      CHECK(f.cocommutative);
      CHECK(f.certified);
    }
    CHECK(s.dims.front() == 1);
    CHECK(s.dims.back() == inst.A.dim());
  }
}

TEST_CASE("solvability certificates") {
  const SolvabilityReport s = certify_solvable(build_example("ex3_1"));
  CHECK(s.solvable);
  CHECK(s.derived_orders == std::vector<std::size_t>{6, 3, 1});
  for (const auto& f : s.factors) CHECK(f.commutative);
  CHECK(certify_solvable(build_example("ex3_5")).solvable);
  CHECK_THROWS_AS(certify_solvable(build_example("ex3_6")), PreconditionError);
}

TEST_CASE("unique-normal preconditions") {
  auto name_of = [](const char* ex) {
    try {
      verify_unique_normal(build_example(ex));
    } catch (const PreconditionError& e) {
      return e.name();
    }
    return std::string("none");
  };
  CHECK(name_of("ex3_2") == "trivial_action");
  CHECK(name_of("trivial") == "simple_nonabelian");
}

TEST_CASE("restriction and grouplike certificates") {
  const BiproductInstance inst = build_example("ex3_2");
  std::vector<std::size_t> ones;
  for (std::size_t g = 0; g < inst.G.order(); ++g) ones.push_back(inst.index(0, g));
  const HopfData h = restrict_to_basis(inst.A, ones);
  CHECK(h.dim() == 4);
  CHECK(verify_hopf(h).passed());
  std::vector<SparseVec> cands;
  for (std::size_t i = 0; i < 4; ++i) cands.push_back(unit_vector(inst.ctx(), i));
  const auto g = grouplike_certificate(h, cands);
  REQUIRE(g.has_value());
  CHECK(group_invariants(*g) == group_invariants(inst.G));
  CHECK_FALSE(grouplike_certificate(h, {cands[0]}).has_value());
}

TEST_CASE("enumeration respects the order cap") {
  ::setenv("HOPFFORGE_ORDER_CAP", "16", 1);
  CHECK_THROWS_AS(enumerate_hopf_subalgebras(build_example("ex3_2", {5})), CapExceeded);
  ::unsetenv("HOPFFORGE_ORDER_CAP");
}

TEST_CASE("bounds L_A <= A <= U_A give commutative quotients under the hypothesis") {
  const nlohmann::json s3{{"kind", "perm_gens"}, {"degree", 3}, {"gens", {{1, 0, 2}, {1, 2, 0}}}};
  const nlohmann::json spec{{"calG", s3},
                            {"theta", {{"conjugation_by", {1, 0, 2}}}},
                            {"mode", "general"},
                            {"G", {{"kind", "cyclic"}, {"n", 2}}},
                            {"pi", {{"generators", {1}}, {"images", {"identity"}}}},
                            {"embed", {{"u", 1}}}};
  const BiproductInstance inst = build_from_spec(spec, "s3_z2");
  const auto& k = inst.ctx();
  auto pairs = [&](const Subgroup& cal, const Subgroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t b : cal)
      for (std::size_t x : g) out.push_back(inst.index(b, x));
    std::sort(out.begin(), out.end());
    return out;
  };
  // positions of inner inside outer, as unit vectors of the restricted algebra
  auto inside = [&](const std::vector<std::size_t>& inner, const std::vector<std::size_t>& outer) {
    std::vector<SparseVec> out;
    for (std::size_t p : inner) {
      const auto it = std::find(outer.begin(), outer.end(), p);
      REQUIRE(it != outer.end());
      out.push_back(unit_vector(k, static_cast<std::size_t>(it - outer.begin())));
    }
    return out;
  };
  auto commutative_quotient = [&](const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    const HopfData h = restrict_to_basis(inst.A, outer);
    return is_commutative(quotient_by_normal(h, inside(inner, outer)).algebra);
  };
  for (const auto& d : enumerate_hopf_subalgebras(inst)) {
    const auto U = pairs(d.calG_A, d.G_A), L = pairs(d.calN_A, d.N_A);
    CHECK(std::includes(U.begin(), U.end(), d.pairs.begin(), d.pairs.end()));
    CHECK(std::includes(d.pairs.begin(), d.pairs.end(), L.begin(), L.end()));
    CHECK(commutative_quotient(U, L));
    CHECK(commutative_quotient(d.pairs, L));
    CHECK(commutative_quotient(U, d.pairs));
    CHECK((d.calN_A == d.calG_A) == (d.N_A == d.G_A));
    CHECK((d.calN_A == d.calG_A) == d.is_lower_bound_equal(inst));
  }
}
