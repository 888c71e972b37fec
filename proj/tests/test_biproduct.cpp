#include <fstream>

#include "doctest.h"
#include "hopfforge/biproduct.hpp"
#include "hopfforge/errors.hpp"
#include "oracles.hpp"

using namespace hopfforge;

namespace {

nlohmann::json v4_invariants(std::vector<std::size_t> inv) { return nlohmann::json(inv); }

nlohmann::json invariants_of(const BiproductInstance& inst) {
  return group_invariants(oracle::basis_grouplikes(inst.A).group).at("invariants");
}

}  // namespace

TEST_CASE("registry dimensions") {
  const std::map<std::string, std::size_t> dims{{"trivial", 1}, {"ex3_1", 24}, {"ex3_2", 12}, {"ex3_3", 16},
                                                {"ex3_4", 16},  {"ex3_5", 36}, {"ex3_5_z9", 36}, {"ex3_6", 32},
                                                {"ex3_7", 12},  {"a5", 120}};
  for (const auto& name : example_names()) {
    CAPTURE(name);
    REQUIRE(dims.count(name));
    const BiproductInstance inst = build_example(name);
    CHECK(inst.A.dim() == dims.at(name));
    CHECK(inst.A.dim() == inst.calG.order() * inst.G.order());
  }
}

TEST_CASE("ex3_2 has dimension 4n with Klein four grouplikes") {
  for (unsigned n : {3u, 5u, 7u}) {
    const BiproductInstance inst = build_example("ex3_2", {n});
    CHECK(inst.A.dim() == 4 * n);
    CHECK(verify_hopf(inst.A).passed());
    CHECK(invariants_of(inst) == v4_invariants({2, 2}));
  }
  CHECK_THROWS_AS(build_example("ex3_2", {4}), PreconditionError);
}

TEST_CASE("ex3_7 has cyclic grouplikes of order four") {
  const BiproductInstance inst = build_example("ex3_7");
  CHECK(inst.A.dim() == 12);
  CHECK(verify_hopf(inst.A).passed());
  CHECK(invariants_of(inst) == v4_invariants({4}));
  CHECK(invariants_of(inst) != invariants_of(build_example("ex3_2")));
}

TEST_CASE("ex3_5 and the cyclic-nine variant") {
  const BiproductInstance a = build_example("ex3_5");
  CHECK(a.A.dim() == 36);
  CHECK(verify_hopf(a.A).passed());
  CHECK(invariants_of(a) == v4_invariants({3, 3}));
  const BiproductInstance b = build_example("ex3_5_z9");
  CHECK(b.A.dim() == 36);
  CHECK(verify_hopf(b.A).passed());
  CHECK(invariants_of(b) == v4_invariants({9}));
}

TEST_CASE("ex3_3 and ex3_4 have elementary abelian grouplikes of order eight") {
  for (const char* name : {"ex3_3", "ex3_4"}) {
    const BiproductInstance inst = build_example(name);
    CHECK(inst.A.dim() == 16);
    CHECK(verify_hopf(inst.A).passed());
    CHECK(invariants_of(inst) == v4_invariants({2, 2, 2}));
  }
  // Z_n x Z_2 x Z_2 for the swap on Z_n x Z_n
  CHECK(invariants_of(build_example("ex3_4", {3})) == v4_invariants({2, 2, 3}));
}

TEST_CASE("antipodes are involutive and the examples are not trivial") {
  for (const char* name : {"ex3_1", "ex3_2", "ex3_6", "ex3_7"}) {
    CAPTURE(name);
    const BiproductInstance inst = build_example(name);
    CHECK(antipode_order(inst.A, 4) == 2u);
    CHECK_FALSE(is_commutative(inst.A.algebra));
    CHECK_FALSE(is_cocommutative(inst.A.coalgebra));
  }
}

TEST_CASE("identity theta gives the group algebra k[calG x G]") {
  const nlohmann::json spec{{"calG", {{"kind", "cyclic"}, {"n", 3}}}, {"theta", "identity"}, {"mode", "Gtheta"}};
  const BiproductInstance inst = build_from_spec(spec);
  CHECK(inst.A.dim() == 3);
  CHECK(is_commutative(inst.A.algebra));
  CHECK(is_cocommutative(inst.A.coalgebra));
  CHECK(oracle::basis_grouplikes(inst.A).elements.size() == 3);
}

TEST_CASE("eigenbasis grading") {
  const BiproductInstance inst = build_example("ex3_5");
  REQUIRE(inst.L == 3);
  const auto rep = inst.report();
  CHECK(rep.at("orbit_lengths") == nlohmann::json{1, 3});
  CHECK(rep.at("conductor") == 6);  // lcm of ord(theta), exp(G), exp(calG)
  for (const auto& e : inst.eigenbasis) {
    const unsigned r = static_cast<unsigned>(inst.orbit_table[e.orbit].size());
    CHECK(e.degree == (e.ell * inst.L / r) % inst.L);
  }
}

TEST_CASE("construction preconditions") {
  const nlohmann::json s3{{"kind", "perm_gens"}, {"degree", 3}, {"gens", {{1, 0, 2}, {1, 2, 0}}}};
  const nlohmann::json z2{{"kind", "cyclic"}, {"n", 2}};
  const nlohmann::json v{{"kind", "product"}, {"factors", nlohmann::json::array({z2, z2})}};
  nlohmann::json spec{{"calG", s3},
                      {"theta", {{"conjugation_by", {1, 0, 2}}}},
                      {"mode", "general"},
                      {"G", v},
                      {"pi", {{"generators", {2, 1}}, {"images", {"identity", {{"conjugation_by", {0, 2, 1}}}}}}},
                      {"embed", {{"u", 2}}}};
  auto name_of = [](const nlohmann::json& sp) {
    try {
      build_from_spec(sp);
    } catch (const PreconditionError& e) {
      return e.name();
    }
    return std::string("none");
  };
  CHECK(name_of(spec) == "pi_commutes_with_theta");

  spec["pi"]["images"] = {"identity", "identity"};
  CHECK(name_of(spec) == "none");
  spec["embed"]["u"] = 0;
  CHECK(name_of(spec) == "u_order");

  nlohmann::json z4 = example_spec("ex3_7");
  z4["pi"]["images"] = {{{"conjugation_by", 0}}};
  z4["embed"]["u"] = 1;
  CHECK(name_of(z4) == "u_order");

  nlohmann::json bad_hom = example_spec("ex3_7");
  bad_hom["G"] = {{"kind", "cyclic"}, {"n", 3}};
  bad_hom["pi"]["generators"] = {1};
  bad_hom["embed"]["u"] = 0;
  CHECK(name_of(bad_hom) == "pi_homomorphism");

  CHECK_THROWS_AS(build_example("ex3_5", {0, 0, 2}), ConductorError);
  CHECK_THROWS_AS(build_example("nope"), PreconditionError);
  CHECK_THROWS_AS(build_from_spec(nlohmann::json{{"theta", "identity"}}), MalformedInput);
}

TEST_CASE("conductor override enlarges the field") {
  const BiproductInstance inst = build_example("ex3_2", {3, 0, 12});
  CHECK(inst.ctx().conductor() == 12);
  CHECK(verify_hopf(inst.A).passed());
  CHECK(structurally_equal(build_from_spec(inst.spec, inst.name).A, inst.A));
}

TEST_CASE("biproduct YD data verifies") {
  const BiproductInstance inst = build_example("ex3_7");
  CHECK(verify_yd(inst.yd).passed());
  CHECK(verify_braided_bialgebra(inst.yd).passed());
}
