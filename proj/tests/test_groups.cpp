#include <cstdlib>

#include "doctest.h"
#include "hopfforge/errors.hpp"
#include "hopfforge/groups.hpp"
#include "oracles.hpp"

using namespace hopfforge;

namespace {

FiniteGroup alt5() {
  return FiniteGroup::from_permutations(5, {{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}});
}

FiniteGroup sym3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

}  // namespace

TEST_CASE("group orders and identity placement") {
  CHECK(FiniteGroup::cyclic(1).order() == 1);
  CHECK(FiniteGroup::cyclic(7).identity() == 0);
  CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order() == 6);
  CHECK(sym3().order() == 6);
  CHECK(alt5().order() == 60);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), MalformedInput);
  CHECK_NOTHROW(FiniteGroup::from_table({{1, 0}, {0, 1}}));
  CHECK(FiniteGroup::from_table({{1, 0}, {0, 1}}).identity() == 1);
}

TEST_CASE("abelian invariants and exponents") {
  const FiniteGroup z2z4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
  CHECK(abelian_invariants(z2z4) == std::vector<std::size_t>{2, 4});
  CHECK(abelian_invariants(FiniteGroup::cyclic(6)) == std::vector<std::size_t>{2, 3});
  CHECK(elementary_divisors({6, 4}) == std::vector<std::size_t>{2, 3, 4});
  CHECK(z2z4.exponent() == 4);
  CHECK(alt5().exponent() == 30);
}

TEST_CASE("derived series, centers and simplicity") {
  CHECK(derived_series(sym3()).size() == 3);
  CHECK(derived_series(sym3())[1].size() == 3);
  const auto a5 = derived_series(alt5());
  CHECK(a5.back().size() == 60);
  CHECK(is_simple(alt5()));
  CHECK_FALSE(is_simple(sym3()));
  CHECK(is_simple(FiniteGroup::cyclic(5)));
  CHECK(center(alt5()).size() == 1);
  CHECK(center(alt5()) == oracle::center_by_table(alt5()));
  const FiniteGroup d4 = parse_group_spec(oracle::small_group_specs()[12]);
  CHECK(center(d4).size() == 2);
}

TEST_CASE("automorphisms and their orbits") {
  const FiniteGroup g = FiniteGroup::cyclic(5);
  const GroupAutomorphism inv = GroupAutomorphism::inversion(g);
  CHECK(inv.order() == 2);
  const auto o = orbits(g, inv);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<std::size_t>{0});
  CHECK(o[1] == std::vector<std::size_t>{1, 4});
  CHECK(o[2] == std::vector<std::size_t>{2, 3});
  CHECK(oracle::cycle_type(inv.perm) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}});
  CHECK_THROWS_AS(GroupAutomorphism::checked(g, {0, 2, 1, 3, 4}), MalformedInput);
}

TEST_CASE("conjugation by a double transposition in A5 has order two") {
  const FiniteGroup g = alt5();
  std::size_t x = 0;
  for (; x < g.order(); ++x)
    if (g.permutations()[x] == std::vector<unsigned>{1, 0, 3, 2, 4}) break;
  REQUIRE(x < g.order());
  const GroupAutomorphism c = GroupAutomorphism::conjugation(g, x);
  CHECK(c.order() == 2);
  // fixed points of conjugation are the centralizer: of order 4
  CHECK(oracle::cycle_type(c.perm).at(1) == 4);
}

TEST_CASE("idempotent basis of Z2 x Z3 under its presentation") {
  const auto& k = FieldContext::get(6);
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  const IdempotentBasis e = idempotent_basis(g, k);
  const HopfData h = group_algebra_hopf(g, k);
  REQUIRE(e.vectors.size() == 6);
  SparseVec sum;
  for (std::size_t i = 0; i < 6; ++i) {
    add_scaled(sum, e.vectors[i], k.one());
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(h.algebra.multiply(e.vectors[i], e.vectors[j]) == (i == j ? e.vectors[i] : SparseVec{}));
  }
  CHECK(sum == h.algebra.unit);
  // e_0 is the normalized integral: g e_0 = e_0
  for (std::size_t x = 0; x < 6; ++x) CHECK(h.algebra.multiply(unit_vector(k, x), e.integral) == e.integral);
}

TEST_CASE("character count and orthogonality through the complex embedding") {
  const auto& k = FieldContext::get(4);
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
  const auto chars = characters(g, k);
  REQUIRE(chars.size() == 8);
  CHECK(chars[0].is_trivial());
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = 0; b < chars.size(); ++b) {
      oracle::cplx s = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        s += oracle::embed(chars[a].value(k, x)) * std::conj(oracle::embed(chars[b].value(k, x)));
      CHECK(oracle::near(s, a == b ? 8.0L : 0.0L));
    }
  CHECK_THROWS_AS(characters(g, FieldContext::get(2)), ConductorError);
}

TEST_CASE("quotients and subgroups") {
  const FiniteGroup g = FiniteGroup::cyclic(6);
  const Subgroup h = generated_subgroup(g, {2});
  CHECK(h == Subgroup{0, 2, 4});
  CHECK(is_normal_subgroup(g, h));
  CHECK(quotient_group(g, h).order() == 2);
  CHECK(subgroup_as_group(g, h).order() == 3);
  CHECK(normal_closure(alt5(), {1}).size() == 60);
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec({{"kind", "cyclic"}, {"n", 4}}).order() == 4);
  CHECK_THROWS_AS(parse_group_spec({{"kind", "mystery"}}), MalformedInput);
  CHECK_THROWS_AS(parse_group_spec({{"n", 4}}), MalformedInput);
}

TEST_CASE("group invariants distinguish Z4 from Z2 x Z2") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const FiniteGroup v = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(group_invariants(z4) != group_invariants(v));
  CHECK(group_invariants(z4)["invariants"] == nlohmann::json{4});
}

TEST_CASE("order cap reads the environment") {
  ::setenv("HOPFFORGE_ORDER_CAP", "4", 1);
  CHECK(order_cap() == 4);
  CHECK_THROWS_AS(FiniteGroup::cyclic(5), CapExceeded);
  CHECK_NOTHROW(FiniteGroup::cyclic(4));
  ::setenv("HOPFFORGE_ORDER_CAP", "many", 1);
  CHECK_THROWS_AS(order_cap(), MalformedInput);
  ::unsetenv("HOPFFORGE_ORDER_CAP");
  CHECK(order_cap() == 256);
}
