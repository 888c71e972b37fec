#include "hopfforge/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "hopfforge/errors.hpp"

namespace hopfforge {

std::size_t AbelianPresentation::size() const {
  std::size_t s = 1;
  for (auto n : orders) s *= n;
  return s;
}

std::size_t AbelianPresentation::encode(const std::vector<long>& m) const {
  if (m.size() != orders.size()) throw MalformedInput("exponent vector length differs from the presentation rank");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const long n = orders[j];
    idx = idx * n + static_cast<std::size_t>(((m[j] % n) + n) % n);
  }
  return idx;
}

std::vector<long> AbelianPresentation::decode(std::size_t index) const {
  std::vector<long> m(orders.size());
  for (std::size_t j = orders.size(); j-- > 0;) {
    m[j] = static_cast<long>(index % orders[j]);
    index /= orders[j];
  }
  return m;
}

std::size_t order_cap() {
  if (const char* env = std::getenv("HOPFFORGE_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw MalformedInput("HOPFFORGE_ORDER_CAP must be a positive integer");
  }
  return 256;
}

namespace {

void enforce_cap(std::size_t n) {
  const std::size_t cap = order_cap();
  if (n > cap)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds the order cap " + std::to_string(cap));
}

}  // namespace

void FiniteGroup::finish() {
  identity_ = n_;
  for (std::size_t e = 0; e < n_ && identity_ == n_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ == n_) throw MalformedInput("group table has no identity");
  inverse_.assign(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
  for (std::size_t a = 0; a < n_; ++a)
    if (inverse_[a] == n_) throw MalformedInput("element " + std::to_string(a) + " has no inverse");
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedInput("empty group table");
  enforce_cap(n);
  FiniteGroup g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw MalformedInput("group table is not square");
    for (auto v : row) {
      if (v >= n) throw MalformedInput("group table entry outside the element range");
      g.table_.push_back(v);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw MalformedInput("group table is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw MalformedInput("cyclic group order must be positive");
  enforce_cap(n);
  FiniteGroup g;
  g.n_ = n;
  g.name_ = "Z" + std::to_string(n);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) g.table_[a * n + b] = (a + b) % n;
  g.finish();
  g.set_presentation(AbelianPresentation{{n}, {n == 1 ? 0u : 1u}});
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  enforce_cap(n);
  FiniteGroup g;
  g.n_ = n;
  g.name_ = a.name_.empty() || b.name_.empty() ? std::string() : a.name_ + "x" + b.name_;
  g.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      g.table_[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  g.finish();
  if (a.pres_ && b.pres_) {
    AbelianPresentation p;
    for (std::size_t j = 0; j < a.pres_->orders.size(); ++j) {
      p.orders.push_back(a.pres_->orders[j]);
      p.generators.push_back(a.pres_->generators[j] * nb + b.identity());
    }
    for (std::size_t j = 0; j < b.pres_->orders.size(); ++j) {
      p.orders.push_back(b.pres_->orders[j]);
      p.generators.push_back(a.identity() * nb + b.pres_->generators[j]);
    }
    g.set_presentation(std::move(p));
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                                           std::string name) {
  using Perm = std::vector<unsigned>;
  for (const auto& p : gens) {
    if (p.size() != degree) throw MalformedInput("generator length differs from the degree");
    std::vector<bool> seen(degree, false);
    for (auto v : p) {
      if (v >= degree || seen[v]) throw MalformedInput("generator is not a permutation");
      seen[v] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  const std::size_t cap = order_cap();
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (unsigned i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& s : gens) {
      Perm y = compose(s, elems[head]);
      if (index.count(y)) continue;
      if (elems.size() + 1 > cap)
        throw CapExceeded("generated group exceeds the order cap " + std::to_string(cap));
      index.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  FiniteGroup g;
  g.n_ = elems.size();
  g.name_ = std::move(name);
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t a = 0; a < g.n_; ++a)
    for (std::size_t b = 0; b < g.n_; ++b) g.table_[a * g.n_ + b] = index.at(compose(elems[a], elems[b]));
  g.finish();
  g.perms_ = std::move(elems);
  return g;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  if (k < 0) return power(inv(a), -k);
  std::size_t r = identity_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

void FiniteGroup::set_presentation(AbelianPresentation p) {
  if (p.orders.size() != p.generators.size()) throw MalformedInput("presentation orders and generators differ in length");
  if (!is_abelian()) throw MalformedInput("only abelian groups carry a presentation");
  if (p.size() != n_) throw MalformedInput("presentation order differs from the group order");
  for (std::size_t j = 0; j < p.orders.size(); ++j) {
    if (p.generators[j] >= n_) throw MalformedInput("presentation generator out of range");
    if (power(p.generators[j], p.orders[j]) != identity_)
      throw MalformedInput("presentation generator order does not divide its factor order");
  }
  std::vector<std::size_t> index(n_), back(n_, n_);
  for (std::size_t k = 0; k < n_; ++k) {
    const auto m = p.decode(k);
    std::size_t x = identity_;
    for (std::size_t j = 0; j < m.size(); ++j) x = mul(x, power(p.generators[j], m[j]));
    if (back[x] != n_) throw MalformedInput("presentation map is not injective");
    index[k] = x;
    back[x] = k;
  }
  pres_ = std::move(p);
  coords_index_ = std::move(index);
  element_coords_ = std::move(back);
}

std::size_t FiniteGroup::element_of(const std::vector<long>& m) const {
  if (!pres_) throw MalformedInput("group has no abelian presentation");
  return coords_index_[pres_->encode(m)];
}

std::vector<long> FiniteGroup::coordinates_of(std::size_t g) const {
  if (!pres_) throw MalformedInput("group has no abelian presentation");
  return pres_->decode(element_coords_[g]);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

GroupAutomorphism GroupAutomorphism::checked(const FiniteGroup& g, std::vector<std::size_t> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw MalformedInput("automorphism length differs from the group order");
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) throw MalformedInput("automorphism is not a bijection");
    seen[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b]))
        throw MalformedInput("map is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return GroupAutomorphism{std::move(perm)};
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), std::size_t{0});
  return GroupAutomorphism{std::move(p)};
}

GroupAutomorphism GroupAutomorphism::inversion(const FiniteGroup& g) {
  if (!g.is_abelian()) throw MalformedInput("inversion is an automorphism only of abelian groups");
  std::vector<std::size_t> p(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) p[a] = g.inv(a);
  return GroupAutomorphism{std::move(p)};
}

GroupAutomorphism GroupAutomorphism::conjugation(const FiniteGroup& grp, std::size_t g) {
  if (g >= grp.order()) throw MalformedInput("conjugating element out of range");
  std::vector<std::size_t> p(grp.order());
  for (std::size_t x = 0; x < grp.order(); ++x) p[x] = grp.conjugate(g, x);
  return GroupAutomorphism{std::move(p)};
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& after) const {
  std::vector<std::size_t> p(perm.size());
  for (std::size_t x = 0; x < perm.size(); ++x) p[x] = after.perm[perm[x]];
  return GroupAutomorphism{std::move(p)};
}

GroupAutomorphism GroupAutomorphism::power(long k) const {
  const long ord = static_cast<long>(order());
  k = ((k % ord) + ord) % ord;
  std::vector<std::size_t> p(perm.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  GroupAutomorphism r{std::move(p)};
  for (long i = 0; i < k; ++i) r = r.compose(*this);
  return r;
}

std::size_t GroupAutomorphism::order() const {
  std::size_t o = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = perm[y]) {
      seen[y] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::vector<std::vector<std::size_t>> orbits(const FiniteGroup& g, const GroupAutomorphism& theta) {
  if (theta.perm.size() != g.order()) throw MalformedInput("automorphism does not match the group");
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t y = x; !seen[y]; y = theta(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

HopfData group_algebra_hopf(const FiniteGroup& g, const FieldContext& ctx) {
  const std::size_t n = g.order();
  HopfData h;
  h.algebra = AlgebraData(ctx, n);
  h.coalgebra = CoalgebraData(ctx, n);
  h.antipode.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.algebra.mult[a * n + b] = unit_vector(ctx, g.mul(a, b));
    h.coalgebra.comult[a] = unit_vector(ctx, a * n + a);
    h.coalgebra.counit.emplace(a, ctx.one());
    h.antipode[a] = unit_vector(ctx, g.inv(a));
  }
  h.algebra.unit = unit_vector(ctx, g.identity());
  return h;
}

CycScalar formal_root_power(const AbelianPresentation& p, const FieldContext& ctx, const std::vector<long>& m) {
  long e = 0;
  const long n = ctx.conductor();
  for (std::size_t j = 0; j < p.orders.size(); ++j) {
    ctx.require_roots_of_order(p.orders[j]);
    e = (e + (n / p.orders[j]) * (m[j] % static_cast<long>(p.orders[j]))) % n;
  }
  return ctx.zeta_power(e);
}

IdempotentBasis idempotent_basis(const FiniteGroup& g, const FieldContext& ctx) {
  if (!g.presentation()) throw MalformedInput("idempotent basis needs an abelian presentation");
  const AbelianPresentation& p = *g.presentation();
  for (auto n : p.orders) ctx.require_roots_of_order(n);
  const std::size_t n = g.order();
  const mpq_class inv_n(1, static_cast<unsigned long>(n));
  IdempotentBasis out;
  out.presentation = p;
  out.vectors.resize(n);
  for (std::size_t mi = 0; mi < n; ++mi) {
    const auto m = p.decode(mi);
    for (std::size_t ri = 0; ri < n; ++ri) {
      const auto r = p.decode(ri);
      std::vector<long> mr(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) mr[j] = m[j] * r[j];
      add_term(out.vectors[mi], g.element_of(r), formal_root_power(p, ctx, mr) * inv_n);
    }
  }
  out.integral = out.vectors[0];
  return out;
}

CycScalar Character::value(const FieldContext& ctx, std::size_t g) const {
  return ctx.root_of_unity(exponent, values[g]);
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](unsigned v) { return v == 0; });
}

std::vector<Character> characters(const FiniteGroup& g, const FieldContext& ctx) {
  if (!g.is_abelian()) throw MalformedInput("characters are enumerated for abelian groups only");
  const unsigned e = static_cast<unsigned>(g.exponent());
  ctx.require_roots_of_order(e);
  const std::size_t n = g.order();
  constexpr unsigned kUnset = ~0u;

  std::vector<std::size_t> sub{g.identity()};
  std::vector<bool> in_sub(n, false);
  in_sub[g.identity()] = true;
  std::vector<std::vector<unsigned>> chars{std::vector<unsigned>(n, kUnset)};
  chars[0][g.identity()] = 0;

  for (std::size_t x = 0; x < n; ++x) {
    if (in_sub[x]) continue;
    unsigned t = 1;
    std::size_t xt = x;
    while (!in_sub[xt]) {
      xt = g.mul(xt, x);
      ++t;
    }
    std::vector<std::size_t> grown;
    for (unsigned i = 0; i < t; ++i)
      for (auto h : sub) grown.push_back(g.mul(h, g.power(x, i)));
    std::vector<std::vector<unsigned>> next;
    for (const auto& chi : chars) {
      const unsigned v = chi[xt];
      if (v % t != 0) throw InternalConsistencyError("character extension has no root");
      for (unsigned j = 0; j < t; ++j) {
        const unsigned k = (v / t + j * (e / t)) % e;
        std::vector<unsigned> ext = chi;
        for (unsigned i = 0; i < t; ++i)
          for (auto h : sub) ext[g.mul(h, g.power(x, i))] = (chi[h] + i * k) % e;
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    sub = std::move(grown);
    for (auto h : sub) in_sub[h] = true;
  }
  std::vector<Character> out;
  for (auto& c : chars) out.push_back(Character{e, std::move(c)});
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : gens) {
      const std::size_t y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::set<std::size_t> comms;
  for (auto a : h)
    for (auto b : h) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, std::vector<std::size_t>(comms.begin(), comms.end()));
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<Subgroup> series{all};
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elems) {
  std::vector<std::size_t> gens;
  for (auto x : elems)
    for (std::size_t c = 0; c < g.order(); ++c) gens.push_back(g.conjugate(c, x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subgroup(g, gens);
}

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> in(g.order(), false);
  for (auto x : h) in[x] = true;
  for (std::size_t c = 0; c < g.order(); ++c)
    for (auto x : h)
      if (!in[g.conjugate(c, x)]) return false;
  return true;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    if (normal_closure(g, {x}).size() != g.order()) return false;
  }
  return true;
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal_subgroup(g, n)) throw MalformedInput("quotient by a non-normal subgroup");
  std::vector<std::size_t> coset_of(g.order(), g.order());
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    for (auto y : n) coset_of[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = coset_of[g.mul(reps[a], reps[b])];
  return FiniteGroup::from_table(table);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = i;
  std::vector<std::vector<std::size_t>> table(h.size(), std::vector<std::size_t>(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      auto it = pos.find(g.mul(h[a], h[b]));
      if (it == pos.end()) throw MalformedInput("subset is not closed under multiplication");
      table[a][b] = it->second;
    }
  return FiniteGroup::from_table(table);
}

std::map<std::size_t, std::size_t> order_profile(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> prof;
  for (std::size_t a = 0; a < g.order(); ++a) ++prof[g.element_order(a)];
  return prof;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw MalformedInput("abelian invariants of a non-abelian group");
  std::vector<std::size_t> out;
  for (std::size_t p : prime_factors(g.order())) {
    // log_p of |{x : x^{p^k} = 1}| for k = 0, 1, ...
    std::vector<std::size_t> logs{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (std::size_t a = 0; a < g.order(); ++a)
        if (g.power(a, static_cast<long>(pk)) == g.identity()) ++count;
      std::size_t lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    // at_least[k] = number of cyclic p-factors of exponent >= k
    for (std::size_t k = 1; k < logs.size(); ++k) {
      const std::size_t at_least = logs[k] - logs[k - 1];
      const std::size_t at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      std::size_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (std::size_t i = at_least_next; i < at_least; ++i) out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> elementary_divisors(const std::vector<std::size_t>& cyclic_orders) {
  std::vector<std::size_t> out;
  for (std::size_t n : cyclic_orders)
    for (std::size_t p : prime_factors(n)) {
      std::size_t pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      out.push_back(pk);
    }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json group_invariants(const FiniteGroup& g) {
  nlohmann::json j{{"order", g.order()}, {"abelian", g.is_abelian()}};
  if (g.is_abelian()) j["invariants"] = abelian_invariants(g);
  nlohmann::json prof = nlohmann::json::array();
  for (const auto& [o, c] : order_profile(g)) prof.push_back({o, c});
  j["order_profile"] = std::move(prof);
  return j;
}

FiniteGroup parse_group_spec(const nlohmann::json& spec) {
  try {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "cyclic") return FiniteGroup::cyclic(spec.at("n").get<unsigned>());
    if (kind == "product") {
      const auto& factors = spec.at("factors");
      if (!factors.is_array() || factors.empty()) throw MalformedInput("product needs a nonempty factor list");
      FiniteGroup g = parse_group_spec(factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i) g = FiniteGroup::direct_product(g, parse_group_spec(factors[i]));
      return g;
    }
    if (kind == "perm_gens")
      return FiniteGroup::from_permutations(spec.at("degree").get<unsigned>(),
                                            spec.at("gens").get<std::vector<std::vector<unsigned>>>());
    if (kind == "table") return FiniteGroup::from_table(spec.at("table").get<std::vector<std::vector<std::size_t>>>());
    throw MalformedInput("unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("group spec: ") + e.what());
  }
}

}  // namespace hopfforge
