#include "hopfforge/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

using IntPoly = std::vector<long>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quot;
}

IntPoly cyclotomic_poly(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

const FieldContext& FieldContext::get(unsigned conductor) {
  if (conductor == 0) throw MalformedInput("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new FieldContext(conductor));
  return *slot;
}

FieldContext::FieldContext(unsigned conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), phi_poly_(cyclotomic_poly(conductor)) {
  powers_.reserve(conductor_);
  std::vector<long> cur(degree_, 0);
  cur[0] = 1;
  for (unsigned e = 0; e < conductor_; ++e) {
    powers_.push_back(cur);
    // multiply by x, then reduce the overflow coefficient with the monic modulus
    const long top = cur[degree_ - 1];
    for (unsigned k = degree_ - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned k = 0; k < degree_; ++k) cur[k] -= top * phi_poly_[k];
  }
}

CycScalar FieldContext::zero() const { return CycScalar(*this); }

CycScalar FieldContext::one() const { return integer(1); }

CycScalar FieldContext::zeta() const { return zeta_power(1); }

CycScalar FieldContext::integer(long v) const {
  CycScalar s(*this);
  std::vector<mpq_class> c(degree_);
  c[0] = v;
  return CycScalar(*this, std::move(c));
}

CycScalar FieldContext::rational(const mpq_class& q) const {
  std::vector<mpq_class> c(degree_);
  c[0] = q;
  c[0].canonicalize();
  return CycScalar(*this, std::move(c));
}

CycScalar FieldContext::rational(long num, long den) const {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

CycScalar FieldContext::zeta_power(long e) const {
  long m = e % static_cast<long>(conductor_);
  if (m < 0) m += conductor_;
  const auto& pc = powers_[static_cast<std::size_t>(m)];
  std::vector<mpq_class> c(degree_);
  for (unsigned k = 0; k < degree_; ++k) c[k] = pc[k];
  return CycScalar(*this, std::move(c));
}

void FieldContext::require_roots_of_order(unsigned r) const {
  if (!has_roots_of_order(r)) throw ConductorError(conductor_, r);
}

CycScalar FieldContext::root_of_unity(unsigned r, long j) const {
  require_roots_of_order(r);
  return zeta_power(static_cast<long>(conductor_ / r) * j);
}

CycScalar::CycScalar(const FieldContext& ctx) : ctx_(&ctx), c_(ctx.degree()) {}

CycScalar::CycScalar(const FieldContext& ctx, std::vector<mpq_class> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
  if (c_.size() != ctx.degree())
    throw MalformedInput("coefficient count " + std::to_string(c_.size()) +
                         " does not match phi(N) = " + std::to_string(ctx.degree()));
  for (auto& q : c_) q.canonicalize();
}

bool CycScalar::is_zero() const noexcept {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool CycScalar::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const noexcept {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

void CycScalar::check_same_field(const CycScalar& o) const {
  if (ctx_ != o.ctx_)
    throw PreconditionError("conductor_mismatch",
                            "operands live in Q(zeta_" + std::to_string(ctx_->conductor()) +
                                ") and Q(zeta_" + std::to_string(o.ctx_->conductor()) + ")");
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar& CycScalar::operator*=(const mpq_class& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  a.check_same_field(b);
  const unsigned d = a.ctx_->degree();
  if (d == 1) {
    std::vector<mpq_class> c(1);
    c[0] = a.c_[0] * b.c_[0];
    return CycScalar(*a.ctx_, std::move(c));
  }
  std::vector<mpq_class> conv(2 * d - 1);
  for (unsigned i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<mpq_class> c(d);
  const unsigned n = a.ctx_->conductor();
  for (unsigned e = 0; e < conv.size(); ++e) {
    if (sgn(conv[e]) == 0) continue;
    if (e < d) {
      c[e] += conv[e];
      continue;
    }
    const auto& pc = a.ctx_->power_coords(e % n);
    for (unsigned k = 0; k < d; ++k)
      if (pc[k] != 0) c[k] += conv[e] * pc[k];
  }
  return CycScalar(*a.ctx_, std::move(c));
}

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  const unsigned d = ctx_->degree();
  if (d == 1) {
    std::vector<mpq_class> c(1);
    c[0] = 1 / c_[0];
    return CycScalar(*ctx_, std::move(c));
  }
  // Solve M y = e_0 where column k of M holds the coordinates of x * zeta^k.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (unsigned k = 0; k < d; ++k) {
    const CycScalar col = *this * ctx_->zeta_power(k);
    for (unsigned i = 0; i < d; ++i) m[i][k] = col.c_[i];
  }
  m[0][d] = 1;
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (piv < d && sgn(m[piv][col]) == 0) ++piv;
    if (piv == d) throw InternalConsistencyError("singular multiplication matrix for nonzero element");
    std::swap(m[piv], m[col]);
    const mpq_class p = m[col][col];
    for (unsigned k = col; k <= d; ++k) m[col][k] /= p;
    for (unsigned i = 0; i < d; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      const mpq_class f = m[i][col];
      for (unsigned k = col; k <= d; ++k) m[i][k] -= f * m[col][k];
    }
  }
  std::vector<mpq_class> y(d);
  for (unsigned i = 0; i < d; ++i) y[i] = m[i][d];
  return CycScalar(*ctx_, std::move(y));
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycScalar result = ctx_->one();
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) noexcept {
  return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << (sgn(c_[k]) > 0 ? " + " : " - ");
    else if (sgn(c_[k]) < 0) os << "-";
    mpq_class a = abs(c_[k]);
    if (k == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw MalformedInput("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

nlohmann::json scalar_to_json(const CycScalar& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rational_to_string(q));
  return {{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycScalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw MalformedInput("scalar JSON needs 'conductor' and 'coeffs'");
  const auto& ctx = FieldContext::get(j.at("conductor").get<unsigned>());
  std::vector<mpq_class> c;
  for (const auto& e : j.at("coeffs")) c.push_back(rational_from_string(e.get<std::string>()));
  return CycScalar(ctx, std::move(c));
}

}  // namespace hopfforge
