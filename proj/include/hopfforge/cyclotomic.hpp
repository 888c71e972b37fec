/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic fields Q(zeta_N).
 *
 * An element is stored by its coordinates in the power basis
 * 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.
 * Coordinates are GMP rationals kept in lowest terms, so structural equality
 * of coordinate vectors is field equality.
 *
 * Contexts are interned: FieldContext::get(N) always returns the same object,
 * and scalars carry a pointer to it. All scalars taking part in one operation
 * must share a conductor; nothing is ever coerced between fields.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hopfforge {

class CycScalar;

class FieldContext {
 public:
  /// Interned context for conductor N >= 1. Thread-safe, never freed.
  static const FieldContext& get(unsigned conductor);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  unsigned conductor() const noexcept { return conductor_; }
  /// phi(N): the number of coordinate slots.
  unsigned degree() const noexcept { return degree_; }
  /// Coefficients of the N-th cyclotomic polynomial, constant term first.
  const std::vector<long>& cyclotomic_polynomial() const noexcept { return phi_poly_; }

  CycScalar zero() const;
  CycScalar one() const;
  CycScalar zeta() const;
  CycScalar integer(long v) const;
  CycScalar rational(const mpq_class& q) const;
  CycScalar rational(long num, long den) const;

  /// zeta_N^e for any integer e.
  CycScalar zeta_power(long e) const;
  /// zeta_N^{(N/r) j}: an r-th root of unity, primitive when gcd(j, r) = 1.
  /// Throws ConductorError when r does not divide N.
  CycScalar root_of_unity(unsigned r, long j) const;
  bool has_roots_of_order(unsigned r) const noexcept { return r != 0 && conductor_ % r == 0; }
  void require_roots_of_order(unsigned r) const;

  /// Power-basis coordinates of zeta^e for 0 <= e < N (small integers).
  const std::vector<long>& power_coords(unsigned e) const { return powers_[e]; }

 private:
  explicit FieldContext(unsigned conductor);

  unsigned conductor_;
  unsigned degree_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<long>> powers_;
};

class CycScalar {
 public:
  explicit CycScalar(const FieldContext& ctx);
  CycScalar(const FieldContext& ctx, std::vector<mpq_class> coeffs);

  const FieldContext& context() const noexcept { return *ctx_; }
  unsigned conductor() const noexcept { return ctx_->conductor(); }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q (all higher coordinates vanish).
  bool is_rational() const noexcept;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator*=(const mpq_class& q);
  CycScalar& operator/=(const CycScalar& o) { return *this *= o.inv(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(CycScalar a, const mpq_class& q) { return a *= q; }
  friend CycScalar operator*(const mpq_class& q, CycScalar a) { return a *= q; }
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inv(); }
  CycScalar operator-() const;

  /// Multiplicative inverse; throws DivisionByZero on 0.
  CycScalar inv() const;
  CycScalar pow(long e) const;

  friend bool operator==(const CycScalar& a, const CycScalar& b) noexcept;
  friend bool operator!=(const CycScalar& a, const CycScalar& b) noexcept { return !(a == b); }

  /// Human-readable form such as "1/2 - 1/2*z^1".
  std::string to_string() const;

 private:
  void check_same_field(const CycScalar& o) const;

  const FieldContext* ctx_;
  std::vector<mpq_class> c_;
};

/// Canonical "p/q" text of a rational: q > 0, gcd(|p|, q) = 1, zero is "0/1".
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

/// {"conductor": N, "coeffs": ["p/q", ...]}
nlohmann::json scalar_to_json(const CycScalar& x);
CycScalar scalar_from_json(const nlohmann::json& j);

unsigned euler_phi(unsigned n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace hopfforge
