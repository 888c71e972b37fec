#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hopfforge/cyclotomic.hpp"

namespace hopfforge {

/// Sparse coordinate vector. Zero entries are never stored, so map equality
/// is vector equality.
using SparseVec = std::map<std::size_t, CycScalar>;

void add_term(SparseVec& acc, std::size_t index, const CycScalar& c);
/// acc += c * v
void add_scaled(SparseVec& acc, const SparseVec& v, const CycScalar& c);
SparseVec scaled(const SparseVec& v, const CycScalar& c);
SparseVec difference(const SparseVec& a, const SparseVec& b);
SparseVec unit_vector(const FieldContext& ctx, std::size_t index);

/// Row space of a set of sparse vectors, kept in fully reduced echelon form:
/// every row has leading coefficient 1 and zeros in every other pivot column.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true when v was not already in the span.
  bool insert(const SparseVec& v);
  /// Residual of v modulo the span; it is supported on non-pivot columns only.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::map<std::size_t, SparseVec>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> non_pivot_columns() const;

  /// Solutions x of <row, x> = 0 for every row, one per free column.
  std::vector<SparseVec> null_space(const FieldContext& ctx) const;
  bool same_span(const SpanBasis& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool contains_all(const SpanBasis& o) const;

 private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVec> rows_;
};

SpanBasis span_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors);

/// Coordinates of v in the given (independent) vectors, or nullopt when v is
/// outside their span.
std::optional<std::vector<CycScalar>> express_in(const FieldContext& ctx,
                                                 const std::vector<SparseVec>& basis,
                                                 const SparseVec& v);

class DenseMatrix {
 public:
  DenseMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldContext& context() const noexcept { return *ctx_; }
  CycScalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycScalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  SparseVec row(std::size_t i) const;
  bool is_identity() const;
  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y);

 private:
  const FieldContext* ctx_;
  std::size_t rows_, cols_;
  std::vector<CycScalar> a_;
};

std::size_t rank_of(const DenseMatrix& m);

/// Polynomial with coefficients constant term first; the zero polynomial is
/// empty and no other value has a zero leading coefficient.
using Poly = std::vector<CycScalar>;

void poly_trim(Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& p);
Poly poly_gcd(const Poly& a, const Poly& b);
/// Bezout coefficients (s, t) with s a + t b = gcd(a, b), gcd monic.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b);

/// Yun's squarefree decomposition of a monic p: factors[m] is the product of
/// the distinct linear factors (over the algebraic closure) of multiplicity m.
std::map<std::size_t, Poly> squarefree_decomposition(const Poly& p);

/// Characteristic polynomial det(xI - M) via Hessenberg reduction.
Poly characteristic_polynomial(const DenseMatrix& m);

}  // namespace hopfforge
