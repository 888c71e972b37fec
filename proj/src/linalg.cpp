#include "hopfforge/linalg.hpp"

#include <tuple>

#include "hopfforge/errors.hpp"

namespace hopfforge {

void add_term(SparseVec& acc, std::size_t index, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(index);
  if (it == acc.end()) {
    acc.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void add_scaled(SparseVec& acc, const SparseVec& v, const CycScalar& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [i, x] : v) add_term(acc, i, unit ? x : x * c);
}

SparseVec scaled(const SparseVec& v, const CycScalar& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  for (const auto& [i, x] : v) out.emplace(i, x * c);
  return out;
}

SparseVec difference(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  for (const auto& [i, x] : b) add_term(out, i, -x);
  return out;
}

SparseVec unit_vector(const FieldContext& ctx, std::size_t index) {
  return SparseVec{{index, ctx.one()}};
}

SparseVec SpanBasis::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (const auto& [p, c] : v) {
    auto row = rows_.find(p);
    if (row == rows_.end()) continue;
    add_scaled(out, row->second, -c);
  }
  return out;
}

bool SpanBasis::insert(const SparseVec& v) {
  for (const auto& [i, c] : v)
    if (i >= ambient_) throw MalformedInput("vector index outside the ambient space");
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.begin()->first;
  const CycScalar lead_inv = r.begin()->second.inv();
  r = scaled(r, lead_inv);
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const CycScalar c = hit->second;
    add_scaled(row, r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<std::size_t> SpanBasis::non_pivot_columns() const {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!rows_.count(j)) cols.push_back(j);
  return cols;
}

std::vector<SparseVec> SpanBasis::null_space(const FieldContext& ctx) const {
  std::vector<SparseVec> basis;
  for (std::size_t free : non_pivot_columns()) {
    SparseVec x{{free, ctx.one()}};
    for (const auto& [p, row] : rows_) {
      auto hit = row.find(free);
      if (hit != row.end()) x.emplace(p, -hit->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool SpanBasis::contains_all(const SpanBasis& o) const {
  for (const auto& [p, row] : o.rows_)
    if (!contains(row)) return false;
  return true;
}

SpanBasis span_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  SpanBasis s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::optional<std::vector<CycScalar>> express_in(const FieldContext& ctx,
                                                 const std::vector<SparseVec>& basis,
                                                 const SparseVec& v) {
  // Augment each basis vector with a tag coordinate beyond the ambient range;
  // reducing (v, 0) then leaves minus the coefficients in the tag slots.
  std::size_t ambient = 0;
  for (const auto& b : basis)
    if (!b.empty()) ambient = std::max(ambient, b.rbegin()->first + 1);
  if (!v.empty()) ambient = std::max(ambient, v.rbegin()->first + 1);
  SpanBasis s(ambient + basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    SparseVec tagged = basis[k];
    tagged.emplace(ambient + k, ctx.one());
    if (!s.insert(tagged)) throw InternalConsistencyError("express_in: basis is dependent");
  }
  const SparseVec r = s.reduce(v);
  std::vector<CycScalar> coeffs(basis.size(), ctx.zero());
  for (const auto& [i, c] : r) {
    if (i < ambient) return std::nullopt;
    coeffs[i - ambient] = -c;
  }
  return coeffs;
}

DenseMatrix::DenseMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols, ctx.zero()) {}

SparseVec DenseMatrix::row(std::size_t i) const {
  SparseVec r;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(i, j).is_zero()) r.emplace(j, at(i, j));
  return r;
}

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols_ != y.rows_) throw MalformedInput("matrix shape mismatch");
  DenseMatrix z(*x.ctx_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const CycScalar& a = x.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y.at(k, j).is_zero()) z.at(i, j) += a * y.at(k, j);
    }
  return z;
}

bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

std::size_t rank_of(const DenseMatrix& m) {
  SpanBasis s(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  return s.dim();
}

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, a[0].context().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c = a;
  if (c.size() < b.size()) {
    const auto& ctx = b[0].context();
    c.resize(b.size(), ctx.zero());
  }
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  poly_trim(c);
  return c;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * mpq_class(static_cast<long>(i)));
  poly_trim(d);
  return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero();
  Poly r = a;
  poly_trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  const auto& ctx = b[0].context();
  Poly q(r.size() - b.size() + 1, ctx.zero());
  const CycScalar lead_inv = b.back().inv();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const CycScalar c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= c * b[k];
    r.pop_back();
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  const CycScalar inv = p.back().inv();
  Poly m;
  for (const auto& c : p) m.push_back(c * inv);
  return m;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  poly_trim(x);
  poly_trim(y);
  while (!y.empty()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
  const auto& ctx = (a.empty() ? b : a).at(0).context();
  Poly r0 = a, r1 = b, s0{ctx.one()}, s1{}, t0{}, t1{ctx.one()};
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const CycScalar inv = r0.back().inv();
  for (auto& c : r0) c *= inv;
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  return {r0, s0, t0};
}

std::map<std::size_t, Poly> squarefree_decomposition(const Poly& p) {
  std::map<std::size_t, Poly> out;
  if (p.size() <= 1) return out;
  const Poly f = poly_monic(p);
  const Poly df = poly_derivative(f);
  Poly a = poly_gcd(f, df);
  Poly b = poly_divmod(f, a).first;
  Poly c = poly_divmod(df, a).first;
  Poly d = poly_sub(c, poly_derivative(b));
  for (std::size_t i = 1; b.size() > 1; ++i) {
    a = poly_gcd(b, d);
    if (a.size() > 1) out.emplace(i, a);
    b = poly_divmod(b, a).first;
    c = poly_divmod(d, a).first;
    d = poly_sub(c, poly_derivative(b));
  }
  return out;
}

Poly characteristic_polynomial(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw MalformedInput("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  DenseMatrix h = m;
  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && h.at(piv, col - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col));
    }
    const CycScalar t_inv = h.at(col, col - 1).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (h.at(i, col - 1).is_zero()) continue;
      const CycScalar u = h.at(i, col - 1) * t_inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!h.at(col, j).is_zero()) h.at(i, j) -= u * h.at(col, j);
      for (std::size_t r = 0; r < n; ++r)
        if (!h.at(r, i).is_zero()) h.at(r, col) += u * h.at(r, i);
    }
  }
  // 1-indexed recurrence on the Hessenberg form
  auto H = [&](std::size_t a, std::size_t b) -> const CycScalar& { return h.at(a - 1, b - 1); };
  std::vector<Poly> p(n + 1);
  p[0] = Poly{ctx.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly shifted(p[k - 1].size() + 1, ctx.zero());
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      shifted[i + 1] += p[k - 1][i];
      shifted[i] -= H(k, k) * p[k - 1][i];
    }
    CycScalar t = ctx.one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= H(i + 1, i);
      if (t.is_zero()) break;
      const CycScalar coef = t * H(i, k);
      if (!coef.is_zero())
        for (std::size_t j = 0; j < p[i - 1].size(); ++j) shifted[j] -= coef * p[i - 1][j];
    }
    poly_trim(shifted);
    p[k] = std::move(shifted);
  }
  return p[n];
}

}  // namespace hopfforge
