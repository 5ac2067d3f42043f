#include "courant/matrix.hpp"

#include <stdexcept>

namespace courant {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  RatMatrix a = *this, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_identity() const { return *this == identity(rows_) && rows_ == cols_; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, l) * b(l, j);
    }
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Rat(-1) * b; }

RatMatrix operator*(const Rat& c, RatMatrix a) {
  for (auto& x : a.a_) x *= c;
  return a;
}

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t nvars)
    : dim_(dim), nvars_(nvars), a_(dim * dim, Poly(nvars)) {}

PolyMatrix PolyMatrix::from(const RatMatrix& m, std::size_t nvars) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix expected");
  PolyMatrix p(m.rows(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly(nvars, m(i, j));
  return p;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  std::vector<Poly> r(dim_, Poly(nvars_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(dim_, nvars_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(a.dim_, a.nvars_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t l = 0; l < a.dim_; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j)
        if (!b(l, j).is_zero()) r(i, j) += a(i, l) * b(l, j);
    }
  return r;
}

PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
  return a;
}

PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
  return a;
}

PolyMatrix operator*(const Poly& f, PolyMatrix a) {
  for (auto& x : a.a_) x = f * x;
  return a;
}

}  // namespace courant
