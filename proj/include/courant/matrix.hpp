#pragma once

#include "courant/ring.hpp"

#include <optional>
#include <vector>

namespace courant {

// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  // nullopt when singular or not square.
  std::optional<RatMatrix> inverse() const;
  bool is_identity() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, RatMatrix a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Square matrix of polynomials (pointwise endomorphisms of a trivial bundle).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t dim, std::size_t nvars);
  static PolyMatrix from(const RatMatrix& m, std::size_t nvars);

  std::size_t dim() const { return dim_; }
  std::size_t nvars() const { return nvars_; }
  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  bool is_zero() const;

  std::vector<Poly> apply(const std::vector<Poly>& v) const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b);
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, PolyMatrix a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.nvars_ == b.nvars_ && a.a_ == b.a_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  std::size_t dim_ = 0, nvars_ = 0;
  std::vector<Poly> a_;
};

inline PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

}  // namespace courant
