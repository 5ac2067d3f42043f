#pragma once

#include "courant/foliated.hpp"
#include "courant/matrix.hpp"
#include "courant/report.hpp"

#include <vector>

namespace courant {

// Finite-dimensional Lie algebra with a symmetric bilinear form, in a fixed basis.
// [e_i, e_j] = sum_k c(i,j,k) e_k.
class QLie {
 public:
  QLie() = default;
  // `c` is indexed (i*d + j)*d + k.
  QLie(std::size_t dim, std::vector<Rat> c, RatMatrix gram);
  static QLie abelian(const RatMatrix& gram);

  std::size_t dim() const { return dim_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rat>& constants() const { return c_; }
  const RatMatrix& gram() const { return gram_; }
  bool is_abelian() const;

  // Matrix of ad_{e_i}: column j holds [e_i, e_j].
  RatMatrix ad(std::size_t i) const;
  // Tr(ad_i ad_j).
  RatMatrix killing() const;
  QLie with_gram(RatMatrix g) const { return QLie(dim_, c_, std::move(g)); }

  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  Rat inner(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  // Pointwise versions on polynomial sections of the trivial bundle.
  std::vector<Poly> bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) const;
  Poly inner(const std::vector<Poly>& x, const std::vector<Poly>& y) const;
  // Matrix of ad_s for a polynomial section s.
  PolyMatrix ad(const std::vector<Poly>& s) const;

  friend bool operator==(const QLie& a, const QLie& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.gram_ == b.gram_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> c_;
  RatMatrix gram_;
};

// Antisymmetry, Jacobi, symmetry and nondegeneracy of the form, ad-invariance.
Report validate_qlie(const QLie& q);

// Constant Q-automorphism tau: preserves bracket and form.
Report validate_qaut(const QLie& q, const RatMatrix& tau);

// Connection d + omega on the trivial Q-bundle along F; omega[i] acts for d/dx_i.
struct Conn {
  Chart chart;
  std::size_t dim = 0;
  std::vector<PolyMatrix> omega;  // k matrices

  Conn() = default;
  Conn(Chart c, std::size_t d);  // trivial connection
  // nabla_{d/dx_i} s
  std::vector<Poly> along(std::size_t i, const std::vector<Poly>& s) const;
  // nabla_X s
  std::vector<Poly> covariant(const FVec& x, const std::vector<Poly>& s) const;
  bool is_trivial() const;
  friend bool operator==(const Conn&, const Conn&) = default;
};

// Metric and bracket compatibility, checked on the constant basis sections.
Report validate_conn(const Conn& conn, const QLie& q);

// Helpers on polynomial sections.
std::vector<Poly> zero_section(std::size_t d, std::size_t nvars);
std::vector<Poly> basis_section(std::size_t d, std::size_t nvars, std::size_t a);
std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b);
std::vector<Poly> sub(const std::vector<Poly>& a, const std::vector<Poly>& b);
std::vector<Poly> scale(const Poly& f, const std::vector<Poly>& a);
std::vector<Poly> apply(const RatMatrix& m, const std::vector<Poly>& a);
std::vector<Poly> apply(const FVec& x, const std::vector<Poly>& a);
std::vector<Poly> apply(const ProjVec& x, const std::vector<Poly>& a);
bool is_zero(const std::vector<Poly>& a);

}  // namespace courant
