#pragma once

#include "courant/foliated.hpp"
#include "courant/quadratic_lie.hpp"

#include <vector>

namespace courant {

// Tangential p-form with values in the trivial Q-bundle: one TForm per basis vector.
struct QForm {
  Chart chart;
  std::size_t degree = 0;
  std::vector<TForm> comp;

  QForm() = default;
  QForm(Chart c, std::size_t dim, std::size_t degree);
  static QForm section(Chart c, const std::vector<Poly>& s);
  // alpha (x) e_a
  static QForm simple(const TForm& alpha, std::size_t dim, std::size_t a);

  std::size_t dim() const { return comp.size(); }
  bool is_zero() const;
  std::vector<Poly> as_section() const;  // degree 0 only
  // Value on ordered coordinate fields.
  std::vector<Poly> on_coords(const std::vector<std::size_t>& slots) const;

  QForm& operator+=(const QForm& o);
  QForm& operator-=(const QForm& o);
  friend QForm operator+(QForm a, const QForm& b) { return a += b; }
  friend QForm operator-(QForm a, const QForm& b) { return a -= b; }
  friend QForm operator-(QForm a) { return a * Rat(-1); }
  friend QForm operator*(QForm a, const Rat& c);
  friend QForm operator*(const Rat& c, QForm a) { return std::move(a) * c; }
  friend QForm operator*(const Poly& f, QForm a);
  friend bool operator==(const QForm& a, const QForm& b) {
    return a.chart == b.chart && a.comp == b.comp && (a.degree == b.degree || a.is_zero());
  }
};

// Tangential p-form with values in End(Q); entry (b, a) is the e_b component of the image of e_a.
struct EndQForm {
  Chart chart;
  std::size_t dim = 0;
  std::size_t degree = 0;
  std::vector<TForm> e;

  EndQForm() = default;
  EndQForm(Chart c, std::size_t dim, std::size_t degree);
  TForm& at(std::size_t b, std::size_t a) { return e[b * dim + a]; }
  const TForm& at(std::size_t b, std::size_t a) const { return e[b * dim + a]; }
  bool is_zero() const;
  // Value on ordered coordinate fields, as a polynomial matrix.
  PolyMatrix on_coords(const std::vector<std::size_t>& slots) const;

  friend EndQForm operator+(EndQForm a, const EndQForm& b);
  friend EndQForm operator-(EndQForm a, const EndQForm& b);
  friend EndQForm operator*(EndQForm a, const Rat& c);
  friend bool operator==(const EndQForm& a, const EndQForm& b) {
    return a.chart == b.chart && a.dim == b.dim && a.e == b.e && (a.degree == b.degree || a.is_zero());
  }
};

QForm wedge(const TForm& a, const QForm& s);
QForm wedge(const EndQForm& m, const QForm& s);
EndQForm wedge(const EndQForm& m, const EndQForm& n);

// <u ^ v>: scalar form, pairing values with the form of Q.
TForm pair_wedge(const QLie& q, const QForm& u, const QForm& v);
// [u ^ v]: Q-valued form, bracketing values.
QForm bracket_wedge(const QLie& q, const QForm& u, const QForm& v);

QForm interior(const FVec& x, const QForm& w);
EndQForm interior(const FVec& x, const EndQForm& w);
std::vector<Poly> evaluate(const QForm& w, const std::vector<FVec>& xs);
QForm exterior_d(const QForm& w);
EndQForm exterior_d(const EndQForm& w);

// omega as an End(Q)-valued 1-form, and back.
EndQForm connection_form(const Conn& conn);
Conn conn_from_form(const EndQForm& omega);

// d_nabla w = dw + omega ^ w
QForm d_nabla(const Conn& conn, const QForm& w);
// F(d_i, d_j) = d_i w_j - d_j w_i + [w_i, w_j]
EndQForm curvature(const Conn& conn);
// d_nabla(d_nabla w) == F ^ w
bool check_d_nabla_squared(const Conn& conn, const QForm& w);

// ad_w: the End(Q)-valued form X.. -> [w(X..), -].
EndQForm ad_of(const QLie& q, const QForm& w);

// A^dagger(s): the 1-form X -> <A(X), s>, for a Q-valued 1-form A.
TForm dagger(const QLie& q, const QForm& a, const std::vector<Poly>& s);
// B^sharp(X) = i_X B.
TForm sharp(const TForm& b, const FVec& x);

// Lie derivative along (X, Theta) with Theta = X-derivative + theta:
// (L w)(X1..) = Theta(w(X1..)) - sum w(.., {X, Xi}, ..).
QForm lie_xtheta(const ProjVec& x, const PolyMatrix& theta, const QForm& w);
// L_X on each component.
QForm lie_derivative(const ProjVec& x, const QForm& w);

// Pointwise action of a constant matrix on values, and conjugation of End-valued forms.
QForm apply(const RatMatrix& t, const QForm& w);
EndQForm conjugate(const RatMatrix& t, const RatMatrix& tinv, const EndQForm& m);
QForm pullback(const FolAffine& phi, const QForm& w);
EndQForm pullback(const FolAffine& phi, const EndQForm& m);

}  // namespace courant
