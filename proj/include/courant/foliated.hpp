#pragma once

#include "courant/matrix.hpp"
#include "courant/ring.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace courant {

struct ChartMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coordinate chart R^n with the foliation spanned by the first k coordinate fields.
struct Chart {
  std::size_t n = 0;
  std::size_t k = 0;
  friend bool operator==(const Chart&, const Chart&) = default;
};

void require_same(const Chart& a, const Chart& b, const char* where);

// Section of F: k polynomial components along d/dx_0 .. d/dx_{k-1}.
struct FVec {
  Chart chart;
  std::vector<Poly> v;

  FVec() = default;
  explicit FVec(Chart c);
  static FVec coord(Chart c, std::size_t i);  // d/dx_i, i < k
  bool is_zero() const;
  friend FVec operator+(FVec a, const FVec& b);
  friend FVec operator-(FVec a, const FVec& b);
  friend FVec operator*(const Poly& f, FVec a);
  friend bool operator==(const FVec&, const FVec&) = default;
};

// Vector field on the whole chart whose transverse components depend only on the
// transverse coordinates, so that it preserves F.
struct ProjVec {
  Chart chart;
  std::vector<Poly> v;  // n components

  ProjVec() = default;
  explicit ProjVec(Chart c);
  static ProjVec from(const FVec& x);
  bool is_projectable() const;
  // Throws std::invalid_argument naming the first offending component.
  void require_projectable() const;
  friend ProjVec operator+(ProjVec a, const ProjVec& b);
  friend ProjVec operator-(ProjVec a, const ProjVec& b);
  friend bool operator==(const ProjVec&, const ProjVec&) = default;
};

// Strictly increasing list of foliated coordinate indices.
using Index = std::vector<std::size_t>;

// Sorts `slots`, returning the sign of the permutation, or nullopt on a repeat.
std::optional<std::pair<Index, int>> sort_with_sign(std::vector<std::size_t> slots);

// Tangential p-form: sum over increasing I of coeff_I dx^I, I inside {0..k-1}.
class TForm {
 public:
  TForm() = default;
  TForm(Chart c, std::size_t degree);
  static TForm function(Chart c, const Poly& f);
  static TForm basis(Chart c, const Index& idx);
  static TForm basis(Chart c, const Index& idx, const Poly& coeff);

  const Chart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  const std::map<Index, Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Poly get(const Index& idx) const;
  // Adds f dx^{slots}; slots need not be sorted.
  void add(const std::vector<std::size_t>& slots, const Poly& f);
  // Value on the ordered coordinate fields d/dx_{slots[0]}, ...
  Poly on_coords(const std::vector<std::size_t>& slots) const;
  // The 0-form coefficient (degree must be 0).
  Poly as_function() const;

  TForm& operator+=(const TForm& o);
  TForm& operator-=(const TForm& o);
  friend TForm operator+(TForm a, const TForm& b) { return a += b; }
  friend TForm operator-(TForm a, const TForm& b) { return a -= b; }
  friend TForm operator-(TForm a) { return a * Rat(-1); }
  friend TForm operator*(TForm a, const Rat& c);
  friend TForm operator*(const Rat& c, TForm a) { return std::move(a) * c; }
  friend TForm operator*(const Poly& f, const TForm& a);
  // Zero forms compare equal whatever their nominal degree.
  friend bool operator==(const TForm& a, const TForm& b) {
    return a.chart_ == b.chart_ && a.coeffs_ == b.coeffs_ && (a.degree_ == b.degree_ || a.coeffs_.empty());
  }
  friend bool operator!=(const TForm& a, const TForm& b) { return !(a == b); }

 private:
  void check(const TForm& o) const;
  Chart chart_;
  std::size_t degree_ = 0;
  std::map<Index, Poly> coeffs_;
};

// X.f for a section of F or a projectable field.
Poly apply(const FVec& x, const Poly& f);
Poly apply(const ProjVec& x, const Poly& f);

TForm wedge(const TForm& a, const TForm& b);
TForm interior(const FVec& x, const TForm& w);
TForm exterior_d(const TForm& w);
TForm lie_derivative(const FVec& x, const TForm& w);
TForm lie_derivative(const ProjVec& x, const TForm& w);
// w(X_1, ..., X_p) for sections of F.
Poly evaluate(const TForm& w, const std::vector<FVec>& xs);

// Lie bracket of vector fields.
FVec bracket(const FVec& x, const FVec& y);
FVec bracket(const ProjVec& x, const FVec& u);
ProjVec bracket(const ProjVec& x, const ProjVec& y);

// Affine foliated diffeomorphism x -> L x + c, with L preserving span(d/dx_0..d/dx_{k-1}).
class FolAffine {
 public:
  // Throws std::invalid_argument when L is singular or mixes transverse into
  // foliated directions.
  FolAffine(Chart c, RatMatrix L, std::vector<Rat> shift);
  static FolAffine identity(Chart c);

  const Chart& chart() const { return chart_; }
  const RatMatrix& L() const { return L_; }
  const std::vector<Rat>& shift() const { return c_; }
  bool is_identity() const;

  FolAffine inverse() const;
  // (*this) o psi
  FolAffine compose(const FolAffine& psi) const;

  // f o phi
  Poly pull(const Poly& f) const;
  TForm pullback(const TForm& w) const;
  // phi_* X, evaluated at the image point.
  FVec push(const FVec& x) const;
  ProjVec push(const ProjVec& x) const;

  friend bool operator==(const FolAffine& a, const FolAffine& b) {
    return a.chart_ == b.chart_ && a.L_ == b.L_ && a.c_ == b.c_;
  }

 private:
  Chart chart_;
  RatMatrix L_;
  std::vector<Rat> c_;
  std::vector<Poly> subs_;  // coordinate images, used by pull()
};

}  // namespace courant
