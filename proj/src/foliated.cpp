#include "courant/foliated.hpp"

#include <algorithm>
#include <string>

namespace courant {

void require_same(const Chart& a, const Chart& b, const char* where) {
  if (!(a == b))
    throw ChartMismatch(std::string(where) + ": chart (" + std::to_string(a.n) + "," +
                        std::to_string(a.k) + ") vs (" + std::to_string(b.n) + "," +
                        std::to_string(b.k) + ")");
}

// ---- vector fields

FVec::FVec(Chart c) : chart(c), v(c.k, Poly(c.n)) {}

FVec FVec::coord(Chart c, std::size_t i) {
  if (i >= c.k) throw std::out_of_range("coordinate field outside the foliation");
  FVec x(c);
  x.v[i] = Poly(c.n, Rat(1));
  return x;
}

bool FVec::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

FVec operator+(FVec a, const FVec& b) {
  require_same(a.chart, b.chart, "FVec +");
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
  return a;
}

FVec operator-(FVec a, const FVec& b) {
  require_same(a.chart, b.chart, "FVec -");
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] -= b.v[i];
  return a;
}

FVec operator*(const Poly& f, FVec a) {
  for (auto& p : a.v) p = f * p;
  return a;
}

ProjVec::ProjVec(Chart c) : chart(c), v(c.n, Poly(c.n)) {}

ProjVec ProjVec::from(const FVec& x) {
  ProjVec p(x.chart);
  for (std::size_t i = 0; i < x.v.size(); ++i) p.v[i] = x.v[i];
  return p;
}

bool ProjVec::is_projectable() const {
  for (std::size_t j = chart.k; j < chart.n; ++j)
    for (std::size_t i = 0; i < chart.k; ++i)
      if (v[j].depends_on(i)) return false;
  return true;
}

void ProjVec::require_projectable() const {
  for (std::size_t j = chart.k; j < chart.n; ++j)
    for (std::size_t i = 0; i < chart.k; ++i)
      if (v[j].depends_on(i))
        throw std::invalid_argument("vector field not projectable: component " + std::to_string(j) +
                                    " depends on foliated coordinate " + std::to_string(i));
}

ProjVec operator+(ProjVec a, const ProjVec& b) {
  require_same(a.chart, b.chart, "ProjVec +");
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
  return a;
}

ProjVec operator-(ProjVec a, const ProjVec& b) {
  require_same(a.chart, b.chart, "ProjVec -");
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] -= b.v[i];
  return a;
}

Poly apply(const FVec& x, const Poly& f) {
  Poly r(f.nvars());
  for (std::size_t i = 0; i < x.v.size(); ++i)
    if (!x.v[i].is_zero()) r += x.v[i] * partial(f, i);
  return r;
}

Poly apply(const ProjVec& x, const Poly& f) {
  Poly r(f.nvars());
  for (std::size_t i = 0; i < x.v.size(); ++i)
    if (!x.v[i].is_zero()) r += x.v[i] * partial(f, i);
  return r;
}

FVec bracket(const FVec& x, const FVec& y) {
  require_same(x.chart, y.chart, "bracket");
  FVec r(x.chart);
  for (std::size_t l = 0; l < r.v.size(); ++l) r.v[l] = apply(x, y.v[l]) - apply(y, x.v[l]);
  return r;
}

FVec bracket(const ProjVec& x, const FVec& u) {
  require_same(x.chart, u.chart, "bracket");
  FVec r(u.chart);
  for (std::size_t l = 0; l < r.v.size(); ++l) r.v[l] = apply(x, u.v[l]) - apply(u, x.v[l]);
  return r;
}

ProjVec bracket(const ProjVec& x, const ProjVec& y) {
  require_same(x.chart, y.chart, "bracket");
  ProjVec r(x.chart);
  for (std::size_t l = 0; l < r.v.size(); ++l) r.v[l] = apply(x, y.v[l]) - apply(y, x.v[l]);
  return r;
}

// ---- forms

std::optional<std::pair<Index, int>> sort_with_sign(std::vector<std::size_t> s) {
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
      if (s[j - 1] == s[j]) return std::nullopt;
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  return std::make_pair(std::move(s), sign);
}

// Degrees above k are allowed; such forms are identically zero.
TForm::TForm(Chart c, std::size_t degree) : chart_(c), degree_(degree) {}

TForm TForm::function(Chart c, const Poly& f) {
  TForm w(c, 0);
  w.add({}, f);
  return w;
}

TForm TForm::basis(Chart c, const Index& idx) { return basis(c, idx, Poly(c.n, Rat(1))); }

TForm TForm::basis(Chart c, const Index& idx, const Poly& coeff) {
  TForm w(c, idx.size());
  w.add(idx, coeff);
  return w;
}

Poly TForm::get(const Index& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Poly(chart_.n) : it->second;
}

void TForm::add(const std::vector<std::size_t>& slots, const Poly& f) {
  if (slots.size() != degree_) throw std::invalid_argument("index length differs from form degree");
  if (f.nvars() != chart_.n) throw ChartMismatch("coefficient arity differs from chart dimension");
  for (auto s : slots)
    if (s >= chart_.k) throw std::out_of_range("form index outside the foliation");
  if (f.is_zero()) return;
  auto sorted = sort_with_sign(slots);
  if (!sorted) return;
  auto& [idx, sign] = *sorted;
  auto [it, fresh] = coeffs_.emplace(idx, sign > 0 ? f : -f);
  if (fresh) return;
  if (sign > 0)
    it->second += f;
  else
    it->second -= f;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Poly TForm::on_coords(const std::vector<std::size_t>& slots) const {
  if (slots.size() != degree_) throw std::invalid_argument("wrong number of arguments for form");
  auto sorted = sort_with_sign(slots);
  if (!sorted) return Poly(chart_.n);
  Poly v = get(sorted->first);
  return sorted->second > 0 ? v : -v;
}

Poly TForm::as_function() const {
  if (degree_ != 0) throw std::invalid_argument("not a 0-form");
  return get({});
}

// A zero form is compatible with every degree.
void TForm::check(const TForm& o) const {
  require_same(chart_, o.chart_, "form arithmetic");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("degree mismatch in form arithmetic");
}

TForm& TForm::operator+=(const TForm& o) {
  check(o);
  if (o.is_zero()) return *this;
  degree_ = o.degree_;
  for (const auto& [idx, f] : o.coeffs_) add(idx, f);
  return *this;
}

TForm& TForm::operator-=(const TForm& o) {
  check(o);
  if (o.is_zero()) return *this;
  degree_ = o.degree_;
  for (const auto& [idx, f] : o.coeffs_) add(idx, -f);
  return *this;
}

TForm operator*(TForm a, const Rat& c) {
  if (c == 0) return TForm(a.chart_, a.degree_);
  for (auto& [idx, f] : a.coeffs_) f *= c;
  return a;
}

TForm operator*(const Poly& f, const TForm& a) {
  TForm r(a.chart_, a.degree_);
  if (f.is_zero()) return r;
  for (const auto& [idx, g] : a.coeffs_) r.add(idx, f * g);
  return r;
}

TForm wedge(const TForm& a, const TForm& b) {
  require_same(a.chart(), b.chart(), "wedge");
  TForm r(a.chart(), a.degree() + b.degree());
  std::vector<std::size_t> slots;
  for (const auto& [i, f] : a.coeffs()) {
    for (const auto& [j, g] : b.coeffs()) {
      slots = i;
      slots.insert(slots.end(), j.begin(), j.end());
      r.add(slots, f * g);
    }
  }
  return r;
}

TForm interior(const FVec& x, const TForm& w) {
  require_same(x.chart, w.chart(), "interior");
  if (w.degree() == 0) return TForm(w.chart(), 0);
  TForm r(w.chart(), w.degree() - 1);
  for (const auto& [idx, f] : w.coeffs()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Poly& xj = x.v[idx[j]];
      if (xj.is_zero()) continue;
      Index rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      r.add(rest, (j % 2 ? -xj : xj) * f);
    }
  }
  return r;
}

TForm exterior_d(const TForm& w) {
  const Chart& c = w.chart();
  TForm r(c, w.degree() + 1);
  std::vector<std::size_t> slots;
  for (const auto& [idx, f] : w.coeffs())
    for (std::size_t l = 0; l < c.k; ++l) {
      slots.assign(1, l);
      slots.insert(slots.end(), idx.begin(), idx.end());
      r.add(slots, partial(f, l));
    }
  return r;
}

TForm lie_derivative(const ProjVec& x, const TForm& w) {
  require_same(x.chart, w.chart(), "lie_derivative");
  const Chart& c = w.chart();
  // L_X dx^i restricted to F is sum_l d_l X^i dx^l; extend as a derivation.
  std::vector<TForm> ldx;
  for (std::size_t i = 0; i < c.k; ++i) {
    TForm t(c, 1);
    for (std::size_t l = 0; l < c.k; ++l) t.add({l}, partial(x.v[i], l));
    ldx.push_back(std::move(t));
  }
  TForm r(c, w.degree());
  for (const auto& [idx, f] : w.coeffs()) {
    r.add(idx, apply(x, f));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      TForm term = TForm::function(c, f);
      for (std::size_t m = 0; m < idx.size(); ++m)
        term = wedge(term, m == j ? ldx[idx[m]] : TForm::basis(c, {idx[m]}));
      r += term;
    }
  }
  return r;
}

TForm lie_derivative(const FVec& x, const TForm& w) { return lie_derivative(ProjVec::from(x), w); }

Poly evaluate(const TForm& w, const std::vector<FVec>& xs) {
  if (xs.size() != w.degree()) throw std::invalid_argument("wrong number of arguments for form");
  TForm t = w;
  // w(X1..Xp) = i_{Xp} ... i_{X1} w
  for (const auto& x : xs) t = interior(x, t);
  return t.as_function();
}

// ---- affine maps

FolAffine::FolAffine(Chart c, RatMatrix L, std::vector<Rat> shift)
    : chart_(c), L_(std::move(L)), c_(std::move(shift)) {
  if (L_.rows() != c.n || L_.cols() != c.n || c_.size() != c.n)
    throw std::invalid_argument("affine map shape does not match chart");
  if (!L_.inverse()) throw std::invalid_argument("affine map is not invertible");
  for (std::size_t j = c.k; j < c.n; ++j)
    for (std::size_t i = 0; i < c.k; ++i)
      if (L_(j, i) != 0)
        throw std::invalid_argument("affine map does not preserve the foliation: L(" +
                                    std::to_string(j) + "," + std::to_string(i) + ") != 0");
  for (std::size_t i = 0; i < c.n; ++i) {
    Poly s(c.n, c_[i]);
    for (std::size_t j = 0; j < c.n; ++j)
      if (L_(i, j) != 0) s += Poly::variable(c.n, j) * L_(i, j);
    subs_.push_back(std::move(s));
  }
}

FolAffine FolAffine::identity(Chart c) {
  return FolAffine(c, RatMatrix::identity(c.n), std::vector<Rat>(c.n));
}

bool FolAffine::is_identity() const {
  return L_.is_identity() && std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

FolAffine FolAffine::inverse() const {
  RatMatrix Li = *L_.inverse();
  std::vector<Rat> ci(chart_.n);
  for (std::size_t i = 0; i < chart_.n; ++i)
    for (std::size_t j = 0; j < chart_.n; ++j) ci[i] -= Li(i, j) * c_[j];
  return FolAffine(chart_, Li, ci);
}

FolAffine FolAffine::compose(const FolAffine& psi) const {
  require_same(chart_, psi.chart_, "compose");
  std::vector<Rat> c = c_;
  for (std::size_t i = 0; i < chart_.n; ++i)
    for (std::size_t j = 0; j < chart_.n; ++j) c[i] += L_(i, j) * psi.c_[j];
  return FolAffine(chart_, L_ * psi.L_, c);
}

Poly FolAffine::pull(const Poly& f) const {
  if (f.nvars() != chart_.n) throw ChartMismatch("pull: polynomial arity differs from chart");
  return f.substitute(subs_);
}

TForm FolAffine::pullback(const TForm& w) const {
  require_same(chart_, w.chart(), "pullback");
  std::vector<TForm> pdx;
  for (std::size_t i = 0; i < chart_.k; ++i) {
    TForm t(chart_, 1);
    for (std::size_t j = 0; j < chart_.k; ++j)
      if (L_(i, j) != 0) t.add({j}, Poly(chart_.n, L_(i, j)));
    pdx.push_back(std::move(t));
  }
  TForm r(chart_, w.degree());
  for (const auto& [idx, f] : w.coeffs()) {
    TForm term = TForm::function(chart_, pull(f));
    for (auto i : idx) term = wedge(term, pdx[i]);
    r += term;
  }
  return r;
}

FVec FolAffine::push(const FVec& x) const {
  require_same(chart_, x.chart, "push");
  FolAffine inv = inverse();
  FVec r(chart_);
  for (std::size_t j = 0; j < chart_.k; ++j) {
    if (x.v[j].is_zero()) continue;
    Poly xj = inv.pull(x.v[j]);
    for (std::size_t i = 0; i < chart_.k; ++i)
      if (L_(i, j) != 0) r.v[i] += xj * L_(i, j);
  }
  return r;
}

ProjVec FolAffine::push(const ProjVec& x) const {
  require_same(chart_, x.chart, "push");
  FolAffine inv = inverse();
  ProjVec r(chart_);
  for (std::size_t j = 0; j < chart_.n; ++j) {
    if (x.v[j].is_zero()) continue;
    Poly xj = inv.pull(x.v[j]);
    for (std::size_t i = 0; i < chart_.n; ++i)
      if (L_(i, j) != 0) r.v[i] += xj * L_(i, j);
  }
  return r;
}

}  // namespace courant
