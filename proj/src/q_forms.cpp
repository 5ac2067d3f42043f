#include "courant/q_forms.hpp"

#include <algorithm>

namespace courant {

QForm::QForm(Chart c, std::size_t dim, std::size_t degree)
    : chart(c), degree(degree), comp(dim, TForm(c, degree)) {}

QForm QForm::section(Chart c, const std::vector<Poly>& s) {
  QForm w(c, s.size(), 0);
  for (std::size_t a = 0; a < s.size(); ++a) w.comp[a] = TForm::function(c, s[a]);
  return w;
}

QForm QForm::simple(const TForm& alpha, std::size_t dim, std::size_t a) {
  QForm w(alpha.chart(), dim, alpha.degree());
  w.comp.at(a) = alpha;
  return w;
}

bool QForm::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const TForm& t) { return t.is_zero(); });
}

std::vector<Poly> QForm::as_section() const {
  std::vector<Poly> s;
  for (const auto& t : comp) s.push_back(t.as_function());
  return s;
}

std::vector<Poly> QForm::on_coords(const std::vector<std::size_t>& slots) const {
  std::vector<Poly> s;
  for (const auto& t : comp) s.push_back(t.on_coords(slots));
  return s;
}

static void check_q(const QForm& a, const QForm& b) {
  require_same(a.chart, b.chart, "Q-form arithmetic");
  if (a.dim() != b.dim() || (a.degree != b.degree && !a.is_zero() && !b.is_zero()))
    throw std::invalid_argument("Q-form shape mismatch");
}

QForm& QForm::operator+=(const QForm& o) {
  check_q(*this, o);
  if (o.is_zero()) return *this;
  degree = o.degree;
  for (std::size_t a = 0; a < comp.size(); ++a) comp[a] += o.comp[a];
  return *this;
}

QForm& QForm::operator-=(const QForm& o) {
  check_q(*this, o);
  if (o.is_zero()) return *this;
  degree = o.degree;
  for (std::size_t a = 0; a < comp.size(); ++a) comp[a] -= o.comp[a];
  return *this;
}

QForm operator*(QForm a, const Rat& c) {
  for (auto& t : a.comp) t = t * c;
  return a;
}

QForm operator*(const Poly& f, QForm a) {
  for (auto& t : a.comp) t = f * t;
  return a;
}

EndQForm::EndQForm(Chart c, std::size_t dim, std::size_t degree)
    : chart(c), dim(dim), degree(degree), e(dim * dim, TForm(c, degree)) {}

bool EndQForm::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](const TForm& t) { return t.is_zero(); });
}

PolyMatrix EndQForm::on_coords(const std::vector<std::size_t>& slots) const {
  PolyMatrix m(dim, chart.n);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t a = 0; a < dim; ++a) m(b, a) = at(b, a).on_coords(slots);
  return m;
}

static void check_end(const EndQForm& a, const EndQForm& b) {
  require_same(a.chart, b.chart, "End-form arithmetic");
  if (a.dim != b.dim || (a.degree != b.degree && !a.is_zero() && !b.is_zero()))
    throw std::invalid_argument("End-form shape mismatch");
}

EndQForm operator+(EndQForm a, const EndQForm& b) {
  check_end(a, b);
  if (b.is_zero()) return a;
  a.degree = b.degree;
  for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
  return a;
}

EndQForm operator-(EndQForm a, const EndQForm& b) {
  check_end(a, b);
  if (b.is_zero()) return a;
  a.degree = b.degree;
  for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] -= b.e[i];
  return a;
}

EndQForm operator*(EndQForm a, const Rat& c) {
  for (auto& t : a.e) t = t * c;
  return a;
}

QForm wedge(const TForm& a, const QForm& s) {
  require_same(a.chart(), s.chart, "wedge");
  QForm r(s.chart, s.dim(), a.degree() + s.degree);
  for (std::size_t i = 0; i < s.dim(); ++i) r.comp[i] = wedge(a, s.comp[i]);
  return r;
}

QForm wedge(const EndQForm& m, const QForm& s) {
  require_same(m.chart, s.chart, "wedge");
  if (m.dim != s.dim()) throw std::invalid_argument("End-form and Q-form rank mismatch");
  QForm r(s.chart, s.dim(), m.degree + s.degree);
  for (std::size_t b = 0; b < m.dim; ++b)
    for (std::size_t a = 0; a < m.dim; ++a)
      if (!m.at(b, a).is_zero() && !s.comp[a].is_zero()) r.comp[b] += wedge(m.at(b, a), s.comp[a]);
  return r;
}

EndQForm wedge(const EndQForm& m, const EndQForm& n) {
  require_same(m.chart, n.chart, "wedge");
  if (m.dim != n.dim) throw std::invalid_argument("End-form rank mismatch");
  EndQForm r(m.chart, m.dim, m.degree + n.degree);
  for (std::size_t b = 0; b < m.dim; ++b)
    for (std::size_t a = 0; a < m.dim; ++a)
      for (std::size_t c = 0; c < m.dim; ++c)
        if (!m.at(b, a).is_zero() && !n.at(a, c).is_zero()) r.at(b, c) += wedge(m.at(b, a), n.at(a, c));
  return r;
}

TForm pair_wedge(const QLie& q, const QForm& u, const QForm& v) {
  require_same(u.chart, v.chart, "pair_wedge");
  if (u.dim() != q.dim() || v.dim() != q.dim()) throw std::invalid_argument("Q-form rank differs from Q");
  TForm r(u.chart, u.degree + v.degree);
  const RatMatrix& g = q.gram();
  for (std::size_t a = 0; a < q.dim(); ++a) {
    if (u.comp[a].is_zero()) continue;
    for (std::size_t b = 0; b < q.dim(); ++b)
      if (g(a, b) != 0 && !v.comp[b].is_zero()) r += wedge(u.comp[a], v.comp[b]) * g(a, b);
  }
  return r;
}

QForm bracket_wedge(const QLie& q, const QForm& u, const QForm& v) {
  require_same(u.chart, v.chart, "bracket_wedge");
  if (u.dim() != q.dim() || v.dim() != q.dim()) throw std::invalid_argument("Q-form rank differs from Q");
  QForm r(u.chart, q.dim(), u.degree + v.degree);
  for (std::size_t a = 0; a < q.dim(); ++a) {
    if (u.comp[a].is_zero()) continue;
    for (std::size_t b = 0; b < q.dim(); ++b) {
      if (v.comp[b].is_zero()) continue;
      TForm ab;
      bool have = false;
      for (std::size_t c = 0; c < q.dim(); ++c) {
        if (q.c(a, b, c) == 0) continue;
        if (!have) ab = wedge(u.comp[a], v.comp[b]), have = true;
        r.comp[c] += ab * q.c(a, b, c);
      }
    }
  }
  return r;
}

QForm interior(const FVec& x, const QForm& w) {
  QForm r(w.chart, w.dim(), w.degree == 0 ? 0 : w.degree - 1);
  for (std::size_t a = 0; a < w.dim(); ++a) r.comp[a] = interior(x, w.comp[a]);
  return r;
}

EndQForm interior(const FVec& x, const EndQForm& w) {
  EndQForm r(w.chart, w.dim, w.degree == 0 ? 0 : w.degree - 1);
  for (std::size_t i = 0; i < w.e.size(); ++i) r.e[i] = interior(x, w.e[i]);
  return r;
}

std::vector<Poly> evaluate(const QForm& w, const std::vector<FVec>& xs) {
  std::vector<Poly> s;
  for (const auto& t : w.comp) s.push_back(evaluate(t, xs));
  return s;
}

QForm exterior_d(const QForm& w) {
  QForm r(w.chart, w.dim(), w.degree + 1);
  for (std::size_t a = 0; a < w.dim(); ++a) r.comp[a] = exterior_d(w.comp[a]);
  return r;
}

EndQForm exterior_d(const EndQForm& w) {
  EndQForm r(w.chart, w.dim, w.degree + 1);
  for (std::size_t i = 0; i < w.e.size(); ++i) r.e[i] = exterior_d(w.e[i]);
  return r;
}

EndQForm connection_form(const Conn& conn) {
  EndQForm m(conn.chart, conn.dim, 1);
  for (std::size_t i = 0; i < conn.chart.k; ++i)
    for (std::size_t b = 0; b < conn.dim; ++b)
      for (std::size_t a = 0; a < conn.dim; ++a)
        if (!conn.omega[i](b, a).is_zero()) m.at(b, a).add({i}, conn.omega[i](b, a));
  return m;
}

Conn conn_from_form(const EndQForm& omega) {
  if (omega.degree != 1) throw std::invalid_argument("connection form must have degree 1");
  Conn c(omega.chart, omega.dim);
  for (std::size_t i = 0; i < omega.chart.k; ++i)
    for (std::size_t b = 0; b < omega.dim; ++b)
      for (std::size_t a = 0; a < omega.dim; ++a) c.omega[i](b, a) = omega.at(b, a).get({i});
  return c;
}

QForm d_nabla(const Conn& conn, const QForm& w) {
  require_same(conn.chart, w.chart, "d_nabla");
  if (conn.dim != w.dim()) throw std::invalid_argument("connection rank differs from form rank");
  return exterior_d(w) + wedge(connection_form(conn), w);
}

EndQForm curvature(const Conn& conn) {
  EndQForm om = connection_form(conn);
  return exterior_d(om) + wedge(om, om);
}

bool check_d_nabla_squared(const Conn& conn, const QForm& w) {
  return d_nabla(conn, d_nabla(conn, w)) == wedge(curvature(conn), w);
}

EndQForm ad_of(const QLie& q, const QForm& w) {
  if (w.dim() != q.dim()) throw std::invalid_argument("Q-form rank differs from Q");
  EndQForm m(w.chart, q.dim(), w.degree);
  for (std::size_t c = 0; c < q.dim(); ++c) {
    if (w.comp[c].is_zero()) continue;
    for (std::size_t a = 0; a < q.dim(); ++a)
      for (std::size_t b = 0; b < q.dim(); ++b)
        if (q.c(c, a, b) != 0) m.at(b, a) += w.comp[c] * q.c(c, a, b);
  }
  return m;
}

TForm dagger(const QLie& q, const QForm& a, const std::vector<Poly>& s) {
  if (a.degree != 1) throw std::invalid_argument("dagger expects a Q-valued 1-form");
  if (a.dim() != q.dim() || s.size() != q.dim()) throw std::invalid_argument("rank mismatch in dagger");
  TForm r(a.chart, 1);
  const RatMatrix& g = q.gram();
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (a.comp[i].is_zero()) continue;
    Poly f(a.chart.n);
    for (std::size_t j = 0; j < q.dim(); ++j)
      if (g(i, j) != 0 && !s[j].is_zero()) f += s[j] * g(i, j);
    if (!f.is_zero()) r += f * a.comp[i];
  }
  return r;
}

TForm sharp(const TForm& b, const FVec& x) { return interior(x, b); }

QForm lie_derivative(const ProjVec& x, const QForm& w) {
  QForm r(w.chart, w.dim(), w.degree);
  for (std::size_t a = 0; a < w.dim(); ++a) r.comp[a] = lie_derivative(x, w.comp[a]);
  return r;
}

QForm lie_xtheta(const ProjVec& x, const PolyMatrix& theta, const QForm& w) {
  if (theta.dim() != w.dim()) throw std::invalid_argument("theta rank differs from form rank");
  QForm r = lie_derivative(x, w);
  for (std::size_t b = 0; b < w.dim(); ++b)
    for (std::size_t a = 0; a < w.dim(); ++a)
      if (!theta(b, a).is_zero() && !w.comp[a].is_zero()) r.comp[b] += theta(b, a) * w.comp[a];
  return r;
}

QForm apply(const RatMatrix& t, const QForm& w) {
  QForm r(w.chart, t.rows(), w.degree);
  for (std::size_t b = 0; b < t.rows(); ++b)
    for (std::size_t a = 0; a < t.cols(); ++a)
      if (t(b, a) != 0) r.comp[b] += w.comp[a] * t(b, a);
  return r;
}

EndQForm conjugate(const RatMatrix& t, const RatMatrix& tinv, const EndQForm& m) {
  std::size_t d = m.dim;
  EndQForm r(m.chart, d, m.degree);
  // (T M T^-1)_{bc} = sum T_{ba} M_{ae} Tinv_{ec}
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t a = 0; a < d; ++a) {
      if (t(b, a) == 0) continue;
      for (std::size_t e = 0; e < d; ++e) {
        if (m.at(a, e).is_zero()) continue;
        for (std::size_t c = 0; c < d; ++c)
          if (tinv(e, c) != 0) r.at(b, c) += m.at(a, e) * (t(b, a) * tinv(e, c));
      }
    }
  return r;
}

QForm pullback(const FolAffine& phi, const QForm& w) {
  QForm r(w.chart, w.dim(), w.degree);
  for (std::size_t a = 0; a < w.dim(); ++a) r.comp[a] = phi.pullback(w.comp[a]);
  return r;
}

EndQForm pullback(const FolAffine& phi, const EndQForm& m) {
  EndQForm r(m.chart, m.dim, m.degree);
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = phi.pullback(m.e[i]);
  return r;
}

}  // namespace courant
