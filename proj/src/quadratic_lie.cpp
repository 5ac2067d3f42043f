#include "courant/quadratic_lie.hpp"

#include <algorithm>

namespace courant {

QLie::QLie(std::size_t dim, std::vector<Rat> c, RatMatrix gram)
    : dim_(dim), c_(std::move(c)), gram_(std::move(gram)) {
  if (c_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure constants must have dim^3 entries");
  if (gram_.rows() != dim_ || gram_.cols() != dim_) throw std::invalid_argument("gram must be dim x dim");
}

QLie QLie::abelian(const RatMatrix& gram) {
  std::size_t d = gram.rows();
  return QLie(d, std::vector<Rat>(d * d * d), gram);
}

bool QLie::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

RatMatrix QLie::ad(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

RatMatrix QLie::killing() const {
  RatMatrix kap(dim_, dim_);
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(i));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      RatMatrix p = ads[i] * ads[j];
      for (std::size_t t = 0; t < dim_; ++t) kap(i, j) += p(t, t);
    }
  return kap;
}

std::vector<Rat> QLie::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  std::vector<Rat> r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) r[k] += x[i] * y[j] * c(i, j, k);
    }
  }
  return r;
}

Rat QLie::inner(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) s += x[i] * gram_(i, j) * y[j];
  return s;
}

std::vector<Poly> QLie::bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
  std::size_t n = x.empty() ? 0 : x[0].nvars();
  std::vector<Poly> r(dim_, Poly(n));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Poly xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) r[k] += xy * c(i, j, k);
    }
  }
  return r;
}

Poly QLie::inner(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
  std::size_t n = x.empty() ? 0 : x[0].nvars();
  Poly s(n);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (gram_(i, j) != 0 && !y[j].is_zero()) s += x[i] * y[j] * gram_(i, j);
  }
  return s;
}

PolyMatrix QLie::ad(const std::vector<Poly>& s) const {
  std::size_t n = s.empty() ? 0 : s[0].nvars();
  PolyMatrix m(dim_, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (s[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) m(k, j) += s[i] * c(i, j, k);
  }
  return m;
}

static json triple(std::size_t a, std::size_t b, std::size_t c) { return json::array({a, b, c}); }

Report validate_qlie(const QLie& q) {
  Report r;
  std::size_t d = q.dim();
  json w = nullptr;
  for (std::size_t i = 0; i < d && w.is_null(); ++i)
    for (std::size_t j = 0; j < d && w.is_null(); ++j)
      for (std::size_t k = 0; k < d && w.is_null(); ++k)
        if (q.c(i, j, k) != -q.c(j, i, k)) w = {{"basis", json::array({i, j})}, {"component", k}};
  r.record("antisymmetry", w.is_null(), w);

  w = nullptr;
  for (std::size_t a = 0; a < d && w.is_null(); ++a)
    for (std::size_t b = a + 1; b < d && w.is_null(); ++b)
      for (std::size_t c = b + 1; c < d && w.is_null(); ++c)
        for (std::size_t t = 0; t < d && w.is_null(); ++t) {
          Rat s = 0;
          for (std::size_t l = 0; l < d; ++l)
            s += q.c(b, c, l) * q.c(a, l, t) + q.c(c, a, l) * q.c(b, l, t) + q.c(a, b, l) * q.c(c, l, t);
          if (s != 0) w = {{"basis", triple(a, b, c)}, {"component", t}, {"value", to_string(s)}};
        }
  r.record("jacobi", w.is_null(), w);

  const RatMatrix& g = q.gram();
  w = nullptr;
  for (std::size_t i = 0; i < d && w.is_null(); ++i)
    for (std::size_t j = i + 1; j < d && w.is_null(); ++j)
      if (g(i, j) != g(j, i)) w = {{"entry", json::array({i, j})}};
  r.record("gram_symmetric", w.is_null(), w);
  r.record("gram_nondegenerate", d == 0 || g.inverse().has_value(), json{{"reason", "singular gram"}});

  // <[e_a,e_b],e_c> + <e_b,[e_a,e_c]> = 0
  w = nullptr;
  for (std::size_t a = 0; a < d && w.is_null(); ++a)
    for (std::size_t b = 0; b < d && w.is_null(); ++b)
      for (std::size_t c = 0; c < d && w.is_null(); ++c) {
        Rat s = 0;
        for (std::size_t l = 0; l < d; ++l) s += q.c(a, b, l) * g(l, c) + g(b, l) * q.c(a, c, l);
        if (s != 0) w = {{"basis", triple(a, b, c)}, {"value", to_string(s)}};
      }
  r.record("invariance", w.is_null(), w);
  return r;
}

Report validate_qaut(const QLie& q, const RatMatrix& t) {
  Report r;
  std::size_t d = q.dim();
  if (t.rows() != d || t.cols() != d) {
    r.fail("shape", json{{"reason", "tau must be dim x dim"}});
    return r;
  }
  r.record("invertible", t.inverse().has_value(), json{{"reason", "singular"}});
  r.record("isometry", t.transpose() * q.gram() * t == q.gram(), json{{"reason", "tau^T G tau != G"}});
  json w = nullptr;
  auto col = [&](std::size_t j) {
    std::vector<Rat> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = t(i, j);
    return v;
  };
  for (std::size_t a = 0; a < d && w.is_null(); ++a)
    for (std::size_t b = 0; b < d && w.is_null(); ++b) {
      std::vector<Rat> lhs(d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) lhs[i] += t(i, k) * q.c(a, b, k);
      if (lhs != q.bracket(col(a), col(b))) w = {{"basis", json::array({a, b})}};
    }
  r.record("bracket_preserving", w.is_null(), w);
  return r;
}

Conn::Conn(Chart c, std::size_t d) : chart(c), dim(d), omega(c.k, PolyMatrix(d, c.n)) {}

std::vector<Poly> Conn::along(std::size_t i, const std::vector<Poly>& s) const {
  std::vector<Poly> r = omega[i].apply(s);
  for (std::size_t a = 0; a < dim; ++a) r[a] += partial(s[a], i);
  return r;
}

std::vector<Poly> Conn::covariant(const FVec& x, const std::vector<Poly>& s) const {
  require_same(chart, x.chart, "covariant derivative");
  std::vector<Poly> r = zero_section(dim, chart.n);
  for (std::size_t i = 0; i < chart.k; ++i)
    if (!x.v[i].is_zero()) r = add(r, scale(x.v[i], along(i, s)));
  return r;
}

bool Conn::is_trivial() const {
  return std::all_of(omega.begin(), omega.end(), [](const PolyMatrix& m) { return m.is_zero(); });
}

Report validate_conn(const Conn& conn, const QLie& q) {
  Report r;
  std::size_t d = q.dim();
  if (conn.dim != d || conn.omega.size() != conn.chart.k) {
    r.fail("shape", json{{"reason", "connection does not match Q"}});
    return r;
  }
  PolyMatrix G = PolyMatrix::from(q.gram(), conn.chart.n);
  json w = nullptr;
  for (std::size_t i = 0; i < conn.chart.k && w.is_null(); ++i) {
    // d_i <e_a,e_b> = 0 = <w_i e_a, e_b> + <e_a, w_i e_b>
    PolyMatrix m = conn.omega[i].transpose() * G + G * conn.omega[i];
    for (std::size_t a = 0; a < d && w.is_null(); ++a)
      for (std::size_t b = 0; b < d && w.is_null(); ++b)
        if (!m(a, b).is_zero())
          w = {{"direction", i}, {"basis", json::array({a, b})}, {"defect", m(a, b).str()}};
  }
  r.record("metric_compatible", w.is_null(), w);

  w = nullptr;
  std::size_t n = conn.chart.n;
  for (std::size_t i = 0; i < conn.chart.k && w.is_null(); ++i)
    for (std::size_t a = 0; a < d && w.is_null(); ++a)
      for (std::size_t b = 0; b < d && w.is_null(); ++b) {
        auto ea = basis_section(d, n, a), eb = basis_section(d, n, b);
        auto lhs = conn.along(i, q.bracket(ea, eb));
        auto rhs = add(q.bracket(conn.along(i, ea), eb), q.bracket(ea, conn.along(i, eb)));
        if (lhs != rhs) w = {{"direction", i}, {"basis", json::array({a, b})}};
      }
  r.record("bracket_compatible", w.is_null(), w);
  return r;
}

std::vector<Poly> zero_section(std::size_t d, std::size_t nvars) { return std::vector<Poly>(d, Poly(nvars)); }

std::vector<Poly> basis_section(std::size_t d, std::size_t nvars, std::size_t a) {
  auto s = zero_section(d, nvars);
  s.at(a) = Poly(nvars, Rat(1));
  return s;
}

std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("section rank mismatch");
  std::vector<Poly> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<Poly> sub(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("section rank mismatch");
  std::vector<Poly> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::vector<Poly> scale(const Poly& f, const std::vector<Poly>& a) {
  std::vector<Poly> r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(f * p);
  return r;
}

std::vector<Poly> apply(const RatMatrix& m, const std::vector<Poly>& a) {
  std::size_t n = a.empty() ? 0 : a[0].nvars();
  std::vector<Poly> r(m.rows(), Poly(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[i] += a[j] * m(i, j);
  return r;
}

std::vector<Poly> apply(const FVec& x, const std::vector<Poly>& a) {
  std::vector<Poly> r;
  for (const auto& p : a) r.push_back(apply(x, p));
  return r;
}

std::vector<Poly> apply(const ProjVec& x, const std::vector<Poly>& a) {
  std::vector<Poly> r;
  for (const auto& p : a) r.push_back(apply(x, p));
  return r;
}

bool is_zero(const std::vector<Poly>& a) {
  return std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace courant
