#include "courant/gallery.hpp"

namespace courant {

namespace {

void require_closed(const TForm& H, const char* who) {
  Report r;
  TForm dH = exterior_d(H);
  if (dH.is_zero())
    r.pass("H_closed");
  else
    r.fail("H_closed", form_witness(dH));
  if (!r.passed()) throw GalleryError(std::string(who) + ": H is not closed", r);
}

TForm exact(const Chart& c, Sampler& s, std::size_t degree) { return exterior_d(s.form(c, degree)); }

}  // namespace

StdCA make_dn(std::size_t n, const TForm& H) {
  Chart c{n, n};
  require_same(c, H.chart(), "make_dn");
  require_closed(H, "make_dn");
  StdCA e = StdCA::flat(c, QLie::abelian(RatMatrix(0, 0)));
  e.H = H;
  return e;
}

StdCA make_bn(std::size_t n, const TForm& H) {
  Chart c{n, n};
  require_same(c, H.chart(), "make_bn");
  require_closed(H, "make_bn");
  StdCA e = StdCA::flat(c, QLie::abelian(RatMatrix::identity(1)));
  e.H = H;
  return e;
}

StdCA make_heterotic_like(Chart c, QLie q, Conn conn, QForm R, TForm H) {
  StdCA e(c, std::move(q), std::move(conn), std::move(R), std::move(H));
  Report r = validate(e);
  if (!r.passed()) throw GalleryError("make_heterotic_like: data fails validation", r);
  return e;
}

StdCA make_flat_so3(std::size_t n, bool adjoint) {
  std::vector<Rat> c(27);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c[(i * 3 + j) * 3 + k] = 1;
    c[(j * 3 + i) * 3 + k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  QLie q(3, c, RatMatrix(3, 3));
  q = q.with_gram(q.killing());
  Chart ch{n, n};
  Conn conn(ch, 3);
  if (adjoint && n > 0) conn.omega[0] = PolyMatrix::from(q.ad(0), n);
  return make_heterotic_like(ch, q, conn, QForm(ch, 3, 2), TForm(ch, 3));
}

StdCA make_heterotic4() {
  Chart c{4, 4};
  RatMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  QForm R(c, 2, 2);
  R.comp[0].add({0, 1}, Poly::constant(4, 1));
  R.comp[1].add({2, 3}, Poly::constant(4, 1));
  TForm H(c, 3);
  H.add({1, 2, 3}, Poly::variable(4, 0));
  return make_heterotic_like(c, QLie::abelian(g), Conn(c, 2), R, H);
}

QLie manin_double(std::size_t m, const std::vector<Rat>& g, const std::vector<Rat>& cog) {
  if (g.size() != m * m * m || cog.size() != m * m * m)
    throw std::invalid_argument("manin_double: structure constants must have m^3 entries");
  const std::size_t D = 2 * m;
  std::vector<Rat> c(D * D * D);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& { return c[(i * D + j) * D + k]; };
  auto G = [&](std::size_t i, std::size_t j, std::size_t k) { return g[(i * m + j) * m + k]; };
  auto F = [&](std::size_t i, std::size_t j, std::size_t k) { return cog[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        at(i, j, l) = G(i, j, l);
        at(m + i, m + j, m + l) = F(i, j, l);
        // [e_i, e^j] = f^{jl}_i e_l - c_{il}^j e^l
        at(i, m + j, l) = F(j, l, i);
        at(i, m + j, m + l) = -G(i, l, j);
        at(m + j, i, l) = -F(j, l, i);
        at(m + j, i, m + l) = G(i, l, j);
      }
  RatMatrix gram(D, D);
  for (std::size_t i = 0; i < m; ++i) gram(i, m + i) = gram(m + i, i) = 1;
  return QLie(D, std::move(c), std::move(gram));
}

QLie make_point_manin(std::size_t m, const std::vector<Rat>& g, const std::vector<Rat>& cog) {
  QLie q = manin_double(m, g, cog);
  Report r = validate_qlie(q);
  if (!r.passed()) throw GalleryError("make_point_manin: double is not a quadratic Lie algebra", r);
  return q;
}

StdCA point_algebroid(const QLie& q) { return StdCA::flat(Chart{0, 0}, q); }

QAutPair random_qaut(const QLie& q, Sampler& s) {
  const std::size_t d = q.dim();
  RatMatrix S(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      S(i, j) = s.coeff();
      S(j, i) = -S(i, j);
    }
  RatMatrix K = *q.gram().inverse() * S;
  RatMatrix I = RatMatrix::identity(d);
  auto inv = (I + K).inverse();
  if (!inv) return QAutPair::identity(d);
  RatMatrix T = (I - K) * *inv;
  if (q.is_abelian() && s.uniform(0, 1) == 1) T = Rat(-1) * T;
  if (!validate_qaut(q, T).passed()) return QAutPair::identity(d);
  return QAutPair::from(T);
}

Aut fixture_aut(const StdCA& e, Sampler& s) {
  const Chart& c = e.chart;
  const std::size_t d = e.dim();
  if (!e.conn.is_trivial() || !e.R.is_zero())
    throw std::invalid_argument("fixture_aut: needs trivial connection and R = 0");
  Aut f = Aut::identity(e);
  f.phi = s.affine(c);

  // H - phi^*H must be exact; for a constant top form it is a multiple of dx0^dx1^dx2
  TForm diff = e.H - f.phi.pullback(e.H);
  TForm B(c, 2);
  if (!diff.is_zero()) {
    if (c.k != 3 || diff.coeffs().size() != 1 || !diff.get({0, 1, 2}).is_constant())
      throw std::invalid_argument("fixture_aut: H must be zero or a constant multiple of dx0^dx1^dx2");
    B.add({1, 2}, diff.get({0, 1, 2}) * Poly::variable(c.n, 0));
  }
  f.B = B + exact(c, s, 1);

  f.tau = random_qaut(e.q, s);

  // only central closed A survive ad_A = 0 and dA = [A^A]/2; here: abelian Q, exact A
  f.A = QForm(c, d, 1);
  if (e.q.is_abelian())
    for (std::size_t a = 0; a < d; ++a) f.A.comp[a] = exact(c, s, 0);
  return f;
}

InfAut fixture_infaut(const StdCA& e, Sampler& s) {
  const Chart& c = e.chart;
  const std::size_t d = e.dim();
  if (!e.conn.is_trivial() || !e.R.is_zero())
    throw std::invalid_argument("fixture_infaut: needs trivial connection and R = 0");
  if (!exterior_d(e.H).is_zero()) throw std::invalid_argument("fixture_infaut: H is not closed");
  for (const auto& [idx, f] : e.H.coeffs())
    for (std::size_t i = c.k; i < c.n; ++i)
      if (f.depends_on(i)) throw std::invalid_argument("fixture_infaut: H depends on a transverse coordinate");

  InfAut x = InfAut::zero(e);
  x.X = s.projvec(c);

  // theta = ad_v, a = -dv solves the connection condition for trivial nabla
  std::vector<Poly> v = s.section(d, c.n);
  if (d > 0) x.theta = e.q.ad(v);
  for (std::size_t a = 0; a < d; ++a) x.a.comp[a] = -exterior_d(TForm::function(c, v[a]));
  if (e.q.is_abelian() && d > 1) {
    RatMatrix S(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        S(i, j) = s.coeff();
        S(j, i) = -S(i, j);
      }
    std::vector<bool> transverse(c.n, false);
    for (std::size_t i = c.k; i < c.n; ++i) transverse[i] = true;
    x.theta = x.theta + s.poly(c.n, transverse) * PolyMatrix::from(*e.q.gram().inverse() * S, c.n);
  }

  // L_X H = d i_X H for closed H with leafwise coefficients
  FVec xf(c);
  for (std::size_t i = 0; i < c.k; ++i) xf.v[i] = x.X.v[i];
  x.b = interior(xf, e.H) + exact(c, s, 1);
  return x;
}

}  // namespace courant
