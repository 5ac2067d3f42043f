#include <gtest/gtest.h>

#include "courant/gallery.hpp"
#include "oracle.hpp"

using namespace courant;

namespace {

TForm dx(const Chart& c, Index idx) { return TForm::basis(c, idx); }
Poly x(const Chart& c, std::size_t i) { return Poly::variable(c.n, i); }

std::vector<Rat> zeros(std::size_t m) { return std::vector<Rat>(m * m * m); }

void set_bracket(std::vector<Rat>& c, std::size_t m, std::size_t i, std::size_t j, std::size_t k, Rat v) {
  c[(i * m + j) * m + k] = v;
  c[(j * m + i) * m + k] = -v;
}

// [e0, e1] = e1
std::vector<Rat> r2() {
  std::vector<Rat> c = zeros(2);
  set_bracket(c, 2, 0, 1, 1, 1);
  return c;
}

// Double built only from the invariance of the pairing: the mixed bracket [x, xi]
// is read off from <[x,xi], e^l> = <x, [xi, e^l]> and <[x,xi], e_l> = -<xi, [x, e_l]>.
std::vector<Rat> double_by_invariance(std::size_t m, const std::vector<Rat>& g, const std::vector<Rat>& cog) {
  const std::size_t D = 2 * m;
  std::vector<Rat> c(D * D * D);
  auto G = [&](std::size_t i, std::size_t j, std::size_t k) { return g[(i * m + j) * m + k]; };
  auto F = [&](std::size_t i, std::size_t j, std::size_t k) { return cog[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        c[(i * D + j) * D + l] = G(i, j, l);
        c[((m + i) * D + m + j) * D + m + l] = F(i, j, l);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        Rat along_e = F(j, l, i);    // <e_i, [e^j, e^l]>
        Rat along_eps = -G(i, l, j);  // -<e^j, [e_i, e_l]>
        c[(i * D + m + j) * D + l] = along_e;
        c[(i * D + m + j) * D + m + l] = along_eps;
        c[((m + j) * D + i) * D + l] = -along_e;
        c[((m + j) * D + i) * D + m + l] = -along_eps;
      }
  return c;
}

// Jacobiator of three basis vectors through the rational bracket.
std::vector<Rat> jacobiator(const QLie& q, std::size_t a, std::size_t b, std::size_t c) {
  std::size_t d = q.dim();
  auto e = [&](std::size_t i) {
    std::vector<Rat> v(d);
    v[i] = 1;
    return v;
  };
  auto x1 = q.bracket(e(a), q.bracket(e(b), e(c)));
  auto x2 = q.bracket(e(b), q.bracket(e(c), e(a)));
  auto x3 = q.bracket(e(c), q.bracket(e(a), e(b)));
  for (std::size_t t = 0; t < d; ++t) x1[t] += x2[t] + x3[t];
  return x1;
}

}  // namespace

TEST(Gallery, DnUntwisted) {
  Chart c{3, 3};
  StdCA e = make_dn(3, TForm(c, 3));
  EXPECT_EQ(e.dim(), 0u);
  EXPECT_TRUE(validate(e).passed());
  Sampler s(1);
  EXPECT_TRUE(axiom_suite(e, s, 20).passed());
}

TEST(Gallery, DnTwistedBracket) {
  Chart c{3, 3};
  StdCA e = make_dn(3, dx(c, {0, 1, 2}) * Rat(5));
  GSec r = bracket(e, GSec::vec(e, FVec::coord(c, 0)), GSec::vec(e, FVec::coord(c, 1)));
  EXPECT_EQ(r, GSec::form(e, dx(c, {2}) * Rat(5)));
}

TEST(Gallery, DnRejectsNonClosedH) {
  Chart c{3, 3};
  try {
    make_dn(3, x(c, 0) * dx(c, {1, 2}));
    FAIL() << "accepted a non-closed H";
  } catch (const GalleryError& err) {
    EXPECT_FALSE(err.report.passed());
    EXPECT_FALSE(err.report.find("H_closed")->witness.is_null());
  }
  EXPECT_THROW(make_bn(3, x(c, 0) * dx(c, {1, 2})), GalleryError);
}

// The exact-algebroid bracket, written out slot by slot.
TEST(Gallery, DnMatchesExactFormula) {
  Chart c{3, 3};
  TForm H = dx(c, {0, 1, 2}) * Rat(-2) + exterior_d(x(c, 0) * x(c, 1) * dx(c, {1, 2}));
  StdCA e = make_dn(3, H);
  Sampler s(17);
  for (int t = 0; t < 30; ++t) {
    GSec u = random_section(e, s), v = random_section(e, s);
    TForm alpha = lie_derivative(u.x, v.alpha) - interior(v.x, exterior_d(u.alpha)) + interior(v.x, interior(u.x, H));
    EXPECT_EQ(bracket(e, u, v), GSec(alpha, {}, bracket(u.x, v.x)));
  }
}

TEST(Gallery, BnShape) {
  Chart c{4, 4};
  StdCA e = make_bn(4, dx(c, {0, 1, 2}));
  EXPECT_EQ(e.dim(), 1u);
  EXPECT_TRUE(e.q.is_abelian());
  EXPECT_EQ(e.q.gram(), RatMatrix::identity(1));
  EXPECT_TRUE(e.conn.is_trivial());
  EXPECT_TRUE(e.R.is_zero());
  EXPECT_TRUE(validate(e).passed());
  Sampler s(2);
  EXPECT_TRUE(axiom_suite(e, s, 20).passed());
}

TEST(Gallery, HeteroticFourIsValid) {
  StdCA e = make_heterotic4();
  EXPECT_TRUE(validate(e).passed());
  EXPECT_EQ(e.q.gram(), oracle::hyperbolic_plane().gram());
}

TEST(Gallery, HeteroticRejectsCurvatureMismatch) {
  Chart c{2, 2};
  QLie q = oracle::so3_killing();
  QForm R = QForm::simple(dx(c, {0, 1}), 3, 0);
  try {
    make_heterotic_like(c, q, Conn(c, 3), R, TForm(c, 3));
    FAIL() << "accepted R with ad_R != curvature";
  } catch (const GalleryError& err) {
    const Check* k = err.report.find("curvature_is_ad_R");
    ASSERT_NE(k, nullptr);
    EXPECT_FALSE(k->pass);
    EXPECT_FALSE(k->witness.is_null());
  }
  EXPECT_NO_THROW(make_heterotic_like(c, q, Conn(c, 3), QForm(c, 3, 2), TForm(c, 3)));
}

TEST(Gallery, FlatSo3) {
  for (bool adjoint : {false, true}) {
    StdCA e = make_flat_so3(3, adjoint);
    EXPECT_EQ(e.q.gram(), oracle::so3_killing().gram());
    EXPECT_EQ(e.conn.is_trivial(), !adjoint);
    EXPECT_TRUE(curvature(e.conn).is_zero());
    Sampler s(3);
    EXPECT_TRUE(axiom_suite(e, s, 10).passed());
  }
}

TEST(Gallery, AbelianDouble) {
  QLie q = make_point_manin(2, zeros(2), zeros(2));
  EXPECT_TRUE(q.is_abelian());
  RatMatrix g(4, 4);
  g(0, 2) = g(2, 0) = g(1, 3) = g(3, 1) = 1;
  EXPECT_EQ(q.gram(), g);
}

TEST(Gallery, SemidirectDouble) {
  QLie q = make_point_manin(2, r2(), zeros(2));
  EXPECT_EQ(q.constants(), double_by_invariance(2, r2(), zeros(2)));
  // [e0, e^1] = -e^1 (coadjoint action)
  EXPECT_EQ(q.c(0, 3, 3), Rat(-1));
  EXPECT_TRUE(validate_qlie(q).passed());
  StdCA pt = point_algebroid(q);
  EXPECT_TRUE(validate(pt).passed());
  Sampler s(4);
  EXPECT_TRUE(axiom_suite(pt, s, 20).passed());
}

TEST(Gallery, DoubleMatchesInvarianceOracle) {
  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> g = zeros(3), cog = zeros(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          set_bracket(g, 3, i, j, k, s.coeff());
          set_bracket(cog, 3, i, j, k, s.coeff());
        }
    EXPECT_EQ(manin_double(3, g, cog).constants(), double_by_invariance(3, g, cog));
    // the pairing is invariant whatever the input
    QLie q = manin_double(3, g, cog);
    EXPECT_TRUE(validate_qlie(q).find("invariance")->pass);
  }
}

// On the 2-dimensional nonabelian algebra every cobracket is a cocycle, so all doubles are valid.
TEST(Gallery, TwoDimensionalDoublesAlwaysValid) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      std::vector<Rat> cog = zeros(2);
      set_bracket(cog, 2, 0, 1, 0, a);
      set_bracket(cog, 2, 0, 1, 1, b);
      EXPECT_TRUE(validate_qlie(manin_double(2, r2(), cog)).passed()) << a << " " << b;
    }
}

TEST(Gallery, CocycleViolationWitness) {
  std::vector<Rat> g = zeros(3), cog = zeros(3);
  set_bracket(g, 3, 0, 1, 1, 1);    // r2 + R
  set_bracket(cog, 3, 0, 1, 2, 1);  // [e^0, e^1] = e^2
  try {
    make_point_manin(3, g, cog);
    FAIL() << "accepted a non-cocycle cobracket";
  } catch (const GalleryError& err) {
    const Check* j = err.report.find("jacobi");
    ASSERT_NE(j, nullptr);
    EXPECT_FALSE(j->pass);
    EXPECT_EQ(j->witness["basis"], json::array({0, 2, 3}));
    EXPECT_EQ(j->witness["component"], 1);
    EXPECT_EQ(j->witness["value"], "1/1");
  }
  QLie oracle_double(6, double_by_invariance(3, g, cog), manin_double(3, g, cog).gram());
  EXPECT_EQ(jacobiator(oracle_double, 0, 2, 3)[1], Rat(1));
}

TEST(Gallery, FixturesNeedFlatData) {
  Sampler s(6);
  EXPECT_THROW(fixture_aut(make_heterotic4(), s), std::invalid_argument);
  EXPECT_THROW(fixture_infaut(make_flat_so3(2, true), s), std::invalid_argument);
  Chart c3{3, 3};
  EXPECT_THROW(fixture_aut(make_dn(3, x(c3, 0) * dx(c3, {0, 1, 2})), s), std::invalid_argument);
}

TEST(Gallery, RandomQAutIsAutomorphism) {
  Sampler s(7);
  for (const QLie& q : {oracle::so3_killing(), oracle::hyperbolic_plane(), oracle::sl2(), oracle::line()})
    for (int t = 0; t < 10; ++t) {
      QAutPair p = random_qaut(q, s);
      EXPECT_TRUE(validate_qaut(q, p.T).passed());
      EXPECT_EQ(p.T * p.Tinv, RatMatrix::identity(q.dim()));
    }
}
