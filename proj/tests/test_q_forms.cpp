#include <gtest/gtest.h>

#include "courant/q_forms.hpp"
#include "courant/random.hpp"
#include "oracle.hpp"

using namespace courant;

namespace {

TForm dx(const Chart& c, Index idx) { return TForm::basis(c, idx); }

}  // namespace

TEST(QForms, BracketWedgeOfTwoGenerators) {
  Chart c{2, 2};
  QLie q = oracle::so3_killing();
  QForm a = QForm::simple(dx(c, {0}), 3, 0) + QForm::simple(dx(c, {1}), 3, 1);
  EXPECT_EQ(bracket_wedge(q, a, a), QForm::simple(Rat(2) * dx(c, {0, 1}), 3, 2));
}

TEST(QForms, PairWedgeRankOne) {
  Chart c{2, 2};
  QLie q = oracle::line();
  EXPECT_EQ(pair_wedge(q, QForm::simple(dx(c, {0}), 1, 0), QForm::simple(dx(c, {1}), 1, 0)), dx(c, {0, 1}));
}

TEST(QForms, CurvatureOfLinearConnection) {
  Chart c{2, 2};
  RatMatrix T(2, 2);
  T(0, 1) = 1, T(1, 0) = 3;
  Conn conn(c, 2);
  conn.omega[0] = Poly::variable(2, 1) * PolyMatrix::from(T, 2);
  EndQForm expect(c, 2, 2);
  expect.at(0, 1) = -dx(c, {0, 1});
  expect.at(1, 0) = Rat(-3) * dx(c, {0, 1});
  EXPECT_EQ(curvature(conn), expect);
}

TEST(QForms, DaggerUnderKilling) {
  Chart c{2, 2};
  QLie q = oracle::so3_killing();
  QForm A = QForm::simple(dx(c, {0}), 3, 0);
  EXPECT_EQ(dagger(q, A, basis_section(3, 2, 0)), Rat(-2) * dx(c, {0}));
}

TEST(QForms, ShapeErrors) {
  Chart c{2, 2};
  QLie q = oracle::so3_killing();
  EXPECT_THROW(pair_wedge(q, QForm(c, 2, 1), QForm(c, 2, 1)), std::invalid_argument);
  EXPECT_THROW(dagger(q, QForm(c, 3, 2), basis_section(3, 2, 0)), std::invalid_argument);
}

namespace {

// The four wedge-pairing formulas, evaluated pointwise on random fields.
void check_wedge_lemma(const QLie& q, std::uint64_t seed, int trials) {
  Sampler s(seed, 3, 2);
  std::size_t d = q.dim();
  for (int t = 0; t < trials; ++t) {
    Chart c{3, 3};
    QForm A1 = s.qform(c, d, 1), A2 = s.qform(c, d, 1), Rr = s.qform(c, d, 2);
    FVec X = s.fvec(c), Y = s.fvec(c), Z = s.fvec(c);
    auto ev = [](const QForm& w, std::vector<FVec> xs) { return oracle::eval_q(w, xs); };
    EXPECT_EQ(oracle::eval_form(pair_wedge(q, A1, A2), {X, Y}),
              q.inner(ev(A1, {X}), ev(A2, {Y})) - q.inner(ev(A1, {Y}), ev(A2, {X})));
    EXPECT_EQ(oracle::eval_form(pair_wedge(q, A1, Rr), {X, Y, Z}),
              q.inner(ev(A1, {X}), ev(Rr, {Y, Z})) - q.inner(ev(A1, {Y}), ev(Rr, {X, Z})) +
                  q.inner(ev(A1, {Z}), ev(Rr, {X, Y})));
    EXPECT_EQ(ev(bracket_wedge(q, A1, A1), {X, Y}), scale(Poly(c.n, Rat(2)), q.bracket(ev(A1, {X}), ev(A1, {Y}))));
    EXPECT_EQ(oracle::eval_form(pair_wedge(q, A1, bracket_wedge(q, A1, A1)), {X, Y, Z}),
              q.inner(ev(A1, {X}), q.bracket(ev(A1, {Y}), ev(A1, {Z}))) * Rat(6));
  }
}

}  // namespace

TEST(QFormsProperty, WedgeLemmaKillingSo3) { check_wedge_lemma(oracle::so3_killing(), 41, 100); }
TEST(QFormsProperty, WedgeLemmaHyperbolicAbelian) { check_wedge_lemma(oracle::hyperbolic_plane(), 42, 100); }

TEST(QFormsProperty, CovariantDerivativeAndCurvature) {
  Sampler s(43, 2, 2);
  QLie q = oracle::sl2();
  for (int t = 0; t < 40; ++t) {
    Chart c{3, static_cast<std::size_t>(s.uniform(2, 3))};
    Conn conn(c, 3);
    for (auto& m : conn.omega) m = s.matrix(3, c.n);
    auto p = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(c.k) - 1));
    QForm w = s.qform(c, 3, p);
    TForm f = s.form(c, 1);
    EXPECT_TRUE(check_d_nabla_squared(conn, w));
    // Leibniz: d_nabla(f ^ w) = df ^ w - f ^ d_nabla w
    EXPECT_EQ(d_nabla(conn, wedge(f, w)), wedge(exterior_d(f), w) - wedge(f, d_nabla(conn, w)));
    // F(d_i, d_j) s = (nabla_i nabla_j - nabla_j nabla_i) s on sections
    EndQForm F = curvature(conn);
    auto sec = s.section(3, c.n);
    for (std::size_t i = 0; i < c.k; ++i)
      for (std::size_t j = 0; j < c.k; ++j) {
        auto lhs = F.on_coords({i, j}).apply(sec);
        auto rhs = sub(conn.along(i, conn.along(j, sec)), conn.along(j, conn.along(i, sec)));
        EXPECT_EQ(lhs, rhs);
      }
    // (d_nabla s)(d_i) = nabla_i s
    QForm ds = d_nabla(conn, QForm::section(c, sec));
    for (std::size_t i = 0; i < c.k; ++i) EXPECT_EQ(ds.on_coords({i}), conn.along(i, sec));
    EXPECT_EQ(conn_from_form(connection_form(conn)), conn);
  }
}

TEST(QFormsProperty, AdDaggerSharp) {
  Sampler s(44, 2, 2);
  QLie q = oracle::so3_killing();
  for (int t = 0; t < 40; ++t) {
    Chart c{3, 3};
    QForm A = s.qform(c, 3, 1), w = s.qform(c, 3, 2);
    TForm B = s.form(c, 2);
    auto sec = s.section(3, c.n);
    FVec X = s.fvec(c), Y = s.fvec(c);
    EXPECT_EQ(oracle::eval_form(dagger(q, A, sec), {X}), q.inner(oracle::eval_q(A, {X}), sec));
    EXPECT_EQ(oracle::eval_form(sharp(B, X), {Y}), oracle::eval_form(B, {X, Y}));
    EXPECT_EQ(ad_of(q, w).on_coords({0, 1}).apply(sec), q.bracket(w.on_coords({0, 1}), sec));
    EXPECT_EQ(wedge(ad_of(q, A), w), bracket_wedge(q, A, w));
  }
}

TEST(QFormsProperty, LieDerivativeWithTheta) {
  Sampler s(45, 2, 2);
  for (int t = 0; t < 40; ++t) {
    Chart c{3, static_cast<std::size_t>(s.uniform(1, 3))};
    ProjVec X = s.projvec(c);
    PolyMatrix theta = s.matrix(2, c.n);
    auto p = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(c.k)));
    QForm w = s.qform(c, 2, p);
    QForm L = lie_xtheta(X, theta, w);
    for (const auto& slots : oracle::slot_lists(c.k, p)) {
      // Theta(w(..)) - sum w(.., {X, d_i}, ..) = L_X w^a + theta w
      std::vector<Poly> expect = theta.apply(w.on_coords(slots));
      for (std::size_t a = 0; a < 2; ++a) expect[a] += oracle::eval_lie(X, w.comp[a], slots);
      EXPECT_EQ(L.on_coords(slots), expect);
    }
  }
}

TEST(QFormsProperty, PullbackCommutesWithPairings) {
  Sampler s(46, 2, 2);
  QLie q = oracle::so3_killing();
  for (int t = 0; t < 30; ++t) {
    Chart c{3, 2};
    FolAffine phi = s.affine(c);
    QForm a = s.qform(c, 3, 1), b = s.qform(c, 3, 1);
    EXPECT_EQ(phi.pullback(pair_wedge(q, a, b)), pair_wedge(q, pullback(phi, a), pullback(phi, b)));
    EXPECT_EQ(pullback(phi, bracket_wedge(q, a, b)), bracket_wedge(q, pullback(phi, a), pullback(phi, b)));
  }
}
