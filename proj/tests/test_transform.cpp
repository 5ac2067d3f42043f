#include <gtest/gtest.h>

#include "courant/gallery.hpp"
#include "courant/transform.hpp"
#include "oracle.hpp"

using namespace courant;

namespace {

TForm dx(const Chart& c, Index idx) { return TForm::basis(c, idx); }
Poly x(const Chart& c, std::size_t i) { return Poly::variable(c.n, i); }

StdCA dn(std::size_t n) { return make_dn(n, TForm(Chart{n, n}, 3)); }
StdCA bn(std::size_t n) { return make_bn(n, TForm(Chart{n, n}, 3)); }

StdCA so3(std::size_t n) { return StdCA::flat(Chart{n, n}, oracle::so3_killing()); }

// Valid instances with nontrivial connection and curvature, obtained by moving
// the gallery ones along random changes of dissection.
std::vector<StdCA> bases() {
  TForm vol(Chart{3, 3}, 3);
  vol.add({0, 1, 2}, Poly::constant(3, 2));
  return {make_heterotic4(), make_flat_so3(3, true), make_bn(3, vol), make_dn(3, vol)};
}

std::vector<StdCA> random_instances(Sampler& s) {
  std::vector<StdCA> out;
  for (const StdCA& e : bases()) {
    out.push_back(e);
    Dissection d{random_qaut(e.q, s), s.qform(e.chart, e.dim(), 1), s.form(e.chart, 2)};
    out.push_back(dissection_change(d, e));
  }
  return out;
}

PsiData random_psi(PsiKind kind, const StdCA& e, Sampler& s) {
  switch (kind) {
    case PsiKind::Tau:
      return PsiData::of_tau(random_qaut(e.q, s));
    case PsiKind::A:
      return PsiData::of_A(s.qform(e.chart, e.dim(), 1));
    case PsiKind::B:
      break;
  }
  return PsiData::of_B(s.form(e.chart, 2));
}

int intertwining_failures(const PsiData& p, const StdCA& e, const StdCA& hat, Sampler& s, int trials) {
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    GSec u = random_section(e, s), v = random_section(e, s);
    GSec pu = psi_apply(p, e, u), pv = psi_apply(p, e, v);
    if (psi_apply(p, e, bracket(e, u, v)) != bracket(hat, pu, pv)) ++bad;
    if (inner(hat, pu, pv) != inner(e, u, v)) ++bad;
  }
  return bad;
}

// Fixture instances admitting random valid automorphisms.
std::vector<StdCA> aut_bases() {
  TForm vol(Chart{3, 3}, 3);
  vol.add({0, 1, 2}, Poly::constant(3, -1));
  Chart c2{2, 2};
  StdCA hyp = StdCA::flat(Chart{3, 3}, oracle::hyperbolic_plane());
  hyp.H = vol;
  return {make_bn(3, vol), make_dn(3, vol), make_flat_so3(3, false), hyp, make_bn(2, TForm(c2, 3))};
}

std::vector<Poly> pull_section(const FolAffine& phi, const std::vector<Poly>& s) {
  std::vector<Poly> out;
  for (const auto& p : s) out.push_back(phi.pull(p));
  return out;
}

}  // namespace

// ---- elementary maps

TEST(Psi, BShiftsByInteriorOfB) {
  StdCA e = dn(2);
  Chart c = e.chart;
  PsiData p = PsiData::of_B(x(c, 0) * dx(c, {0, 1}));
  GSec r = psi_apply(p, e, GSec::vec(e, FVec::coord(c, 0)));
  EXPECT_EQ(r, GSec(x(c, 0) * dx(c, {1}), {}, FVec::coord(c, 0)));
}

TEST(Psi, ARankOne) {
  StdCA e = bn(2);
  Chart c = e.chart;
  PsiData p = PsiData::of_A(QForm::simple(dx(c, {0}), 1, 0));
  GSec r = psi_apply(p, e, GSec::vec(e, FVec::coord(c, 0)));
  EXPECT_EQ(r, GSec(dx(c, {0}) * frac(-1, 2), {Poly::constant(2, 1)}, FVec::coord(c, 0)));
}

TEST(Psi, IdentityTau) {
  StdCA e = make_flat_so3(2, true);
  Sampler s(3);
  PsiData p = PsiData::of_tau(QAutPair::identity(3));
  for (int t = 0; t < 10; ++t) {
    GSec u = random_section(e, s);
    EXPECT_EQ(psi_apply(p, e, u), u);
  }
  EXPECT_EQ(transform_data(p, e), e);
}

TEST(Psi, BChangesH) {
  Chart c{3, 3};
  StdCA e = dn(3);
  StdCA hat = transform_data(PsiData::of_B(x(c, 0) * dx(c, {1, 2})), e);
  EXPECT_EQ(hat.H, -dx(c, {0, 1, 2}));
  EXPECT_EQ(hat.conn, e.conn);
}

TEST(Psi, ClosedAOnAbelianLine) {
  StdCA e = bn(2);
  StdCA hat = transform_data(PsiData::of_A(QForm::simple(dx(e.chart, {0}), 1, 0)), e);
  EXPECT_TRUE(hat.conn.is_trivial());
  EXPECT_TRUE(hat.R.is_zero());
  EXPECT_TRUE(hat.H.is_zero());
}

TEST(Psi, MismatchedDataRejected) {
  StdCA e = bn(2);
  EXPECT_THROW(psi_apply(PsiData::of_B(dx(Chart{3, 3}, {0, 1})), e, GSec::zero(e)), ChartMismatch);
  EXPECT_THROW(psi_apply(PsiData::of_A(QForm(e.chart, 2, 1)), e, GSec::zero(e)), std::invalid_argument);
}

TEST(Psi, IntertwinesOnRandomInstances) {
  Sampler s(11);
  for (const StdCA& e : random_instances(s)) {
    ASSERT_TRUE(validate(e).passed()) << validate(e).to_json().dump();
    for (PsiKind kind : {PsiKind::Tau, PsiKind::A, PsiKind::B}) {
      PsiData p = random_psi(kind, e, s);
      StdCA hat = transform_data(p, e);
      Report r = validate(hat);
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
      EXPECT_EQ(intertwining_failures(p, e, hat, s, 10), 0) << static_cast<int>(kind);
    }
  }
}

// ---- change of dissection

TEST(Dissection, BOnlyShiftsH) {
  StdCA e = make_heterotic4();
  Sampler s(5);
  TForm B = s.form(e.chart, 2);
  StdCA hat = dissection_change({QAutPair::identity(2), QForm(e.chart, 2, 1), B}, e);
  EXPECT_EQ(hat.H, e.H - exterior_d(B));
  EXPECT_EQ(hat.R, e.R);
  EXPECT_EQ(hat.conn, e.conn);
}

TEST(Dissection, TauConjugates) {
  StdCA e = make_flat_so3(2, true);
  Sampler s(6);
  QAutPair t = random_qaut(e.q, s);
  ASSERT_FALSE(t.T.is_identity());
  StdCA hat = dissection_change({t, QForm(e.chart, 3, 1), TForm(e.chart, 2)}, e);
  EXPECT_EQ(connection_form(hat.conn), conjugate(t.T, t.Tinv, connection_form(e.conn)));
  EXPECT_EQ(hat.H, e.H);
}

TEST(Dissection, MatchesComposite) {
  Sampler s(21);
  for (const StdCA& e : random_instances(s)) {
    Dissection d{random_qaut(e.q, s), s.qform(e.chart, e.dim(), 1), s.form(e.chart, 2)};
    StdCA composite = transform_data(
        PsiData::of_tau(d.tau), transform_data(PsiData::of_A(d.A), transform_data(PsiData::of_B(d.B), e)));
    EXPECT_EQ(dissection_change(d, e), composite);
    for (int t = 0; t < 5; ++t) {
      GSec u = random_section(e, s);
      GSec step = psi_apply(PsiData::of_tau(d.tau), e,
                            psi_apply(PsiData::of_A(d.A), e, psi_apply(PsiData::of_B(d.B), e, u)));
      EXPECT_EQ(dissection_apply(d, e, u), step);
    }
  }
}

// ---- Aut(S)

TEST(Aut, GaugeCompositionSo3) {
  StdCA e = so3(2);
  Chart c = e.chart;
  Aut f = Aut::identity(e), g = Aut::identity(e);
  f.A = QForm::simple(dx(c, {0}), 3, 0);
  g.A = QForm::simple(dx(c, {1}), 3, 0);
  Aut h = aut_compose(f, g, e.q);
  EXPECT_EQ(h.A, f.A + g.A);
  EXPECT_EQ(h.B, -dx(c, {0, 1}));
}

TEST(Aut, InverseFormula) {
  StdCA e = make_flat_so3(2, false);
  Sampler s(8);
  Aut f = Aut::identity(e);
  f.tau = random_qaut(e.q, s);
  f.A = s.qform(e.chart, 3, 1);
  f.B = s.form(e.chart, 2);
  Aut g = aut_invert(f);
  EXPECT_TRUE(g.phi.is_identity());
  EXPECT_EQ(g.tau.T, f.tau.Tinv);
  EXPECT_EQ(g.A, -courant::apply(f.tau.T, f.A));
  EXPECT_EQ(g.B, -f.B);
}

TEST(Aut, FixturesAreAutomorphisms) {
  Sampler s(31);
  for (const StdCA& e : aut_bases())
    for (int t = 0; t < 4; ++t) {
      Aut f = fixture_aut(e, s);
      Report r = check_aut(f, e, s, 5);
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
}

TEST(Aut, GroupLaws) {
  Sampler s(41);
  for (const StdCA& e : aut_bases())
    for (int t = 0; t < 4; ++t) {
      Aut f = fixture_aut(e, s), g = fixture_aut(e, s), h = fixture_aut(e, s);
      Aut fg = aut_compose(f, g, e.q);
      EXPECT_TRUE(check_aut(fg, e, s, 3).passed());
      for (int i = 0; i < 3; ++i) {
        GSec u = random_section(e, s);
        EXPECT_EQ(aut_apply(fg, e, u), aut_apply(f, e, aut_apply(g, e, u)));
        EXPECT_EQ(aut_apply(aut_invert(f), e, aut_apply(f, e, u)), u);
      }
      EXPECT_EQ(aut_compose(aut_compose(f, g, e.q), h, e.q), aut_compose(f, aut_compose(g, h, e.q), e.q));
      EXPECT_EQ(aut_compose(f, aut_invert(f), e.q), Aut::identity(e));
      EXPECT_EQ(aut_compose(aut_invert(f), f, e.q), Aut::identity(e));
      EXPECT_EQ(aut_compose(f, Aut::identity(e), e.q), f);
    }
}

TEST(Aut, DnReduction) {
  Sampler s(51);
  TForm vol(Chart{3, 3}, 3);
  vol.add({0, 1, 2}, Poly::constant(3, 5));
  StdCA e = make_dn(3, vol);
  for (int t = 0; t < 5; ++t) {
    Aut f = fixture_aut(e, s), g = fixture_aut(e, s);
    Aut fg = aut_compose(f, g, e.q);
    EXPECT_EQ(fg.phi, f.phi.compose(g.phi));
    EXPECT_EQ(fg.B, g.phi.pullback(f.B) + g.B);
    // only H - phi^*H = dB is left to check
    Aut bad = f;
    bad.B = f.B + x(e.chart, 0) * dx(e.chart, {1, 2});
    Report r = check_aut(bad, e, s, 2);
    EXPECT_FALSE(r.find("three_form")->pass);
    EXPECT_TRUE(r.find("connection")->pass);
    EXPECT_TRUE(r.find("curvature")->pass);
  }
}

TEST(Aut, BnRejectsNonClosedA) {
  StdCA e = bn(2);
  Chart c = e.chart;
  Aut f = Aut::identity(e);
  f.A = QForm::simple(x(c, 1) * dx(c, {0}), 1, 0);
  Sampler s(2);
  Report r = check_aut(f, e, s, 5);
  const Check* cur = r.find("curvature");
  ASSERT_NE(cur, nullptr);
  EXPECT_FALSE(cur->pass);
  EXPECT_FALSE(cur->witness.is_null());
  EXPECT_TRUE(r.find("connection")->pass);
  EXPECT_FALSE(r.find("bracket_intertwined")->pass);

  f.A = QForm::simple(x(c, 0) * dx(c, {0}), 1, 0);  // closed
  EXPECT_TRUE(check_aut(f, e, s, 5).passed());
}

TEST(Aut, NonAutomorphismTauRejected) {
  StdCA e = so3(2);
  Aut f = Aut::identity(e);
  RatMatrix T = RatMatrix::identity(3);
  T(0, 0) = -1;  // orthogonal, reverses orientation, not a Lie automorphism
  f.tau = QAutPair::from(T);
  Sampler s(4);
  Report r = check_aut(f, e, s, 3);
  EXPECT_FALSE(r.find("tau.bracket_preserving")->pass);
  EXPECT_TRUE(r.find("tau.isometry")->pass);
}

// With phi and tau, nabla - phi^*(tau^-1 nabla tau) is an operator in (U, s); checking it on
// coordinate fields and basis sections is enough because it is function-linear in both.
TEST(Aut, ConnectionConditionIsTensorial) {
  Sampler s(61);
  for (const StdCA& e : random_instances(s)) {
    FolAffine phi = s.affine(e.chart), inv = phi.inverse();
    QAutPair tau = random_qaut(e.q, s);
    auto moved = [&](const FVec& U, const std::vector<Poly>& sec) {
      auto inner_sec = courant::apply(tau.T, pull_section(inv, sec));
      return pull_section(phi, courant::apply(tau.Tinv, e.conn.covariant(phi.push(U), inner_sec)));
    };
    auto D = [&](const FVec& U, const std::vector<Poly>& sec) { return sub(e.conn.covariant(U, sec), moved(U, sec)); };
    for (int t = 0; t < 3; ++t) {
      FVec U = s.fvec(e.chart);
      Poly f = s.poly(e.chart.n);
      auto sec = s.section(e.dim(), e.chart.n);
      EXPECT_EQ(D(f * U, sec), scale(f, D(U, sec)));
      EXPECT_EQ(D(U, scale(f, sec)), scale(f, D(U, sec)));
      // and its value is the pointwise matrix of the form-level expression
      EndQForm diff = connection_form(e.conn) - pullback(phi, conjugate(tau.Tinv, tau.T, connection_form(e.conn)));
      PolyMatrix m(e.dim(), e.chart.n);
      for (std::size_t i = 0; i < e.chart.k; ++i) m = m + U.v[i] * diff.on_coords({i});
      EXPECT_EQ(D(U, sec), m.apply(sec));
    }
  }
}

TEST(Aut, JsonRoundTrip) {
  Sampler s(71);
  StdCA e = aut_bases()[3];
  Aut f = fixture_aut(e, s);
  EXPECT_EQ(aut_from_json(to_json(f), e), f);
  EXPECT_EQ(aut_from_json(json::object(), e), Aut::identity(e));
  json bad = to_json(f);
  bad["tau"]["Tinv"] = to_json(Rat(2) * RatMatrix::identity(2));
  EXPECT_THROW(aut_from_json(bad, e), InputError);
}

// ---- aut(S)

TEST(InfAut, GaugeBracket) {
  StdCA e = bn(2);
  Chart c = e.chart;
  InfAut d1 = InfAut::zero(e), d2 = InfAut::zero(e);
  d1.a = QForm::simple(dx(c, {0}), 1, 0);
  d2.a = QForm::simple(dx(c, {1}), 1, 0);
  InfAut b = infaut_bracket(d1, d2, e.q);
  EXPECT_EQ(b.b, dx(c, {0, 1}));
  EXPECT_TRUE(b.a.is_zero());
  EXPECT_TRUE(b.theta.is_zero());
  EXPECT_EQ(infaut_bracket(d1, d1, e.q), InfAut::zero(e));
}

TEST(InfAut, FixturesSatisfyConditions) {
  Sampler s(81);
  for (const StdCA& e : aut_bases())
    for (int t = 0; t < 4; ++t) {
      InfAut d = fixture_infaut(e, s);
      Report r = check_infaut(d, e, s, 5);
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
}

TEST(InfAut, NonClosedBFails) {
  StdCA e = bn(3);
  InfAut d = InfAut::zero(e);
  d.b = x(e.chart, 0) * dx(e.chart, {1, 2});
  Sampler s(9);
  Report r = check_infaut(d, e, s, 3);
  EXPECT_FALSE(r.find("three_form")->pass);
  EXPECT_FALSE(r.find("derivation_bracket")->pass);
}

TEST(InfAut, BnNeedsClosedA) {
  StdCA e = bn(2);
  InfAut d = InfAut::zero(e);
  d.a = QForm::simple(x(e.chart, 1) * dx(e.chart, {0}), 1, 0);
  Sampler s(10);
  Report r = check_infaut(d, e, s, 3);
  EXPECT_FALSE(r.find("curvature")->pass);
}

TEST(InfAut, LieAlgebraLaws) {
  Sampler s(91);
  for (const StdCA& e : aut_bases())
    for (int t = 0; t < 3; ++t) {
      InfAut d1 = fixture_infaut(e, s), d2 = fixture_infaut(e, s), d3 = fixture_infaut(e, s);
      InfAut b12 = infaut_bracket(d1, d2, e.q);
      InfAut b21 = infaut_bracket(d2, d1, e.q);
      EXPECT_EQ(b12.X + b21.X, ProjVec(e.chart));
      EXPECT_TRUE((b12.theta + b21.theta).is_zero());
      EXPECT_TRUE((b12.a + b21.a).is_zero());
      EXPECT_TRUE((b12.b + b21.b).is_zero());
      InfAut j1 = infaut_bracket(d1, infaut_bracket(d2, d3, e.q), e.q);
      InfAut j2 = infaut_bracket(d2, infaut_bracket(d3, d1, e.q), e.q);
      InfAut j3 = infaut_bracket(d3, infaut_bracket(d1, d2, e.q), e.q);
      EXPECT_EQ(j1.X + j2.X + j3.X, ProjVec(e.chart));
      EXPECT_TRUE((j1.theta + j2.theta + j3.theta).is_zero());
      EXPECT_TRUE((j1.a + j2.a + j3.a).is_zero());
      EXPECT_TRUE((j1.b + j2.b + j3.b).is_zero());
      EXPECT_TRUE(check_infaut(b12, e, s, 2).passed());
      for (int i = 0; i < 3; ++i) {
        GSec u = random_section(e, s);
        GSec lhs = infaut_apply(b12, e, u);
        GSec rhs = infaut_apply(d1, e, infaut_apply(d2, e, u)) - infaut_apply(d2, e, infaut_apply(d1, e, u));
        EXPECT_EQ(lhs, rhs);
      }
    }
}

TEST(InfAut, ConnectionConditionIsTensorial) {
  Sampler s(101);
  for (const StdCA& e : random_instances(s)) {
    InfAut d = InfAut::zero(e);
    d.X = s.projvec(e.chart);
    d.theta = s.matrix(e.dim(), e.chart.n);
    auto L = [&](const FVec& U, const std::vector<Poly>& sec) {
      return sub(sub(theta_apply(d, e.conn.covariant(U, sec)), e.conn.covariant(U, theta_apply(d, sec))),
                 e.conn.covariant(bracket(d.X, U), sec));
    };
    for (int t = 0; t < 3; ++t) {
      FVec U = s.fvec(e.chart);
      Poly f = s.poly(e.chart.n);
      auto sec = s.section(e.dim(), e.chart.n);
      EXPECT_EQ(L(f * U, sec), scale(f, L(U, sec)));
      EXPECT_EQ(L(U, scale(f, sec)), scale(f, L(U, sec)));
    }
  }
}

TEST(InfAut, LinearizeGauge) {
  Sampler s(111);
  for (const StdCA& e : random_instances(s)) {
    GaugePair g{s.qform(e.chart, e.dim(), 1), s.form(e.chart, 2)};
    InfAut d = linearize(g, e);
    EXPECT_EQ(d.X, ProjVec(e.chart));
    EXPECT_TRUE(d.theta.is_zero());
    EXPECT_EQ(d.a, g.A);
    EXPECT_EQ(d.b, g.B);
  }
}

TEST(InfAut, ActionReadBack) {
  Sampler s(121);
  for (const StdCA& e : aut_bases()) {
    InfAut d = fixture_infaut(e, s);
    InfAut back = infaut_from_action([&](const GSec& u) { return infaut_apply(d, e, u); }, e);
    EXPECT_EQ(back.X, d.X);
    EXPECT_EQ(back.theta, d.theta);
    EXPECT_EQ(back.a, d.a);
    EXPECT_EQ(back.b, d.b);
  }
}

TEST(InfAut, JsonRoundTrip) {
  Sampler s(131);
  StdCA e = aut_bases()[2];
  InfAut d = fixture_infaut(e, s);
  EXPECT_EQ(infaut_from_json(to_json(d), e), d);
  Chart c{3, 2};
  StdCA f = StdCA::flat(c, oracle::line());
  json x2 = json::array({to_json(Poly(3)), to_json(Poly(3)), to_json(x(c, 0))});
  EXPECT_THROW(infaut_from_json(json{{"X", x2}}, f), InputError);
}

// The sign of the three-form condition is the one making the action a derivation.
TEST(InfAut, ThreeFormSignFollowsAction) {
  Chart c{3, 3};
  TForm vol(c, 3);
  vol.add({0, 1, 2}, Poly::constant(3, 1));
  StdCA e = make_bn(3, vol);
  InfAut d = InfAut::zero(e);
  d.X.v[0] = x(c, 0);  // L_X vol = vol
  Sampler s(141);
  d.b = x(c, 0) * dx(c, {1, 2});  // db = vol
  Report ok = check_infaut(d, e, s, 5);
  EXPECT_TRUE(ok.passed()) << ok.to_json().dump();
  d.b = -d.b;
  Report bad = check_infaut(d, e, s, 5);
  EXPECT_FALSE(bad.find("three_form")->pass);
  EXPECT_FALSE(bad.find("derivation_bracket")->pass);
}

TEST(InfAut, GaugeAgainstCurvature) {
  StdCA e = make_heterotic4();
  Chart c = e.chart;
  Sampler s(151);
  Poly f = s.poly(4);
  InfAut d = InfAut::zero(e);
  d.a = QForm::simple(exterior_d(TForm::function(c, f)), 2, 0);
  // <a ^ R> = df ^ dx2 ^ dx3, so db = -<a ^ R> for b = -f dx2^dx3
  d.b = -(f * dx(c, {2, 3}));
  Report r = check_infaut(d, e, s, 5);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  d.b = f * dx(c, {2, 3});
  EXPECT_FALSE(check_infaut(d, e, s, 5).find("derivation_bracket")->pass);
}
