#include <gtest/gtest.h>

#include "courant/standard.hpp"
#include "oracle.hpp"

using namespace courant;

namespace {

TForm dx(const Chart& c, Index idx) { return TForm::basis(c, idx); }
Poly x(const Chart& c, std::size_t i) { return Poly::variable(c.n, i); }

StdCA bn(std::size_t n) { return StdCA::flat(Chart{n, n}, oracle::line()); }

StdCA dn(std::size_t n, const TForm& H) {
  Chart c{n, n};
  return StdCA(c, QLie::abelian(RatMatrix(0, 0)), Conn(c, 0), QForm(c, 0, 2), H);
}

StdCA heterotic4(bool with_h) {
  Chart c{4, 4};
  QLie q = oracle::hyperbolic_plane();
  QForm R = QForm::simple(dx(c, {0, 1}), 2, 0) + QForm::simple(dx(c, {2, 3}), 2, 1);
  TForm H = with_h ? x(c, 0) * dx(c, {1, 2, 3}) : TForm(c, 3);
  return StdCA(c, q, Conn(c, 2), R, H);
}

}  // namespace

TEST(Standard, AnchorProjects) {
  StdCA e = StdCA::flat(Chart{2, 2}, oracle::so3_killing());
  GSec u(dx(e.chart, {0}), basis_section(3, 2, 0), FVec::coord(e.chart, 1));
  EXPECT_EQ(anchor(u), FVec::coord(e.chart, 1));
  EXPECT_TRUE(anchor(GSec::form(e, dx(e.chart, {0}))).is_zero());
}

TEST(Standard, InnerProductKilling) {
  StdCA e = StdCA::flat(Chart{2, 2}, oracle::so3_killing());
  GSec u(TForm(e.chart, 1), basis_section(3, 2, 0), FVec::coord(e.chart, 0));
  GSec v(dx(e.chart, {0}), basis_section(3, 2, 0), FVec(e.chart));
  EXPECT_EQ(inner(e, u, v), Poly(2, Rat(-1)));
  EXPECT_TRUE(inner(e, GSec::vec(e, FVec::coord(e.chart, 0)), GSec::vec(e, FVec::coord(e.chart, 1))).is_zero());
}

TEST(Standard, BnBracketExample) {
  StdCA e = bn(2);
  GSec u(TForm(e.chart, 1), {x(e.chart, 1)}, FVec::coord(e.chart, 0));
  GSec v = GSec::vec(e, FVec::coord(e.chart, 1));
  EXPECT_EQ(bracket(e, u, v), GSec::qpart(e, {Poly(2, Rat(-1))}));
  EXPECT_TRUE(bracket(e, GSec::vec(e, FVec::coord(e.chart, 0)), v).is_zero());
}

TEST(Standard, DnTwistedBracket) {
  Chart c{3, 3};
  StdCA e = dn(3, dx(c, {0, 1, 2}));
  GSec r = bracket(e, GSec::vec(e, FVec::coord(c, 0)), GSec::vec(e, FVec::coord(c, 1)));
  EXPECT_EQ(r, GSec::form(e, dx(c, {2})));
}

TEST(Standard, DOperator) {
  StdCA e = bn(2);
  EXPECT_EQ(d_operator(e, x(e.chart, 0)), GSec::form(e, dx(e.chart, {0})));
  EXPECT_TRUE(d_operator(e, Poly(2, Rat(5))).is_zero());
  Sampler s(51);
  for (int t = 0; t < 20; ++t) {
    Poly f = s.poly(2);
    GSec u = random_section(e, s);
    EXPECT_EQ(inner(e, d_operator(e, f), u), apply(anchor(u), f));
  }
}

TEST(Standard, HeteroticInstancePasses) {
  StdCA e = heterotic4(true);
  EXPECT_TRUE(validate(e).passed());
  Sampler s(52, 2, 2);
  Report r = axiom_suite(e, s, 20);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(Standard, HeteroticWithoutHFails) {
  StdCA e = heterotic4(false);
  Report v = validate(e);
  EXPECT_FALSE(v.find("pontryagin")->pass);
  EXPECT_TRUE(v.find("bianchi")->pass);
  Sampler s(53, 2, 2);
  Report r = axiom_suite(e, s, 20);
  EXPECT_FALSE(r.find("loday")->pass);
  EXPECT_TRUE(r.find("loday")->witness.contains("u"));
}

TEST(Standard, BnWithClosedHPasses) {
  Chart c{3, 3};
  StdCA e = bn(3);
  e.H = (x(c, 0) + Poly(3, Rat(2))) * dx(c, {0, 1, 2});
  EXPECT_TRUE(validate(e).passed());
  Sampler s(54, 2, 2);
  EXPECT_TRUE(axiom_suite(e, s, 20).passed());
}

TEST(Standard, NonMetricConnectionBreaksInvariance) {
  Chart c{3, 3};
  StdCA e = StdCA::flat(c, oracle::so3_killing());
  e.conn.omega[0](0, 1) = Poly(3, Rat(1));
  EXPECT_FALSE(validate(e).find("connection.metric_compatible")->pass);
  Sampler s(55, 2, 2);
  EXPECT_FALSE(axiom_suite(e, s, 10).find("metric_invariance")->pass);
}

// With Q = 0 the bracket is the H-twisted Dorfman bracket.
TEST(StandardProperty, RankZeroIsExactCourant) {
  Sampler s(56, 2, 2);
  Chart c{3, 3};
  StdCA e = dn(3, s.form(c, 3));
  for (int t = 0; t < 30; ++t) {
    GSec u = random_section(e, s), v = random_section(e, s);
    TForm f = lie_derivative(u.x, v.alpha) - interior(v.x, exterior_d(u.alpha)) + interior(v.x, interior(u.x, e.H));
    EXPECT_EQ(bracket(e, u, v), GSec(f, {}, bracket(u.x, v.x)));
  }
}

TEST(StandardProperty, JsonRoundTrip) {
  StdCA e = heterotic4(true);
  EXPECT_EQ(stdca_from_json(to_json(e)), e);
  Sampler s(57);
  GSec u = random_section(e, s);
  EXPECT_EQ(gsec_from_json(to_json(u), e), u);
  EXPECT_EQ(to_json(e).dump(), to_json(stdca_from_json(json::parse(to_json(e).dump()))).dump());
}
