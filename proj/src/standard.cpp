#include "courant/standard.hpp"

#include <functional>

namespace courant {

StdCA::StdCA(Chart c, QLie q_, Conn conn_, QForm R_, TForm H_)
    : chart(c), q(std::move(q_)), conn(std::move(conn_)), R(std::move(R_)), H(std::move(H_)) {
  require_same(c, conn.chart, "StdCA connection");
  require_same(c, R.chart, "StdCA R");
  require_same(c, H.chart(), "StdCA H");
  if (conn.dim != q.dim() || R.dim() != q.dim()) throw std::invalid_argument("StdCA: rank of data differs from Q");
  if (R.degree != 2) throw std::invalid_argument("StdCA: R must be a 2-form");
  if (H.degree() != 3) throw std::invalid_argument("StdCA: H must be a 3-form");
}

StdCA StdCA::flat(Chart c, QLie q) {
  std::size_t d = q.dim();
  return StdCA(c, std::move(q), Conn(c, d), QForm(c, d, 2), TForm(c, 3));
}

GSec GSec::zero(const StdCA& e) {
  return GSec(TForm(e.chart, 1), zero_section(e.dim(), e.chart.n), FVec(e.chart));
}

GSec GSec::form(const StdCA& e, const TForm& alpha) {
  GSec u = zero(e);
  u.alpha = alpha;
  return u;
}

GSec GSec::qpart(const StdCA& e, const std::vector<Poly>& a) {
  GSec u = zero(e);
  u.a = a;
  return u;
}

GSec GSec::vec(const StdCA& e, const FVec& x) {
  GSec u = zero(e);
  u.x = x;
  return u;
}

bool GSec::is_zero() const { return alpha.is_zero() && courant::is_zero(a) && x.is_zero(); }

GSec operator+(const GSec& u, const GSec& v) { return GSec(u.alpha + v.alpha, add(u.a, v.a), u.x + v.x); }
GSec operator-(const GSec& u, const GSec& v) { return GSec(u.alpha - v.alpha, sub(u.a, v.a), u.x - v.x); }
GSec operator*(const Poly& f, const GSec& u) { return GSec(f * u.alpha, scale(f, u.a), f * u.x); }

GSec random_section(const StdCA& e, Sampler& s) {
  return GSec(s.form(e.chart, 1), s.section(e.dim(), e.chart.n), s.fvec(e.chart));
}

FVec anchor(const GSec& u) { return u.x; }

Poly inner(const StdCA& e, const GSec& u, const GSec& v) {
  Poly r = interior(v.x, u.alpha).as_function() + interior(u.x, v.alpha).as_function();
  if (e.dim() > 0) r += e.q.inner(u.a, v.a);
  return r;
}

GSec bracket(const StdCA& e, const GSec& u, const GSec& v) {
  const Chart& c = e.chart;
  const FVec& X = u.x;
  const FVec& Y = v.x;
  QForm a = QForm::section(c, u.a), b = QForm::section(c, v.a);
  QForm na = d_nabla(e.conn, a), nb = d_nabla(e.conn, b);
  QForm iXR = interior(X, e.R), iYR = interior(Y, e.R);

  TForm f = lie_derivative(X, v.alpha) - interior(Y, exterior_d(u.alpha));
  f += pair_wedge(e.q, na, b);
  f -= pair_wedge(e.q, b, iXR);
  f += pair_wedge(e.q, a, iYR);
  f += interior(Y, interior(X, e.H));

  std::vector<Poly> s = e.q.bracket(u.a, v.a);
  s = add(s, interior(X, nb).as_section());
  s = sub(s, interior(Y, na).as_section());
  s = add(s, interior(Y, iXR).as_section());

  return GSec(std::move(f), std::move(s), bracket(X, Y));
}

GSec d_operator(const StdCA& e, const Poly& f) {
  return GSec::form(e, exterior_d(TForm::function(e.chart, f)));
}

json form_witness(const TForm& defect) {
  if (defect.is_zero()) return nullptr;
  const auto& [idx, f] = *defect.coeffs().begin();
  return {{"index", idx}, {"defect", f.str()}};
}

json qform_witness(const QForm& defect) {
  for (std::size_t a = 0; a < defect.dim(); ++a)
    if (!defect.comp[a].is_zero()) {
      json w = form_witness(defect.comp[a]);
      w["component"] = a;
      return w;
    }
  return nullptr;
}

static json endform_witness(const EndQForm& m) {
  for (std::size_t b = 0; b < m.dim; ++b)
    for (std::size_t a = 0; a < m.dim; ++a)
      if (!m.at(b, a).is_zero()) {
        json w = form_witness(m.at(b, a));
        w["entry"] = json::array({b, a});
        return w;
      }
  return nullptr;
}

Report validate(const StdCA& e) {
  Report r;
  Report q = validate_qlie(e.q);
  r.merge(q, "qlie.");
  if (!q.passed()) return r;
  r.merge(validate_conn(e.conn, e.q), "connection.");

  QForm bianchi = d_nabla(e.conn, e.R);
  r.record("bianchi", bianchi.is_zero(), qform_witness(bianchi));

  EndQForm curv = curvature(e.conn) - ad_of(e.q, e.R);
  r.record("curvature_is_ad_R", curv.is_zero(), endform_witness(curv));

  TForm pont = exterior_d(e.H) - pair_wedge(e.q, e.R, e.R) * frac(1, 2);
  r.record("pontryagin", pont.is_zero(), form_witness(pont));
  return r;
}

namespace {

struct TrialCheck {
  const char* name;
  std::function<bool(const GSec&, const GSec&, const GSec&, const Poly&)> holds;
};

}  // namespace

Report axiom_suite(const StdCA& e, Sampler& s, int trials) {
  auto br = [&](const GSec& u, const GSec& v) { return bracket(e, u, v); };
  auto ip = [&](const GSec& u, const GSec& v) { return inner(e, u, v); };
  auto D = [&](const Poly& f) { return d_operator(e, f); };

  std::vector<TrialCheck> checks = {
      {"metric_invariance",
       [&](const GSec& u, const GSec& v, const GSec& w, const Poly&) {
         return apply(anchor(u), ip(v, w)) == ip(br(u, v), w) + ip(v, br(u, w));
       }},
      {"loday",
       [&](const GSec& u, const GSec& v, const GSec& w, const Poly&) {
         return br(u, br(v, w)) == br(br(u, v), w) + br(v, br(u, w));
       }},
      {"symmetric_part",
       [&](const GSec& u, const GSec& v, const GSec&, const Poly&) {
         return br(u, v) + br(v, u) == D(ip(u, v));
       }},
      {"right_leibniz",
       [&](const GSec& u, const GSec& v, const GSec&, const Poly& f) {
         return br(u, f * v) == f * br(u, v) + apply(anchor(u), f) * v;
       }},
      {"left_leibniz",
       [&](const GSec& u, const GSec& v, const GSec&, const Poly& f) {
         return br(f * u, v) == ip(u, v) * D(f) - apply(anchor(v), f) * u + f * br(u, v);
       }},
      {"D_bracket_left", [&](const GSec& u, const GSec&, const GSec&, const Poly& f) { return br(D(f), u).is_zero(); }},
      {"D_bracket_right",
       [&](const GSec& u, const GSec&, const GSec&, const Poly& f) {
         return br(u, D(f)) == D(apply(anchor(u), f));
       }},
      {"anchor_morphism",
       [&](const GSec& u, const GSec& v, const GSec&, const Poly&) {
         return anchor(br(u, v)) == bracket(anchor(u), anchor(v));
       }},
      {"anchor_kills_D", [&](const GSec&, const GSec&, const GSec&, const Poly& f) { return anchor(D(f)).is_zero(); }},
  };

  std::vector<json> witness(checks.size(), nullptr);
  for (int t = 0; t < trials; ++t) {
    GSec u = random_section(e, s), v = random_section(e, s), w = random_section(e, s);
    Poly f = s.poly(e.chart.n);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      if (!witness[c].is_null()) continue;
      if (!checks[c].holds(u, v, w, f))
        witness[c] = {{"trial", t}, {"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}, {"f", to_json(f)}};
    }
  }
  Report r;
  for (std::size_t c = 0; c < checks.size(); ++c) r.record(checks[c].name, witness[c].is_null(), witness[c]);
  return r;
}

json to_json(const StdCA& e) {
  return {{"chart", to_json(e.chart)}, {"qlie", to_json(e.q)}, {"conn", to_json(e.conn)},
          {"R", to_json(e.R)},         {"H", to_json(e.H)}};
}

json to_json(const GSec& u) { return {{"alpha", to_json(u.alpha)}, {"a", to_json(u.a)}, {"X", to_json(u.x)}}; }

StdCA stdca_from_json(const json& j) {
  Chart c = chart_from_json(member(j, "chart"));
  QLie q = qlie_from_json(member(j, "qlie"));
  std::size_t d = q.dim();
  Conn conn = conn_from_json(j.contains("conn") ? j.at("conn") : json(), c, d);
  QForm R = j.contains("R") ? qform_from_json(j.at("R"), c, d, 2) : QForm(c, d, 2);
  TForm H = j.contains("H") ? tform_from_json(j.at("H"), c, 3) : TForm(c, 3);
  return StdCA(c, std::move(q), std::move(conn), std::move(R), std::move(H));
}

GSec gsec_from_json(const json& j, const StdCA& e) {
  GSec u = GSec::zero(e);
  if (j.contains("alpha")) u.alpha = tform_from_json(j.at("alpha"), e.chart, 1);
  if (j.contains("a")) u.a = polys_from_json(j.at("a"), e.dim(), e.chart.n);
  if (j.contains("X")) u.x = fvec_from_json(j.at("X"), e.chart);
  return u;
}

}  // namespace courant
