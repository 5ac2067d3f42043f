#pragma once

#include "courant/json_io.hpp"
#include "courant/q_forms.hpp"
#include "courant/random.hpp"
#include "courant/report.hpp"

namespace courant {

// Standard Courant algebroid on F* + Q + F with data (nabla, R, H).
struct StdCA {
  Chart chart;
  QLie q;
  Conn conn;
  QForm R;  // Q-valued 2-form
  TForm H;  // 3-form

  StdCA() = default;
  StdCA(Chart c, QLie q, Conn conn, QForm R, TForm H);
  // Trivial connection, R = 0, H = 0.
  static StdCA flat(Chart c, QLie q);
  std::size_t dim() const { return q.dim(); }
  friend bool operator==(const StdCA&, const StdCA&) = default;
};

// Section alpha + a + X.
struct GSec {
  TForm alpha;
  std::vector<Poly> a;
  FVec x;

  GSec() = default;
  GSec(TForm alpha, std::vector<Poly> a, FVec x) : alpha(std::move(alpha)), a(std::move(a)), x(std::move(x)) {}
  static GSec zero(const StdCA& e);
  static GSec form(const StdCA& e, const TForm& alpha);
  static GSec qpart(const StdCA& e, const std::vector<Poly>& a);
  static GSec vec(const StdCA& e, const FVec& x);
  bool is_zero() const;

  friend GSec operator+(const GSec& u, const GSec& v);
  friend GSec operator-(const GSec& u, const GSec& v);
  friend GSec operator*(const Poly& f, const GSec& u);
  friend bool operator==(const GSec&, const GSec&) = default;
};

GSec random_section(const StdCA& e, Sampler& s);

FVec anchor(const GSec& u);
Poly inner(const StdCA& e, const GSec& u, const GSec& v);
GSec bracket(const StdCA& e, const GSec& u, const GSec& v);
// Df = (df, 0, 0)
GSec d_operator(const StdCA& e, const Poly& f);

// Structural checks of Q and nabla plus the three curvature relations.
Report validate(const StdCA& e);

// Courant axioms and derived properties on random sections.
Report axiom_suite(const StdCA& e, Sampler& s, int trials);

// First nonzero coefficient of a form, as a witness.
json form_witness(const TForm& defect);
json qform_witness(const QForm& defect);

json to_json(const StdCA& e);
json to_json(const GSec& u);
StdCA stdca_from_json(const json& j);
GSec gsec_from_json(const json& j, const StdCA& e);

}  // namespace courant
