#pragma once

#include "courant/standard.hpp"

#include <functional>

namespace courant {

// Constant orthogonal automorphism of Q together with its inverse.
struct QAutPair {
  RatMatrix T, Tinv;

  static QAutPair identity(std::size_t d);
  // Throws std::invalid_argument if T is singular.
  static QAutPair from(const RatMatrix& T);
  QAutPair inverse() const { return {Tinv, T}; }
  QAutPair then(const QAutPair& o) const { return {o.T * T, Tinv * o.Tinv}; }  // o after this
  friend bool operator==(const QAutPair&, const QAutPair&) = default;
};

struct GaugePair {
  QForm A;  // Q-valued 1-form
  TForm B;  // 2-form
};

enum class PsiKind { Tau, A, B };

struct PsiData {
  PsiKind kind = PsiKind::B;
  QAutPair tau;
  QForm A;
  TForm B;
  static PsiData of_tau(QAutPair t);
  static PsiData of_A(QForm a);
  static PsiData of_B(TForm b);
};

GSec psi_apply(const PsiData& p, const StdCA& e, const GSec& s);
// Target data making psi_apply a morphism E -> transform_data(p, E).
StdCA transform_data(const PsiData& p, const StdCA& e);

// delta = Psi_tau o Psi_A o Psi_B
struct Dissection {
  QAutPair tau;
  QForm A;
  TForm B;
};

GSec dissection_apply(const Dissection& d, const StdCA& e, const GSec& s);
// Closed-form target data (nabla^, R^, H^) of a change of dissection.
StdCA dissection_change(const Dissection& d, const StdCA& e);

// (phi, tau)^natural: pushes data forward along phi and tau.
GSec natural_apply(const FolAffine& phi, const QAutPair& tau, const GSec& s);
StdCA natural_transform(const FolAffine& phi, const QAutPair& tau, const StdCA& e);

// Automorphism (phi, tau, A, B) = (phi, tau)^natural o Psi_A o Psi_B.
struct Aut {
  FolAffine phi;
  QAutPair tau;
  QForm A;
  TForm B;

  static Aut identity(const StdCA& e);
  friend bool operator==(const Aut&, const Aut&) = default;
};

GSec aut_apply(const Aut& f, const StdCA& e, const GSec& s);
// f o g
Aut aut_compose(const Aut& f, const Aut& g, const QLie& q);
Aut aut_invert(const Aut& f);
// The three conditions, the data round trip, and bracket/pairing intertwining on random pairs.
Report check_aut(const Aut& f, const StdCA& e, Sampler& s, int trials);

// Infinitesimal automorphism: X projectable, Theta = X-derivative + theta.
struct InfAut {
  ProjVec X;
  PolyMatrix theta;
  QForm a;  // Q-valued 1-form
  TForm b;  // 2-form

  static InfAut zero(const StdCA& e);
  friend bool operator==(const InfAut&, const InfAut&) = default;
};

// Theta(s) = X.s + theta s
std::vector<Poly> theta_apply(const InfAut& d, const std::vector<Poly>& s);
GSec infaut_apply(const InfAut& d, const StdCA& e, const GSec& s);
InfAut infaut_bracket(const InfAut& d1, const InfAut& d2, const QLie& q);
// Six conditions plus the derivation property on random pairs.
Report check_infaut(const InfAut& d, const StdCA& e, Sampler& s, int trials);
// Reads (X, theta, a, b) off a first-order differential operator of the above shape.
InfAut infaut_from_action(const std::function<GSec(const GSec&)>& act, const StdCA& e);
// t-linear part of Psi_{tA} o Psi_{tB}.
InfAut linearize(const GaugePair& family, const StdCA& e);

json to_json(const QAutPair& t);
json to_json(const Aut& f);
json to_json(const InfAut& d);
json to_json(const Dissection& d);
QAutPair qaut_from_json(const json& j, std::size_t dim);
Aut aut_from_json(const json& j, const StdCA& e);
InfAut infaut_from_json(const json& j, const StdCA& e);
Dissection dissection_from_json(const json& j, const StdCA& e);
GaugePair gauge_from_json(const json& j, const StdCA& e);

}  // namespace courant
