#pragma once

#include "courant/standard.hpp"
#include "courant/transform.hpp"

#include <stdexcept>

namespace courant {

// Constructor input that fails validation; carries the failing report.
struct GalleryError : std::invalid_argument {
  Report report;
  GalleryError(const std::string& what, Report r) : std::invalid_argument(what), report(std::move(r)) {}
};

// Exact Courant algebroid TM + T*M twisted by a closed H (Q = 0, k = n).
StdCA make_dn(std::size_t n, const TForm& H);
// Rank-1 abelian Q with <e,e> = 1, trivial connection, R = 0, closed H (k = n).
StdCA make_bn(std::size_t n, const TForm& H);
// Arbitrary standard data on a trivialized bundle; rejected unless validate passes.
StdCA make_heterotic_like(Chart c, QLie q, Conn conn, QForm R, TForm H);
// so(3) with its Killing form, R = 0, H = 0, on R^n with k = n. With `adjoint`,
// the flat connection d + dx_0 (x) ad_{e_0}; otherwise the trivial one.
StdCA make_flat_so3(std::size_t n, bool adjoint);
// The abelian 4-dimensional heterotic-like instance: hyperbolic Q of rank 2,
// R = dx0^dx1 (x) e0 + dx2^dx3 (x) e1, H = x0 dx1^dx2^dx3.
StdCA make_heterotic4();

// g + g* with [x+xi, y+eta] = ([x,y] - ad*_xi y + ad*_eta x) + ([xi,eta] - ad*_x eta + ad*_y xi)
// and <x+xi, y+eta> = xi(y) + eta(x). `g` holds [e_i,e_j] = g(i,j,k) e_k and `cog` holds the
// dual bracket [e^i,e^j] = cog(i,j,k) e^k, both indexed (i*m + j)*m + k. No validation.
QLie manin_double(std::size_t m, const std::vector<Rat>& g, const std::vector<Rat>& cog);
// Same, but throws GalleryError unless the double is a quadratic Lie algebra.
QLie make_point_manin(std::size_t m, const std::vector<Rat>& g, const std::vector<Rat>& cog);
// The point case: the algebroid over a point with fibre q.
StdCA point_algebroid(const QLie& q);

// Random orthogonal automorphism of q: a Cayley transform of a G-skew matrix, negated at
// random when q is abelian; the identity when the transform is not bracket preserving.
QAutPair random_qaut(const QLie& q, Sampler& s);

// Random automorphism of an instance with trivial connection and R = 0, and H either
// zero or a constant multiple of dx0^dx1^dx2 with k = 3. Throws std::invalid_argument
// for other instances.
Aut fixture_aut(const StdCA& e, Sampler& s);
// Random infinitesimal automorphism of an instance with trivial connection, R = 0,
// closed H not depending on transverse coordinates.
InfAut fixture_infaut(const StdCA& e, Sampler& s);

}  // namespace courant
