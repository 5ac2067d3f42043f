#include "courant/random.hpp"

namespace courant {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rat Sampler::nonzero_coeff() {
  std::int64_t v = uniform(1, 3);
  return Rat(static_cast<long>(uniform(0, 1) ? v : -v));
}

Poly Sampler::poly(std::size_t nvars) { return poly(nvars, std::vector<bool>(nvars, true)); }

Poly Sampler::poly(std::size_t nvars, const std::vector<bool>& allowed) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < nvars; ++i)
    if (allowed[i]) vars.push_back(i);
  Poly p(nvars);
  auto terms = uniform(0, max_terms_);
  for (std::int64_t t = 0; t < terms; ++t) {
    Monomial e(nvars, 0);
    auto deg = vars.empty() ? 0 : uniform(0, max_degree_);
    for (std::int64_t s = 0; s < deg; ++s) e[vars[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(vars.size()) - 1))]]++;
    p.add_term(e, nonzero_coeff());
  }
  return p;
}

TForm Sampler::form(Chart c, std::size_t degree) {
  TForm w(c, degree);
  if (degree > c.k) return w;
  // all increasing index tuples of length `degree`
  Index idx(degree);
  for (std::size_t i = 0; i < degree; ++i) idx[i] = i;
  while (true) {
    if (uniform(0, 1)) w.add(idx, poly(c.n));
    std::size_t i = degree;
    while (i > 0 && idx[i - 1] == c.k - degree + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
  return w;
}

FVec Sampler::fvec(Chart c) {
  FVec x(c);
  for (auto& p : x.v) p = poly(c.n);
  return x;
}

ProjVec Sampler::projvec(Chart c) {
  ProjVec x(c);
  std::vector<bool> transverse(c.n, false);
  for (std::size_t i = c.k; i < c.n; ++i) transverse[i] = true;
  for (std::size_t i = 0; i < c.n; ++i) x.v[i] = i < c.k ? poly(c.n) : poly(c.n, transverse);
  return x;
}

std::vector<Poly> Sampler::section(std::size_t dim, std::size_t nvars) {
  std::vector<Poly> s;
  for (std::size_t a = 0; a < dim; ++a) s.push_back(poly(nvars));
  return s;
}

QForm Sampler::qform(Chart c, std::size_t dim, std::size_t degree) {
  QForm w(c, dim, degree);
  for (auto& t : w.comp) t = form(c, degree);
  return w;
}

PolyMatrix Sampler::matrix(std::size_t dim, std::size_t nvars) {
  PolyMatrix m(dim, nvars);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = poly(nvars);
  return m;
}

FolAffine Sampler::affine(Chart c) {
  // unit lower/upper triangular factors keep L invertible with a rational inverse
  RatMatrix lo = RatMatrix::identity(c.n), up = RatMatrix::identity(c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    up(i, i) = nonzero_coeff();
    for (std::size_t j = 0; j < i; ++j) {
      bool same_block = (i < c.k) == (j < c.k);
      if (same_block) lo(i, j) = coeff();
      up(j, i) = coeff();
    }
  }
  std::vector<Rat> shift(c.n);
  for (auto& s : shift) s = coeff();
  return FolAffine(c, lo * up, shift);
}

}  // namespace courant
