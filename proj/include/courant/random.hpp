#pragma once

#include "courant/q_forms.hpp"

#include <cstdint>
#include <random>

namespace courant {

// Deterministic generator of random polynomial data. Uses the raw output of
// mt19937_64 (fully specified by the standard), so draws are identical across
// platforms for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int max_degree = 3, int max_terms = 3)
      : rng_(seed), max_degree_(max_degree), max_terms_(max_terms) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rat coeff() { return Rat(static_cast<long>(uniform(-3, 3))); }
  Rat nonzero_coeff();

  // Up to max_terms terms, total degree <= max_degree, coefficients in [-3, 3].
  Poly poly(std::size_t nvars);
  // Same, restricted to variables with allowed[i] == true.
  Poly poly(std::size_t nvars, const std::vector<bool>& allowed);
  TForm form(Chart c, std::size_t degree);
  FVec fvec(Chart c);
  ProjVec projvec(Chart c);
  std::vector<Poly> section(std::size_t dim, std::size_t nvars);
  QForm qform(Chart c, std::size_t dim, std::size_t degree);
  PolyMatrix matrix(std::size_t dim, std::size_t nvars);
  // Invertible block-triangular affine map with small integer entries.
  FolAffine affine(Chart c);

  int max_degree() const { return max_degree_; }

 private:
  std::mt19937_64 rng_;
  int max_degree_;
  int max_terms_;
};

}  // namespace courant
