#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace courant {

// Exact rational, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

// p/q in lowest terms.
inline Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// Canonical "p/q" form (integers also carry "/1").
std::string to_string(const Rat& r);
// Accepts "p/q" or a bare integer. Throws std::invalid_argument on malformed input
// or a zero denominator.
Rat parse_rat(const std::string& s);

using Monomial = std::vector<std::uint32_t>;

// Sparse polynomial over Q in a fixed number of variables. Terms are stored in
// lexicographic order of exponent vectors; zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const Rat& c);

  static Poly constant(std::size_t nvars, const Rat& c) { return Poly(nvars, c); }
  // The coordinate function x_i (0-based).
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Monomial& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int degree() const;  // -1 for the zero polynomial
  Rat coeff(const Monomial& e) const;

  // Adds c * x^e, dropping the term if the sum vanishes.
  void add_term(const Monomial& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const;

  // Does the polynomial involve x_i at all?
  bool depends_on(std::size_t i) const;

  // Value at a rational point.
  Rat evaluate(const std::vector<Rat>& x) const;

  // x_i -> subs[i] for every i. All substitutes must share one variable count.
  Poly substitute(const std::vector<Poly>& subs) const;

  // Appends `extra` fresh variables at the end.
  Poly extend(std::size_t extra) const;
  // Coefficient of x_i^k, as a polynomial in the remaining nvars-1 variables.
  Poly coefficient_of(std::size_t i, std::uint32_t k) const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rat> terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// d/dx_i, 0-based. Throws std::out_of_range when i >= nvars.
Poly partial(const Poly& p, std::size_t i);

}  // namespace courant
