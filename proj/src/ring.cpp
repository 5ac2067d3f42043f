#include "courant/ring.hpp"

#include <sstream>

namespace courant {

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  auto is_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Poly::Poly(std::size_t nvars, const Rat& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars, 0), c);
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Monomial e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rat(1));
}

Poly Poly::monomial(const Monomial& e, const Rat& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto v : terms_.begin()->first)
    if (v) return false;
  return true;
}

Rat Poly::constant_term() const { return coeff(Monomial(nvars_, 0)); }

int Poly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto v : e) d += static_cast<int>(v);
    best = std::max(best, d);
  }
  return best;
}

Rat Poly::coeff(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

static void check_same(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  Poly r(a.nvars_);
  Monomial e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(nvars_, Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Poly::depends_on(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i]) return true;
  return false;
}

Rat Poly::evaluate(const std::vector<Rat>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("point arity mismatch");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
  if (subs.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  std::size_t m = subs.empty() ? 0 : subs[0].nvars();
  // powers[i][k] = subs[i]^k, built lazily
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto& ps = powers[i];
    if (ps.empty()) ps.emplace_back(m, Rat(1));
    while (ps.size() <= k) ps.push_back(ps.back() * subs[i]);
    return ps[k];
  };
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

Poly Poly::extend(std::size_t extra) const {
  Poly r(nvars_ + extra);
  for (const auto& [e, c] : terms_) {
    Monomial f = e;
    f.resize(nvars_ + extra, 0);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Poly Poly::coefficient_of(std::size_t i, std::uint32_t k) const {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  Poly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Monomial f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    r.add_term(f, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly partial(const Poly& p, std::size_t i) {
  if (i >= p.nvars()) throw std::out_of_range("partial: index out of range");
  Poly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (!e[i]) continue;
    Monomial f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

}  // namespace courant
