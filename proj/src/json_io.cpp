#include "courant/json_io.hpp"

namespace courant {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::size_t as_size(const json& j, const char* what) {
  expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
         std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

const json& member(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

json to_json(const Rat& r) { return to_string(r); }

json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"e", e}, {"c", to_string(c)}});
  return arr;
}

json to_json(const TForm& w) {
  json arr = json::array();
  for (const auto& [idx, f] : w.coeffs()) arr.push_back({{"idx", idx}, {"coeff", to_json(f)}});
  return arr;
}

json to_json(const std::vector<Poly>& v) {
  json arr = json::array();
  for (const auto& p : v) arr.push_back(to_json(p));
  return arr;
}

json to_json(const FVec& x) { return to_json(x.v); }
json to_json(const ProjVec& x) { return to_json(x.v); }

json to_json(const RatMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

json to_json(const PolyMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

json to_json(const QForm& w) {
  json arr = json::array();
  for (const auto& t : w.comp) arr.push_back(to_json(t));
  return arr;
}

json to_json(const QLie& q) {
  std::size_t d = q.dim();
  json c = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json ci = json::array();
    for (std::size_t j = 0; j < d; ++j) {
      json cij = json::array();
      for (std::size_t k = 0; k < d; ++k) cij.push_back(to_string(q.c(i, j, k)));
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  return {{"dim", d}, {"c", c}, {"gram", to_json(q.gram())}};
}

json to_json(const Conn& c) {
  json arr = json::array();
  for (const auto& m : c.omega) arr.push_back(to_json(m));
  return {{"omega", arr}};
}

json to_json(const Chart& c) { return {{"n", c.n}, {"k", c.k}}; }

json to_json(const FolAffine& phi) {
  json c = json::array();
  for (const auto& r : phi.shift()) c.push_back(to_string(r));
  return {{"L", to_json(phi.L())}, {"c", c}};
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  expect(j.is_string(), "rational must be a string \"p/q\" or an integer");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Poly poly_from_json(const json& j, std::size_t nvars) {
  expect(j.is_array(), "polynomial must be an array of terms");
  Poly p(nvars);
  for (const auto& t : j) {
    const json& e = member(t, "e");
    expect(e.is_array() && e.size() == nvars,
           "exponent vector length must equal " + std::to_string(nvars));
    Monomial m;
    for (const auto& v : e) m.push_back(static_cast<std::uint32_t>(as_size(v, "exponent")));
    p.add_term(m, rat_from_json(member(t, "c")));
  }
  return p;
}

TForm tform_from_json(const json& j, const Chart& c, std::size_t degree) {
  expect(j.is_array(), "form must be an array of {idx, coeff}");
  TForm w(c, degree);
  for (const auto& t : j) {
    const json& idx = member(t, "idx");
    expect(idx.is_array() && idx.size() == degree, "form index length must equal degree " + std::to_string(degree));
    std::vector<std::size_t> slots;
    for (const auto& v : idx) {
      slots.push_back(as_size(v, "form index"));
      expect(slots.back() < c.k, "form index outside the foliation");
    }
    auto sorted = sort_with_sign(slots);
    expect(sorted && sorted->first == slots, "form indices must be strictly increasing");
    w.add(slots, poly_from_json(member(t, "coeff"), c.n));
  }
  return w;
}

std::vector<Poly> polys_from_json(const json& j, std::size_t count, std::size_t nvars) {
  expect(j.is_array() && j.size() == count, "expected " + std::to_string(count) + " polynomials");
  std::vector<Poly> v;
  for (const auto& p : j) v.push_back(poly_from_json(p, nvars));
  return v;
}

FVec fvec_from_json(const json& j, const Chart& c) {
  FVec x(c);
  x.v = polys_from_json(j, c.k, c.n);
  return x;
}

ProjVec projvec_from_json(const json& j, const Chart& c) {
  ProjVec x(c);
  x.v = polys_from_json(j, c.n, c.n);
  if (!x.is_projectable()) throw InputError("vector field is not projectable");
  return x;
}

RatMatrix ratmatrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  expect(j.is_array() && j.size() == rows, "matrix must have " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    expect(j[i].is_array() && j[i].size() == cols, "matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

PolyMatrix polymatrix_from_json(const json& j, std::size_t dim, std::size_t nvars) {
  expect(j.is_array() && j.size() == dim, "matrix must have " + std::to_string(dim) + " rows");
  PolyMatrix m(dim, nvars);
  for (std::size_t i = 0; i < dim; ++i) {
    expect(j[i].is_array() && j[i].size() == dim, "matrix row must have " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = poly_from_json(j[i][k], nvars);
  }
  return m;
}

QForm qform_from_json(const json& j, const Chart& c, std::size_t dim, std::size_t degree) {
  expect(j.is_array() && j.size() == dim, "Q-form must have " + std::to_string(dim) + " components");
  QForm w(c, dim, degree);
  for (std::size_t a = 0; a < dim; ++a) w.comp[a] = tform_from_json(j[a], c, degree);
  return w;
}

QLie qlie_from_json(const json& j) {
  std::size_t d = as_size(member(j, "dim"), "dim");
  const json& c = member(j, "c");
  expect(c.is_array() && c.size() == d, "structure constants must be dim x dim x dim");
  std::vector<Rat> cs;
  for (const auto& ci : c) {
    expect(ci.is_array() && ci.size() == d, "structure constants must be dim x dim x dim");
    for (const auto& cij : ci) {
      expect(cij.is_array() && cij.size() == d, "structure constants must be dim x dim x dim");
      for (const auto& v : cij) cs.push_back(rat_from_json(v));
    }
  }
  return QLie(d, cs, ratmatrix_from_json(member(j, "gram"), d, d));
}

Conn conn_from_json(const json& j, const Chart& c, std::size_t dim) {
  Conn conn(c, dim);
  if (j.is_null()) return conn;
  const json& om = member(j, "omega");
  expect(om.is_array() && om.size() == c.k, "omega must have one matrix per foliated coordinate");
  for (std::size_t i = 0; i < c.k; ++i) conn.omega[i] = polymatrix_from_json(om[i], dim, c.n);
  return conn;
}

Chart chart_from_json(const json& j) {
  Chart c{as_size(member(j, "n"), "n"), as_size(member(j, "k"), "k")};
  expect(c.k <= c.n, "chart needs k <= n");
  return c;
}

FolAffine affine_from_json(const json& j, const Chart& c) {
  RatMatrix L = ratmatrix_from_json(member(j, "L"), c.n, c.n);
  const json& cj = member(j, "c");
  expect(cj.is_array() && cj.size() == c.n, "shift must have n entries");
  std::vector<Rat> shift;
  for (const auto& v : cj) shift.push_back(rat_from_json(v));
  try {
    return FolAffine(c, L, shift);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace courant
