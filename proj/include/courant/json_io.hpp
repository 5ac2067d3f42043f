#pragma once

#include "courant/q_forms.hpp"
#include "courant/report.hpp"

#include <stdexcept>
#include <string>

namespace courant {

// Malformed or inconsistent JSON input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Rat& r);
json to_json(const Poly& p);
json to_json(const TForm& w);
json to_json(const std::vector<Poly>& v);
json to_json(const FVec& x);
json to_json(const ProjVec& x);
json to_json(const RatMatrix& m);
json to_json(const PolyMatrix& m);
json to_json(const QForm& w);
json to_json(const QLie& q);
json to_json(const Conn& c);
json to_json(const Chart& c);
json to_json(const FolAffine& phi);

Rat rat_from_json(const json& j);
Poly poly_from_json(const json& j, std::size_t nvars);
TForm tform_from_json(const json& j, const Chart& c, std::size_t degree);
std::vector<Poly> polys_from_json(const json& j, std::size_t count, std::size_t nvars);
FVec fvec_from_json(const json& j, const Chart& c);
ProjVec projvec_from_json(const json& j, const Chart& c);
RatMatrix ratmatrix_from_json(const json& j, std::size_t rows, std::size_t cols);
PolyMatrix polymatrix_from_json(const json& j, std::size_t dim, std::size_t nvars);
QForm qform_from_json(const json& j, const Chart& c, std::size_t dim, std::size_t degree);
QLie qlie_from_json(const json& j);
Conn conn_from_json(const json& j, const Chart& c, std::size_t dim);
Chart chart_from_json(const json& j);
FolAffine affine_from_json(const json& j, const Chart& c);

// Fetches a required member, raising InputError when absent.
const json& member(const json& j, const char* key);

}  // namespace courant
