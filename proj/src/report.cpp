#include "courant/report.hpp"

#include <algorithm>

namespace courant {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
}

json Report::to_json() const {
  json j;
  j["passed"] = passed();
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

}  // namespace courant
