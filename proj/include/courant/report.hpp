#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace courant {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  json witness;  // null when passing
};

// Ordered list of named checks; the first failure of each check carries a witness.
struct Report {
  std::vector<Check> checks;

  bool passed() const;
  void pass(const std::string& name) { checks.push_back({name, true, nullptr}); }
  void fail(const std::string& name, json witness) { checks.push_back({name, false, std::move(witness)}); }
  void record(const std::string& name, bool ok, json witness) {
    ok ? pass(name) : fail(name, std::move(witness));
  }
  const Check* find(const std::string& name) const;
  // Appends the checks of `o`, prefixing names.
  void merge(const Report& o, const std::string& prefix = "");
  json to_json() const;
};

}  // namespace courant
