#pragma once

#include "courant/gallery.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace courant::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kInputError = 2 };

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int max_degree = 3;
};

// Checks run by a command, plus the object it produced (null if none).
struct Outcome {
  Report report;
  json result;
  json details;  // inputs drawn from the seed, reported for reproduction
};

// validate + axiom suite.
Outcome cmd_validate(const json& instance, const RunConfig& cfg);
// Change of dissection; a null `delta` draws one from the seed. With `strict_aut`
// the change must also be an automorphism of the instance.
Outcome cmd_transform(const json& instance, const json& delta, bool strict_aut, const RunConfig& cfg);

enum class GroupOp { Compose, Invert, Check };
// Elements default to seeded fixtures when `auts` is empty; `expect` (may be null) is
// compared with the produced element.
Outcome cmd_group(const json& instance, GroupOp op, const std::vector<json>& auts, const json& expect,
                  const RunConfig& cfg);

enum class InfOp { Check, Bracket, Linearize };
// For Linearize the single element is a gauge pair {"A","B"}.
Outcome cmd_inf(const json& instance, InfOp op, const std::vector<json>& elems, const json& expect,
                const RunConfig& cfg);

// Families: dn, bn, heterotic_like, heterotic4, flat_so3, point_manin.
Outcome cmd_gallery(const std::string& family, const json& params, const RunConfig& cfg);

// Whole command line. The report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace courant::cli
