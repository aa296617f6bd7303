#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lsb/bialgebra.hpp"

namespace lsb {

/// Reads and validates an algebra file; throws ParseError or
/// PreconditionError (with the axiom report) on failure.
SuperLieAlgebra parse_algebra_file(const std::string& path);

/// A bundled algebra name (osp12, super_e2) or a path to an algebra file.
SuperLieAlgebra load_algebra(std::string_view name_or_path);

/// "a=1,b=-1/2" -> bindings in the parameter ring.
Bindings parse_params(std::string_view text);

/// One registry entry: `id | anchor | check | arguments | expect`.
struct ClaimSpec {
  std::string id, anchor, check;
  std::vector<std::string> args;
  std::string expect;
};

struct ClaimResult {
  std::string id, anchor;
  enum class Status { Pass, Fail, Erratum } status = Status::Fail;
  std::string detail;
};
std::string to_string(ClaimResult::Status s);

std::vector<ClaimSpec> parse_manifest(std::string_view text);
std::vector<ClaimSpec> load_manifest(const std::string& path);
std::string default_manifest_path();
std::string data_path(std::string_view file);

/// Runs one claim.  The observed outcome is compared with `expect`: equal
/// outcomes give pass (or erratum when the expectation is "erratum..."),
/// anything else fails with both values in the detail.
ClaimResult run_claim(const ClaimSpec& spec);

/// Claims whose id starts with `filter` (all when empty), sorted by id.
std::vector<ClaimResult> run_claims(const std::vector<ClaimSpec>& specs, std::string_view filter = "");

}  // namespace lsb
