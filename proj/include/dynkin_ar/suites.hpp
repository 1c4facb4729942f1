#pragma once

// Verification suites: exhaustive property sweeps over fixed quiver scopes,
// with machine-readable reports. Every expected property instance is counted;
// every violation is recorded in full, and a suite's exit status is 0 exactly
// when its mismatch list is empty.

#include <cstdint>
#include <string>
#include <vector>

#include "dynkin_ar/paircheck.hpp"
#include "json.hpp"

namespace dar {

struct SuiteOptions {
  uint64_t seed = 0;
  long trials = 200;            // instance count for the commutator suite
  FieldSpec field;              // oracle coefficient field
  std::vector<Quiver> quivers;  // restrict the scope; empty keeps the default
};

struct SuiteCounts {
  long checks = 0;
  long agreements = 0;
  long mismatches = 0;
  long multiplicity_flags = 0;   // morphism count above 1 entered a check
  long hypothesis_failed = 0;    // closed forms skipped for a stated reason
  long uncertified = 0;          // oracle ran on an uncertified dual sample
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> scope;  // quiver display strings
  SuiteCounts counts;
  std::vector<nlohmann::json> mismatches;
  std::vector<std::string> notes;
  uint64_t seed = 0;
  std::string field;
  int exit_status = 0;

  nlohmann::json to_json() const;
};

// Fixed execution order: euler, tauhom, fourcases, zab, theorem, corollaries,
// closedforms, minors.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace dar
