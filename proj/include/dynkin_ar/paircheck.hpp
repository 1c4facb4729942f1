#pragma once

// Single-pair reports: the combinatorial window verdict, the linear-algebra
// count of extensions between generic dual modules, and their agreement,
// serialized as versioned JSON with a stable key order.

#include <cstdint>
#include <string>
#include <vector>

#include "dynkin_ar/kostant.hpp"
#include "dynkin_ar/preproj.hpp"
#include "dynkin_ar/rootsys.hpp"
#include "json.hpp"

namespace dar {

// Coefficient field for the dual-module sampling: exact rationals by default,
// or a fixed prime residue field ("prime:<p>", one prime per process).
struct FieldSpec {
  bool rational = true;
  uint64_t prime = 0;

  std::string str() const;
};

FieldSpec parse_field_text(const std::string& text);

struct PairStats {
  std::vector<int> r_set, r_set_swapped;
  int r_windowed = 0, m_count = 0, p_count = 0;
  int r_windowed_swapped = 0, m_count_swapped = 0, p_count_swapped = 0;
  bool criterion_holds = false;
};

PairStats pair_stats(const VanishingCriterion& v);

struct OracleDims {
  int via_forms = 0;
  int via_coker = 0;
  int hom_fwd = 0;
  int hom_bwd = 0;
  bool certified = false;
};

OracleDims pair_oracle(const RootSystem& rs, const TauOrbitPartition& lambda,
                       const TauOrbitPartition& kappa, uint64_t seed, const FieldSpec& field);

struct PairReport {
  std::string quiver;
  std::string lambda_text, kappa_text;
  bool frozen = false;  // some head is projective, so the theorem does not apply
  std::string verdict;  // "vanishing" | "nonvanishing" | "frozen"
  std::string warning;  // nonempty only for frozen pairs
  PairStats stats;
  bool criterion = false;            // window from the surjectivity proof
  bool criterion_alternate = false;  // window as printed in the statement
  bool window_ambiguity = false;
  bool multiplicity_flag = false;  // some morphism count between parts exceeds 1
  OracleDims oracle;
  std::string field;
  bool agreement = false;
  uint64_t seed = 0;
  long timing_ms = -1;  // negative values are omitted from the JSON

  nlohmann::json to_json() const;
};

// Full pair check: stats, both window readings, oracle dimensions, agreement.
// Frozen pairs are still checked; the verdict marks them and the warning notes
// that the window formulas are used outside their hypotheses.
PairReport check_pair(const RootSystem& rs, const HomExtTables& t, const TauOrbitPartition& lambda,
                      const TauOrbitPartition& kappa, uint64_t seed, const FieldSpec& field,
                      bool with_timing);

}  // namespace dar
