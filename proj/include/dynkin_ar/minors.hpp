#pragma once

#include <string>
#include <vector>

#include "dynkin_ar/kostant.hpp"
#include "dynkin_ar/rootsys.hpp"

namespace dar {

// A quantum minor is addressed by a pair of word indices (j, l) with
// 0 <= j < l <= N; for j >= 1 both indices must carry the same word letter.
// D(0, l) are the initial minors.
struct MinorIndex {
  int j = 0;
  int l = 0;
};

MinorIndex make_minor_index(const RootSystem& rs, int j, int l);

// Position of the next occurrence of the same word letter after k, or 0 when
// k is the last occurrence. Coincides with the translate table.
int next_occurrence(const RootSystem& rs, int k);

// A minor is frozen when its right index is a last occurrence, so the top
// root of its tuple cannot be translated further.
bool is_frozen(const RootSystem& rs, const MinorIndex& d);

// The occurrences of the shared letter inside (j, l], latest first. These are
// consecutive translates, so they form a translate-chain tuple; the tuple's
// assumption holds exactly when the minor is not frozen.
TauOrbitPartition minor_to_partition(const RootSystem& rs, const MinorIndex& d);

// Inverse of the above: the tuple's head is the right index, and the left
// index is the occurrence preceding the tuple's base (0 if none).
MinorIndex partition_to_minor(const RootSystem& rs, const TauOrbitPartition& p);

std::string minor_str(const MinorIndex& d);

struct MonomialFactor {
  MinorIndex minor;
  int exponent = 1;
};

struct ClusterMonomial {
  std::vector<MonomialFactor> factors;
};

ClusterMonomial make_cluster_monomial(const RootSystem& rs,
                                      const std::vector<std::pair<MinorIndex, int>>& factors);

std::string monomial_str(const ClusterMonomial& m);

// One cross pair of factors. For a pair with a frozen member the vanishing
// test is outside its hypotheses; such pairs pass by convention (frozen
// variables commute up to scalars with everything) and carry a note, while
// the raw criterion numbers are still reported for inspection.
struct FactorPairCheck {
  MinorIndex a;
  MinorIndex b;
  bool frozen = false;
  std::string note;
  VanishingCriterion criterion;
  bool quasi_commute = false;
};

struct QuasiCommuteResult {
  bool quasi_commute = false;
  bool any_frozen = false;
  bool window_ambiguity = false;
  std::vector<FactorPairCheck> pairs;
};

// Checks every factor of one monomial against every factor of the other.
// Exponents scale the commutation factor but never decide whether the two
// monomials quasi-commute, so they do not enter the test.
QuasiCommuteResult quasi_commute(const RootSystem& rs, const HomExtTables& t,
                                 const ClusterMonomial& x, const ClusterMonomial& y);

}  // namespace dar
