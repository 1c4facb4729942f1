#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dynkin_ar/quiverrep.hpp"
#include "dynkin_ar/rootsys.hpp"
#include "dynkin_ar/util.hpp"

namespace dar {

// A tuple of positive roots lying in one translate chain: each part is the
// translate of the part after it, so positions strictly decrease. The
// assumption flag records whether the first (largest) part can be translated
// once more without leaving the positive roots; several statements below are
// only claimed under that assumption.
struct TauOrbitPartition {
  std::vector<int> parts;  // word positions, decreasing
  bool assumption = false;

  int length() const { return static_cast<int>(parts.size()); }
  int head() const { return parts.front(); }
  int base() const { return parts.back(); }
};

TauOrbitPartition make_tau_orbit_partition(const RootSystem& rs, const std::vector<int>& parts);

// A general Kostant partition: a multiset of positive roots recorded as word
// positions, sorted weakly decreasing. Repeats are allowed and no translate
// condition is imposed, so these cover arbitrary module isomorphism classes.
struct KostantPartition {
  std::vector<int> parts;  // word positions, weakly decreasing

  int length() const { return static_cast<int>(parts.size()); }
};

KostantPartition make_kostant_partition(const RootSystem& rs, std::vector<int> parts);

// Coordinate sum of all parts (the dimension vector of the attached module).
std::vector<long> kostant_weight(const RootSystem& rs, const KostantPartition& p);

KostantPartition random_kostant_partition(const RootSystem& rs, Rng& rng, int max_parts);

std::string kostant_partition_str(const RootSystem& rs, const KostantPartition& p);

// All translate-chain partitions whose assumption flag is true, ordered by
// base position, then by length.
std::vector<TauOrbitPartition> enumerate_tau_orbit_partitions(const RootSystem& rs);

// Applies the translate to every part. Requires the assumption.
TauOrbitPartition tau_shift(const RootSystem& rs, const TauOrbitPartition& p);

std::string partition_str(const RootSystem& rs, const TauOrbitPartition& p);

// Indices k with nonzero morphism space from the first part of lambda to the
// k-th part of kappa.
std::vector<int> r_set(const HomExtTables& t, const TauOrbitPartition& lambda,
                       const TauOrbitPartition& kappa);

// Number of part pairs whose difference is a root or zero, first position not
// smaller; and number whose sum is a positive root, same position condition.
long m_count(const RootSystem& rs, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa);
long p_count(const RootSystem& rs, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa);

long hom_sum(const HomExtTables& t, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa);

// Total morphism count minus the count against the translated kappa. The raw
// version simply drops pairs whose translate does not exist; the strict
// version insists on kappa's assumption first.
long hom_minus_tauhom_raw(const RootSystem& rs, const HomExtTables& t,
                          const TauOrbitPartition& lambda, const TauOrbitPartition& kappa);
long hom_minus_tauhom(const RootSystem& rs, const HomExtTables& t,
                      const TauOrbitPartition& lambda, const TauOrbitPartition& kappa);

// One direction of the vanishing test: the defect map for (lambda, kappa) is
// surjective exactly when m - p matches the total morphism-space dimension
// from the first part of lambda to the parts of kappa inside the index
// window. Both window conventions are evaluated; `canonical` keeps the full
// window when lambda is at least as long as kappa, while `alternate`
// substitutes exponents for lengths, which drops the top index.
struct DirectionCriterion {
  std::vector<int> r_set;
  long m = 0;
  long p = 0;
  int window_canonical = 0;
  int window_alternate = 0;
  bool surjective_canonical = false;
  bool surjective_alternate = false;
};

DirectionCriterion direction_criterion(const RootSystem& rs, const HomExtTables& t,
                                       const TauOrbitPartition& lambda,
                                       const TauOrbitPartition& kappa);

struct VanishingCriterion {
  DirectionCriterion fwd;  // (lambda, kappa)
  DirectionCriterion bwd;  // (kappa, lambda)
  bool vanishing_canonical = false;
  bool vanishing_alternate = false;
  bool window_ambiguity = false;
};

// Raw evaluation ignores the assumption flags (every quantity involved is
// still well defined); the strict version refuses to run without them.
VanishingCriterion ext_vanishing_criterion_raw(const RootSystem& rs, const HomExtTables& t,
                                               const TauOrbitPartition& lambda,
                                               const TauOrbitPartition& kappa);
VanishingCriterion ext_vanishing_criterion(const RootSystem& rs, const HomExtTables& t,
                                           const TauOrbitPartition& lambda,
                                           const TauOrbitPartition& kappa);

// Closed forms for equal-length pairs: the nonzero-morphism indices against
// the extended chain of kappa's base root form integer intervals, and the
// m and p counts reduce to interval-endpoint sums. The hypotheses are
// recorded rather than enforced; callers skip pairs where they fail.
struct IntervalClosedForms {
  bool hypotheses_hold = false;
  std::string failed_hypothesis;
  std::vector<std::pair<int, int>> intervals;  // maximal [u_p, v_p] inside T
  std::vector<int> r_set;
  long m = 0;
  long p = 0;
};

IntervalClosedForms interval_closed_forms(const RootSystem& rs, const HomExtTables& t,
                                          const TauOrbitPartition& lambda,
                                          const TauOrbitPartition& kappa);

// Direct sum of the part modules, in part order.
template <class K>
Rep<K> partition_rep(const std::vector<Rep<K>>& modules, const TauOrbitPartition& p) {
  Rep<K> acc = modules[p.parts[0] - 1];
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    acc = direct_sum(acc, modules[p.parts[i] - 1]);
  return acc;
}

template <class K>
Rep<K> partition_rep(const RootSystem& rs, const TauOrbitPartition& p) {
  Rep<K> acc = indecomposable_rep<K>(rs, p.parts[0]);
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    acc = direct_sum(acc, indecomposable_rep<K>(rs, p.parts[i]));
  return acc;
}

template <class K>
Rep<K> partition_rep(const RootSystem& rs, const KostantPartition& p) {
  Rep<K> acc = indecomposable_rep<K>(rs, p.parts[0]);
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    acc = direct_sum(acc, indecomposable_rep<K>(rs, p.parts[i]));
  return acc;
}

// Nullity of f -> af - fb on r x t matrices. The precondition (both a and b
// strictly upper triangular with unit superdiagonal) makes the nullity
// min(r, t) and independent of the higher entries; it is reported as a flag
// so callers can still measure the nullity of arbitrary shapes.
struct CommutatorResult {
  int nullity = 0;
  bool precondition_ok = false;
};

template <class K>
bool is_strict_upper_unit(const Mat<K>& a) {
  if (a.rows != a.cols) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j <= i && j < a.cols; ++j)
      if (!a.at(i, j).is_zero()) return false;
  for (int i = 0; i + 1 < a.rows; ++i)
    if (a.at(i, i + 1) != K(1)) return false;
  return true;
}

template <class K>
CommutatorResult commutator_nullity(const Mat<K>& a, const Mat<K>& b) {
  require(a.rows == a.cols && b.rows == b.cols, "DimensionMismatch",
          "commutator: square matrices required");
  int r = a.rows, t = b.rows;
  Mat<K> sys(r * t, r * t);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j) {
      int row = i * t + j;
      for (int k = 0; k < r; ++k) sys.at(row, k * t + j) += a.at(i, k);
      for (int k = 0; k < t; ++k) sys.at(row, i * t + k) -= b.at(k, j);
    }
  CommutatorResult res;
  res.nullity = kernel_matrix(sys).cols;
  res.precondition_ok = is_strict_upper_unit(a) && is_strict_upper_unit(b);
  return res;
}

}  // namespace dar
