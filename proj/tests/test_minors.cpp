#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dynkin_ar/exactlin.hpp"
#include "dynkin_ar/kostant.hpp"
#include "dynkin_ar/minors.hpp"
#include "dynkin_ar/preproj.hpp"
#include "dynkin_ar/quiverrep.hpp"
#include "dynkin_ar/rootsys.hpp"

using namespace dar;

namespace {

RootSystem linear(const std::string& type) {
  DynkinType t = parse_dynkin_type(type);
  return build_root_system(make_quiver(t, preset_arrows(t, "linear")));
}

template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

// Segments [a,b] and [c,d] interleave when neither contains the other and
// their union is again a segment (adjacency included).
bool linked(std::pair<int, int> x, std::pair<int, int> y) {
  if (x.first > y.first || (x.first == y.first && x.second > y.second)) std::swap(x, y);
  auto [a, b] = x;
  auto [c, d] = y;
  return a < c && b < d && c <= b + 1;
}

}  // namespace

TEST_CASE("minor indices validate against the word") {
  RootSystem rs = linear("A3");  // word 1 2 3 1 2 1
  CHECK(next_occurrence(rs, 1) == 4);
  CHECK(next_occurrence(rs, 2) == 5);
  CHECK(next_occurrence(rs, 3) == 0);
  CHECK(next_occurrence(rs, 4) == 6);
  CHECK(next_occurrence(rs, 6) == 0);
  for (int k = 1; k <= rs.N; ++k) CHECK(next_occurrence(rs, k) == rs.tau[k - 1]);

  CHECK(minor_str(make_minor_index(rs, 0, 4)) == "D(0,4)");
  CHECK(minor_str(make_minor_index(rs, 4, 6)) == "D(4,6)");
  CHECK(error_kind([&] { make_minor_index(rs, 2, 4); }) == "InvalidIndex");
  CHECK(error_kind([&] { make_minor_index(rs, 4, 4); }) == "InvalidIndex");
  CHECK(error_kind([&] { make_minor_index(rs, -1, 2); }) == "InvalidIndex");
  CHECK(error_kind([&] { make_minor_index(rs, 0, 7); }) == "InvalidIndex");
  CHECK(error_kind([&] { next_occurrence(rs, 0); }) == "InvalidIndex");
}

TEST_CASE("minors and translate-chain tuples correspond") {
  RootSystem rs = linear("A3");
  TauOrbitPartition p = minor_to_partition(rs, make_minor_index(rs, 0, 4));
  CHECK(p.parts == std::vector<int>{4, 1});
  CHECK(partition_str(rs, p) == "(0 1 0, 1 0 0)");
  CHECK(p.assumption);
  CHECK_FALSE(is_frozen(rs, make_minor_index(rs, 0, 4)));

  CHECK(minor_to_partition(rs, make_minor_index(rs, 1, 4)).parts == std::vector<int>{4});
  CHECK(minor_to_partition(rs, make_minor_index(rs, 0, 6)).parts == std::vector<int>{6, 4, 1});
  CHECK(minor_to_partition(rs, make_minor_index(rs, 4, 6)).parts == std::vector<int>{6});
  CHECK(is_frozen(rs, make_minor_index(rs, 0, 6)));
  CHECK(is_frozen(rs, make_minor_index(rs, 0, 3)));
  CHECK_FALSE(minor_to_partition(rs, make_minor_index(rs, 0, 6)).assumption);
}

TEST_CASE("round trips and counts over every index") {
  RootSystem rs = linear("A4");
  // All well-formed index pairs, by brute force.
  std::vector<MinorIndex> all;
  for (int l = 1; l <= rs.N; ++l) {
    all.push_back(make_minor_index(rs, 0, l));
    for (int j = 1; j < l; ++j)
      if (rs.word[j - 1] == rs.word[l - 1]) all.push_back(make_minor_index(rs, j, l));
  }
  CHECK(all.size() == 20);  // chain sizes 4,3,2,1 give 10+6+3+1

  int frozen_count = 0;
  for (const MinorIndex& d : all) {
    TauOrbitPartition p = minor_to_partition(rs, d);
    CHECK(p.assumption == !is_frozen(rs, d));
    MinorIndex back = partition_to_minor(rs, p);
    CHECK(back.j == d.j);
    CHECK(back.l == d.l);
    if (is_frozen(rs, d)) ++frozen_count;
  }
  CHECK(frozen_count == 10);

  // The assumption-satisfying tuples are exactly the unfrozen minors.
  auto tuples = enumerate_tau_orbit_partitions(rs);
  CHECK(tuples.size() == 10);
  std::set<std::pair<int, int>> unfrozen;
  for (const MinorIndex& d : all)
    if (!is_frozen(rs, d)) unfrozen.insert({d.j, d.l});
  for (const auto& p : tuples) {
    MinorIndex d = partition_to_minor(rs, p);
    CHECK(unfrozen.count({d.j, d.l}) == 1);
    CHECK(minor_to_partition(rs, d).parts == p.parts);
  }
}

TEST_CASE("interleaving segments detect the failure of quasi-commutation") {
  RootSystem rs = linear("A5");
  HomExtTables t = compute_hom_ext_tables(rs);
  // Single-part tuples whose root can still be translated.
  std::vector<int> positions;
  for (int k = 1; k <= rs.N; ++k)
    if (rs.tau[k - 1] != 0) positions.push_back(k);
  CHECK(positions.size() == 10);

  for (int a : positions)
    for (int b : positions) {
      TauOrbitPartition lam = make_tau_orbit_partition(rs, {a});
      TauOrbitPartition kap = make_tau_orbit_partition(rs, {b});
      VanishingCriterion v = ext_vanishing_criterion(rs, t, lam, kap);
      auto sa = segment_of(rs.roots[a - 1]);
      auto sb = segment_of(rs.roots[b - 1]);
      REQUIRE(sa.has_value());
      REQUIRE(sb.has_value());
      CHECK(v.vanishing_canonical == !linked(*sa, *sb));
    }

  // The same through the monomial interface, with the translate pair.
  MinorIndex x = partition_to_minor(rs, make_tau_orbit_partition(rs, {2}));
  MinorIndex y = partition_to_minor(rs, make_tau_orbit_partition(rs, {rs.tau[1]}));
  ClusterMonomial mx = make_cluster_monomial(rs, {{x, 1}});
  ClusterMonomial my = make_cluster_monomial(rs, {{y, 1}});
  QuasiCommuteResult qc = quasi_commute(rs, t, mx, my);
  CHECK_FALSE(qc.quasi_commute);
  CHECK_FALSE(qc.any_frozen);
  CHECK(quasi_commute(rs, t, mx, mx).quasi_commute);
}

TEST_CASE("monomial verdicts agree with the linear-algebra count of extensions") {
  RootSystem rs = linear("A3");
  HomExtTables t = compute_hom_ext_tables(rs);
  Rng rng(5150);

  auto dual_for = [&](const MinorIndex& d, uint64_t label) {
    Rng local = rng.fork(label);
    return generic_dual(partition_rep<Rat>(rs, minor_to_partition(rs, d)), local);
  };

  MinorIndex a = make_minor_index(rs, 0, 4);
  MinorIndex b = make_minor_index(rs, 0, 2);
  MinorIndex c = make_minor_index(rs, 0, 1);

  PreprojModule<Rat> da = dual_for(a, 1), db = dual_for(b, 2), dc = dual_for(c, 3);

  // Monomial modules stack the factor modules with their multiplicities.
  PreprojModule<Rat> ma = lambda_direct_sum(da, da);     // a^2
  PreprojModule<Rat> mb = lambda_direct_sum(db, dc);     // b * c

  ClusterMonomial xa = make_cluster_monomial(rs, {{a, 2}});
  ClusterMonomial xb = make_cluster_monomial(rs, {{b, 1}, {c, 1}});
  QuasiCommuteResult qc = quasi_commute(rs, t, xa, xb);
  CHECK(qc.quasi_commute == (ext_dim_lambda_via_coker(ma, mb) == 0));

  // Exponents never change the verdict.
  ClusterMonomial xa1 = make_cluster_monomial(rs, {{a, 1}});
  ClusterMonomial xb5 = make_cluster_monomial(rs, {{b, 5}, {c, 2}});
  CHECK(quasi_commute(rs, t, xa1, xb5).quasi_commute == qc.quasi_commute);
  // And the check is symmetric.
  CHECK(quasi_commute(rs, t, xb, xa).quasi_commute == qc.quasi_commute);

  CHECK(monomial_str(xb5) == "D(0,2)^5 * D(0,1)^2");
  ClusterMonomial dedup = make_cluster_monomial(rs, {{b, 2}, {c, 1}, {b, 3}});
  CHECK(dedup.factors.size() == 2);
  CHECK(monomial_str(dedup) == "D(0,2)^5 * D(0,1)");
  CHECK(error_kind([&] { make_cluster_monomial(rs, {{a, 0}}); }) == "InvalidIndex");
  CHECK(error_kind([&] { make_cluster_monomial(rs, {}); }) == "InvalidIndex");
}

TEST_CASE("pairs with a frozen factor pass with a note") {
  RootSystem rs = linear("A3");
  HomExtTables t = compute_hom_ext_tables(rs);

  MinorIndex lam = make_minor_index(rs, 0, 4);   // tuple (4, 1)
  MinorIndex kap = make_minor_index(rs, 1, 6);   // its translate, frozen
  CHECK(minor_to_partition(rs, kap).parts == std::vector<int>{6, 4});
  CHECK(is_frozen(rs, kap));

  ClusterMonomial mx = make_cluster_monomial(rs, {{lam, 1}});
  ClusterMonomial my = make_cluster_monomial(rs, {{kap, 1}});
  QuasiCommuteResult qc = quasi_commute(rs, t, mx, my);
  CHECK(qc.quasi_commute);
  CHECK(qc.any_frozen);
  REQUIRE(qc.pairs.size() == 1);
  CHECK(qc.pairs[0].frozen);
  CHECK(qc.pairs[0].note == "outside theorem hypotheses");
  // The raw criterion is still evaluated and reported for the pair.
  CHECK(qc.pairs[0].criterion.fwd.r_set == std::vector<int>{2});
  CHECK_FALSE(qc.pairs[0].criterion.vanishing_canonical);
  // Frozen pairs do not contribute to the ambiguity statistics.
  CHECK_FALSE(qc.window_ambiguity);
}
