#include "dynkin_ar/minors.hpp"

#include <algorithm>
#include <sstream>

namespace dar {

MinorIndex make_minor_index(const RootSystem& rs, int j, int l) {
  require(0 <= j && j < l && l <= rs.N, "InvalidIndex", "minor indices must satisfy 0 <= j < l <= N");
  if (j >= 1)
    require(rs.word[j - 1] == rs.word[l - 1], "InvalidIndex",
            "minor indices must carry the same word letter");
  return MinorIndex{j, l};
}

int next_occurrence(const RootSystem& rs, int k) {
  require(1 <= k && k <= rs.N, "InvalidIndex", "word index out of range");
  for (int m = k + 1; m <= rs.N; ++m)
    if (rs.word[m - 1] == rs.word[k - 1]) return m;
  return 0;
}

bool is_frozen(const RootSystem& rs, const MinorIndex& d) {
  return next_occurrence(rs, d.l) == 0;
}

TauOrbitPartition minor_to_partition(const RootSystem& rs, const MinorIndex& d) {
  std::vector<int> parts;
  for (int k = d.l; k > d.j; --k)
    if (rs.word[k - 1] == rs.word[d.l - 1]) parts.push_back(k);
  return make_tau_orbit_partition(rs, parts);
}

MinorIndex partition_to_minor(const RootSystem& rs, const TauOrbitPartition& p) {
  int l = p.head();
  int j = 0;
  for (int k = p.base() - 1; k >= 1; --k)
    if (rs.word[k - 1] == rs.word[p.base() - 1]) {
      j = k;
      break;
    }
  return make_minor_index(rs, j, l);
}

std::string minor_str(const MinorIndex& d) {
  std::ostringstream os;
  os << "D(" << d.j << "," << d.l << ")";
  return os.str();
}

ClusterMonomial make_cluster_monomial(const RootSystem& rs,
                                      const std::vector<std::pair<MinorIndex, int>>& factors) {
  require(!factors.empty(), "InvalidIndex", "a monomial needs at least one factor");
  ClusterMonomial m;
  for (const auto& [d, e] : factors) {
    make_minor_index(rs, d.j, d.l);
    require(e >= 1, "InvalidIndex", "factor exponents must be positive");
    auto same = std::find_if(m.factors.begin(), m.factors.end(), [&](const MonomialFactor& f) {
      return f.minor.j == d.j && f.minor.l == d.l;
    });
    if (same != m.factors.end())
      same->exponent += e;
    else
      m.factors.push_back(MonomialFactor{d, e});
  }
  return m;
}

std::string monomial_str(const ClusterMonomial& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) os << " * ";
    os << minor_str(m.factors[i].minor);
    if (m.factors[i].exponent != 1) os << "^" << m.factors[i].exponent;
  }
  return os.str();
}

QuasiCommuteResult quasi_commute(const RootSystem& rs, const HomExtTables& t,
                                 const ClusterMonomial& x, const ClusterMonomial& y) {
  QuasiCommuteResult out;
  out.quasi_commute = true;
  for (const MonomialFactor& fa : x.factors)
    for (const MonomialFactor& fb : y.factors) {
      FactorPairCheck pc;
      pc.a = fa.minor;
      pc.b = fb.minor;
      TauOrbitPartition lam = minor_to_partition(rs, fa.minor);
      TauOrbitPartition kap = minor_to_partition(rs, fb.minor);
      pc.criterion = ext_vanishing_criterion_raw(rs, t, lam, kap);
      pc.frozen = is_frozen(rs, fa.minor) || is_frozen(rs, fb.minor);
      if (pc.frozen) {
        pc.note = "outside theorem hypotheses";
        pc.quasi_commute = true;
        out.any_frozen = true;
      } else {
        pc.quasi_commute = pc.criterion.vanishing_canonical;
        out.window_ambiguity = out.window_ambiguity || pc.criterion.window_ambiguity;
      }
      out.quasi_commute = out.quasi_commute && pc.quasi_commute;
      out.pairs.push_back(std::move(pc));
    }
  return out;
}

}  // namespace dar
