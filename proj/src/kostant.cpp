#include "dynkin_ar/kostant.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dar {

namespace {

// Vector arithmetic on root coordinates.
std::vector<int> coord_sum(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<int> coord_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero_vec(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// The full translate chain through the given position, listed from the chain
// head (no preimage) out to the projective end.
std::vector<int> chain_through(const RootSystem& rs, int pos) {
  int head = pos;
  while (rs.tau_inv[head - 1] != 0) head = rs.tau_inv[head - 1];
  std::vector<int> chain{head};
  while (rs.tau[chain.back() - 1] != 0) chain.push_back(rs.tau[chain.back() - 1]);
  return chain;
}

}  // namespace

TauOrbitPartition make_tau_orbit_partition(const RootSystem& rs, const std::vector<int>& parts) {
  require(!parts.empty(), "InvalidPartition", "partition needs at least one part");
  for (int p : parts)
    require(p >= 1 && p <= rs.N, "InvalidPartition", "part index out of range");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    require(parts[i + 1] < parts[i], "InvalidPartition", "parts must strictly decrease");
    require(rs.tau[parts[i + 1] - 1] == parts[i], "InvalidPartition",
            "consecutive parts must be related by the translate");
  }
  TauOrbitPartition out;
  out.parts = parts;
  out.assumption = rs.tau[parts.front() - 1] != 0;
  return out;
}

std::vector<TauOrbitPartition> enumerate_tau_orbit_partitions(const RootSystem& rs) {
  std::vector<TauOrbitPartition> out;
  for (int head = 1; head <= rs.n; ++head) {
    require(rs.tau_inv[head - 1] == 0, "InternalCheckFailed",
            "chain heads should occupy the first n word positions");
    std::vector<int> chain = chain_through(rs, head);
    int s = static_cast<int>(chain.size());
    // Runs chain[i..j] with j < s-1 in zero-based terms keep one translate in
    // reserve, so the assumption holds for every emitted partition.
    for (int i = 0; i + 1 < s; ++i)
      for (int j = i; j + 1 < s; ++j) {
        std::vector<int> parts;
        for (int k = j; k >= i; --k) parts.push_back(chain[k]);
        out.push_back(make_tau_orbit_partition(rs, parts));
        require(out.back().assumption, "InternalCheckFailed",
                "enumerated partition lost the translate assumption");
      }
  }
  std::sort(out.begin(), out.end(),
            [](const TauOrbitPartition& a, const TauOrbitPartition& b) {
              if (a.base() != b.base()) return a.base() < b.base();
              return a.length() < b.length();
            });
  return out;
}

TauOrbitPartition tau_shift(const RootSystem& rs, const TauOrbitPartition& p) {
  require(p.assumption, "AssumptionViolated",
          "translate shift needs the first part to stay positive");
  std::vector<int> parts;
  for (int q : p.parts) parts.push_back(rs.tau[q - 1]);
  return make_tau_orbit_partition(rs, parts);
}

KostantPartition make_kostant_partition(const RootSystem& rs, std::vector<int> parts) {
  require(!parts.empty(), "InvalidPartition", "a partition needs at least one part");
  for (int q : parts)
    require(1 <= q && q <= rs.N, "InvalidPartition", "parts must be word positions");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return KostantPartition{std::move(parts)};
}

std::vector<long> kostant_weight(const RootSystem& rs, const KostantPartition& p) {
  std::vector<long> w(static_cast<std::size_t>(rs.n), 0);
  for (int q : p.parts) {
    const auto& c = rs.roots[q - 1];
    for (int k = 0; k < rs.n; ++k) w[k] += c[k];
  }
  return w;
}

KostantPartition random_kostant_partition(const RootSystem& rs, Rng& rng, int max_parts) {
  require(max_parts >= 1, "InvalidPartition", "need room for at least one part");
  int count = static_cast<int>(rng.int_in(1, max_parts));
  std::vector<int> parts;
  for (int i = 0; i < count; ++i) parts.push_back(static_cast<int>(rng.int_in(1, rs.N)));
  return make_kostant_partition(rs, std::move(parts));
}

std::string kostant_partition_str(const RootSystem& rs, const KostantPartition& p) {
  std::ostringstream os;
  os << "parts=[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ";";
    const auto& c = rs.roots[p.parts[i] - 1];
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  }
  os << "]";
  return os.str();
}

std::string partition_str(const RootSystem& rs, const TauOrbitPartition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ", ";
    const auto& c = rs.roots[p.parts[i] - 1];
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
  }
  os << ")";
  return os.str();
}

std::vector<int> r_set(const HomExtTables& t, const TauOrbitPartition& lambda,
                       const TauOrbitPartition& kappa) {
  std::vector<int> out;
  for (int k = 1; k <= kappa.length(); ++k)
    if (t.hom_at(lambda.head(), kappa.parts[k - 1]) != 0) out.push_back(k);
  return out;
}

long m_count(const RootSystem& rs, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa) {
  long count = 0;
  for (int li : lambda.parts)
    for (int kj : kappa.parts) {
      if (li < kj) continue;
      auto d = coord_diff(rs.roots[li - 1], rs.roots[kj - 1]);
      if (is_zero_vec(d) || is_root(rs, d)) ++count;
    }
  return count;
}

long p_count(const RootSystem& rs, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa) {
  long count = 0;
  for (int li : lambda.parts)
    for (int kj : kappa.parts) {
      if (li < kj) continue;
      auto s = coord_sum(rs.roots[li - 1], rs.roots[kj - 1]);
      if (is_positive_root(rs, s)) ++count;
    }
  return count;
}

long hom_sum(const HomExtTables& t, const TauOrbitPartition& lambda,
             const TauOrbitPartition& kappa) {
  long total = 0;
  for (int li : lambda.parts)
    for (int kj : kappa.parts) total += t.hom_at(li, kj);
  return total;
}

long hom_minus_tauhom_raw(const RootSystem& rs, const HomExtTables& t,
                          const TauOrbitPartition& lambda, const TauOrbitPartition& kappa) {
  long total = hom_sum(t, lambda, kappa);
  for (int li : lambda.parts)
    for (int kj : kappa.parts) {
      int shifted = rs.tau[kj - 1];
      if (shifted != 0) total -= t.hom_at(li, shifted);
    }
  return total;
}

long hom_minus_tauhom(const RootSystem& rs, const HomExtTables& t,
                      const TauOrbitPartition& lambda, const TauOrbitPartition& kappa) {
  require(kappa.assumption, "AssumptionViolated",
          "difference against the translated tuple needs the assumption");
  return hom_minus_tauhom_raw(rs, t, lambda, kappa);
}

DirectionCriterion direction_criterion(const RootSystem& rs, const HomExtTables& t,
                                       const TauOrbitPartition& lambda,
                                       const TauOrbitPartition& kappa) {
  DirectionCriterion out;
  out.r_set = r_set(t, lambda, kappa);
  out.m = m_count(rs, lambda, kappa);
  out.p = p_count(rs, lambda, kappa);
  // Windowed counts add up morphism-space dimensions, not just indices: the
  // two coincide in type A but differ in type D, where cross-part spaces can
  // be two dimensional.
  auto dims_in = [&](int lo, int hi) {
    int c = 0;
    for (int k = std::max(lo, 1); k <= std::min(hi, kappa.length()); ++k)
      c += t.hom_at(lambda.head(), kappa.parts[k - 1]);
    return c;
  };
  int r = lambda.length(), tt = kappa.length();
  out.window_canonical = r >= tt ? dims_in(1, tt) : dims_in(tt - r + 1, tt);
  int u = r - 1, v = tt - 1;
  out.window_alternate = dims_in(u - v + 1, u);
  out.surjective_canonical = (out.m - out.p == out.window_canonical);
  out.surjective_alternate = (out.m - out.p == out.window_alternate);
  return out;
}

VanishingCriterion ext_vanishing_criterion_raw(const RootSystem& rs, const HomExtTables& t,
                                               const TauOrbitPartition& lambda,
                                               const TauOrbitPartition& kappa) {
  VanishingCriterion out;
  out.fwd = direction_criterion(rs, t, lambda, kappa);
  out.bwd = direction_criterion(rs, t, kappa, lambda);
  out.vanishing_canonical = out.fwd.surjective_canonical && out.bwd.surjective_canonical;
  out.vanishing_alternate = out.fwd.surjective_alternate && out.bwd.surjective_alternate;
  out.window_ambiguity =
      out.fwd.surjective_canonical != out.fwd.surjective_alternate ||
      out.bwd.surjective_canonical != out.bwd.surjective_alternate;
  return out;
}

VanishingCriterion ext_vanishing_criterion(const RootSystem& rs, const HomExtTables& t,
                                           const TauOrbitPartition& lambda,
                                           const TauOrbitPartition& kappa) {
  require(lambda.assumption && kappa.assumption, "AssumptionViolated",
          "vanishing test needs the translate assumption on both tuples");
  return ext_vanishing_criterion_raw(rs, t, lambda, kappa);
}

IntervalClosedForms interval_closed_forms(const RootSystem& rs, const HomExtTables& t,
                                          const TauOrbitPartition& lambda,
                                          const TauOrbitPartition& kappa) {
  IntervalClosedForms out;
  int u = lambda.length() - 1;
  if (kappa.length() != lambda.length()) {
    out.failed_hypothesis = "lengths differ";
    return out;
  }
  // Extend kappa along the full chain of its base root: index j corresponds
  // to translating the base u+1-j times, so j = u+1 is the base itself.
  std::vector<int> chain = chain_through(rs, kappa.base());
  int s = static_cast<int>(chain.size());
  int c = 0;
  for (int k = 0; k < s; ++k)
    if (chain[k] == kappa.base()) c = k + 1;
  require(c >= 1, "InternalCheckFailed", "base root missing from its own chain");
  int j_lo = c + u + 1 - s, j_hi = c + u;
  auto extended = [&](int j) { return chain[c + u - j]; };  // position at index j

  // The extended tuple must agree with kappa on indices 1..u+1.
  for (int k = 1; k <= kappa.length(); ++k)
    require(j_lo <= k && k <= j_hi && extended(k) == kappa.parts[k - 1], "InternalCheckFailed",
            "extended chain disagrees with the tuple");

  std::vector<int> tset;
  for (int j = j_lo; j <= j_hi; ++j)
    if (t.hom_at(lambda.head(), extended(j)) != 0) tset.push_back(j);

  if (!tset.empty() && tset.front() < 0) {
    out.failed_hypothesis = "nonzero morphisms at negative indices";
    return out;
  }
  for (int i = 1; i <= u + 1; ++i)
    for (int j = j_lo; j <= j_hi; ++j) {
      int d = t.hom_at(lambda.parts[i - 1], extended(j));
      if (j - i < -1 && d != 0) {
        out.failed_hypothesis = "lower-triangular morphism count is not zero";
        return out;
      }
      if (d > 1) {
        out.failed_hypothesis = "a morphism count exceeds one";
        return out;
      }
    }
  out.hypotheses_hold = true;

  for (std::size_t k = 0; k < tset.size(); ++k) {
    if (k == 0 || tset[k] != out.intervals.back().second + 1)
      out.intervals.emplace_back(tset[k], tset[k]);
    else
      out.intervals.back().second = tset[k];
  }
  for (int j : tset)
    if (1 <= j && j <= u + 1) out.r_set.push_back(j);
  for (auto [up, vp] : out.intervals) {
    int lo = std::max(1, 2 - up), hi = std::min(u + 1, u + 2 - up);
    if (hi >= lo) out.m += hi - lo + 1;
    if (vp <= u + 1) out.p += (u + 1) - vp;
  }
  return out;
}

}  // namespace dar
