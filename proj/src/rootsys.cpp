#include "dynkin_ar/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dar {

std::string DynkinType::str() const {
  const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return f + std::to_string(rank);
}

DynkinType parse_dynkin_type(const std::string& s) {
  require(s.size() >= 2, "InvalidQuiver", "type string too short: '" + s + "'");
  DynkinFamily fam;
  switch (s[0]) {
    case 'A': fam = DynkinFamily::A; break;
    case 'D': fam = DynkinFamily::D; break;
    case 'E': fam = DynkinFamily::E; break;
    default: fail("InvalidQuiver", "unknown family in type '" + s + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    require(s[i] >= '0' && s[i] <= '9', "InvalidQuiver", "bad rank in type '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  DynkinType t{fam, rank};
  switch (fam) {
    case DynkinFamily::A: require(rank >= 1, "InvalidQuiver", "A_n needs n >= 1"); break;
    case DynkinFamily::D: require(rank >= 4, "InvalidQuiver", "D_n needs n >= 4"); break;
    case DynkinFamily::E:
      require(rank >= 6 && rank <= 8, "InvalidQuiver", "E_n needs n in {6,7,8}");
      break;
  }
  return t;
}

int expected_positive_roots(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return t.rank * (t.rank + 1) / 2;
    case DynkinFamily::D: return t.rank * (t.rank - 1);
    case DynkinFamily::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
  }
  return 0;
}

std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  std::vector<std::pair<int, int>> e;
  int n = t.rank;
  switch (t.family) {
    case DynkinFamily::A:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case DynkinFamily::D:
      for (int i = 1; i <= n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case DynkinFamily::E:
      e.emplace_back(1, 3);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, 4);
      std::sort(e.begin(), e.end());
      break;
  }
  return e;
}

std::string Quiver::str() const {
  std::ostringstream os;
  os << "type=" << type.str() << "; arrows=";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) os << ",";
    os << arrows[i].first << ">" << arrows[i].second;
  }
  return os.str();
}

Quiver make_quiver(const DynkinType& type, const std::vector<std::pair<int, int>>& arrows) {
  int n = type.rank;
  auto edges = diagram_edges(type);
  std::set<std::pair<int, int>> pending(edges.begin(), edges.end());
  for (auto [s, t] : arrows) {
    require(s >= 1 && s <= n && t >= 1 && t <= n, "InvalidQuiver",
            "arrow endpoint out of range");
    auto key = std::minmax(s, t);
    auto it = pending.find({key.first, key.second});
    require(it != pending.end(), "InvalidQuiver",
            "arrow " + std::to_string(s) + ">" + std::to_string(t) +
                " is not a diagram edge (or repeats one)");
    pending.erase(it);
  }
  require(pending.empty(), "InvalidQuiver", "orientation misses some diagram edges");

  Quiver q;
  q.type = type;
  q.n = n;
  q.arrows = arrows;
  std::sort(q.arrows.begin(), q.arrows.end());

  // Kahn's algorithm, smallest label first: deterministic topological order.
  std::vector<int> indeg(n + 1, 0);
  for (auto [s, t] : q.arrows) indeg[t]++;
  std::set<int> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    q.order.push_back(v);
    for (auto [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) ready.insert(t);
  }
  require(static_cast<int>(q.order.size()) == n, "InvalidQuiver", "orientation has a cycle");
  return q;
}

std::vector<std::pair<int, int>> preset_arrows(const DynkinType& type, const std::string& name) {
  auto edges = diagram_edges(type);
  std::vector<std::pair<int, int>> arrows;
  if (name == "linear") {
    arrows = edges;
  } else if (name == "bipartite") {
    int n = type.rank;
    std::vector<int> color(n + 1, -1);
    color[1] = 0;
    // BFS over the tree
    std::vector<int> queue{1};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (auto [a, b] : edges) {
        int other = a == v ? b : b == v ? a : 0;
        if (other && color[other] < 0) {
          color[other] = 1 - color[v];
          queue.push_back(other);
        }
      }
    }
    for (auto [a, b] : edges)
      arrows.emplace_back(color[a] == 0 ? a : b, color[a] == 0 ? b : a);
  } else {
    fail("InvalidQuiver", "unknown orientation preset '" + name + "'");
  }
  return arrows;
}

std::vector<std::vector<std::pair<int, int>>> all_orientations(const DynkinType& type) {
  auto edges = diagram_edges(type);
  std::size_t m = edges.size();
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::size_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t e = 0; e < m; ++e) {
      auto [a, b] = edges[e];
      if (mask & (1ull << e))
        arrows.emplace_back(b, a);
      else
        arrows.emplace_back(a, b);
    }
    out.push_back(std::move(arrows));
  }
  return out;
}

namespace {

// Applies the simple reflection s_i in place: only coordinate i changes.
void reflect(const std::vector<std::vector<int>>& cartan, int i, std::vector<int>& v) {
  long pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += cartan[i - 1][j] * v[j];
  v[i - 1] -= static_cast<int>(pairing);
}

bool all_nonneg(const std::vector<int>& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

}  // namespace

RootSystem build_root_system(const Quiver& q) {
  RootSystem rs;
  rs.quiver = q;
  rs.n = q.n;
  rs.N = expected_positive_roots(q.type);

  rs.cartan.assign(q.n, std::vector<int>(q.n, 0));
  for (int i = 0; i < q.n; ++i) rs.cartan[i][i] = 2;
  for (auto [s, t] : q.arrows) {
    rs.cartan[s - 1][t - 1] -= 1;
    rs.cartan[t - 1][s - 1] -= 1;
  }

  // Sweep the Coxeter word; a letter whose next root would leave R+ is dead
  // for good (its tau-orbit ended at a projective root).
  std::vector<int> prefix_image_basis;  // we maintain W as columns: W * alpha_j
  std::vector<std::vector<int>> W(q.n);  // W[j] = W * alpha_{j+1}
  for (int j = 0; j < q.n; ++j) {
    W[j].assign(q.n, 0);
    W[j][j] = 1;
  }
  std::vector<bool> dead(q.n + 1, false);
  int produced = 0;
  while (produced < rs.N) {
    int before = produced;
    for (int idx = 0; idx < q.n && produced < rs.N; ++idx) {
      int letter = q.order[idx];
      if (dead[letter]) continue;
      std::vector<int> beta = W[letter - 1];
      if (!all_nonneg(beta)) {
        dead[letter] = true;
        continue;
      }
      rs.word.push_back(letter);
      rs.roots.push_back(beta);
      auto [it, fresh] = rs.position_of.emplace(beta, ++produced);
      require(fresh, "InvalidQuiver", "word enumeration repeated a root");
      // W <- W * s_letter: column j gains -C[letter][j] copies of column
      // letter, so neighbours absorb the old column and it flips sign.
      for (int j = 0; j < q.n; ++j) {
        if (j == letter - 1 || rs.cartan[letter - 1][j] == 0) continue;
        for (int r = 0; r < q.n; ++r) W[j][r] += beta[r];
      }
      for (int r = 0; r < q.n; ++r) W[letter - 1][r] = -beta[r];
    }
    require(produced > before, "InvalidQuiver", "word enumeration stalled before |R+| roots");
  }

  // Coxeter element C = s_{i_1} ... s_{i_n} (rightmost acts first).
  auto apply_word = [&](const std::vector<int>& letters, std::vector<int> v) {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) reflect(rs.cartan, *it, v);
    return v;
  };
  rs.tau.assign(rs.N, 0);
  rs.tau_inv.assign(rs.N, 0);
  for (int k = 0; k < rs.N; ++k) {
    std::vector<int> fwd = apply_word(q.order, rs.roots[k]);
    if (all_nonneg(fwd)) {
      auto it = rs.position_of.find(fwd);
      require(it != rs.position_of.end(), "InvalidQuiver", "Coxeter image not a listed root");
      rs.tau[k] = it->second;
    }
    std::vector<int> bwd = rs.roots[k];
    for (int letter : q.order) reflect(rs.cartan, letter, bwd);  // inverse: s_{i_n}...s_{i_1}
    if (all_nonneg(bwd)) {
      auto it = rs.position_of.find(bwd);
      require(it != rs.position_of.end(), "InvalidQuiver", "inverse Coxeter image not a root");
      rs.tau_inv[k] = it->second;
    }
  }

  // First n roots are exactly those killed by C^{-1}; n roots are projective.
  int proj_count = 0;
  for (int k = 1; k <= rs.N; ++k) {
    if (rs.is_projective(k)) ++proj_count;
    bool theta = k <= rs.n;
    require(rs.is_injective(k) == theta, "InvalidQuiver",
            "theta roots are not the first n word positions");
  }
  require(proj_count == rs.n, "InvalidQuiver", "projective root count != rank");
  return rs;
}

long euler_form(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (int i = 0; i < rs.n; ++i) s += static_cast<long>(a[i]) * b[i];
  for (auto [src, tgt] : rs.quiver.arrows) s -= static_cast<long>(a[src - 1]) * b[tgt - 1];
  return s;
}

long sym_form(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (int i = 0; i < rs.n; ++i) {
    long row = 0;
    for (int j = 0; j < rs.n; ++j) row += static_cast<long>(rs.cartan[i][j]) * b[j];
    s += a[i] * row;
  }
  return s;
}

std::optional<Root> tau_root(const RootSystem& rs, const Root& r) {
  int p = rs.tau[r.position - 1];
  if (p == 0) return std::nullopt;
  return rs.root_at(p);
}

std::optional<Root> tau_inverse_root(const RootSystem& rs, const Root& r) {
  int p = rs.tau_inv[r.position - 1];
  if (p == 0) return std::nullopt;
  return rs.root_at(p);
}

std::optional<std::pair<int, int>> segment_of(const std::vector<int>& coords) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    if (coords[i] == 1) {
      if (first < 0) first = i;
      last = i;
    } else if (coords[i] != 0) {
      return std::nullopt;
    }
  }
  if (first < 0) return std::nullopt;
  for (int i = first; i <= last; ++i)
    if (coords[i] != 1) return std::nullopt;
  return std::make_pair(first + 1, last + 1);
}

std::vector<int> segment_coords(int n, int i, int j) {
  require(1 <= i && i <= j && j <= n, "InvalidIndex", "segment out of range");
  std::vector<int> v(n, 0);
  for (int k = i; k <= j; ++k) v[k - 1] = 1;
  return v;
}

bool is_positive_root(const RootSystem& rs, const std::vector<int>& coords) {
  return rs.position_of.count(coords) > 0;
}

bool is_root(const RootSystem& rs, const std::vector<int>& coords) {
  if (is_positive_root(rs, coords)) return true;
  std::vector<int> neg(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  return is_positive_root(rs, neg);
}

RootPairClassification classify_root_pair(const RootSystem& rs, const HomExtTables& t,
                                          const Root& alpha, const Root& beta) {
  require(alpha.position < beta.position, "PreconditionViolated",
          "classify_root_pair needs alpha < beta in word order");
  int h = t.hom_at(beta.position, alpha.position);
  int ht = 0;
  if (int ta = rs.tau[alpha.position - 1]) ht = t.hom_at(beta.position, ta);
  if (h > 1 || ht > 1)
    fail("MultiplicityViolation", "hom dimension exceeds 1 for root pair (" +
                                      std::to_string(alpha.position) + "," +
                                      std::to_string(beta.position) + ")");
  RootPairCase kind;
  if (h == 1 && ht == 1)
    kind = RootPairCase::BothHom;
  else if (h == 0 && ht == 1)
    kind = RootPairCase::Sum;
  else if (h == 1 && ht == 0)
    kind = RootPairCase::Difference;
  else
    kind = RootPairCase::Neither;

  // Root-arithmetic characterizations of the middle cases.
  std::vector<int> sum(rs.n), diff(rs.n);
  for (int i = 0; i < rs.n; ++i) {
    sum[i] = alpha.coords[i] + beta.coords[i];
    diff[i] = beta.coords[i] - alpha.coords[i];
  }
  bool sum_is_root = is_positive_root(rs, sum);
  bool diff_is_root = is_root(rs, diff);
  require((kind == RootPairCase::Sum) == sum_is_root, "InternalCheckFailed",
          "Sum case disagrees with alpha+beta membership");
  require((kind == RootPairCase::Difference) == diff_is_root, "InternalCheckFailed",
          "Difference case disagrees with beta-alpha membership");
  return RootPairClassification{kind, h, ht};
}

bool check_sum_lemma(const RootSystem& rs, const HomExtTables& t, const Root& alpha,
                     const Root& beta) {
  require(alpha.position < beta.position, "PreconditionViolated",
          "check_sum_lemma needs alpha < beta");
  require(t.hom_at(beta.position, alpha.position) == 0, "PreconditionViolated",
          "check_sum_lemma needs Hom(M_beta, M_alpha) = 0");
  std::vector<int> sum(rs.n);
  for (int i = 0; i < rs.n; ++i) sum[i] = alpha.coords[i] + beta.coords[i];
  return is_positive_root(rs, sum) || sym_form(rs, alpha.coords, beta.coords) == 0;
}

}  // namespace dar
