#pragma once

// Dynkin diagrams (A/D/E), quiver orientations, and the positive-root order
// attached to an acyclic orientation. Roots are enumerated along the repeated
// Coxeter word of a topological vertex order, with a letter dropped from the
// cycle once its tau-orbit dies at a projective root; the builder then checks
// that the resulting word regenerates every root via
//   beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}),
// all positive and pairwise distinct, so the word is a machine-verified
// reduced expression of the longest element. Word positions are 1-based.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynkin_ar/util.hpp"

namespace dar {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family;
  int rank;

  std::string str() const;
};

DynkinType parse_dynkin_type(const std::string& s);  // "A5", "D4", "E6"
int expected_positive_roots(const DynkinType& t);

// Undirected diagram edges (i < j), fixed labelling:
//   A_n : path 1-2-...-n
//   D_n : path 1-...-(n-1), plus n attached to n-2
//   E_n : path 1-3-4-...-n, plus 2 attached to 4
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t);

struct Quiver {
  DynkinType type;
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 1-based labels
  std::vector<int> order;                   // topological: arrows go earlier -> later

  std::string str() const;  // "type=A3; arrows=1>2,2>3"
};

// Validates that `arrows` orients each diagram edge exactly once, and computes
// the deterministic topological order (smallest label first among sources).
Quiver make_quiver(const DynkinType& type, const std::vector<std::pair<int, int>>& arrows);

// Presets: "linear" orients every edge from the smaller label to the larger;
// "bipartite" two-colors the tree and orients everything color0 -> color1.
std::vector<std::pair<int, int>> preset_arrows(const DynkinType& type, const std::string& name);

// Every acyclic orientation of the diagram, in a deterministic order.
std::vector<std::vector<std::pair<int, int>>> all_orientations(const DynkinType& type);

struct Root {
  std::vector<int> coords;
  int position = 0;  // 1-based position in the word order
};

struct RootSystem {
  Quiver quiver;
  int n = 0;  // rank
  int N = 0;  // number of positive roots
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> roots;  // roots[k-1] = coords of beta_k
  std::vector<int> word;                // word[k-1] = letter (vertex label) of beta_k
  std::map<std::vector<int>, int> position_of;
  std::vector<int> tau;      // tau[k-1] = position of C(beta_k), or 0 if it leaves R+
  std::vector<int> tau_inv;  // same for C^{-1}

  Root root_at(int position) const {
    require(position >= 1 && position <= N, "InvalidIndex", "root position out of range");
    return Root{roots[position - 1], position};
  }
  bool is_projective(int position) const { return tau[position - 1] == 0; }
  bool is_injective(int position) const { return tau_inv[position - 1] == 0; }
};

RootSystem build_root_system(const Quiver& q);

long euler_form(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b);
long sym_form(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b);

std::optional<Root> tau_root(const RootSystem& rs, const Root& r);
std::optional<Root> tau_inverse_root(const RootSystem& rs, const Root& r);

inline bool root_order_leq(const Root& a, const Root& b) { return a.position <= b.position; }

// Type A only: a positive root is the indicator vector of a segment [i,j].
std::optional<std::pair<int, int>> segment_of(const std::vector<int>& coords);
std::vector<int> segment_coords(int n, int i, int j);

// Hom/Ext dimension tables between the indecomposables M_{beta_k}; filled by
// the representation layer, consumed by the combinatorial layers.
struct HomExtTables {
  int size = 0;
  std::vector<int> hom;  // hom[(k-1)*size + (l-1)] = dim Hom(M_{beta_k}, M_{beta_l})
  std::vector<int> ext;

  int hom_at(int k, int l) const { return hom[static_cast<std::size_t>(k - 1) * size + (l - 1)]; }
  int ext_at(int k, int l) const { return ext[static_cast<std::size_t>(k - 1) * size + (l - 1)]; }
};

enum class RootPairCase { BothHom, Sum, Difference, Neither };

struct RootPairClassification {
  RootPairCase kind;
  int hom_beta_alpha;      // dim Hom(M_beta, M_alpha)
  int hom_beta_tau_alpha;  // dim Hom(M_beta, M_{tau alpha}), 0 if tau alpha dies
};

// Requires alpha < beta in word order. Throws MultiplicityViolation when a
// relevant hom dimension exceeds 1 (possible in type E), and checks the
// root-arithmetic characterizations of the Sum and Difference cases.
RootPairClassification classify_root_pair(const RootSystem& rs, const HomExtTables& t,
                                          const Root& alpha, const Root& beta);

// For alpha < beta with Hom(M_beta, M_alpha) = 0: returns whether
// alpha + beta is a positive root or the symmetric form vanishes.
bool check_sum_lemma(const RootSystem& rs, const HomExtTables& t, const Root& alpha,
                     const Root& beta);

bool is_root(const RootSystem& rs, const std::vector<int>& coords);          // in R+ or -R+
bool is_positive_root(const RootSystem& rs, const std::vector<int>& coords);

}  // namespace dar
