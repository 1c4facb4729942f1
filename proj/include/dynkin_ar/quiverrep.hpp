#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dynkin_ar/exactlin.hpp"
#include "dynkin_ar/rootsys.hpp"
#include "dynkin_ar/util.hpp"

namespace dar {

// A representation of an orientation of the diagram. `arrows` is carried
// along because reflection functors move a module across reorientations of
// the same underlying tree; for modules over the original quiver it equals
// quiver.arrows. x[e] is the matrix of arrow e acting on column vectors, so
// its shape is dims[target-1] x dims[source-1].
template <class K>
struct Rep {
  std::vector<std::pair<int, int>> arrows;
  std::vector<int> dims;  // dims[v-1] = dimension at vertex v
  std::vector<Mat<K>> x;

  int dim_at(int v) const { return dims[v - 1]; }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  std::vector<int> dim_vector() const { return dims; }
};

template <class K>
Rep<K> zero_rep(int n, std::vector<std::pair<int, int>> arrows) {
  Rep<K> r;
  r.arrows = std::move(arrows);
  r.dims.assign(n, 0);
  for (auto [s, t] : r.arrows) {
    (void)s;
    (void)t;
    r.x.emplace_back(0, 0);
  }
  return r;
}

template <class K>
Rep<K> simple_rep(int n, std::vector<std::pair<int, int>> arrows, int vertex) {
  Rep<K> r = zero_rep<K>(n, std::move(arrows));
  r.dims[vertex - 1] = 1;
  for (std::size_t e = 0; e < r.arrows.size(); ++e)
    r.x[e] = Mat<K>(r.dims[r.arrows[e].second - 1], r.dims[r.arrows[e].first - 1]);
  return r;
}

template <class K>
void validate_rep(const Rep<K>& r) {
  require(r.x.size() == r.arrows.size(), "DimensionMismatch", "rep: arrow count");
  for (std::size_t e = 0; e < r.arrows.size(); ++e) {
    auto [s, t] = r.arrows[e];
    require(r.x[e].rows == r.dims[t - 1] && r.x[e].cols == r.dims[s - 1], "DimensionMismatch",
            "rep: arrow matrix shape");
  }
}

// Block-diagonal sum; the left summand occupies the leading rows and columns
// at every vertex, so offsets into the sum are just a's dimensions.
template <class K>
Rep<K> direct_sum(const Rep<K>& a, const Rep<K>& b) {
  require(a.arrows == b.arrows, "DimensionMismatch", "direct sum: different orientations");
  Rep<K> r;
  r.arrows = a.arrows;
  r.dims.resize(a.dims.size());
  for (std::size_t i = 0; i < a.dims.size(); ++i) r.dims[i] = a.dims[i] + b.dims[i];
  for (std::size_t e = 0; e < a.arrows.size(); ++e) {
    auto [s, t] = a.arrows[e];
    Mat<K> m(r.dims[t - 1], r.dims[s - 1]);
    for (int i = 0; i < a.x[e].rows; ++i)
      for (int j = 0; j < a.x[e].cols; ++j) m.at(i, j) = a.x[e].at(i, j);
    for (int i = 0; i < b.x[e].rows; ++i)
      for (int j = 0; j < b.x[e].cols; ++j)
        m.at(a.dims[t - 1] + i, a.dims[s - 1] + j) = b.x[e].at(i, j);
    r.x.push_back(std::move(m));
  }
  return r;
}

template <class K>
long rep_euler(const Rep<K>& a, const Rep<K>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.dims.size(); ++i) s += static_cast<long>(a.dims[i]) * b.dims[i];
  for (auto [src, tgt] : a.arrows) s -= static_cast<long>(a.dims[src - 1]) * b.dims[tgt - 1];
  return s;
}

// A morphism m -> n: one matrix per vertex, shape dims_n(v) x dims_m(v).
template <class K>
using Morphism = std::vector<Mat<K>>;

// Solves the intertwining equations f_t x_h = y_h f_s. Unknowns are the
// entries of the f_v, vertices ascending, row-major inside each block; the
// kernel basis order is therefore deterministic.
template <class K>
std::vector<Morphism<K>> hom_space(const Rep<K>& m, const Rep<K>& n) {
  require(m.arrows == n.arrows, "DimensionMismatch", "hom: different orientations");
  int nv = static_cast<int>(m.dims.size());
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int unknowns = offset[nv];

  int eq_rows = 0;
  for (auto [s, t] : m.arrows) eq_rows += n.dims[t - 1] * m.dims[s - 1];
  Mat<K> sys(eq_rows, unknowns);
  int row = 0;
  for (std::size_t e = 0; e < m.arrows.size(); ++e) {
    auto [s, t] = m.arrows[e];
    const Mat<K>& xh = m.x[e];
    const Mat<K>& yh = n.x[e];
    for (int r = 0; r < n.dims[t - 1]; ++r)
      for (int c = 0; c < m.dims[s - 1]; ++c, ++row) {
        for (int a = 0; a < m.dims[t - 1]; ++a)
          sys.at(row, offset[t - 1] + r * m.dims[t - 1] + a) += xh.at(a, c);
        for (int b = 0; b < n.dims[s - 1]; ++b)
          sys.at(row, offset[s - 1] + b * m.dims[s - 1] + c) -= yh.at(r, b);
      }
  }

  Mat<K> ker = kernel_matrix(sys);
  std::vector<Morphism<K>> basis;
  basis.reserve(ker.cols);
  for (int j = 0; j < ker.cols; ++j) {
    Morphism<K> f;
    for (int v = 1; v <= nv; ++v) {
      Mat<K> fv(n.dims[v - 1], m.dims[v - 1]);
      for (int r = 0; r < fv.rows; ++r)
        for (int c = 0; c < fv.cols; ++c)
          fv.at(r, c) = ker.at(offset[v - 1] + r * fv.cols + c, j);
      f.push_back(std::move(fv));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

template <class K>
int hom_dim(const Rep<K>& m, const Rep<K>& n) {
  return static_cast<int>(hom_space(m, n).size());
}

// Over a path algebra the difference of hom and ext dimensions is the Euler
// form, which pins the first extension space without a projective resolution.
template <class K>
int ext_dim(const Rep<K>& m, const Rep<K>& n) {
  int h = hom_dim(m, n);
  long e = static_cast<long>(h) - rep_euler(m, n);
  require(e >= 0, "InternalCheckFailed", "negative ext dimension");
  return static_cast<int>(e);
}

// One matrix per arrow, shape dims_n(source) x dims_m(target).
template <class K>
using DualExtElement = std::vector<Mat<K>>;

// Basis of the space dual to first extensions of n by m: tuples z_h subject
// to, at every vertex i, sum over arrows into i of x^(n)_h z_h minus sum over
// arrows out of i of z_h x^(m)_h vanishing. Its dimension must agree with the
// Euler-form count, and that agreement is enforced here.
template <class K>
std::vector<DualExtElement<K>> dual_ext_space(const Rep<K>& n, const Rep<K>& m) {
  require(n.arrows == m.arrows, "DimensionMismatch", "dual ext: different orientations");
  int nv = static_cast<int>(n.dims.size());
  int ne = static_cast<int>(n.arrows.size());
  std::vector<int> offset(ne + 1, 0);
  for (int e = 0; e < ne; ++e) {
    auto [s, t] = n.arrows[e];
    offset[e + 1] = offset[e] + n.dims[s - 1] * m.dims[t - 1];
  }
  int unknowns = offset[ne];

  int eq_rows = 0;
  for (int v = 0; v < nv; ++v) eq_rows += n.dims[v] * m.dims[v];
  Mat<K> sys(eq_rows, unknowns);
  int row0 = 0;
  for (int v = 1; v <= nv; ++v) {
    int h_n = n.dims[v - 1], h_m = m.dims[v - 1];
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = n.arrows[e];
      int zr = n.dims[s - 1], zc = m.dims[t - 1];
      if (t == v) {
        const Mat<K>& xn = n.x[e];  // h_n x zr
        for (int r = 0; r < h_n; ++r)
          for (int c = 0; c < zc; ++c)
            for (int a = 0; a < zr; ++a)
              sys.at(row0 + r * h_m + c, offset[e] + a * zc + c) += xn.at(r, a);
      }
      if (s == v) {
        const Mat<K>& xm = m.x[e];  // zc x h_m
        for (int r = 0; r < zr; ++r)
          for (int c = 0; c < h_m; ++c)
            for (int b = 0; b < zc; ++b)
              sys.at(row0 + r * h_m + c, offset[e] + r * zc + b) -= xm.at(b, c);
      }
    }
    row0 += h_n * h_m;
  }

  Mat<K> ker = kernel_matrix(sys);
  require(ker.cols == ext_dim(n, m), "DimensionMismatch",
          "dual ext space dimension disagrees with the Euler-form count");
  std::vector<DualExtElement<K>> basis;
  basis.reserve(ker.cols);
  for (int j = 0; j < ker.cols; ++j) {
    DualExtElement<K> z;
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = n.arrows[e];
      Mat<K> ze(n.dims[s - 1], m.dims[t - 1]);
      for (int r = 0; r < ze.rows; ++r)
        for (int c = 0; c < ze.cols; ++c)
          ze.at(r, c) = ker.at(offset[e] + r * ze.cols + c, j);
      z.push_back(std::move(ze));
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

inline std::vector<std::pair<int, int>> reverse_arrows_at(
    std::vector<std::pair<int, int>> arrows, int vertex) {
  for (auto& [s, t] : arrows)
    if (s == vertex || t == vertex) std::swap(s, t);
  std::sort(arrows.begin(), arrows.end());
  return arrows;
}

inline bool is_source_of(const std::vector<std::pair<int, int>>& arrows, int vertex) {
  for (auto [s, t] : arrows) {
    (void)s;
    if (t == vertex) return false;
  }
  return true;
}

// Reflection functor at a sink: the new space there is the kernel of the
// stacked incoming maps (incoming arrows taken in arrow order), and each
// reversed arrow acts by the matching row block of the kernel basis.
template <class K>
Rep<K> reflect_at_sink(const Rep<K>& r, int vertex) {
  int ne = static_cast<int>(r.arrows.size());
  std::vector<int> in_edges;
  for (int e = 0; e < ne; ++e) {
    require(r.arrows[e].first != vertex, "PreconditionViolated",
            "reflection functor needs a sink");
    if (r.arrows[e].second == vertex) in_edges.push_back(e);
  }
  int total = 0;
  for (int e : in_edges) total += r.dims[r.arrows[e].first - 1];
  Mat<K> phi(r.dims[vertex - 1], total);
  int off = 0;
  for (int e : in_edges) {
    const Mat<K>& xe = r.x[e];
    for (int rr = 0; rr < xe.rows; ++rr)
      for (int cc = 0; cc < xe.cols; ++cc) phi.at(rr, off + cc) = xe.at(rr, cc);
    off += xe.cols;
  }
  Mat<K> Z = kernel_matrix(phi);

  std::vector<std::pair<std::pair<int, int>, Mat<K>>> entries;
  off = 0;
  for (int e = 0; e < ne; ++e) {
    auto [s, t] = r.arrows[e];
    if (t == vertex) {
      Mat<K> block(r.dims[s - 1], Z.cols);
      for (int rr = 0; rr < block.rows; ++rr)
        for (int cc = 0; cc < Z.cols; ++cc) block.at(rr, cc) = Z.at(off + rr, cc);
      off += block.rows;
      entries.push_back({{vertex, s}, std::move(block)});
    } else {
      entries.push_back({{s, t}, r.x[e]});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Rep<K> out;
  out.dims = r.dims;
  out.dims[vertex - 1] = Z.cols;
  for (auto& [arrow, mat] : entries) {
    out.arrows.push_back(arrow);
    out.x.push_back(std::move(mat));
  }
  return out;
}

// Builds the indecomposable with dimension vector beta_k by starting from a
// simple over the k-1 times reflected orientation and walking back through
// the word's reflection functors. Both the dimension vector and the
// one-dimensional endomorphism algebra are checked on the way out.
template <class K>
Rep<K> indecomposable_rep(const RootSystem& rs, int position) {
  require(position >= 1 && position <= rs.N, "InvalidIndex", "root position out of range");
  std::vector<std::vector<std::pair<int, int>>> seq;
  seq.push_back(rs.quiver.arrows);
  for (int j = 1; j < position; ++j) {
    int letter = rs.word[j - 1];
    require(is_source_of(seq.back(), letter), "InternalCheckFailed",
            "word letter is not a source of the reflected orientation");
    seq.push_back(reverse_arrows_at(seq.back(), letter));
  }
  int start = rs.word[position - 1];
  require(is_source_of(seq.back(), start), "InternalCheckFailed",
          "word letter is not a source of the reflected orientation");

  Rep<K> rep = simple_rep<K>(rs.n, seq.back(), start);
  for (int j = position - 1; j >= 1; --j) {
    rep = reflect_at_sink(rep, rs.word[j - 1]);
    require(rep.arrows == seq[j - 1], "InternalCheckFailed",
            "reflection functor produced an unexpected orientation");
  }
  require(rep.dims == rs.roots[position - 1], "InternalCheckFailed",
          "reflection functors missed the dimension vector");
  require(hom_dim(rep, rep) == 1, "InternalCheckFailed",
          "constructed module is not indecomposable");
  return rep;
}

template <class K>
std::vector<Rep<K>> all_indecomposables(const RootSystem& rs) {
  std::vector<Rep<K>> out;
  out.reserve(rs.N);
  for (int k = 1; k <= rs.N; ++k) out.push_back(indecomposable_rep<K>(rs, k));
  return out;
}

// Hom and ext dimension tables over the rationals for all pairs of
// indecomposables, indexed by word position.
HomExtTables compute_hom_ext_tables(const RootSystem& rs);
HomExtTables compute_hom_ext_tables(const RootSystem& rs, const std::vector<Rep<Rat>>& modules);

}  // namespace dar
