#pragma once

#include <utility>
#include <vector>

#include "dynkin_ar/exactlin.hpp"
#include "dynkin_ar/quiverrep.hpp"
#include "dynkin_ar/util.hpp"

namespace dar {

// A module over the doubled quiver subject to the preprojective relation: at
// every vertex the incoming forward-times-reverse compositions balance the
// outgoing reverse-times-forward ones. rev[e] maps the target space of arrow
// e back to its source space, so its shape is dims[source-1] x dims[target-1].
// That makes a reverse tuple exactly an element of dual_ext_space(rep, rep).
template <class K>
struct PreprojModule {
  Rep<K> rep;
  std::vector<Mat<K>> rev;
  bool certified = false;  // the rigidity certificate below held when built
};

template <class K>
void validate_preproj(const PreprojModule<K>& m) {
  validate_rep(m.rep);
  int ne = static_cast<int>(m.rep.arrows.size());
  require(static_cast<int>(m.rev.size()) == ne, "DimensionMismatch", "reverse map count");
  for (int e = 0; e < ne; ++e) {
    auto [s, t] = m.rep.arrows[e];
    require(m.rev[e].rows == m.rep.dims[s - 1] && m.rev[e].cols == m.rep.dims[t - 1],
            "DimensionMismatch", "reverse map shape");
  }
  int nv = static_cast<int>(m.rep.dims.size());
  for (int v = 1; v <= nv; ++v) {
    Mat<K> acc(m.rep.dims[v - 1], m.rep.dims[v - 1]);
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = m.rep.arrows[e];
      if (t == v) acc = acc + m.rep.x[e] * m.rev[e];
      if (s == v) acc = acc - m.rev[e] * m.rep.x[e];
    }
    require(acc.is_zero(), "PreconditionViolated", "preprojective relation fails");
  }
}

// The plain quiver module viewed with all reverse maps zero.
template <class K>
PreprojModule<K> zero_dual(const Rep<K>& rep) {
  PreprojModule<K> m;
  m.rep = rep;
  for (auto [s, t] : rep.arrows) m.rev.emplace_back(rep.dims[s - 1], rep.dims[t - 1]);
  return m;
}

// Morphisms of modules over the doubled quiver: the intertwining equations
// for the forward maps and for the reverse maps, solved as one kernel.
template <class K>
std::vector<Morphism<K>> lambda_hom(const PreprojModule<K>& m, const PreprojModule<K>& n) {
  require(m.rep.arrows == n.rep.arrows, "DimensionMismatch", "hom: different orientations");
  int nv = static_cast<int>(m.rep.dims.size());
  int ne = static_cast<int>(m.rep.arrows.size());
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.rep.dims[v] * m.rep.dims[v];
  int unknowns = offset[nv];

  int eq_rows = 0;
  for (auto [s, t] : m.rep.arrows) {
    eq_rows += n.rep.dims[t - 1] * m.rep.dims[s - 1];
    eq_rows += n.rep.dims[s - 1] * m.rep.dims[t - 1];
  }
  Mat<K> sys(eq_rows, unknowns);
  int row = 0;
  for (int e = 0; e < ne; ++e) {
    auto [s, t] = m.rep.arrows[e];
    const Mat<K>& xm = m.rep.x[e];
    const Mat<K>& xn = n.rep.x[e];
    for (int r = 0; r < n.rep.dims[t - 1]; ++r)
      for (int c = 0; c < m.rep.dims[s - 1]; ++c, ++row) {
        for (int a = 0; a < m.rep.dims[t - 1]; ++a)
          sys.at(row, offset[t - 1] + r * m.rep.dims[t - 1] + a) += xm.at(a, c);
        for (int b = 0; b < n.rep.dims[s - 1]; ++b)
          sys.at(row, offset[s - 1] + b * m.rep.dims[s - 1] + c) -= xn.at(r, b);
      }
    const Mat<K>& am = m.rev[e];
    const Mat<K>& an = n.rev[e];
    for (int r = 0; r < n.rep.dims[s - 1]; ++r)
      for (int c = 0; c < m.rep.dims[t - 1]; ++c, ++row) {
        for (int b = 0; b < m.rep.dims[s - 1]; ++b)
          sys.at(row, offset[s - 1] + r * m.rep.dims[s - 1] + b) += am.at(b, c);
        for (int a = 0; a < n.rep.dims[t - 1]; ++a)
          sys.at(row, offset[t - 1] + a * m.rep.dims[t - 1] + c) -= an.at(r, a);
      }
  }

  Mat<K> ker = kernel_matrix(sys);
  std::vector<Morphism<K>> basis;
  basis.reserve(ker.cols);
  for (int j = 0; j < ker.cols; ++j) {
    Morphism<K> f;
    for (int v = 1; v <= nv; ++v) {
      Mat<K> fv(n.rep.dims[v - 1], m.rep.dims[v - 1]);
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
int lambda_hom_dim(const PreprojModule<K>& m, const PreprojModule<K>& n) {
  return static_cast<int>(lambda_hom(m, n).size());
}

// Symmetrized form of two dimension vectors over the orientation's diagram.
inline long sym_form_dims(const std::vector<std::pair<int, int>>& arrows,
                          const std::vector<int>& a, const std::vector<int>& b) {
  long v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += 2l * a[i] * b[i];
  for (auto [s, t] : arrows) v -= static_cast<long>(a[s - 1]) * b[t - 1] + static_cast<long>(a[t - 1]) * b[s - 1];
  return v;
}

// Draws one reverse structure from the span of the adjoint kernel basis with
// integer coefficients, and records whether the endomorphism count certifies
// an open orbit: equality with the Euler form value pins the module up to
// isomorphism independently of the draw.
template <class K>
PreprojModule<K> sample_dual(const Rep<K>& rep, Rng& rng) {
  PreprojModule<K> m = zero_dual(rep);
  auto basis = dual_ext_space(rep, rep);
  for (const auto& z : basis) {
    long c = rng.int_in(-50, 50);
    if (c == 0) continue;
    K ck(c);
    for (std::size_t e = 0; e < m.rev.size(); ++e) m.rev[e] = m.rev[e] + z[e].scaled(ck);
  }
  m.certified = lambda_hom_dim(m, m) == rep_euler(rep, rep);
  return m;
}

template <class K>
PreprojModule<K> generic_dual(const Rep<K>& rep, Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    PreprojModule<K> m = sample_dual(rep, rng);
    if (m.certified) return m;
  }
  fail("GenericityFailure", "no sampled reverse structure had the generic endomorphism count");
}

// The linear map from forward morphisms m -> n to the dual extension space of
// (n, m): f goes to the arrow-indexed defect of its reverse intertwining.
// The defect always lands in that space; its coordinates in the deterministic
// basis form one column per hom basis element.
template <class K>
Mat<K> r_matrix(const PreprojModule<K>& m, const PreprojModule<K>& n) {
  require(m.rep.arrows == n.rep.arrows, "DimensionMismatch", "r matrix: different orientations");
  auto fs = hom_space(m.rep, n.rep);
  auto dual = dual_ext_space(n.rep, m.rep);
  int ne = static_cast<int>(m.rep.arrows.size());

  std::vector<int> offset(ne + 1, 0);
  for (int e = 0; e < ne; ++e) {
    auto [s, t] = m.rep.arrows[e];
    offset[e + 1] = offset[e] + n.rep.dims[s - 1] * m.rep.dims[t - 1];
  }
  int total = offset[ne];

  Mat<K> B(total, static_cast<int>(dual.size()));
  for (int j = 0; j < static_cast<int>(dual.size()); ++j)
    for (int e = 0; e < ne; ++e)
      for (int r = 0; r < dual[j][e].rows; ++r)
        for (int c = 0; c < dual[j][e].cols; ++c)
          B.at(offset[e] + r * dual[j][e].cols + c, j) = dual[j][e].at(r, c);

  Mat<K> defects(total, static_cast<int>(fs.size()));
  for (int j = 0; j < static_cast<int>(fs.size()); ++j) {
    const Morphism<K>& f = fs[j];
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = m.rep.arrows[e];
      Mat<K> d = f[s - 1] * m.rev[e] - n.rev[e] * f[t - 1];
      for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c) defects.at(offset[e] + r * d.cols + c, j) = d.at(r, c);
    }
  }

  auto coords = solve_columns(B, defects);
  require(coords.has_value(), "ContainmentViolation",
          "a morphism's reverse defect left the dual extension space");
  return *coords;
}

// First extension dimension between the two modules, by the rank of the
// defect map in both directions: each cokernel counts the extensions that
// survive in one direction and self-duality adds them.
template <class K>
int ext_dim_lambda_via_coker(const PreprojModule<K>& m, const PreprojModule<K>& n) {
  Mat<K> r1 = r_matrix(m, n);
  Mat<K> r2 = r_matrix(n, m);
  return (r1.rows - rank(r1)) + (r2.rows - rank(r2));
}

// The same dimension from the morphism counts in both directions and the
// symmetrized form of the dimension vectors; independent of the defect maps.
template <class K>
int ext_dim_lambda_via_forms(const PreprojModule<K>& m, const PreprojModule<K>& n) {
  long v = lambda_hom_dim(m, n) + lambda_hom_dim(n, m) -
           sym_form_dims(m.rep.arrows, m.rep.dims, n.rep.dims);
  require(v >= 0, "NegativeDimension", "extension count came out negative");
  return static_cast<int>(v);
}

template <class K>
PreprojModule<K> lambda_direct_sum(const PreprojModule<K>& a, const PreprojModule<K>& b) {
  PreprojModule<K> m;
  m.rep = direct_sum(a.rep, b.rep);
  for (std::size_t e = 0; e < m.rep.arrows.size(); ++e) {
    auto [s, t] = m.rep.arrows[e];
    Mat<K> z(m.rep.dims[s - 1], m.rep.dims[t - 1]);
    for (int i = 0; i < a.rev[e].rows; ++i)
      for (int j = 0; j < a.rev[e].cols; ++j) z.at(i, j) = a.rev[e].at(i, j);
    for (int i = 0; i < b.rev[e].rows; ++i)
      for (int j = 0; j < b.rev[e].cols; ++j)
        z.at(a.rev[e].rows + i, a.rev[e].cols + j) = b.rev[e].at(i, j);
    m.rev.push_back(std::move(z));
  }
  return m;
}

}  // namespace dar
