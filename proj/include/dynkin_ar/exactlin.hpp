#pragma once

// Exact scalars and deterministic dense linear algebra. Two field modes:
//   Rat - arbitrary-precision rationals kept in canonical form
//         (reduced fraction, positive denominator);
//   Fp  - residues modulo a prime p > 10^6, fixed once per session.
// All eliminations use the same conventions everywhere: columns are processed
// left to right, the pivot is the first row (top-down) with a nonzero entry,
// pivot rows are scaled to 1, and nullspace bases follow the RREF free-column
// convention (free variable set to 1, the others to 0). Same input, same
// basis, every run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dynkin_ar/util.hpp"

namespace dar {

class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den) {
    require(den != 0, "DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);  // mpq division canonicalizes
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_), no_canon{}); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), "DivisionByZero", "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  Rat inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    return Rat(mpq_class(1) / v_, no_canon{});
  }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

private:
  struct no_canon {};
  Rat(mpq_class q, no_canon) : v_(std::move(q)) {}
  mpq_class v_;
};

// Residue field. The modulus is configured once per process (default
// 1000003); changing it after first use is rejected so a session's scalars
// stay coherent.
class Fp {
public:
  Fp() : v_(0) {}
  Fp(long n) {
    uint64_t p = modulus();
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    v_ = static_cast<uint64_t>(r);
  }

  static uint64_t modulus();
  static void set_modulus(uint64_t p);  // requires p > 10^6, p prime

  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= modulus()) v_ -= modulus();
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = (v_ * o.v_) % modulus();  // modulus < 2^31, products fit in 64 bits
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
  friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
  friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
  friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp inverse() const;
  std::string str() const { return std::to_string(v_); }
  uint64_t raw() const { return v_; }

private:
  static Fp from_raw(uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  uint64_t v_;
};

template <class K>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<K> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  K& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const K& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  bool is_zero() const {
    for (const K& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    require(x.cols == y.rows, "DimensionMismatch", "matrix product shape");
    Mat z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
      for (int k = 0; k < x.cols; ++k) {
        const K& xv = x.at(r, k);
        if (xv.is_zero()) continue;
        for (int c = 0; c < y.cols; ++c) {
          K t = xv;
          t *= y.at(k, c);
          z.at(r, c) += t;
        }
      }
    return z;
  }

  friend Mat operator+(Mat x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "DimensionMismatch", "matrix sum shape");
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
  }

  friend Mat operator-(Mat x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "DimensionMismatch", "matrix difference shape");
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
  }

  Mat scaled(const K& s) const {
    Mat m = *this;
    for (K& x : m.a) x *= s;
    return m;
  }
};

// In-place reduced row echelon form; returns the pivot columns in order.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    K inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      K f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        K t = f;
        t *= m.at(row, c);
        m.at(r, c) -= t;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {  // by value: rref is destructive
  return static_cast<int>(rref(m).size());
}

// Kernel basis as matrix columns, in free-column order.
template <class K>
Mat<K> kernel_matrix(Mat<K> m) {
  int n = m.cols;
  std::vector<int> pivots = rref(m);
  std::vector<int> pivot_of_col(n, -1);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) pivot_of_col[pivots[i]] = i;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  Mat<K> ker(n, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int fc = free_cols[j];
    ker.at(fc, j) = K(1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
      const K& coef = m.at(i, fc);
      if (!coef.is_zero()) ker.at(pivots[i], j) = -coef;
    }
  }
  return ker;
}

template <class K>
std::vector<Mat<K>> nullspace_basis(const Mat<K>& m) {
  Mat<K> ker = kernel_matrix(m);
  std::vector<Mat<K>> out;
  out.reserve(ker.cols);
  for (int j = 0; j < ker.cols; ++j) {
    Mat<K> v(ker.rows, 1);
    for (int r = 0; r < ker.rows; ++r) v.at(r, 0) = ker.at(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

// Solves m x = b for several right-hand sides at once. Returns one column per
// rhs, or nullopt if any system is inconsistent (free variables set to zero).
template <class K>
std::optional<Mat<K>> solve_columns(const Mat<K>& m, const Mat<K>& rhs) {
  require(m.rows == rhs.rows, "DimensionMismatch", "solve: rhs height");
  Mat<K> aug(m.rows, m.cols + rhs.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    for (int c = 0; c < rhs.cols; ++c) aug.at(r, m.cols + c) = rhs.at(r, c);
  }
  std::vector<int> pivots = rref(aug);
  Mat<K> x(m.cols, rhs.cols);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
    int pc = pivots[i];
    if (pc >= m.cols) return std::nullopt;  // pivot in an rhs column: inconsistent
    for (int c = 0; c < rhs.cols; ++c) x.at(pc, c) = aug.at(i, m.cols + c);
  }
  return x;
}

template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& m, const std::vector<K>& b) {
  require(static_cast<int>(b.size()) == m.rows, "DimensionMismatch", "solve: rhs length");
  Mat<K> rhs(m.rows, 1);
  for (int r = 0; r < m.rows; ++r) rhs.at(r, 0) = b[r];
  auto x = solve_columns(m, rhs);
  if (!x) return std::nullopt;
  std::vector<K> out(m.cols);
  for (int c = 0; c < m.cols; ++c) out[c] = x->at(c, 0);
  return out;
}

}  // namespace dar
