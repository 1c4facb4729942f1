#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynkin_ar/exactlin.hpp"
#include "dynkin_ar/util.hpp"

using dar::Fp;
using dar::Mat;
using dar::Rat;
using dar::Rng;

namespace {

Mat<Rat> rat_mat(int rows, int cols, std::initializer_list<long> vals) {
  Mat<Rat> m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(*it++);
  return m;
}

template <class K>
Mat<K> random_int_mat(Rng& rng, int rows, int cols, long lo, long hi) {
  Mat<K> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = K(rng.int_in(lo, hi));
  return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rat(2, 6) == Rat(1, 3));
  CHECK(Rat(-4, -6) == Rat(2, 3));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(0, 5).is_zero());
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
  CHECK(Rat(7, 3).inverse() == Rat(3, 7));
  CHECK_THROWS_AS(Rat(1, 0), dar::Error);
  CHECK_THROWS_AS(Rat(0).inverse(), dar::Error);
}

TEST_CASE("prime field arithmetic") {
  REQUIRE(Fp::modulus() == 1000003);
  Fp a(1000002);  // = -1
  CHECK((a + Fp(2)) == Fp(1));
  CHECK((Fp(-5)) == Fp(1000003 - 5));
  Fp x(123456);
  CHECK((x * x.inverse()) == Fp(1));
  CHECK((Fp(7) / Fp(7)) == Fp(1));
  CHECK_THROWS_AS(Fp(0).inverse(), dar::Error);
  CHECK_THROWS_AS(Fp::set_modulus(999983), dar::Error);   // below 10^6
  CHECK_THROWS_AS(Fp::set_modulus(1000004), dar::Error);  // composite
}

TEST_CASE("rank of stock matrices") {
  CHECK(dar::rank(Mat<Rat>::identity(3)) == 3);
  CHECK(dar::rank(Mat<Rat>(4, 2)) == 0);
  CHECK(dar::rank(rat_mat(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(dar::rank(Mat<Rat>(0, 5)) == 0);
  CHECK(dar::rank(Mat<Rat>(5, 0)) == 0);
}

TEST_CASE("nullspace basis follows the free-column convention") {
  auto basis = dar::nullspace_basis(rat_mat(2, 2, {1, 1, 0, 0}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].at(0, 0) == Rat(-1));
  CHECK(basis[0].at(1, 0) == Rat(1));

  // 0-matrix: kernel basis is the identity columns in order.
  auto full = dar::nullspace_basis(Mat<Rat>(2, 3));
  REQUIRE(full.size() == 3);
  for (int j = 0; j < 3; ++j)
    for (int r = 0; r < 3; ++r) CHECK(full[j].at(r, 0) == (r == j ? Rat(1) : Rat(0)));
}

TEST_CASE("solve diagonal and inconsistent systems") {
  Mat<Rat> d = rat_mat(2, 2, {2, 0, 0, 2});
  auto x = dar::solve(d, {Rat(1), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(1, 2));

  Mat<Rat> bad = rat_mat(2, 1, {0, 0});
  CHECK_FALSE(dar::solve(bad, {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("rank properties over random integer matrices") {
  Rng rng(20260819);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(7));
    int cols = 1 + static_cast<int>(rng.below(7));
    Rng sub = rng.fork(trial);
    Mat<Rat> m = random_int_mat<Rat>(sub, rows, cols, -9, 9);
    int rk = dar::rank(m);
    CHECK(rk == dar::rank(m.transpose()));
    Mat<Rat> ker = dar::kernel_matrix(m);
    CHECK(rk + ker.cols == cols);
    CHECK((m * ker).is_zero());
  }
}

TEST_CASE("rational and prime-field ranks agree on small integer matrices") {
  Rng rng(77001);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    Rng sub_a = rng.fork(2 * trial);
    Rng sub_b = rng.fork(2 * trial);  // same labels -> same entries
    Mat<Rat> mq = random_int_mat<Rat>(sub_a, rows, cols, -9, 9);
    Mat<Fp> mp = random_int_mat<Fp>(sub_b, rows, cols, -9, 9);
    CHECK(dar::rank(mq) == dar::rank(mp));
  }
}

TEST_CASE("solve returns exact solutions when consistent") {
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(5));
    int cols = 1 + static_cast<int>(rng.below(5));
    Rng sub = rng.fork(trial);
    Mat<Rat> m = random_int_mat<Rat>(sub, rows, cols, -5, 5);
    // manufacture a consistent rhs
    Mat<Rat> x0 = random_int_mat<Rat>(sub, cols, 1, -3, 3);
    Mat<Rat> b = m * x0;
    std::vector<Rat> bv(rows);
    for (int r = 0; r < rows; ++r) bv[r] = b.at(r, 0);
    auto x = dar::solve(m, bv);
    REQUIRE(x.has_value());
    Mat<Rat> xm(cols, 1);
    for (int c = 0; c < cols; ++c) xm.at(c, 0) = (*x)[c];
    CHECK((m * xm) == b);
  }
}

TEST_CASE("rref is deterministic") {
  Rng rng(99);
  Mat<Rat> m = random_int_mat<Rat>(rng, 5, 7, -9, 9);
  Mat<Rat> a = m, b = m;
  auto pa = dar::rref(a);
  auto pb = dar::rref(b);
  CHECK(pa == pb);
  CHECK(a == b);
  CHECK(dar::kernel_matrix(m) == dar::kernel_matrix(m));
}
