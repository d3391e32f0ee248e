#include <doctest.h>

#include "stokeswim/tensor.hpp"
#include "support/oracles.hpp"

using namespace stokeswim;

namespace {
Mat3d dyad(int i, int j) {
  Mat3d m{};
  m[i][j] = 1.0;
  return m;
}
}  // namespace

TEST_CASE("ddot basics") {
  CHECK(ddot(Mat3d::identity(), Mat3d::identity()) == doctest::Approx(3.0));
  CHECK(ddot(dyad(0, 1), dyad(0, 1)) == doctest::Approx(1.0));
  CHECK(ddot(dyad(0, 1), dyad(1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("ddot equals trace of A B^T on random pairs") {
  oracle::Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const Mat3d a = rng.mat(3.0), b = rng.mat(3.0);
    CHECK(ddot(a, b) == doctest::Approx(oracle::trace_of_product_transpose(a, b)).epsilon(1e-13));
    CHECK(ddot(a, b) == doctest::Approx(ddot(b, a)).epsilon(1e-13));
    CHECK(ddot(a, b) == doctest::Approx(trace(a * transpose(b))).epsilon(1e-13));
  }
}

TEST_CASE("matmul basics and oracle") {
  oracle::Rng rng(102);
  const Mat3d m = rng.mat();
  CHECK(max_abs(Mat3d::identity() * m - m) == doctest::Approx(0.0));
  CHECK(max_abs(dyad(0, 1) * dyad(1, 2) - dyad(0, 2)) == doctest::Approx(0.0));
  for (int k = 0; k < 100; ++k) {
    const Mat3d a = rng.mat(2.0), b = rng.mat(2.0);
    CHECK(max_abs(a * b - oracle::naive_matmul(a, b)) < 1e-14);
  }
}

TEST_CASE("matmul associativity to machine precision") {
  oracle::Rng rng(103);
  for (int k = 0; k < 100; ++k) {
    const Mat3d a = rng.mat(), b = rng.mat(), c = rng.mat();
    CHECK(max_abs((a * b) * c - a * (b * c)) < 1e-14);
  }
}

TEST_CASE("matrix-vector contractions") {
  oracle::Rng rng(104);
  const Vec3d v = rng.vec();
  CHECK(max_abs(mat_vec(Mat3d::identity(), v) - v) == doctest::Approx(0.0));
  // a . A with A = e1 (x) e2 maps e1 to e2
  CHECK(max_abs(vec_mat(Vec3d{1, 0, 0}, dyad(0, 1)) - Vec3d{0, 1, 0}) == doctest::Approx(0.0));
  for (int k = 0; k < 100; ++k) {
    const Mat3d a = rng.mat(2.0);
    const Vec3d u = rng.vec(2.0);
    CHECK(max_abs(vec_mat(u, a) - mat_vec(transpose(a), u)) < 1e-14);
  }
}

TEST_CASE("sym/skew decomposition") {
  oracle::Rng rng(105);
  const Mat3d s = sym(rng.mat());
  CHECK(max_abs(sym(s) - s) < 1e-15);
  CHECK(max_abs(sym(dyad(0, 1)) - (dyad(0, 1) + dyad(1, 0)) * 0.5) == doctest::Approx(0.0));
  for (int k = 0; k < 100; ++k) {
    const Mat3d a = rng.mat(2.0);
    CHECK(max_abs(sym(a) + skew(a) - a) < 1e-14);
    CHECK(max_abs(transpose(transpose(a)) - a) == doctest::Approx(0.0));
    const Mat3d symm = sym(rng.mat(2.0));
    // the skew part annihilates against a symmetric tensor
    CHECK(ddot(sym(a), symm) == doctest::Approx(ddot(a, symm)).epsilon(1e-12));
  }
}

TEST_CASE("cofactor inverse") {
  oracle::Rng rng(106);
  for (int k = 0; k < 50; ++k) {
    Mat3d a = rng.mat(1.0) + Mat3d::identity() * 4.0;  // well conditioned
    CHECK(max_abs(a * inverse(a) - Mat3d::identity()) < 1e-13);
  }
}
