#ifndef STOKESWIM_TENSOR_HPP
#define STOKESWIM_TENSOR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

// Minimal 3D vector / second-order tensor algebra.
//
// Conventions (fixed project-wide):
//   * A : B   = sum_{i,l} A_il B_il  = trace(A . B^T)      -> ddot()
//   * (A . B)_ij = sum_l A_il B_lj                         -> operator*
//   * A . a   = A_ik a_k e_i (row contraction)             -> mat_vec()
//   * a . A   = A^T . a                                    -> vec_mat()
//
// Jacobians produced elsewhere in this project use the gradient layout
//   (grad v)_ij = d v_j / d x_i,
// i.e. row index differentiates, column index selects the component.
// Worked example: v(x) = x_1 e_2 has grad v = e_1 (x) e_2 (entry (1,2) = 1),
// so vec_mat(e_1, grad v) = e_2 and mat_vec(grad v, e_2) = e_1.
//
// Everything is templated on the scalar type so the same expressions can be
// instantiated with a SIMD pack; numeric code should use Vec3d / Mat3d.

namespace stokeswim {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  constexpr T& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr const T& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(const T& s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  friend constexpr Vec3 operator*(const T& s, const Vec3& v) { return v * s; }
};

using Vec3d = Vec3<double>;

template <class T>
constexpr T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

template <class T>
constexpr Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Row-major 3x3 tensor; m[i][j] is row i, column j.
template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};

  constexpr std::array<T, 3>& operator[](std::size_t i) { return m[i]; }
  constexpr const std::array<T, 3>& operator[](std::size_t i) const { return m[i]; }

  static constexpr Mat3 identity() {
    Mat3 r;
    r.m[0][0] = T(1); r.m[1][1] = T(1); r.m[2][2] = T(1);
    return r;
  }

  /// Dyad a (x) b, entries a_i b_j.
  static constexpr Mat3 outer(const Vec3<T>& a, const Vec3<T>& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a[i] * b[j];
    return r;
  }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }
  constexpr Mat3 operator-() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = -m[i][j];
    return r;
  }
  constexpr Mat3 operator*(const T& s) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
    return r;
  }
  friend constexpr Mat3 operator*(const T& s, const Mat3& a) { return a * s; }

  /// Matrix product (A . B)_ij = A_il B_lj.
  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
      }
    return r;
  }

  constexpr Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += o.m[i][j];
    return *this;
  }
};

using Mat3d = Mat3<double>;

template <class T>
constexpr Mat3<T> transpose(const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  return r;
}

/// Full contraction A : B = A_il B_il.
template <class T>
constexpr T ddot(const Mat3<T>& a, const Mat3<T>& b) {
  T s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = s + a.m[i][j] * b.m[i][j];
  return s;
}

/// A . a = A_ik a_k e_i.
template <class T>
constexpr Vec3<T> mat_vec(const Mat3<T>& a, const Vec3<T>& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

/// a . A = A^T . a.
template <class T>
constexpr Vec3<T> vec_mat(const Vec3<T>& v, const Mat3<T>& a) {
  return {a.m[0][0] * v.x + a.m[1][0] * v.y + a.m[2][0] * v.z,
          a.m[0][1] * v.x + a.m[1][1] * v.y + a.m[2][1] * v.z,
          a.m[0][2] * v.x + a.m[1][2] * v.y + a.m[2][2] * v.z};
}

template <class T>
constexpr T trace(const Mat3<T>& a) {
  return a.m[0][0] + a.m[1][1] + a.m[2][2];
}

/// Symmetric part, (A + A^T)/2.  Applied to a velocity gradient this is the
/// deformation-rate tensor.
template <class T>
constexpr Mat3<T> sym(const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (a.m[i][j] + a.m[j][i]) * T(0.5);
  return r;
}

/// Antisymmetric part, (A - A^T)/2.
template <class T>
constexpr Mat3<T> skew(const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (a.m[i][j] - a.m[j][i]) * T(0.5);
  return r;
}

inline double max_abs(const Mat3d& a) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::fabs(a.m[i][j]));
  return s;
}

inline double max_abs(const Vec3d& a) {
  return std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(a.z)});
}

/// Inverse by cofactors; intended for well-conditioned 3x3 systems such as
/// the mobility-style matrices assembled from surface tractions.
inline Mat3d inverse(const Mat3d& a) {
  Mat3d c;
  c[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  c[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
  c[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
  c[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  c[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
  c[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
  c[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  c[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
  c[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double det = a[0][0] * c[0][0] + a[0][1] * c[1][0] + a[0][2] * c[2][0];
  return c * (1.0 / det);
}

}  // namespace stokeswim

#endif
