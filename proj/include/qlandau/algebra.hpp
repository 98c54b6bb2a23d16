#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "qlandau/rational.hpp"

namespace qlandau {

// ---------------------------------------------------------------------------
// Scalar-generic vectors, quaternions, 4x4 matrices and bivectors on R^4.
// T is double for numeric paths and Rat for the exact verification paths.
// ---------------------------------------------------------------------------

template <class T>
struct Vec3 {
  T v1{}, v2{}, v3{};

  T& operator[](std::size_t i) { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
  const T& operator[](std::size_t i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.v1 + b.v1, a.v2 + b.v2, a.v3 + b.v3}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.v1, -a.v2, -a.v3}; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.v1, s * a.v2, s * a.v3}; }
  friend bool operator==(const Vec3& a, const Vec3& b) = default;

  T norm_sq() const { return v1 * v1 + v2 * v2 + v3 * v3; }
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.v1 * b.v1 + a.v2 * b.v2 + a.v3 * b.v3;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.v2 * b.v3 - a.v3 * b.v2, a.v3 * b.v1 - a.v1 * b.v3, a.v1 * b.v2 - a.v2 * b.v1};
}

template <class T>
struct Vec4 {
  T x0{}, x1{}, x2{}, x3{};

  T& operator[](std::size_t i) {
    switch (i) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }
  const T& operator[](std::size_t i) const {
    switch (i) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }

  friend Vec4 operator+(const Vec4& a, const Vec4& b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend Vec4 operator-(const Vec4& a, const Vec4& b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend Vec4 operator-(const Vec4& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
  friend Vec4 operator*(const T& s, const Vec4& a) { return {s * a.x0, s * a.x1, s * a.x2, s * a.x3}; }
  friend bool operator==(const Vec4& a, const Vec4& b) = default;

  T norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }

  static Vec4 basis(std::size_t i) {
    Vec4 e{};
    e[i] = T(1);
    return e;
  }
};

template <class T>
T dot(const Vec4<T>& a, const Vec4<T>& b) {
  return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

/// Quaternion w + x i + y j + z k.
template <class T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(const T& s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  T norm_sq() const { return w * w + x * x + y * y + z * z; }

  static Quaternion one() { return {T(1), T(0), T(0), T(0)}; }
  static Quaternion i() { return {T(0), T(1), T(0), T(0)}; }
  static Quaternion j() { return {T(0), T(0), T(1), T(0)}; }
  static Quaternion k() { return {T(0), T(0), T(0), T(1)}; }

  static Quaternion from_vec4(const Vec4<T>& v) { return {v.x0, v.x1, v.x2, v.x3}; }
  Vec3<T> imag() const { return {x, y, z}; }
};

/// Hamilton product.
template <class T>
Quaternion<T> quat_mul(const Quaternion<T>& p, const Quaternion<T>& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

template <class T>
struct Mat4 {
  std::array<std::array<T, 4>, 4> m{};

  std::array<T, 4>& operator[](std::size_t r) { return m[r]; }
  const std::array<T, 4>& operator[](std::size_t r) const { return m[r]; }
  T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  friend bool operator==(const Mat4& a, const Mat4& b) = default;

  static Mat4 identity() {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i) r(i, i) = T(1);
    return r;
  }

  static Mat4 diagonal(T a, T b, T c, T d) {
    Mat4 r{};
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    r(3, 3) = d;
    return r;
  }

  Mat4 transpose() const {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = m[j][i];
    return r;
  }

  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
  }
  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
  }
  friend Mat4 operator*(const T& s, const Mat4& a) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
    return r;
  }
  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        T acc{};
        for (std::size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }

  Vec4<T> apply(const Vec4<T>& v) const {
    Vec4<T> r{};
    for (std::size_t i = 0; i < 4; ++i) {
      T acc{};
      for (std::size_t j = 0; j < 4; ++j) acc += m[i][j] * v[j];
      r[i] = acc;
    }
    return r;
  }
};

inline double frobenius_norm(const Mat4<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

inline double max_abs(const Mat4<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s = std::max(s, std::fabs(a(i, j)));
  return s;
}

enum class QuatUnit { i, j, k };

/// Matrix representation of i, j, k acting on R^4.
template <class T>
Mat4<T> unit_matrix(QuatUnit u) {
  Mat4<T> r{};
  switch (u) {
    case QuatUnit::i:
      r(0, 1) = T(-1);
      r(1, 0) = T(1);
      r(2, 3) = T(-1);
      r(3, 2) = T(1);
      break;
    case QuatUnit::j:
      r(0, 2) = T(-1);
      r(1, 3) = T(1);
      r(2, 0) = T(1);
      r(3, 1) = T(-1);
      break;
    case QuatUnit::k:
      r(0, 3) = T(-1);
      r(1, 2) = T(-1);
      r(2, 1) = T(1);
      r(3, 0) = T(1);
      break;
  }
  return r;
}

/// The Im H-valued symplectic form on R^4, componentwise.
template <class T>
Vec3<T> omega_form(const Vec4<T>& x, const Vec4<T>& y) {
  return {x.x0 * y.x1 - x.x1 * y.x0 + x.x2 * y.x3 - x.x3 * y.x2,
          x.x0 * y.x2 - x.x2 * y.x0 + x.x3 * y.x1 - x.x1 * y.x3,
          x.x0 * y.x3 - x.x3 * y.x0 + x.x1 * y.x2 - x.x2 * y.x1};
}

/// Same form computed from the quaternionic definition (y x_bar - x y_bar)/2.
/// The real part vanishes identically; the imaginary part is returned.
template <class T>
Vec3<T> omega_form_quaternionic(const Vec4<T>& x, const Vec4<T>& y) {
  const auto qx = Quaternion<T>::from_vec4(x);
  const auto qy = Quaternion<T>::from_vec4(y);
  const Quaternion<T> d = quat_mul(qy, qx.conj()) - quat_mul(qx, qy.conj());
  return {d.x / T(2), d.y / T(2), d.z / T(2)};
}

/// Field matrix Omega_nu = nu1 i + nu2 j + nu3 k.
template <class T>
Mat4<T> field_matrix(const Vec3<T>& nu) {
  const Mat4<T> mi = unit_matrix<T>(QuatUnit::i);
  const Mat4<T> mj = unit_matrix<T>(QuatUnit::j);
  const Mat4<T> mk = unit_matrix<T>(QuatUnit::k);
  return nu.v1 * mi + nu.v2 * mj + nu.v3 * mk;
}

/// Vector potential A(x) = Omega_nu x.
template <class T>
Vec4<T> vector_potential(const Vec3<T>& nu, const Vec4<T>& x) {
  return field_matrix(nu).apply(x);
}

// ---------------------------------------------------------------------------
// Bivectors on R^4. Basis order (01, 02, 03, 23, 31, 12) makes the Hodge
// star the half-swap permutation.
// ---------------------------------------------------------------------------

template <class T>
struct Bivector {
  std::array<T, 6> c{};

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }
  friend bool operator==(const Bivector& a, const Bivector& b) = default;
};

template <class T>
Bivector<T> hodge_star(const Bivector<T>& b) {
  return Bivector<T>{{b.c[3], b.c[4], b.c[5], b.c[0], b.c[1], b.c[2]}};
}

/// Bivector of an antisymmetric matrix; for Omega_{E,B} the components come
/// out as (E1, E2, E3, B1, B2, B3).
template <class T>
Bivector<T> bivector_from_matrix(const Mat4<T>& m) {
  return Bivector<T>{{m(1, 0), m(2, 0), m(3, 0), m(3, 2), m(1, 3), m(2, 1)}};
}

/// Curvature matrix of independent electric/magnetic parts (the self-dual
/// case E = B collapses to field_matrix).
template <class T>
Mat4<T> curvature_matrix(const Vec3<T>& e, const Vec3<T>& b) {
  Mat4<T> r{};
  r(0, 1) = -e.v1;
  r(0, 2) = -e.v2;
  r(0, 3) = -e.v3;
  r(1, 0) = e.v1;
  r(2, 0) = e.v2;
  r(3, 0) = e.v3;
  r(1, 2) = -b.v3;
  r(1, 3) = b.v2;
  r(2, 1) = b.v3;
  r(2, 3) = -b.v1;
  r(3, 1) = -b.v2;
  r(3, 2) = b.v1;
  return r;
}

}  // namespace qlandau
