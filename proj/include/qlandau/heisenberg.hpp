#pragma once

#include <array>
#include <cstddef>

#include "qlandau/algebra.hpp"

namespace qlandau {

// ---------------------------------------------------------------------------
// The quaternionic Heisenberg group R^3 x_omega R^4 and its 8x8 affine
// matrix representation. Everything here is polynomial with integer
// structure, so the exact scalar T = Rat gives zero-residual checks.
// ---------------------------------------------------------------------------

template <class T>
struct HeisElement {
  Vec3<T> t{};
  Vec4<T> x{};

  friend bool operator==(const HeisElement& a, const HeisElement& b) = default;

  static HeisElement identity() { return {}; }
  HeisElement inverse() const { return {-t, -x}; }
};

/// Group law (t,x) . (t',x') = (t + t' + omega(x,x'), x + x').
template <class T>
HeisElement<T> heis_mul(const HeisElement<T>& g, const HeisElement<T>& h) {
  return {g.t + h.t + omega_form(g.x, h.x), g.x + h.x};
}

template <class T>
struct Mat8 {
  std::array<std::array<T, 8>, 8> m{};

  T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
  friend bool operator==(const Mat8& a, const Mat8& b) = default;

  static Mat8 identity() {
    Mat8 r{};
    for (std::size_t i = 0; i < 8; ++i) r(i, i) = T(1);
    return r;
  }

  friend Mat8 operator+(const Mat8& a, const Mat8& b) {
    Mat8 r{};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
  }
  friend Mat8 operator-(const Mat8& a, const Mat8& b) {
    Mat8 r{};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
  }
  friend Mat8 operator*(const T& s, const Mat8& a) {
    Mat8 r{};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) r(i, j) = s * a(i, j);
    return r;
  }
  friend Mat8 operator*(const Mat8& a, const Mat8& b) {
    Mat8 r{};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        T acc{};
        for (std::size_t k = 0; k < 8; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }

  bool is_zero() const {
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (m[i][j] != T(0)) return false;
    return true;
  }
};

template <class T>
Mat8<T> bracket(const Mat8<T>& a, const Mat8<T>& b) {
  return a * b - b * a;
}

/// The affine representation zeta(t, x) of a group element.
template <class T>
Mat8<T> heis_matrix(const HeisElement<T>& g) {
  const auto& x = g.x;
  Mat8<T> z = Mat8<T>::identity();
  // omega-coupling block: row lambda, columns 3..6 hold the coefficient
  // vector whose pairing with x' produces omega_lambda(x, x').
  const T block[3][4] = {{-x.x1, x.x0, -x.x3, x.x2},
                         {-x.x2, x.x3, x.x0, -x.x1},
                         {-x.x3, -x.x2, x.x1, x.x0}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) z(r, 3 + c) = block[r][c];
    z(r, 7) = g.t[r];
  }
  for (std::size_t a = 0; a < 4; ++a) z(3 + a, 7) = x[a];
  return z;
}

/// Generators F0..F3, T1..T3 of the Lie algebra as 8x8 matrices.
/// zeta is affine in (t, x), so d/ds zeta(0, s e_a) at 0 is exactly
/// zeta(0, e_a) - I; likewise for the center directions.
template <class T>
std::array<Mat8<T>, 7> generator_matrices() {
  std::array<Mat8<T>, 7> gen;
  for (std::size_t a = 0; a < 4; ++a) {
    HeisElement<T> g{};
    g.x = Vec4<T>::basis(a);
    gen[a] = heis_matrix(g) - Mat8<T>::identity();
  }
  for (std::size_t l = 0; l < 3; ++l) {
    HeisElement<T> g{};
    g.t[l] = T(1);
    gen[4 + l] = heis_matrix(g) - Mat8<T>::identity();
  }
  return gen;
}

/// Structure constants of [F_a, F_b] expanded on (T1, T2, T3): the entry
/// table[a][b] is the coefficient vector, read off the matrix bracket.
template <class T>
std::array<std::array<Vec3<T>, 4>, 4> bracket_table() {
  const auto gen = generator_matrices<T>();
  std::array<std::array<Vec3<T>, 4>, 4> table{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const Mat8<T> br = bracket(gen[a], gen[b]);
      // brackets land in the center, i.e. the t-column slots
      table[a][b] = Vec3<T>{br(0, 7), br(1, 7), br(2, 7)};
    }
  return table;
}

}  // namespace qlandau
