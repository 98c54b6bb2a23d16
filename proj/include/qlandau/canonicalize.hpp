#pragma once

#include <string>

#include "qlandau/algebra.hpp"

namespace qlandau {

enum class RotationBranch { identity, flip, generic, degenerate_zero };

std::string to_string(RotationBranch b);

struct CanonicalRotation {
  Mat4<double> r;
  RotationBranch branch;
  double residual;  // ||R Omega R^T - |nu| i||_F
};

/// SO(4) rotation with R Omega_nu R^{-1} = |nu| i. The rows of R are the
/// orthonormal basis adapted to Omega_nu; nu = 0 returns the
/// identity with the degenerate-zero branch.
CanonicalRotation canonical_rotation(const Vec3<double>& nu);

struct Frame3 {
  Vec3<double> e1, e2, e3;
  bool degenerate;  // nu parallel to the first axis
};

/// Direct orthonormal frame (eps'_1, eps'_2, eps'_3) with eps'_1 = nu/|nu|.
/// Throws std::invalid_argument for nu = 0.
Frame3 frame3(const Vec3<double>& nu);

/// Coefficients (c1..c4) of det(lambda I - M) = l^4 + c1 l^3 + c2 l^2 + c3 l + c4,
/// via Faddeev-LeVerrier. Used for the conjugation-invariance check.
std::array<double, 4> characteristic_polynomial(const Mat4<double>& m);

}  // namespace qlandau
