#include "qlandau/canonicalize.hpp"

#include <cmath>
#include <stdexcept>

namespace qlandau {

std::string to_string(RotationBranch b) {
  switch (b) {
    case RotationBranch::identity: return "identity";
    case RotationBranch::flip: return "flip";
    case RotationBranch::generic: return "generic";
    case RotationBranch::degenerate_zero: return "degenerate-zero";
  }
  return "?";
}

namespace {

double conjugation_residual(const Mat4<double>& r, const Vec3<double>& nu) {
  const double norm = std::sqrt(nu.norm_sq());
  const Mat4<double> target = norm * unit_matrix<double>(QuatUnit::i);
  return frobenius_norm(r * field_matrix(nu) * r.transpose() - target);
}

}  // namespace

CanonicalRotation canonical_rotation(const Vec3<double>& nu) {
  const double nsq = nu.norm_sq();
  if (nsq == 0.0) {
    return {Mat4<double>::identity(), RotationBranch::degenerate_zero, 0.0};
  }
  const double norm = std::sqrt(nsq);
  const double lam_sq = nu.v2 * nu.v2 + nu.v3 * nu.v3;

  // Near-degenerate fields route to the axis branches; the threshold keeps
  // the 1/lambda entries away from catastrophic cancellation.
  if (lam_sq <= 1e-24 * nsq) {
    if (nu.v1 >= 0.0) {
      Mat4<double> r = Mat4<double>::identity();
      return {r, RotationBranch::identity, conjugation_residual(r, nu)};
    }
    const Mat4<double> r = Mat4<double>::diagonal(1.0, -1.0, 1.0, -1.0);
    return {r, RotationBranch::flip, conjugation_residual(r, nu)};
  }

  const double lam = std::sqrt(lam_sq);
  // Rows are the adapted orthonormal basis: eps0 = e0,
  // Omega e0 / |nu|, eps2 in span(e2, e3), eps3 = -Omega eps2 / |nu|.
  // With the basis on the rows the conjugation runs R Omega R^{-1} = |nu| i;
  // the transposed (column) convention lands on -|nu| i instead.
  Mat4<double> r{};
  r(0, 0) = 1.0;
  r(1, 1) = nu.v1 / norm;
  r(1, 2) = nu.v2 / norm;
  r(1, 3) = nu.v3 / norm;
  r(2, 2) = nu.v3 / lam;
  r(2, 3) = -nu.v2 / lam;
  r(3, 1) = -lam / norm;
  r(3, 2) = nu.v1 * nu.v2 / (lam * norm);
  r(3, 3) = nu.v1 * nu.v3 / (lam * norm);
  return {r, RotationBranch::generic, conjugation_residual(r, nu)};
}

Frame3 frame3(const Vec3<double>& nu) {
  const double nsq = nu.norm_sq();
  if (nsq == 0.0) throw std::invalid_argument("frame3: nu must be nonzero");
  const double norm = std::sqrt(nsq);
  const double lam_sq = nu.v2 * nu.v2 + nu.v3 * nu.v3;

  Frame3 f{};
  f.e1 = (1.0 / norm) * nu;
  if (lam_sq <= 1e-24 * nsq) {
    f.e2 = Vec3<double>{0.0, 1.0, 0.0};
    f.e3 = cross(f.e1, f.e2);
    f.degenerate = true;
    return f;
  }
  const double lam = std::sqrt(lam_sq);
  f.e2 = Vec3<double>{0.0, nu.v3 / lam, -nu.v2 / lam};
  f.e3 = cross(f.e1, f.e2);
  f.degenerate = false;
  return f;
}

std::array<double, 4> characteristic_polynomial(const Mat4<double>& m) {
  // Faddeev-LeVerrier: M_1 = M, c_1 = -tr; M_{k+1} = M (M_k + c_k I).
  std::array<double, 4> c{};
  Mat4<double> mk = m;
  double ck = 0.0;
  for (int k = 1; k <= 4; ++k) {
    double tr = 0.0;
    for (int d = 0; d < 4; ++d) tr += mk(d, d);
    ck = -tr / k;
    c[k - 1] = ck;
    if (k < 4) {
      Mat4<double> shifted = mk;
      for (int d = 0; d < 4; ++d) shifted(d, d) += ck;
      mk = m * shifted;
    }
  }
  return c;
}

}  // namespace qlandau
