#include <cmath>

#include "qlandau/canonicalize.hpp"
#include "qlandau/rng.hpp"
#include "qlandau/verify.hpp"

namespace qlandau::verify {

namespace {

using DVec3 = Vec3<double>;
using DMat4 = Mat4<double>;

double det4(const DMat4& a) {
  // cofactor expansion along the first row via 3x3 minors
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return a(r0, c0) * (a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1)) -
           a(r0, c1) * (a(r1, c0) * a(r2, c2) - a(r1, c2) * a(r2, c0)) +
           a(r0, c2) * (a(r1, c0) * a(r2, c1) - a(r1, c1) * a(r2, c0));
  };
  return a(0, 0) * det3(1, 2, 3, 1, 2, 3) - a(0, 1) * det3(1, 2, 3, 0, 2, 3) +
         a(0, 2) * det3(1, 2, 3, 0, 1, 3) - a(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

/// Draw schedule from the acceptance criteria: plain fields, extreme norms,
/// near-degenerate and exactly-degenerate directions.
DVec3 draw_nu(Rng& rng, int index) {
  DVec3 nu{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
  const int mode = index % 10;
  if (mode == 6) {
    const double s = 1e-8 / std::max(std::sqrt(nu.norm_sq()), 1e-300);
    nu = s * nu;
  } else if (mode == 7) {
    const double s = 1e8 / std::max(std::sqrt(nu.norm_sq()), 1e-300);
    nu = s * nu;
  } else if (mode == 8) {
    const double eps = 1e-9;
    const double phi = rng.uniform(0, 6.283185307179586);
    nu = DVec3{rng.uniform01() < 0.5 ? 1.0 : -1.0, eps * std::cos(phi), eps * std::sin(phi)};
  } else if (mode == 9) {
    nu = DVec3{rng.uniform(-2, 2), 0.0, 0.0};
  }
  return nu;
}

CheckRecord record(const std::string& name, double residual, double tol, std::string details = "") {
  return {name, residual <= tol, residual, tol, std::move(details)};
}

}  // namespace

CheckList canonical_suite(std::uint64_t seed) {
  Rng rng(seed);
  CheckList out;

  {
    const CanonicalRotation cr = canonical_rotation(DVec3{5, 0, 0});
    double res = max_abs(cr.r - DMat4::identity()) + cr.residual;
    if (cr.branch != RotationBranch::identity) res += 1.0;
    out.push_back(record("canonical.identity_branch", res, 0.0));
  }

  {
    const CanonicalRotation cr = canonical_rotation(DVec3{-5, 0, 0});
    double res = max_abs(cr.r - DMat4::diagonal(1, -1, 1, -1)) + cr.residual;
    if (cr.branch != RotationBranch::flip) res += 1.0;
    out.push_back(record("canonical.flip_branch", res, 0.0));
  }

  {
    // nu = (0,0,1): rows carry the adapted orthonormal basis; the
    // transposed (column) layout conjugates onto the mirrored target
    const CanonicalRotation cr = canonical_rotation(DVec3{0, 0, 1});
    DMat4 want{};
    want(0, 0) = 1;
    want(1, 3) = 1;
    want(2, 2) = 1;
    want(3, 1) = -1;
    double res = max_abs(cr.r - want) + cr.residual;
    if (cr.branch != RotationBranch::generic) res += 1.0;
    out.push_back(record("canonical.nu001_frozen_orientation", res, 1e-15));
  }

  {
    const CanonicalRotation cr = canonical_rotation(DVec3{});
    double res = max_abs(cr.r - DMat4::identity()) + cr.residual;
    if (cr.branch != RotationBranch::degenerate_zero) res += 1.0;
    out.push_back(record("canonical.zero_field_degenerate", res, 0.0));
  }

  {
    // 10 000 seeded fields: orthogonality, determinant, conjugation residual
    double worst_orth = 0.0, worst_det = 0.0, worst_conj = 0.0;
    for (int n = 0; n < 10000; ++n) {
      const DVec3 nu = draw_nu(rng, n);
      const CanonicalRotation cr = canonical_rotation(nu);
      worst_orth = std::max(worst_orth, max_abs(cr.r.transpose() * cr.r - DMat4::identity()));
      worst_det = std::max(worst_det, std::fabs(det4(cr.r) - 1.0));
      const double scale = std::max(1.0, std::sqrt(nu.norm_sq()));
      worst_conj = std::max(worst_conj, cr.residual / scale);
    }
    out.push_back(record("canonical.so4_orthogonality_10000", worst_orth, 1e-12));
    out.push_back(record("canonical.so4_determinant_10000", worst_det, 1e-12));
    out.push_back(record("canonical.conjugation_residual_10000", worst_conj, 1e-10));
  }

  {
    // conjugation preserves the characteristic polynomial, which matches
    // (l^2 + |nu|^2)^2 = l^4 + 2|nu|^2 l^2 + |nu|^4
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const DVec3 nu{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
      const CanonicalRotation cr = canonical_rotation(nu);
      const DMat4 om = field_matrix(nu);
      const auto c_before = characteristic_polynomial(om);
      const auto c_after = characteristic_polynomial(cr.r * om * cr.r.transpose());
      const double nsq = nu.norm_sq();
      const double analytic[4] = {0.0, 2.0 * nsq, 0.0, nsq * nsq};
      for (int j = 0; j < 4; ++j) {
        const double scale = std::max(1.0, std::fabs(analytic[j]));
        worst = std::max(worst, std::fabs(c_before[j] - c_after[j]) / scale);
        worst = std::max(worst, std::fabs(c_before[j] - analytic[j]) / scale);
      }
    }
    out.push_back(record("canonical.spectrum_preserved_charpoly", worst, 1e-12));
  }

  {
    double worst_gram = 0.0, worst_det = 0.0;
    for (int n = 0; n < 10000; ++n) {
      DVec3 nu = draw_nu(rng, n);
      if (nu.norm_sq() == 0.0) nu.v1 = 1.0;
      const Frame3 f = frame3(nu);
      const DVec3 basis[3] = {f.e1, f.e2, f.e3};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double want = i == j ? 1.0 : 0.0;
          worst_gram = std::max(worst_gram, std::fabs(dot(basis[i], basis[j]) - want));
        }
      worst_det = std::max(worst_det, std::fabs(dot(f.e1, cross(f.e2, f.e3)) - 1.0));
    }
    out.push_back(record("canonical.frame_gram_10000", worst_gram, 1e-12));
    out.push_back(record("canonical.frame_orientation_10000", worst_det, 1e-12));
  }

  {
    // frame equals the explicit change-of-basis formulas
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      DVec3 nu{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      if (nu.v2 * nu.v2 + nu.v3 * nu.v3 < 1e-4) nu.v2 += 1.0;
      const double norm = std::sqrt(nu.norm_sq());
      const double lam = std::sqrt(nu.v2 * nu.v2 + nu.v3 * nu.v3);
      const Frame3 f = frame3(nu);
      const DVec3 want1{nu.v1 / norm, nu.v2 / norm, nu.v3 / norm};
      const DVec3 want2{0.0, nu.v3 / lam, -nu.v2 / lam};
      const DVec3 want3{-lam / norm, nu.v1 * nu.v2 / (lam * norm), nu.v1 * nu.v3 / (lam * norm)};
      const DVec3 d1 = f.e1 - want1, d2 = f.e2 - want2, d3 = f.e3 - want3;
      for (const auto& d : {d1, d2, d3})
        worst = std::max(worst, std::max({std::fabs(d.v1), std::fabs(d.v2), std::fabs(d.v3)}));
    }
    const Frame3 f010 = frame3(DVec3{0, 1, 0});
    const DVec3 d = f010.e2 - DVec3{0, 0, -1};
    worst = std::max(worst, std::max({std::fabs(d.v1), std::fabs(d.v2), std::fabs(d.v3)}));
    out.push_back(record("canonical.frame_closed_form", worst, 1e-14));
  }

  {
    const Frame3 f = frame3(DVec3{2, 0, 0});
    double res = f.degenerate ? 0.0 : 1.0;
    const DVec3 d1 = f.e1 - DVec3{1, 0, 0}, d2 = f.e2 - DVec3{0, 1, 0}, d3 = f.e3 - DVec3{0, 0, 1};
    for (const auto& v : {d1, d2, d3})
      res = std::max(res, std::max({std::fabs(v.v1), std::fabs(v.v2), std::fabs(v.v3)}));
    bool threw = false;
    try {
      frame3(DVec3{});
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) res += 1.0;
    out.push_back(record("canonical.frame_degenerate_branch", res, 0.0));
  }

  return out;
}

}  // namespace qlandau::verify
