#include <cmath>

#include "qlandau/algebra.hpp"
#include "qlandau/rng.hpp"
#include "qlandau/verify.hpp"

namespace qlandau::verify {

namespace {

using DQuat = Quaternion<double>;
using DVec3 = Vec3<double>;
using DVec4 = Vec4<double>;

double quat_max_abs(const DQuat& q) {
  return std::max({std::fabs(q.w), std::fabs(q.x), std::fabs(q.y), std::fabs(q.z)});
}

DQuat random_quat(Rng& rng) {
  return {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
}

DVec4 random_vec4(Rng& rng) {
  return {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
}

DVec3 random_vec3(Rng& rng) { return {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}; }

CheckRecord record(const std::string& name, double residual, double tol, std::string details = "") {
  return {name, residual <= tol, residual, tol, std::move(details)};
}

}  // namespace

CheckList algebra_suite(std::uint64_t seed) {
  constexpr double kTol = 1e-12;
  constexpr int kDraws = 1000;
  Rng rng(seed);
  CheckList out;

  const DQuat units[4] = {DQuat::one(), DQuat::i(), DQuat::j(), DQuat::k()};

  // basis relations: i^2 = j^2 = k^2 = -1, ij = k cyclically, ij = -ji
  {
    double res = 0.0;
    const DQuat minus_one{-1, 0, 0, 0};
    auto expect = [&](const DQuat& got, const DQuat& want) {
      res = std::max(res, quat_max_abs(got - want));
    };
    expect(quat_mul(units[1], units[1]), minus_one);
    expect(quat_mul(units[2], units[2]), minus_one);
    expect(quat_mul(units[3], units[3]), minus_one);
    expect(quat_mul(units[1], units[2]), units[3]);
    expect(quat_mul(units[2], units[3]), units[1]);
    expect(quat_mul(units[3], units[1]), units[2]);
    expect(quat_mul(units[2], units[1]), DQuat{0, 0, 0, -1});
    expect(quat_mul(units[3], units[2]), DQuat{0, -1, 0, 0});
    expect(quat_mul(units[1], units[3]), DQuat{0, 0, -1, 0});
    expect(quat_mul(quat_mul(units[1], units[2]), units[3]), minus_one);
    out.push_back(record("algebra.quat.basis_table", res, kTol));
  }

  {
    double res = 0.0;
    for (int n = 0; n < kDraws; ++n) {
      const DQuat p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
      res = std::max(res, quat_max_abs(quat_mul(quat_mul(p, q), r) - quat_mul(p, quat_mul(q, r))));
      res = std::max(res, quat_max_abs(quat_mul(p, DQuat::one()) - p));
      // conj(q) q = |q|^2
      const DQuat nq = quat_mul(q.conj(), q);
      res = std::max(res, quat_max_abs(nq - DQuat{q.norm_sq(), 0, 0, 0}));
    }
    out.push_back(record("algebra.quat.associativity_identity_norm", res, kTol));
  }

  // matrix representation of the units
  {
    double res = 0.0;
    const Mat4<double> mats[3] = {unit_matrix<double>(QuatUnit::i), unit_matrix<double>(QuatUnit::j),
                                  unit_matrix<double>(QuatUnit::k)};
    const Mat4<double> id = Mat4<double>::identity();
    for (const auto& m : mats) res = std::max(res, max_abs(m * m + id));
    res = std::max(res, max_abs(mats[0] * mats[1] - mats[2]));
    res = std::max(res, max_abs(mats[1] * mats[2] - mats[0]));
    res = std::max(res, max_abs(mats[2] * mats[0] - mats[1]));
    res = std::max(res, max_abs(mats[1] * mats[0] + mats[2]));
    out.push_back(record("algebra.unit_matrix.products", res, kTol));
  }

  // the i matrix entries pinned entry by entry
  {
    Mat4<double> want{};
    want(0, 1) = -1;
    want(1, 0) = 1;
    want(2, 3) = -1;
    want(3, 2) = 1;
    out.push_back(record("algebra.unit_matrix.i_entries",
                         max_abs(unit_matrix<double>(QuatUnit::i) - want), 0.0));
  }

  {
    double res = 0.0;
    for (int n = 0; n < kDraws; ++n) {
      const DVec4 x = random_vec4(rng), y = random_vec4(rng);
      const DVec3 w = omega_form(x, y);
      const DVec3 anti = omega_form(y, x) + w;
      res = std::max(res, std::max({std::fabs(anti.v1), std::fabs(anti.v2), std::fabs(anti.v3)}));
      const DVec3 self = omega_form(x, x);
      res = std::max(res, std::max({std::fabs(self.v1), std::fabs(self.v2), std::fabs(self.v3)}));
    }
    out.push_back(record("algebra.omega.antisymmetry", res, kTol));
  }

  {
    double res = 0.0;
    for (int n = 0; n < kDraws; ++n) {
      const DVec4 x = random_vec4(rng), y = random_vec4(rng);
      const DVec3 d = omega_form(x, y) - omega_form_quaternionic(x, y);
      res = std::max(res, std::max({std::fabs(d.v1), std::fabs(d.v2), std::fabs(d.v3)}));
    }
    out.push_back(record("algebra.omega.quaternionic_agreement", res, kTol));
  }

  {
    double res = 0.0;
    const DVec3 e1{1, 0, 0};
    auto diff = [](const DVec3& a, const DVec3& b) {
      const DVec3 d = a - b;
      return std::max({std::fabs(d.v1), std::fabs(d.v2), std::fabs(d.v3)});
    };
    res = std::max(res, diff(omega_form(DVec4::basis(0), DVec4::basis(1)), e1));
    res = std::max(res, diff(omega_form(DVec4::basis(2), DVec4::basis(3)), e1));
    res = std::max(res, diff(omega_form(DVec4::basis(0), DVec4::basis(2)), DVec3{0, 1, 0}));
    res = std::max(res, diff(omega_form(DVec4::basis(0), DVec4::basis(3)), DVec3{0, 0, 1}));
    out.push_back(record("algebra.omega.basis_values", res, 0.0));
  }

  {
    double res_t = 0.0, res_sq = 0.0;
    for (int n = 0; n < kDraws; ++n) {
      const DVec3 nu = random_vec3(rng);
      const Mat4<double> om = field_matrix(nu);
      res_t = std::max(res_t, max_abs(om.transpose() + om));
      Mat4<double> want = Mat4<double>::identity();
      res_sq = std::max(res_sq, max_abs(om * om + nu.norm_sq() * want));
    }
    out.push_back(record("algebra.field_matrix.antisymmetry", res_t, kTol));
    out.push_back(record("algebra.field_matrix.square_is_minus_norm", res_sq, kTol));
  }

  {
    // axis-aligned field pins the four nonzero entries
    const double b3 = 2.5;
    const Mat4<double> om = field_matrix(DVec3{0, 0, b3});
    Mat4<double> want{};
    want(0, 3) = -b3;
    want(1, 2) = -b3;
    want(2, 1) = b3;
    want(3, 0) = b3;
    double res = max_abs(om - want);
    res = std::max(res, max_abs(field_matrix(DVec3{})));
    out.push_back(record("algebra.field_matrix.axis_entries", res, 0.0));
  }

  {
    double res = 0.0;
    for (int n = 0; n < kDraws; ++n) {
      const DVec3 nu = random_vec3(rng);
      const DVec4 x = random_vec4(rng);
      const DVec4 a = vector_potential(nu, x);
      res = std::max(res, std::fabs(dot(a, x)));
      // explicit component formulas
      const DVec4 want{-nu.v1 * x.x1 - nu.v2 * x.x2 - nu.v3 * x.x3,
                       nu.v1 * x.x0 - nu.v3 * x.x2 + nu.v2 * x.x3,
                       nu.v2 * x.x0 + nu.v3 * x.x1 - nu.v1 * x.x3,
                       nu.v3 * x.x0 - nu.v2 * x.x1 + nu.v1 * x.x2};
      const DVec4 d = a - want;
      res = std::max(res, std::max({std::fabs(d.x0), std::fabs(d.x1), std::fabs(d.x2), std::fabs(d.x3)}));
    }
    const DVec3 nu{1.5, -2.0, 0.5};
    const DVec4 a0 = vector_potential(nu, DVec4::basis(0));
    const DVec4 d0 = a0 - DVec4{0, nu.v1, nu.v2, nu.v3};
    res = std::max(res, std::max({std::fabs(d0.x0), std::fabs(d0.x1), std::fabs(d0.x2), std::fabs(d0.x3)}));
    out.push_back(record("algebra.vector_potential.column_and_orthogonality", res, kTol));
  }

  {
    double res = 0.0;
    for (std::size_t b = 0; b < 6; ++b) {
      Bivector<double> e{};
      e[b] = 1.0;
      const Bivector<double> twice = hodge_star(hodge_star(e));
      for (std::size_t c = 0; c < 6; ++c) res = std::max(res, std::fabs(twice[c] - e[c]));
    }
    Bivector<double> want{};
    want[3] = 1.0;  // e2^e3 slot
    Bivector<double> from{};
    from[0] = 1.0;  // e0^e1 slot
    const Bivector<double> got = hodge_star(from);
    for (std::size_t c = 0; c < 6; ++c) res = std::max(res, std::fabs(got[c] - want[c]));
    out.push_back(record("algebra.hodge.involution", res, 0.0));
  }

  {
    // self-dual iff E = B
    double res = 0.0;
    bool distinguishes = true;
    for (int n = 0; n < 100; ++n) {
      const DVec3 b = random_vec3(rng);
      const Bivector<double> self = bivector_from_matrix(curvature_matrix(b, b));
      const Bivector<double> starred = hodge_star(self);
      for (std::size_t c = 0; c < 6; ++c) res = std::max(res, std::fabs(starred[c] - self[c]));

      DVec3 e = random_vec3(rng);
      if (std::fabs(e.v1 - b.v1) < 0.1) e.v1 += 1.0;
      const Bivector<double> mixed = bivector_from_matrix(curvature_matrix(e, b));
      const Bivector<double> mixed_star = hodge_star(mixed);
      double dev = 0.0;
      for (std::size_t c = 0; c < 6; ++c) dev = std::max(dev, std::fabs(mixed_star[c] - mixed[c]));
      if (dev < 0.05) distinguishes = false;
    }
    out.push_back(record("algebra.hodge.selfdual_iff_e_equals_b", res, kTol,
                         distinguishes ? "" : "star fixed a non-self-dual curvature"));
    if (!distinguishes) out.back().pass = false;
  }

  return out;
}

}  // namespace qlandau::verify
