#include <doctest.h>

#include <cmath>
#include <complex>

#include "qlandau/rng.hpp"
#include "qlandau/translations.hpp"

using namespace qlandau;
using namespace qlandau::translations;

namespace {

using DVec3 = Vec3<double>;
using DVec4 = Vec4<double>;

TestFunction sample_function(Rng& rng) {
  TestFunction f = TestFunction::gaussian(rng.uniform(0.6, 1.8),
                                          DVec4{rng.uniform(-1, 1), rng.uniform(-1, 1),
                                                rng.uniform(-1, 1), rng.uniform(-1, 1)});
  f.wave = DVec4{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  Poly4 p = Poly4::constant(Complex(1.0, 0.25));
  p = p + Complex(0.5, -0.3) * Poly4::coordinate(1);
  p = p + Complex(-0.2, 0.1) * (Poly4::coordinate(0) * Poly4::coordinate(3));
  f.poly = p;
  return f;
}

}  // namespace

TEST_CASE("translation acts by the defining formula") {
  Rng rng(81);
  const TestFunction f = sample_function(rng);
  const DVec3 nu{0.4, -0.8, 1.1};
  const DVec4 a{0.3, -0.7, 0.5, 0.9};
  const TestFunction g = apply_translation({a, nu}, f);
  const DVec4 pot = vector_potential(nu, a);

  const auto pts = sample_points(f, 100, 2024);
  double max_mag = 0.0;
  for (const auto& x : pts) max_mag = std::max(max_mag, std::abs(g.eval(x)));
  for (const auto& x : pts) {
    const Complex direct = std::exp(Complex(0.0, dot(pot, x))) * f.eval(x + a);
    CHECK(std::abs(g.eval(x) - direct) <= 1e-14 * max_mag);
  }

  // a = 0 leaves the function untouched
  const TestFunction same = apply_translation({DVec4{}, nu}, f);
  for (const auto& x : pts) CHECK(std::abs(same.eval(x) - f.eval(x)) == 0.0);

  // phase vanishes at the origin: (T_a f)(0) = f(a)
  CHECK(std::abs(g.eval(DVec4{}) - f.eval(a)) <= 1e-15);
}

TEST_CASE("closed-form derivatives differentiate the value map") {
  Rng rng(83);
  const TestFunction f = sample_function(rng);
  const auto pts = sample_points(f, 10, 77);
  const double h = 0.003;
  for (const auto& x : pts) {
    for (std::size_t v = 0; v < 4; ++v) {
      Complex num = 0.0;
      static const double w[5] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
      for (int s = -2; s <= 2; ++s) {
        DVec4 p = x;
        p[v] += s * h;
        num += w[s + 2] * f.eval(p);
      }
      num /= h;
      const Complex exact = f.derivative(v).eval(x);
      CHECK(std::abs(exact - num) <= 1e-8 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("inverse translation and the free case") {
  Rng rng(87);
  const TestFunction f = sample_function(rng);
  const DVec3 nu{1.2, 0.3, -0.6};
  const DVec4 a{0.8, -0.2, 0.1, -0.5};
  const TestFunction round = apply_translation({-a, nu}, apply_translation({a, nu}, f));
  for (const auto& x : sample_points(f, 20, 31))
    CHECK(std::abs(round.eval(x) - f.eval(x)) <= 1e-14);

  const auto pts = sample_points(f, 10, 32);
  const auto cp = commutator_phase(a, DVec4{0.1, 0.9, -0.4, 0.2}, DVec3{}, f, pts);
  CHECK(std::abs(cp.phase - Complex(1.0, 0.0)) == 0.0);
  CHECK(cp.operator_defect <= 1e-13);
}

TEST_CASE("composition law carries the scalar cocycle") {
  Rng rng(89);
  for (int n = 0; n < 25; ++n) {
    const TestFunction f = sample_function(rng);
    const DVec3 nu{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const DVec4 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const DVec4 b{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto pts = sample_points(f, 12, rng.next_u64());
    CHECK(composition_check(a, b, nu, f, pts) <= 1e-12);
  }
}

TEST_CASE("commutator phase: closed form and pinned example") {
  Rng rng(91);
  const TestFunction f = sample_function(rng);
  const auto pts = sample_points(f, 12, 55);

  // nu = (0,0,1), a = e1, b = e2: <Omega a, b> read off the matrix is +1
  const DVec3 nu{0, 0, 1};
  CHECK(dot(vector_potential(nu, DVec4::basis(1)), DVec4::basis(2)) == 1.0);
  const auto cp = commutator_phase(DVec4::basis(1), DVec4::basis(2), nu, f, pts);
  CHECK(std::abs(cp.phase - std::exp(Complex(0.0, 2.0))) <= 1e-15);
  CHECK(cp.operator_defect <= 1e-12);

  // b = a gives a trivial phase
  const DVec4 a{0.3, 1.1, -0.2, 0.6};
  const auto self = commutator_phase(a, a, nu, f, pts);
  CHECK(std::abs(self.phase - Complex(1.0, 0.0)) <= 1e-15);

  // antisymmetry of the exponent
  const DVec4 b{-0.4, 0.2, 0.9, 0.1};
  const auto ab = commutator_phase(a, b, nu, f, pts);
  const auto ba = commutator_phase(b, a, nu, f, pts);
  CHECK(std::abs(ab.phase * ba.phase - Complex(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("magnetic translations commute with the Landau operator") {
  Rng rng(93);
  for (int n = 0; n < 25; ++n) {
    const TestFunction f = sample_function(rng);
    const DVec3 nu{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const DVec4 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto pts = sample_points(f, 12, rng.next_u64());
    CHECK(intertwine_check(nu, a, f, pts) <= 1e-10);
  }

  // a = 0 is exact; nu = 0 reduces to plain translations against -Delta
  const TestFunction f = sample_function(rng);
  const auto pts = sample_points(f, 12, 60);
  CHECK(intertwine_check(DVec3{0.5, -1.0, 0.8}, DVec4{}, f, pts) == 0.0);
  CHECK(intertwine_check(DVec3{}, DVec4{0.4, 0.1, -0.8, 0.3}, f, pts) <= 1e-12);
}

TEST_CASE("covariant derivatives commute with magnetic translations") {
  Rng rng(97);
  for (int n = 0; n < 15; ++n) {
    const TestFunction f = sample_function(rng);
    const DVec3 nu{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    const DVec4 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto pts = sample_points(f, 8, rng.next_u64());
    CHECK(gradient_covariance_check(nu, a, f, pts) <= 1e-10);
  }
}

TEST_CASE("landau application matches a term-by-term construction") {
  Rng rng(101);
  const TestFunction f = sample_function(rng);
  const DVec3 nu{0.7, -0.4, 1.2};
  const TestFunction hf = landau_apply(nu, f);
  const Mat4<double> om = field_matrix(nu);
  for (const auto& x : sample_points(f, 20, 70)) {
    Complex direct = 0.0;
    for (std::size_t al = 0; al < 4; ++al) {
      direct -= f.derivative(al).derivative(al).eval(x);
      const DVec4 a = om.apply(x);
      direct += Complex(0.0, -2.0) * a[al] * f.derivative(al).eval(x);
    }
    direct += nu.norm_sq() * x.norm_sq() * f.eval(x);
    CHECK(std::abs(hf.eval(x) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}
