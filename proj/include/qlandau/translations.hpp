#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qlandau/algebra.hpp"

namespace qlandau::translations {

using Complex = std::complex<double>;

/// Polynomial over (x0..x3) with complex coefficients.
class Poly4 {
 public:
  using Exps = std::array<std::uint8_t, 4>;

  Poly4() = default;
  static Poly4 constant(Complex c);
  static Poly4 coordinate(std::size_t var);

  const std::map<Exps, Complex>& terms() const { return terms_; }
  void add(const Exps& e, Complex c);
  bool empty() const { return terms_.empty(); }

  friend Poly4 operator+(const Poly4& a, const Poly4& b);
  friend Poly4 operator*(const Poly4& a, const Poly4& b);
  friend Poly4 operator*(Complex s, const Poly4& a);

  Poly4 derivative(std::size_t var) const;
  /// p(x + a) expanded by binomials.
  Poly4 shifted(const Vec4<double>& a) const;
  Complex eval(const Vec4<double>& x) const;

 private:
  std::map<Exps, Complex> terms_;
};

/// Closed-form test function P(x) exp(i<w, x>) exp(-sigma |x - c|^2); the
/// family is closed under shifts, coordinate multiplication, differentiation
/// and multiplication by plane waves, so every identity of the symmetry
/// group can be evaluated without discretization error.
struct TestFunction {
  Poly4 poly;
  Vec4<double> wave{};   // plane-wave vector w
  Vec4<double> center{};
  double sigma = 1.0;

  Complex eval(const Vec4<double>& x) const;
  TestFunction derivative(std::size_t var) const;
  /// x -> f(x + a)
  TestFunction translated(const Vec4<double>& a) const;
  TestFunction times_plane_wave(const Vec4<double>& w2) const;
  TestFunction times_poly(const Poly4& q) const;

  static TestFunction gaussian(double sigma, const Vec4<double>& center);
};

struct MagneticTranslation {
  Vec4<double> a{};
  Vec3<double> nu{};
};

/// (T_a f)(x) = exp(i<A(a), x>) f(x + a).
TestFunction apply_translation(const MagneticTranslation& t, const TestFunction& f);

/// H_nu f = -Laplacian f - 2i <Omega x, grad f> + |nu|^2 |x|^2 f, exactly.
TestFunction landau_apply(const Vec3<double>& nu, const TestFunction& f);

/// Max relative defect of T_b T_a f = e^{i<A(a),b>} e^{i<A(b+a),x>} f(x+b+a)
/// over the sample points.
double composition_check(const Vec4<double>& a, const Vec4<double>& b, const Vec3<double>& nu,
                         const TestFunction& f, const std::vector<Vec4<double>>& points);

struct CommutatorPhase {
  Complex phase;            // exp(2i <Omega_nu a, b>)
  double operator_defect;   // max defect of the four-translation composite
};

CommutatorPhase commutator_phase(const Vec4<double>& a, const Vec4<double>& b,
                                 const Vec3<double>& nu, const TestFunction& f,
                                 const std::vector<Vec4<double>>& points);

/// Max |H(T_a f) - T_a(H f)| / max |H f| over the sample points.
double intertwine_check(const Vec3<double>& nu, const Vec4<double>& a, const TestFunction& f,
                        const std::vector<Vec4<double>>& points);

/// Max defect of nabla_alpha T_a = T_a nabla_alpha over points and alpha.
double gradient_covariance_check(const Vec3<double>& nu, const Vec4<double>& a,
                                 const TestFunction& f, const std::vector<Vec4<double>>& points);

/// Fixed-seed Gaussian cloud of radius 3/sqrt(sigma) around the center.
std::vector<Vec4<double>> sample_points(const TestFunction& f, int count, std::uint64_t seed);

}  // namespace qlandau::translations
