#include "qlandau/translations.hpp"

#include <cmath>

#include "qlandau/rng.hpp"

namespace qlandau::translations {

namespace {

double binom(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned j = 0; j < k; ++j) r = r * double(n - j) / double(j + 1);
  return r;
}

}  // namespace

Poly4 Poly4::constant(Complex c) {
  Poly4 p;
  p.add({}, c);
  return p;
}

Poly4 Poly4::coordinate(std::size_t var) {
  Poly4 p;
  Exps e{};
  e[var] = 1;
  p.add(e, Complex(1.0, 0.0));
  return p;
}

void Poly4::add(const Exps& e, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

Poly4 operator+(const Poly4& a, const Poly4& b) {
  Poly4 r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly4::Exps e{};
      for (std::size_t v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      r.add(e, ca * cb);
    }
  return r;
}

Poly4 operator*(Complex s, const Poly4& a) {
  Poly4 r;
  for (const auto& [e, c] : a.terms_) r.add(e, s * c);
  return r;
}

Poly4 Poly4::derivative(std::size_t var) const {
  Poly4 r;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.add(d, c * double(e[var]));
  }
  return r;
}

Poly4 Poly4::shifted(const Vec4<double>& a) const {
  Poly4 r;
  for (const auto& [e, c] : terms_) {
    // expand prod_v (x_v + a_v)^{e_v}
    Poly4 term = Poly4::constant(c);
    for (std::size_t v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      Poly4 factor;
      for (unsigned j = 0; j <= e[v]; ++j) {
        Exps f{};
        f[v] = static_cast<std::uint8_t>(j);
        factor.add(f, Complex(binom(e[v], j) * std::pow(a[v], double(e[v] - j)), 0.0));
      }
      term = term * factor;
    }
    r = r + term;
  }
  return r;
}

Complex Poly4::eval(const Vec4<double>& x) const {
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Complex m = c;
    for (std::size_t v = 0; v < 4; ++v)
      for (unsigned j = 0; j < e[v]; ++j) m *= x[v];
    acc += m;
  }
  return acc;
}

// -- TestFunction -------------------------------------------------------------

TestFunction TestFunction::gaussian(double sigma, const Vec4<double>& center) {
  return {Poly4::constant(Complex(1.0, 0.0)), {}, center, sigma};
}

Complex TestFunction::eval(const Vec4<double>& x) const {
  const Vec4<double> d = x - center;
  const Complex expo(-sigma * d.norm_sq(), dot(wave, x));
  return poly.eval(x) * std::exp(expo);
}

TestFunction TestFunction::derivative(std::size_t var) const {
  // d/dx_v [P e^{i<w,x> - sigma|x-c|^2}]
  //   = [dP/dx_v + P (i w_v - 2 sigma (x_v - c_v))] e^{...}
  TestFunction r = *this;
  Poly4 bracket = poly.derivative(var);
  const Complex iw(0.0, wave[var]);
  bracket = bracket + (iw + Complex(2.0 * sigma * center[var], 0.0)) * poly;
  bracket = bracket + Complex(-2.0 * sigma, 0.0) * (Poly4::coordinate(var) * poly);
  r.poly = bracket;
  return r;
}

TestFunction TestFunction::translated(const Vec4<double>& a) const {
  // f(x+a): shift the polynomial and the Gaussian center, fold the constant
  // plane-wave phase e^{i<w,a>} into the polynomial
  TestFunction r = *this;
  r.poly = std::exp(Complex(0.0, dot(wave, a))) * poly.shifted(a);
  r.center = center - a;
  return r;
}

TestFunction TestFunction::times_plane_wave(const Vec4<double>& w2) const {
  TestFunction r = *this;
  r.wave = wave + w2;
  return r;
}

TestFunction TestFunction::times_poly(const Poly4& q) const {
  TestFunction r = *this;
  r.poly = poly * q;
  return r;
}

// -- Operators ----------------------------------------------------------------

TestFunction apply_translation(const MagneticTranslation& t, const TestFunction& f) {
  return f.translated(t.a).times_plane_wave(vector_potential(t.nu, t.a));
}

TestFunction landau_apply(const Vec3<double>& nu, const TestFunction& f) {
  const Mat4<double> omega = field_matrix(nu);
  const double nu_sq = nu.norm_sq();

  TestFunction grad[4] = {f.derivative(0), f.derivative(1), f.derivative(2), f.derivative(3)};

  Poly4 acc;
  for (std::size_t al = 0; al < 4; ++al) {
    // -d^2/dx_al^2
    acc = acc + Complex(-1.0, 0.0) * grad[al].derivative(al).poly;
    // -2i A_al d/dx_al with A = Omega x
    Poly4 a_al;
    for (std::size_t b = 0; b < 4; ++b) {
      if (omega(al, b) == 0.0) continue;
      a_al = a_al + Complex(omega(al, b), 0.0) * Poly4::coordinate(b);
    }
    acc = acc + Complex(0.0, -2.0) * (a_al * grad[al].poly);
  }
  // |nu|^2 |x|^2 f
  Poly4 xsq;
  for (std::size_t v = 0; v < 4; ++v) xsq = xsq + Poly4::coordinate(v) * Poly4::coordinate(v);
  acc = acc + Complex(nu_sq, 0.0) * (xsq * f.poly);

  TestFunction r = f;
  r.poly = acc;
  return r;
}

double composition_check(const Vec4<double>& a, const Vec4<double>& b, const Vec3<double>& nu,
                         const TestFunction& f, const std::vector<Vec4<double>>& points) {
  const TestFunction lhs = apply_translation({b, nu}, apply_translation({a, nu}, f));
  const Complex cocycle = std::exp(Complex(0.0, dot(vector_potential(nu, a), b)));
  const Vec4<double> ab = a + b;
  const Vec4<double> a_ab = vector_potential(nu, ab);

  double max_diff = 0.0, max_mag = 0.0;
  for (const auto& x : points) {
    const Complex left = lhs.eval(x);
    const Complex right = cocycle * std::exp(Complex(0.0, dot(a_ab, x))) * f.eval(x + ab);
    max_diff = std::max(max_diff, std::abs(left - right));
    max_mag = std::max(max_mag, std::abs(left));
  }
  return max_diff / std::max(max_mag, 1e-300);
}

CommutatorPhase commutator_phase(const Vec4<double>& a, const Vec4<double>& b,
                                 const Vec3<double>& nu, const TestFunction& f,
                                 const std::vector<Vec4<double>>& points) {
  CommutatorPhase out;
  out.phase = std::exp(Complex(0.0, 2.0 * dot(vector_potential(nu, a), b)));

  TestFunction g = apply_translation({a, nu}, f);
  g = apply_translation({b, nu}, g);
  g = apply_translation({-a, nu}, g);
  g = apply_translation({-b, nu}, g);

  double max_diff = 0.0, max_mag = 0.0;
  for (const auto& x : points) {
    const Complex left = g.eval(x);
    const Complex right = out.phase * f.eval(x);
    max_diff = std::max(max_diff, std::abs(left - right));
    max_mag = std::max(max_mag, std::abs(right));
  }
  out.operator_defect = max_diff / std::max(max_mag, 1e-300);
  return out;
}

double intertwine_check(const Vec3<double>& nu, const Vec4<double>& a, const TestFunction& f,
                        const std::vector<Vec4<double>>& points) {
  const TestFunction hf = landau_apply(nu, f);
  const TestFunction t_hf = apply_translation({a, nu}, hf);
  const TestFunction h_tf = landau_apply(nu, apply_translation({a, nu}, f));

  double max_diff = 0.0, max_mag = 0.0;
  for (const auto& x : points) {
    max_diff = std::max(max_diff, std::abs(h_tf.eval(x) - t_hf.eval(x)));
    max_mag = std::max(max_mag, std::abs(hf.eval(x)));
  }
  return max_diff / std::max(max_mag, 1e-300);
}

double gradient_covariance_check(const Vec3<double>& nu, const Vec4<double>& a,
                                 const TestFunction& f, const std::vector<Vec4<double>>& points) {
  const Mat4<double> omega = field_matrix(nu);
  double worst = 0.0;
  for (std::size_t al = 0; al < 4; ++al) {
    Poly4 a_al;
    for (std::size_t b = 0; b < 4; ++b)
      if (omega(al, b) != 0.0) a_al = a_al + Complex(omega(al, b), 0.0) * Poly4::coordinate(b);

    auto covariant = [&](const TestFunction& g) {
      TestFunction d = g.derivative(al);
      d.poly = d.poly + Complex(0.0, 1.0) * (a_al * g.poly);
      return d;
    };

    const TestFunction lhs = covariant(apply_translation({a, nu}, f));
    const TestFunction rhs = apply_translation({a, nu}, covariant(f));
    double max_diff = 0.0, max_mag = 0.0;
    for (const auto& x : points) {
      max_diff = std::max(max_diff, std::abs(lhs.eval(x) - rhs.eval(x)));
      max_mag = std::max(max_mag, std::abs(rhs.eval(x)));
    }
    worst = std::max(worst, max_diff / std::max(max_mag, 1e-300));
  }
  return worst;
}

std::vector<Vec4<double>> sample_points(const TestFunction& f, int count, std::uint64_t seed) {
  Rng rng(seed);
  const double radius = 3.0 / std::sqrt(f.sigma);
  std::vector<Vec4<double>> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec4<double> p = f.center;
    for (std::size_t v = 0; v < 4; ++v) p[v] += radius * rng.normal() / 3.0;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace qlandau::translations
