#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "qlandau/heisenberg.hpp"
#include "qlandau/rng.hpp"
#include "qlandau/verify.hpp"
#include "qlandau/weylops.hpp"

namespace qlandau::verify {

namespace {

using namespace weyl;

CheckRecord exact_record(const std::string& name, long violations, std::string details = "") {
  return {name, violations == 0, static_cast<double>(violations), 0.0, std::move(details)};
}

DiffOp random_op(Rng& rng, const ChartPtr& chart, int terms) {
  DiffOp op = DiffOp::zero(chart);
  for (int t = 0; t < terms; ++t) {
    Exps coord{}, deriv{};
    for (std::size_t v = 0; v < chart->size(); ++v) {
      coord[v] = static_cast<std::uint8_t>(rng.integer(0, 1));
      deriv[v] = static_cast<std::uint8_t>(rng.integer(0, 1));
    }
    op = op + DiffOp::monomial(chart, coord, deriv, CRat(rng.rational(), rng.rational()));
  }
  return op;
}

RatVec3 random_rational_nu(Rng& rng) { return {rng.rational(), rng.rational(), rng.rational()}; }

/// minus Laplacian on the x chart
DiffOp minus_laplacian(const ChartPtr& c) {
  DiffOp d = DiffOp::zero(c);
  for (std::size_t v = 0; v < 4; ++v) d = d - compose(DiffOp::derivative(c, v), DiffOp::derivative(c, v));
  return d;
}

DiffOp norm_sq_multiplier(const ChartPtr& c) {
  DiffOp d = DiffOp::zero(c);
  for (std::size_t v = 0; v < 4; ++v) d = d + compose(DiffOp::coordinate(c, v), DiffOp::coordinate(c, v));
  return d;
}

/// 5-point central finite differences of order 1 and 2, exact for the low
/// polynomial degrees used here.
std::complex<double> fd_derivative(const Polynomial& f, std::vector<std::complex<double>> point,
                                   const Exps& order, double h) {
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (order[v] == 0) continue;
    Exps rest = order;
    rest[v] = 0;
    static const double w1[5] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    static const double w2[5] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    const double* w = order[v] == 1 ? w1 : w2;
    const double scale = order[v] == 1 ? h : h * h;
    std::complex<double> acc = 0.0;
    for (int s = -2; s <= 2; ++s) {
      if (w[s + 2] == 0.0) continue;
      auto shifted = point;
      shifted[v] += s * h;
      acc += w[s + 2] * fd_derivative(f, shifted, rest, h);
    }
    if (order[v] > 2) throw std::invalid_argument("fd_derivative supports orders 1 and 2");
    return acc / scale;
  }
  return f.eval(point);
}

}  // namespace

CheckList weyl_suite(std::uint64_t seed, const std::optional<RatVec3>& nu_override) {
  Rng rng(seed);
  CheckList out;
  const ChartPtr cx = chart_x();

  {
    long bad = 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const DiffOp br = commutator(DiffOp::derivative(cx, a), DiffOp::coordinate(cx, b));
        const DiffOp want = a == b ? DiffOp::identity(cx) : DiffOp::zero(cx);
        if (!(br == want)) ++bad;
      }
    out.push_back(exact_record("weyl.defining_relations", bad));
  }

  {
    long bad = 0;
    // D0 . x0 = x0 D0 + 1
    const DiffOp lhs = compose(DiffOp::derivative(cx, 0), DiffOp::coordinate(cx, 0));
    const DiffOp rhs = compose(DiffOp::coordinate(cx, 0), DiffOp::derivative(cx, 0)) + DiffOp::identity(cx);
    if (!(lhs == rhs)) ++bad;
    // (x0 D1)(x1 D0) - (x1 D0)(x0 D1) = x0 D0 - x1 D1
    const DiffOp p = compose(DiffOp::coordinate(cx, 0), DiffOp::derivative(cx, 1));
    const DiffOp q = compose(DiffOp::coordinate(cx, 1), DiffOp::derivative(cx, 0));
    const DiffOp want = compose(DiffOp::coordinate(cx, 0), DiffOp::derivative(cx, 0)) -
                        compose(DiffOp::coordinate(cx, 1), DiffOp::derivative(cx, 1));
    if (!(commutator(p, q) == want)) ++bad;
    const DiffOp r = random_op(rng, cx, 4);
    if (!(compose(r, DiffOp::identity(cx)) == r)) ++bad;
    out.push_back(exact_record("weyl.compose_examples", bad));
  }

  {
    // normal ordering is confluent: associativity on random triples
    long bad = 0;
    for (int n = 0; n < 40; ++n) {
      const DiffOp p = random_op(rng, cx, 3), q = random_op(rng, cx, 3), r = random_op(rng, cx, 3);
      if (!(compose(compose(p, q), r) == compose(p, compose(q, r)))) ++bad;
      if (!(commutator(p, p) == DiffOp::zero(cx))) ++bad;
    }
    out.push_back(exact_record("weyl.composition_associativity", bad));
  }

  {
    // [l_x, l_y] = i l_z on the 3-variable chart, cyclically
    const auto l = build_angular_momentum_r3();
    const CRat i = CRat::unit_i();
    long bad = 0;
    if (!(commutator(l[0], l[1]) == i * l[2])) ++bad;
    if (!(commutator(l[1], l[2]) == i * l[0])) ++bad;
    if (!(commutator(l[2], l[0]) == i * l[1])) ++bad;
    out.push_back(exact_record("weyl.angular_momentum_su2", bad));
  }

  {
    // symbolic bracket table equals the 8x8 matrix bracket table
    const auto hf = build_heisenberg_fields();
    const auto table = bracket_table<Rat>();
    long bad = 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        DiffOp want = DiffOp::zero(chart_tx());
        for (std::size_t l = 0; l < 3; ++l) want = want + CRat(table[a][b][l]) * hf.t[l];
        if (!(commutator(hf.f[a], hf.f[b]) == want)) ++bad;
      }
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t l = 0; l < 3; ++l)
        if (!commutator(hf.f[a], hf.t[l]).is_zero()) ++bad;
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t m = 0; m < 3; ++m)
        if (!commutator(hf.t[l], hf.t[m]).is_zero()) ++bad;
    out.push_back(exact_record("weyl.heisenberg_field_brackets", bad));
  }

  {
    // Q = Delta_x + Delta_t + |x|^2 Delta_t + 2 sum_l <u_l x, grad_x> D[t_l],
    // assembled independently of the field builders
    const ChartPtr ct = chart_tx();
    DiffOp expected = DiffOp::zero(ct);
    for (std::size_t a = 0; a < 4; ++a)
      expected = expected + compose(DiffOp::derivative(ct, 3 + a), DiffOp::derivative(ct, 3 + a));
    for (std::size_t l = 0; l < 3; ++l)
      expected = expected + compose(DiffOp::derivative(ct, l), DiffOp::derivative(ct, l));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t l = 0; l < 3; ++l) {
        Exps coord{}, deriv{};
        coord[3 + a] = 2;
        deriv[l] = 2;
        expected = expected + DiffOp::monomial(ct, coord, deriv, CRat(1));
      }
    const Mat4<Rat> units[3] = {unit_matrix<Rat>(QuatUnit::i), unit_matrix<Rat>(QuatUnit::j),
                                unit_matrix<Rat>(QuatUnit::k)};
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          if (units[l](a, b) == 0) continue;
          Exps coord{}, deriv{};
          coord[3 + b] = 1;
          deriv[3 + a] = 1;
          ++deriv[l];
          expected = expected + DiffOp::monomial(ct, coord, deriv, CRat(Rat(2) * units[l](a, b)));
        }
    long bad = 0;
    const DiffOp q = build_laplace_element();
    if (!(q == expected)) ++bad;

    // Q - sum T^2 = Delta_sub carries no pure-t second derivatives
    const DiffOp sub = build_sub_laplacian();
    DiffOp delta_t = DiffOp::zero(ct);
    for (std::size_t l = 0; l < 3; ++l)
      delta_t = delta_t + compose(DiffOp::derivative(ct, l), DiffOp::derivative(ct, l));
    if (!(q - delta_t == sub)) ++bad;
    for (const auto& [key, c] : sub.terms()) {
      bool no_coord = true;
      for (std::size_t v = 0; v < 7; ++v)
        if (key.coord[v] != 0) no_coord = false;
      bool t_deriv = key.deriv[0] + key.deriv[1] + key.deriv[2] > 0;
      if (no_coord && t_deriv) ++bad;
    }
    out.push_back(exact_record("weyl.laplace_element_expansion", bad));
  }

  {
    // Fourier transform of the first field: D[x0] + i(-nu1 x1 - nu2 x2 - nu3 x3)
    const auto hf = build_heisenberg_fields();
    const RatVec3 nu{Rat(3), Rat(-2), Rat(5, 7)};
    const CRat i = CRat::unit_i();
    DiffOp want = DiffOp::derivative(cx, 0);
    for (std::size_t b = 1; b < 4; ++b) want = want - (i * CRat(nu[b - 1])) * DiffOp::coordinate(cx, b);
    long bad = partial_fourier(hf.f[0], nu) == want ? 0 : 1;
    // T1^2 maps to -nu1^2
    const DiffOp t1sq = compose(hf.t[0], hf.t[0]);
    if (!(partial_fourier(t1sq, nu) == CRat(-nu.v1 * nu.v1) * DiffOp::identity(cx))) ++bad;
    out.push_back(exact_record("weyl.fourier_first_factor", bad));
  }

  {
    // the central identity: -F(Delta_sub, nu) = H_nu, exactly, 100 random nu
    const DiffOp sub = build_sub_laplacian();
    long bad = 0;
    for (int n = 0; n < 100; ++n) {
      const RatVec3 nu = random_rational_nu(rng);
      if (!(-partial_fourier(sub, nu) == build_landau(nu))) ++bad;
    }
    if (nu_override) {
      if (!(-partial_fourier(sub, *nu_override) == build_landau(*nu_override))) ++bad;
    }
    std::ostringstream details;
    details << "100 random rational fields";
    if (nu_override) details << " plus requested nu";
    out.push_back(exact_record("weyl.fourier_landau_identity", bad, details.str()));
  }

  {
    // H_nu = -Delta + 2 <nu, l> + |nu|^2 |x|^2
    const auto l = build_angular_momentum();
    long bad = 0;
    for (int n = 0; n < 20; ++n) {
      const RatVec3 nu = random_rational_nu(rng);
      DiffOp want = minus_laplacian(cx);
      for (std::size_t j = 0; j < 3; ++j) want = want + CRat(Rat(2) * nu[j]) * l[j];
      want = want + CRat(nu.norm_sq()) * norm_sq_multiplier(cx);
      if (!(build_landau(nu) == want)) ++bad;
    }
    out.push_back(exact_record("weyl.landau_angular_momentum_form", bad));
  }

  {
    // canonical operator vs build_landau((mu,0,0)) and its explicit expansion
    long bad = 0;
    for (const Rat& mu : {Rat(0), Rat(1), Rat(2), Rat(7, 2), Rat(5, 3)}) {
      const DiffOp canon = build_canonical(mu);
      if (!(canon.renamed(cx) == build_landau(RatVec3{mu, Rat(0), Rat(0)}))) ++bad;
      const ChartPtr cy = chart_y();
      DiffOp want = DiffOp::zero(cy);
      for (std::size_t v = 0; v < 4; ++v)
        want = want - compose(DiffOp::derivative(cy, v), DiffOp::derivative(cy, v));
      auto wedge = [&](std::size_t a, std::size_t b) {
        return compose(DiffOp::coordinate(cy, a), DiffOp::derivative(cy, b)) -
               compose(DiffOp::coordinate(cy, b), DiffOp::derivative(cy, a));
      };
      want = want - (CRat::unit_i() * CRat(Rat(2) * mu)) * (wedge(0, 1) + wedge(2, 3));
      for (std::size_t v = 0; v < 4; ++v)
        want = want + CRat(mu * mu) * compose(DiffOp::coordinate(cy, v), DiffOp::coordinate(cy, v));
      if (!(canon == want)) ++bad;
    }
    out.push_back(exact_record("weyl.canonical_equals_landau_on_axis", bad));
  }

  {
    // self-dual part of x ^ D reproduces the angular momentum components
    auto wedge = [&](std::size_t a, std::size_t b) {
      return compose(DiffOp::coordinate(cx, a), DiffOp::derivative(cx, b)) -
             compose(DiffOp::coordinate(cx, b), DiffOp::derivative(cx, a));
    };
    // bivector slots ordered (01, 02, 03, 23, 31, 12); the star swaps halves
    const DiffOp w[6] = {wedge(0, 1), wedge(0, 2), wedge(0, 3), wedge(2, 3), wedge(3, 1), wedge(1, 2)};
    const auto l = build_angular_momentum();
    const CRat mi = -CRat::unit_i();
    long bad = 0;
    for (std::size_t s = 0; s < 3; ++s)
      if (!(mi * (w[s] + w[s + 3]) == l[s])) ++bad;
    out.push_back(exact_record("weyl.momentum_bivector_identity", bad));
  }

  {
    // complex-chart angular momentum matches the explicit component forms
    const auto l = build_angular_momentum();
    const ChartMap to_z = real_to_complex_map(cx);
    const ChartPtr cz = chart_z();
    auto zc = [&](std::size_t v) { return DiffOp::coordinate(cz, v); };
    auto zd = [&](std::size_t v) { return DiffOp::derivative(cz, v); };
    const CRat i = CRat::unit_i();
    // slots: z1=0, zb1=1, z2=2, zb2=3
    const DiffOp want1 = compose(zc(0), zd(0)) - compose(zc(1), zd(1)) + compose(zc(2), zd(2)) -
                         compose(zc(3), zd(3));
    const DiffOp core = compose(zc(1), zd(2)) - compose(zc(3), zd(0));
    const DiffOp want2 = (-i) * (core - compose(zc(2), zd(1)) + compose(zc(0), zd(3)));
    const DiffOp want3 = core + compose(zc(2), zd(1)) - compose(zc(0), zd(3));
    long bad = 0;
    if (!(to_z.apply(l[0]) == want1)) ++bad;
    if (!(to_z.apply(l[1]) == want2)) ++bad;
    if (!(to_z.apply(l[2]) == want3)) ++bad;
    out.push_back(exact_record("weyl.angular_momentum_complex_form", bad));
  }

  {
    // chart transforms: round trips, algebra homomorphism, the Laplacian
    const ChartMap to_z = real_to_complex_map(cx);
    const ChartMap to_x = complex_to_real_map(cx);
    long bad = 0;
    for (int n = 0; n < 15; ++n) {
      const DiffOp p = random_op(rng, cx, 3);
      if (!(to_x.apply(to_z.apply(p)) == p)) ++bad;
      const DiffOp pz = random_op(rng, chart_z(), 3);
      if (!(to_z.apply(to_x.apply(pz)) == pz)) ++bad;
      const DiffOp q = random_op(rng, cx, 3);
      if (!(to_z.apply(compose(p, q)) == compose(to_z.apply(p), to_z.apply(q)))) ++bad;
    }
    const DiffOp d2 = -(compose(DiffOp::derivative(cx, 0), DiffOp::derivative(cx, 0)) +
                        compose(DiffOp::derivative(cx, 1), DiffOp::derivative(cx, 1)));
    const DiffOp want = CRat(-4) * compose(DiffOp::derivative(chart_z(), 0), DiffOp::derivative(chart_z(), 1));
    if (!(to_z.apply(d2) == want)) ++bad;
    out.push_back(exact_record("weyl.chart_transform_roundtrip", bad));
  }

  {
    // ladder commutation relations, exactly, for assorted rational mu
    long bad = 0;
    const Rat random_mu_root = rng.rational_nonzero();
    for (const Rat& mu : {Rat(1), Rat(2), Rat(3), Rat(7, 2), random_mu_root * random_mu_root + Rat(1)}) {
      const auto lad = build_ladder(mu);
      const DiffOp id = DiffOp::identity(chart_z());
      const DiffOp zero = DiffOp::zero(chart_z());
      if (!(commutator(lad.a1, lad.a1_dag) == CRat(mu) * id)) ++bad;
      if (!(commutator(lad.a2, lad.a2_dag) == CRat(mu) * id)) ++bad;
      if (!(commutator(lad.a1, lad.a2_dag) == zero)) ++bad;
      if (!(commutator(lad.a2, lad.a1_dag) == zero)) ++bad;
      if (!(commutator(lad.a1, lad.a2) == zero)) ++bad;
      if (!(commutator(lad.a1_dag, lad.a2_dag) == zero)) ++bad;
    }
    out.push_back(exact_record("weyl.ladder_commutators", bad));
  }

  {
    // chirality: one sign works for every mu, the transform lands on the
    // opposite one, conjugating the chart flips it
    long bad = 0;
    int sign = 0;
    for (const Rat& mu : {Rat(1), Rat(2), Rat(3), Rat(7, 2)}) {
      const ChiralityResult cr = resolve_chirality(mu);
      if (sign == 0) sign = cr.sign;
      if (cr.sign != sign) ++bad;
      if (!cr.ladder_identity || !cr.transform_matches_opposite || !cr.conjugate_flips) ++bad;
    }
    std::ostringstream details;
    details << "resolved angular sign " << (sign > 0 ? "+1" : "-1");
    out.push_back(exact_record("weyl.chirality_resolution", bad, details.str()));
  }

  {
    // with the resolved sign, H_canonical - 4(a1+ a1 + a2+ a2) - 4 mu = 0
    long bad = 0;
    for (const Rat& mu : {Rat(1), Rat(2), Rat(3), Rat(7, 2)}) {
      const ChiralityResult cr = resolve_chirality(mu);
      const auto lad = build_ladder(mu);
      const DiffOp ladder_form =
          CRat(4) * (compose(lad.a1_dag, lad.a1) + compose(lad.a2_dag, lad.a2)) +
          CRat(Rat(4) * mu) * DiffOp::identity(chart_z());
      if (!(build_canonical_complex(mu, cr.sign) - ladder_form == DiffOp::zero(chart_z()))) ++bad;
      // equivalently: the conjugate-chart transform of the real operator
      const DiffOp h_complex = real_to_complex_map(chart_y(), true).apply(build_canonical(mu));
      if (!(h_complex - ladder_form == DiffOp::zero(chart_z()))) ++bad;
    }
    out.push_back(exact_record("weyl.oscillator_form", bad));
  }

  {
    // numeric cross-oracle: operator action on polynomials vs pointwise
    // finite differencing of the same polynomial
    const DiffOp h = build_landau(RatVec3{Rat(1), Rat(2), Rat(2)});
    Polynomial f(cx);
    for (int t = 0; t < 5; ++t) {
      Exps e{};
      for (std::size_t v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(rng.integer(0, 2));
      f.add(e, CRat(rng.rational(), rng.rational()));
    }
    const Polynomial hf = h.apply(f);
    double worst = 0.0;
    for (int n = 0; n < 10; ++n) {
      std::vector<std::complex<double>> pt(4);
      for (auto& c : pt) c = std::complex<double>(rng.uniform(-1, 1), 0.0);
      std::complex<double> via_fd = 0.0;
      for (const auto& [key, c] : h.terms()) {
        std::complex<double> coeff = c.to_complex();
        for (std::size_t v = 0; v < 4; ++v)
          for (unsigned p = 0; p < key.coord[v]; ++p) coeff *= pt[v];
        via_fd += coeff * fd_derivative(f, pt, key.deriv, 0.25);
      }
      const std::complex<double> via_apply = hf.eval(pt);
      const double scale = std::max(1.0, std::abs(via_apply));
      worst = std::max(worst, std::abs(via_apply - via_fd) / scale);
    }
    out.push_back({"weyl.apply_vs_finite_differences", worst <= 1e-8, worst, 1e-8, ""});
  }

  return out;
}

}  // namespace qlandau::verify
