#include <doctest.h>

#include "qlandau/heisenberg.hpp"
#include "qlandau/rng.hpp"
#include "qlandau/weylops.hpp"

using namespace qlandau;
using namespace qlandau::weyl;

namespace {

DiffOp coord(const ChartPtr& c, std::size_t v) { return DiffOp::coordinate(c, v); }
DiffOp deriv(const ChartPtr& c, std::size_t v) { return DiffOp::derivative(c, v); }

}  // namespace

TEST_CASE("defining relation and normal ordering") {
  const ChartPtr c = chart_x();
  // D0 . x0 = x0 D0 + 1
  CHECK(compose(deriv(c, 0), coord(c, 0)) == compose(coord(c, 0), deriv(c, 0)) + DiffOp::identity(c));
  CHECK(commutator(deriv(c, 0), coord(c, 0)) == DiffOp::identity(c));
  CHECK(commutator(deriv(c, 0), coord(c, 1)) == DiffOp::zero(c));

  // hand Leibniz expansion: (x0 D1)(x1 D0) = x0 x1 D0 D1 + x0 D0,
  // so the commutator with the reversed product is x0 D0 - x1 D1
  const DiffOp p = compose(coord(c, 0), deriv(c, 1));
  const DiffOp q = compose(coord(c, 1), deriv(c, 0));
  CHECK(commutator(p, q) ==
        compose(coord(c, 0), deriv(c, 0)) - compose(coord(c, 1), deriv(c, 1)));
  CHECK(commutator(p, p) == DiffOp::zero(c));
}

TEST_CASE("deterministic term dump") {
  const ChartPtr c = chart_x();
  const DiffOp op = compose(deriv(c, 0), coord(c, 0));
  CHECK(op.to_string() == "(1+0i) + (1+0i) x0 D[x0]");
  CHECK(DiffOp::zero(c).to_string() == "0");
}

TEST_CASE("composition is associative on random operators") {
  Rng rng(53);
  const ChartPtr c = chart_x();
  for (int n = 0; n < 30; ++n) {
    DiffOp p = DiffOp::zero(c), q = DiffOp::zero(c), r = DiffOp::zero(c);
    for (int t = 0; t < 3; ++t) {
      Exps ce{}, de{};
      for (std::size_t v = 0; v < 4; ++v) {
        ce[v] = static_cast<std::uint8_t>(rng.integer(0, 2));
        de[v] = static_cast<std::uint8_t>(rng.integer(0, 2));
      }
      p = p + DiffOp::monomial(c, ce, de, CRat(rng.rational(), rng.rational()));
      q = q + DiffOp::monomial(c, de, ce, CRat(rng.rational(), rng.rational()));
      r = r + DiffOp::monomial(c, ce, de, CRat(rng.rational(), rng.rational()));
    }
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("chart mismatch is a hard error") {
  CHECK_THROWS_AS((void)compose(DiffOp::identity(chart_x()), DiffOp::identity(chart_y())),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)(DiffOp::identity(chart_x()) + DiffOp::identity(chart_z())),
                  std::invalid_argument);
}

TEST_CASE("heisenberg vector fields bracket like the matrix generators") {
  const auto hf = build_heisenberg_fields();
  const ChartPtr ct = chart_tx();
  CHECK(commutator(hf.f[0], hf.f[1]) == CRat(2) * hf.t[0]);
  CHECK(commutator(hf.f[2], hf.f[3]) == CRat(2) * hf.t[0]);
  CHECK(commutator(hf.f[1], hf.f[2]) == CRat(2) * hf.t[2]);
  CHECK(commutator(hf.f[3], hf.f[1]) == CRat(2) * hf.t[1]);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t l = 0; l < 3; ++l) CHECK(commutator(hf.f[a], hf.t[l]).is_zero());

  // coefficientwise agreement with the 8x8 matrix bracket table
  const auto table = bracket_table<Rat>();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      DiffOp want = DiffOp::zero(ct);
      for (std::size_t l = 0; l < 3; ++l) want = want + CRat(table[a][b][l]) * hf.t[l];
      CHECK(commutator(hf.f[a], hf.f[b]) == want);
    }
}

TEST_CASE("laplace element splits into sub-laplacian and center laplacian") {
  const ChartPtr ct = chart_tx();
  const DiffOp q = build_laplace_element();
  // coefficient of D[x0]^2 is 1
  TermKey dx0sq{};
  dx0sq.deriv[3] = 2;
  REQUIRE(q.terms().count(dx0sq) == 1);
  CHECK(q.terms().at(dx0sq) == CRat(1));

  DiffOp delta_t = DiffOp::zero(ct);
  for (std::size_t l = 0; l < 3; ++l)
    delta_t = delta_t + compose(deriv(ct, l), deriv(ct, l));
  const DiffOp sub = q - delta_t;
  CHECK(sub == build_sub_laplacian());
  for (const auto& [key, cc] : sub.terms()) {
    bool pure_t = key.coord == Exps{};
    for (std::size_t v = 3; v < 7; ++v)
      if (key.deriv[v] != 0) pure_t = false;
    CHECK(!pure_t);
  }
}

TEST_CASE("partial Fourier transform substitutes the center derivatives") {
  const auto hf = build_heisenberg_fields();
  const RatVec3 nu{Rat(2), Rat(-1), Rat(1, 3)};
  const ChartPtr cx = chart_x();
  const CRat i = CRat::unit_i();

  // T1^2 -> (i nu1)^2 = -nu1^2
  CHECK(partial_fourier(compose(hf.t[0], hf.t[0]), nu) ==
        CRat(-nu.v1 * nu.v1) * DiffOp::identity(cx));

  // F0 -> D[x0] + i(-nu1 x1 - nu2 x2 - nu3 x3)
  DiffOp want = deriv(cx, 0);
  want = want - (i * CRat(nu.v1)) * coord(cx, 1) - (i * CRat(nu.v2)) * coord(cx, 2) -
         (i * CRat(nu.v3)) * coord(cx, 3);
  CHECK(partial_fourier(hf.f[0], nu) == want);

  // a t-coordinate factor is outside the transform's domain
  Exps te{};
  te[0] = 1;
  const DiffOp bad = DiffOp::monomial(chart_tx(), te, Exps{}, CRat(1));
  CHECK_THROWS_AS((void)partial_fourier(bad, nu), std::invalid_argument);
}

TEST_CASE("landau operator is minus the transformed sub-laplacian") {
  const DiffOp sub = build_sub_laplacian();
  Rng rng(59);
  for (int n = 0; n < 25; ++n) {
    const RatVec3 nu{rng.rational(), rng.rational(), rng.rational()};
    CHECK(-partial_fourier(sub, nu) == build_landau(nu));
  }
  CHECK(-partial_fourier(sub, RatVec3{Rat(1), Rat(2), Rat(2)}) ==
        build_landau(RatVec3{Rat(1), Rat(2), Rat(2)}));
}

TEST_CASE("landau operator special forms") {
  const ChartPtr cx = chart_x();
  // nu = 0 gives minus the Laplacian
  DiffOp minus_delta = DiffOp::zero(cx);
  for (std::size_t v = 0; v < 4; ++v) minus_delta = minus_delta - compose(deriv(cx, v), deriv(cx, v));
  CHECK(build_landau(RatVec3{}) == minus_delta);

  // angular-momentum form: H = -Delta + 2<nu, l> + |nu|^2 |x|^2
  const auto l = build_angular_momentum();
  const RatVec3 nu{Rat(3, 2), Rat(-1), Rat(2)};
  DiffOp want = minus_delta;
  for (std::size_t j = 0; j < 3; ++j) want = want + CRat(Rat(2) * nu[j]) * l[j];
  DiffOp xsq = DiffOp::zero(cx);
  for (std::size_t v = 0; v < 4; ++v) xsq = xsq + compose(coord(cx, v), coord(cx, v));
  want = want + CRat(nu.norm_sq()) * xsq;
  CHECK(build_landau(nu) == want);
}

TEST_CASE("axis field restricted to the (x1, x2) plane reproduces the planar Landau operator") {
  const ChartPtr cx = chart_x();
  const Rat b3(7, 4);
  const DiffOp h = build_landau(RatVec3{Rat(0), Rat(0), b3});
  // keep terms supported entirely on {x1, x2}
  DiffOp restricted = DiffOp::zero(cx);
  for (const auto& [key, cc] : h.terms()) {
    if (key.coord[0] || key.coord[3] || key.deriv[0] || key.deriv[3]) continue;
    restricted.add_term(key, cc);
  }
  DiffOp want = -compose(deriv(cx, 1), deriv(cx, 1)) - compose(deriv(cx, 2), deriv(cx, 2));
  const DiffOp rot = compose(coord(cx, 1), deriv(cx, 2)) - compose(coord(cx, 2), deriv(cx, 1));
  want = want - (CRat::unit_i() * CRat(Rat(2) * b3)) * rot;
  want = want + CRat(b3 * b3) * (compose(coord(cx, 1), coord(cx, 1)) + compose(coord(cx, 2), coord(cx, 2)));
  CHECK(restricted == want);
}

TEST_CASE("canonical operator equals the landau operator along the first axis") {
  for (const Rat& mu : {Rat(0), Rat(1), Rat(7, 2)}) {
    CHECK(build_canonical(mu).renamed(chart_x()) == build_landau(RatVec3{mu, Rat(0), Rat(0)}));
  }
  CHECK_THROWS_AS((void)build_canonical(Rat(-1)), std::invalid_argument);

  // the expansion carries -2 i mu (y0 D1 - y1 D0 + y2 D3 - y3 D2)
  const ChartPtr cy = chart_y();
  const Rat mu(5, 3);
  const DiffOp h = build_canonical(mu);
  TermKey key{};
  key.coord[0] = 1;
  key.deriv[1] = 1;
  REQUIRE(h.terms().count(key) == 1);
  CHECK(h.terms().at(key) == CRat(Rat(0), Rat(-2) * mu));
}

TEST_CASE("angular momentum components and their action") {
  const ChartPtr cx = chart_x();
  const auto l = build_angular_momentum();
  const CRat mi = -CRat::unit_i();
  DiffOp want = compose(coord(cx, 0), deriv(cx, 1)) - compose(coord(cx, 1), deriv(cx, 0)) +
                compose(coord(cx, 2), deriv(cx, 3)) - compose(coord(cx, 3), deriv(cx, 2));
  CHECK(l[0] == mi * want);

  // annihilates constants
  Polynomial one = Polynomial::monomial(cx, Exps{}, CRat(1));
  for (const auto& comp : l) CHECK(comp.apply(one).terms().empty());

  // su(2) relations in three variables
  const auto l3 = build_angular_momentum_r3();
  CHECK(commutator(l3[0], l3[1]) == CRat::unit_i() * l3[2]);
}

TEST_CASE("operator application against direct differentiation") {
  const ChartPtr cx = chart_x();
  // (x0 D1) applied to x1^2 gives 2 x0 x1
  Exps e{};
  e[1] = 2;
  Polynomial f = Polynomial::monomial(cx, e, CRat(1));
  const DiffOp op = compose(coord(cx, 0), deriv(cx, 1));
  const Polynomial g = op.apply(f);
  Exps want{};
  want[0] = 1;
  want[1] = 1;
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms().begin()->first == want);
  CHECK(g.terms().begin()->second == CRat(2));
}

TEST_CASE("chart transforms") {
  const ChartPtr cx = chart_x();
  const ChartPtr cz = chart_z();
  const ChartMap to_z = real_to_complex_map(cx);
  const ChartMap to_x = complex_to_real_map(cx);

  // -(D0^2 + D1^2) becomes -4 Dz1 Dzb1
  const DiffOp d2 = -(compose(deriv(cx, 0), deriv(cx, 0)) + compose(deriv(cx, 1), deriv(cx, 1)));
  CHECK(to_z.apply(d2) == CRat(-4) * compose(deriv(cz, 0), deriv(cz, 1)));

  // round trips and the homomorphism property
  Rng rng(61);
  for (int n = 0; n < 10; ++n) {
    DiffOp p = DiffOp::zero(cx), q = DiffOp::zero(cx);
    for (int t = 0; t < 3; ++t) {
      Exps ce{}, de{};
      for (std::size_t v = 0; v < 4; ++v) {
        ce[v] = static_cast<std::uint8_t>(rng.integer(0, 1));
        de[v] = static_cast<std::uint8_t>(rng.integer(0, 1));
      }
      p = p + DiffOp::monomial(cx, ce, de, CRat(rng.rational(), rng.rational()));
      q = q + DiffOp::monomial(cx, ce, de, CRat(rng.rational(), rng.rational()));
    }
    CHECK(to_x.apply(to_z.apply(p)) == p);
    CHECK(to_z.apply(compose(p, q)) == compose(to_z.apply(p), to_z.apply(q)));
  }
}

TEST_CASE("ladder operators satisfy the oscillator algebra") {
  for (const Rat& mu : {Rat(1), Rat(7, 2)}) {
    const auto lad = build_ladder(mu);
    const DiffOp id = DiffOp::identity(chart_z());
    CHECK(commutator(lad.a1, lad.a1_dag) == CRat(mu) * id);
    CHECK(commutator(lad.a2, lad.a2_dag) == CRat(mu) * id);
    CHECK(commutator(lad.a1, lad.a2).is_zero());
    CHECK(commutator(lad.a1, lad.a2_dag).is_zero());
    CHECK(commutator(lad.a1_dag, lad.a2_dag).is_zero());
  }
  CHECK_THROWS_AS((void)build_ladder(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS((void)build_ladder(Rat(-2)), std::invalid_argument);
}

TEST_CASE("chirality sign is +1 and consistent") {
  // hand derivation: the angular term transforms with the sign that the
  // ladder expansion produces
  for (const Rat& mu : {Rat(1), Rat(2), Rat(3), Rat(7, 2)}) {
    const ChiralityResult cr = resolve_chirality(mu);
    CHECK(cr.sign == 1);
    CHECK(cr.ladder_identity);
    CHECK(cr.transform_matches_opposite);
    CHECK(cr.conjugate_flips);
  }
}

TEST_CASE("oscillator form of the canonical operator") {
  const Rat mu(2);
  const auto lad = build_ladder(mu);
  const DiffOp ladder_form = CRat(4) * (compose(lad.a1_dag, lad.a1) + compose(lad.a2_dag, lad.a2)) +
                             CRat(Rat(4) * mu) * DiffOp::identity(chart_z());
  CHECK(build_canonical_complex(mu, +1) == ladder_form);
  CHECK(!(build_canonical_complex(mu, -1) == ladder_form));
  // the conjugate-chart image of the real-coordinates canonical operator
  CHECK(real_to_complex_map(chart_y(), true).apply(build_canonical(mu)) == ladder_form);
  // the paper's stated chart lands on the mirrored sign
  CHECK(real_to_complex_map(chart_y(), false).apply(build_canonical(mu)) == build_canonical_complex(mu, -1));
}
