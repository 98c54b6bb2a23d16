#include <sstream>

#include "qlandau/heisenberg.hpp"
#include "qlandau/rng.hpp"
#include "qlandau/verify.hpp"

namespace qlandau::verify {

namespace {

using RHeis = HeisElement<Rat>;
using RMat8 = Mat8<Rat>;
using RVec3 = Vec3<Rat>;
using RVec4 = Vec4<Rat>;

RHeis random_element(Rng& rng) {
  RHeis g;
  for (std::size_t l = 0; l < 3; ++l) g.t[l] = rng.rational();
  for (std::size_t a = 0; a < 4; ++a) g.x[a] = rng.rational();
  return g;
}

CheckRecord exact_record(const std::string& name, long violations, std::string details = "") {
  return {name, violations == 0, static_cast<double>(violations), 0.0, std::move(details)};
}

}  // namespace

CheckList heisenberg_suite(std::uint64_t seed) {
  Rng rng(seed);
  CheckList out;

  {
    long bad = 0;
    for (int n = 0; n < 200; ++n) {
      const RHeis g = random_element(rng);
      if (!(heis_mul(g, g.inverse()) == RHeis::identity())) ++bad;
      if (!(heis_mul(g, RHeis::identity()) == g)) ++bad;
    }
    out.push_back(exact_record("heisenberg.identity_inverse", bad));
  }

  {
    // zeta is a homomorphism, exactly, on 1000 random rational pairs
    long bad = 0;
    for (int n = 0; n < 1000; ++n) {
      const RHeis g = random_element(rng), h = random_element(rng);
      if (!(heis_matrix(g) * heis_matrix(h) == heis_matrix(heis_mul(g, h)))) ++bad;
    }
    out.push_back(exact_record("heisenberg.zeta_homomorphism_1000", bad));
  }

  {
    long bad = 0;
    for (int n = 0; n < 200; ++n) {
      const RHeis g = random_element(rng);
      if (!(heis_matrix(g) * heis_matrix(g.inverse()) == RMat8::identity())) ++bad;
    }
    if (!(heis_matrix(RHeis::identity()) == RMat8::identity())) ++bad;
    out.push_back(exact_record("heisenberg.zeta_inverse", bad));
  }

  {
    // (0, e0) . (0, e1) = ((1,0,0), e0 + e1)
    RHeis g, h;
    g.x = RVec4::basis(0);
    h.x = RVec4::basis(1);
    RHeis want;
    want.t = RVec3{Rat(1), Rat(0), Rat(0)};
    want.x = g.x + h.x;
    out.push_back(exact_record("heisenberg.group_law_example", heis_mul(g, h) == want ? 0 : 1));
  }

  {
    long bad = 0;
    for (int n = 0; n < 200; ++n) {
      const RHeis g = random_element(rng), h = random_element(rng), k = random_element(rng);
      if (!(heis_mul(heis_mul(g, h), k) == heis_mul(g, heis_mul(h, k)))) ++bad;
    }
    out.push_back(exact_record("heisenberg.associativity", bad));
  }

  {
    // gh and hg differ in the center by exactly 2 omega(x_g, x_h)
    long bad = 0;
    for (int n = 0; n < 200; ++n) {
      const RHeis g = random_element(rng), h = random_element(rng);
      const RVec3 w = omega_form(g.x, h.x);
      const RHeis gh = heis_mul(g, h), hg = heis_mul(h, g);
      if (!(gh.t - hg.t == Rat(2) * w)) ++bad;
      if (!(gh.x == hg.x)) ++bad;
      const bool w_zero = w == RVec3{};
      if (w_zero != (gh == hg)) ++bad;
    }
    out.push_back(exact_record("heisenberg.noncommutativity_witness", bad));
  }

  {
    // zeta(0, s e_a) is affine in s, so generators are exact differences
    long bad = 0;
    const auto gen = generator_matrices<Rat>();
    for (std::size_t a = 0; a < 4; ++a) {
      const Rat s = rng.rational_nonzero();
      RHeis g;
      g.x = s * RVec4::basis(a);
      if (!(heis_matrix(g) - RMat8::identity() == s * gen[a])) ++bad;
    }
    for (std::size_t l = 0; l < 3; ++l) {
      const Rat s = rng.rational_nonzero();
      RHeis g;
      g.t[l] = s;
      if (!(heis_matrix(g) - RMat8::identity() == s * gen[4 + l])) ++bad;
      // T_lambda has a single unit entry in the (lambda, last) slot
      RMat8 want{};
      want(l, 7) = Rat(1);
      if (!(gen[4 + l] == want)) ++bad;
    }
    out.push_back(exact_record("heisenberg.generators_closed_form", bad));
  }

  {
    // full bracket table: [F_a, F_b] = 2 T_gamma with the (123)-cyclic pairing
    // extended by [F_0, F_b] = 2 T_b, all center brackets zero
    const auto gen = generator_matrices<Rat>();
    const auto table = bracket_table<Rat>();
    long bad = 0;
    const int expected[4][4][3] = {
        {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
        {{-2, 0, 0}, {0, 0, 0}, {0, 0, 2}, {0, -2, 0}},
        {{0, -2, 0}, {0, 0, -2}, {0, 0, 0}, {2, 0, 0}},
        {{0, 0, -2}, {0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}};
    std::ostringstream tbl;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const RVec3 want{Rat(expected[a][b][0]), Rat(expected[a][b][1]), Rat(expected[a][b][2])};
        if (!(table[a][b] == want)) ++bad;
        // the bracket matrix itself must equal sum_l c_l T_l
        RMat8 recon{};
        for (std::size_t l = 0; l < 3; ++l) recon = recon + table[a][b][l] * gen[4 + l];
        if (!(bracket(gen[a], gen[b]) == recon)) ++bad;
        if (a < b && !(table[a][b] == RVec3{})) {
          const std::size_t l = table[a][b].v1 != 0 ? 0 : (table[a][b].v2 != 0 ? 1 : 2);
          tbl << "[F" << a << ",F" << b << "]=" << table[a][b][l] << "T" << l + 1 << " ";
        }
      }
    out.push_back(exact_record("heisenberg.bracket_table", bad, tbl.str()));
  }

  {
    const auto gen = generator_matrices<Rat>();
    long bad = 0;
    for (std::size_t l = 4; l < 7; ++l)
      for (std::size_t j = 0; j < 7; ++j)
        if (!bracket(gen[l], gen[j]).is_zero()) ++bad;
    out.push_back(exact_record("heisenberg.center", bad));
  }

  {
    // 2-step nilpotency: [[X, Y], Z] = 0 over the full generator sweep
    const auto gen = generator_matrices<Rat>();
    long bad = 0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        const RMat8 inner = bracket(gen[i], gen[j]);
        for (std::size_t k = 0; k < 7; ++k)
          if (!bracket(inner, gen[k]).is_zero()) ++bad;
      }
    out.push_back(exact_record("heisenberg.nilpotency", bad));
  }

  return out;
}

}  // namespace qlandau::verify
