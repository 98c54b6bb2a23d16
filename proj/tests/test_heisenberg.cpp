#include <doctest.h>

#include "qlandau/heisenberg.hpp"
#include "qlandau/rng.hpp"

using namespace qlandau;

namespace {

using RHeis = HeisElement<Rat>;
using RVec3 = Vec3<Rat>;
using RVec4 = Vec4<Rat>;

RHeis random_element(Rng& rng) {
  RHeis g;
  for (std::size_t l = 0; l < 3; ++l) g.t[l] = rng.rational();
  for (std::size_t a = 0; a < 4; ++a) g.x[a] = rng.rational();
  return g;
}

}  // namespace

TEST_CASE("group law example from the symplectic form") {
  // omega(e0, e1) = (1, 0, 0), so (0,e0).(0,e1) = ((1,0,0), e0+e1)
  RHeis g, h;
  g.x = RVec4::basis(0);
  h.x = RVec4::basis(1);
  CHECK(omega_form(g.x, h.x) == (RVec3{Rat(1), Rat(0), Rat(0)}));
  const RHeis gh = heis_mul(g, h);
  CHECK(gh.t == (RVec3{Rat(1), Rat(0), Rat(0)}));
  CHECK(gh.x == (RVec4{Rat(1), Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("identity and inverses") {
  Rng rng(31);
  for (int n = 0; n < 100; ++n) {
    const RHeis g = random_element(rng);
    CHECK(heis_mul(g, RHeis::identity()) == g);
    CHECK(heis_mul(RHeis::identity(), g) == g);
    CHECK(heis_mul(g, g.inverse()) == RHeis::identity());
    CHECK(heis_mul(g.inverse(), g) == RHeis::identity());
  }
}

TEST_CASE("zeta matrix layout") {
  RHeis g;
  g.t = RVec3{Rat(1), Rat(2), Rat(3)};
  g.x = RVec4{Rat(4), Rat(5), Rat(6), Rat(7)};
  const auto z = heis_matrix(g);
  const int want[8][8] = {
      {1, 0, 0, -5, 4, -7, 6, 1},
      {0, 1, 0, -6, 7, 4, -5, 2},
      {0, 0, 1, -7, -6, 5, 4, 3},
      {0, 0, 0, 1, 0, 0, 0, 4},
      {0, 0, 0, 0, 1, 0, 0, 5},
      {0, 0, 0, 0, 0, 1, 0, 6},
      {0, 0, 0, 0, 0, 0, 1, 7},
      {0, 0, 0, 0, 0, 0, 0, 1},
  };
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(z(r, c) == Rat(want[r][c]));
}

TEST_CASE("zeta is a faithful homomorphism") {
  Rng rng(37);
  CHECK(heis_matrix(RHeis::identity()) == Mat8<Rat>::identity());
  for (int n = 0; n < 300; ++n) {
    const RHeis g = random_element(rng), h = random_element(rng);
    CHECK(heis_matrix(g) * heis_matrix(h) == heis_matrix(heis_mul(g, h)));
    CHECK(heis_matrix(g) * heis_matrix(g.inverse()) == Mat8<Rat>::identity());
  }
}

TEST_CASE("group law is associative and centrally noncommutative") {
  Rng rng(41);
  for (int n = 0; n < 100; ++n) {
    const RHeis g = random_element(rng), h = random_element(rng), k = random_element(rng);
    CHECK(heis_mul(heis_mul(g, h), k) == heis_mul(g, heis_mul(h, k)));
    const RVec3 w = omega_form(g.x, h.x);
    const RHeis gh = heis_mul(g, h), hg = heis_mul(h, g);
    CHECK(gh.t - hg.t == Rat(2) * w);
  }
}

TEST_CASE("generators and their brackets") {
  const auto gen = generator_matrices<Rat>();

  // T1 is the single unit in the (0, 7) slot
  Mat8<Rat> t1{};
  t1(0, 7) = Rat(1);
  CHECK(gen[4] == t1);

  CHECK(bracket(gen[4], gen[5]).is_zero());  // [T1, T2] = 0
  CHECK(bracket(gen[0], gen[1]) == Rat(2) * gen[4]);  // [F0, F1] = 2 T1
  CHECK(bracket(gen[1], gen[2]) == Rat(2) * gen[6]);  // [F1, F2] = 2 T3
  CHECK(bracket(gen[2], gen[3]) == Rat(2) * gen[4]);  // [F2, F3] = 2 T1
  CHECK(bracket(gen[3], gen[1]) == Rat(2) * gen[5]);  // [F3, F1] = 2 T2

  // nilpotency witness: [[F0, F1], F2] = 0
  CHECK(bracket(bracket(gen[0], gen[1]), gen[2]).is_zero());

  // every bracket with a center generator vanishes
  for (std::size_t l = 4; l < 7; ++l)
    for (std::size_t j = 0; j < 7; ++j) CHECK(bracket(gen[l], gen[j]).is_zero());
}

TEST_CASE("generators are exact derivatives of one-parameter subgroups") {
  Rng rng(43);
  const auto gen = generator_matrices<Rat>();
  for (std::size_t a = 0; a < 4; ++a) {
    const Rat s = rng.rational_nonzero();
    RHeis g;
    g.x = s * RVec4::basis(a);
    CHECK(heis_matrix(g) - Mat8<Rat>::identity() == s * gen[a]);
  }
}
