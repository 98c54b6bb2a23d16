#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "qlandau/spectral.hpp"

using namespace qlandau;
using namespace qlandau::spectral;

namespace {

Eigen::MatrixXcd to_dense(const SparseOperator& op) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.dimension(), op.dimension());
  for (std::int64_t r = 0; r < op.dimension(); ++r)
    for (std::int64_t p = op.row_ptr()[r]; p < op.row_ptr()[r + 1]; ++p)
      m(r, op.cols()[p]) = op.values()[p];
  return m;
}

SparseOperator dirichlet_1d(int n, double box) {
  const double h = 2.0 * box / (n + 1);
  std::vector<std::tuple<std::int64_t, std::int64_t, Complex>> trip;
  for (int i = 0; i < n; ++i) {
    trip.emplace_back(i, i, Complex(2.0 / (h * h), 0.0));
    if (i > 0) trip.emplace_back(i, i - 1, Complex(-1.0 / (h * h), 0.0));
    if (i + 1 < n) trip.emplace_back(i, i + 1, Complex(-1.0 / (h * h), 0.0));
  }
  return SparseOperator::from_triplets(n, std::move(trip));
}

}  // namespace

TEST_CASE("grid validation") {
  GridSpec g;
  g.dim = 3;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.dim = 2;
  g.half_width = -1.0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.half_width = 2.0;
  g.points_per_axis = 4;
  CHECK_THROWS_AS(g.validate(8), std::invalid_argument);
  CHECK(g.spacing() == doctest::Approx(4.0 / 5.0));
}

TEST_CASE("single interior point diagonal") {
  GridSpec g;
  g.dim = 4;
  g.half_width = 1.0;
  g.points_per_axis = 1;
  const auto op = assemble_landau(Vec3<double>{0.7, -0.2, 0.4}, g);
  REQUIRE(op.dimension() == 1);
  const double h = g.spacing();
  // the lone node sits at the origin, so the potential term vanishes
  CHECK(op.values()[0].real() == doctest::Approx(8.0 / (h * h)).epsilon(1e-14));
  CHECK(op.values()[0].imag() == 0.0);
}

TEST_CASE("assembled operators are Hermitian and match a dense oracle") {
  GridSpec g;
  g.dim = 4;
  g.half_width = 2.0;
  g.points_per_axis = 3;
  const Vec3<double> nu{1.0, -0.5, 0.75};
  const auto op = assemble_landau(nu, g);
  CHECK(op.hermiticity_defect() <= 1e-12);
  const Eigen::MatrixXcd dense = to_dense(op);
  CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);

  GridSpec g2;
  g2.dim = 2;
  g2.half_width = 3.0;
  g2.points_per_axis = 8;
  const auto op2 = assemble_canonical_2d(1.3, g2);
  CHECK(op2.hermiticity_defect() <= 1e-12);
}

TEST_CASE("free operator reduces to the Dirichlet Laplacian") {
  GridSpec g;
  g.dim = 4;
  g.half_width = 3.0;
  g.points_per_axis = 8;
  const auto op = assemble_landau(Vec3<double>{}, g);
  for (const auto& v : op.values()) CHECK(v.imag() == 0.0);

  // canonical 2-D factor at vanishing field approaches -Delta
  GridSpec g2;
  g2.dim = 2;
  g2.half_width = 2.0;
  g2.points_per_axis = 6;
  const auto op2 = assemble_canonical_2d(1e-14, g2);
  const double h = g2.spacing();
  for (std::int64_t r = 0; r < op2.dimension(); ++r)
    for (std::int64_t p = op2.row_ptr()[r]; p < op2.row_ptr()[r + 1]; ++p) {
      const Complex v = op2.values()[p];
      if (r == op2.cols()[p])
        CHECK(std::abs(v - Complex(4.0 / (h * h), 0.0)) <= 1e-10 / (h * h));
      else
        CHECK(std::abs(v - Complex(-1.0 / (h * h), 0.0)) <= 1e-10 / (h * h));
    }
}

TEST_CASE("diagonal potential is the gauge-free norm product") {
  // <Omega x, Omega x> = |nu|^2 |x|^2 pointwise, and the assembled diagonal
  // carries exactly that plus the Laplacian stencil weight
  GridSpec g;
  g.dim = 4;
  g.half_width = 2.0;
  g.points_per_axis = 3;
  const Vec3<double> nu{0.9, -1.4, 0.3};
  const auto op = assemble_landau(nu, g);
  const double h = g.spacing();
  const Mat4<double> omega = field_matrix(nu);
  std::int64_t flat = 0;
  for (int i0 = 0; i0 < 3; ++i0)
    for (int i1 = 0; i1 < 3; ++i1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int i3 = 0; i3 < 3; ++i3, ++flat) {
          const Vec4<double> x{-g.half_width + (i0 + 1) * h, -g.half_width + (i1 + 1) * h,
                               -g.half_width + (i2 + 1) * h, -g.half_width + (i3 + 1) * h};
          const Vec4<double> a = omega.apply(x);
          CHECK(std::fabs(a.norm_sq() - nu.norm_sq() * x.norm_sq()) <= 1e-12 * (1.0 + x.norm_sq()));
          Complex diag(0.0, 0.0);
          for (std::int64_t p = op.row_ptr()[flat]; p < op.row_ptr()[flat + 1]; ++p)
            if (op.cols()[p] == flat) diag = op.values()[p];
          CHECK(std::fabs(diag.real() - (8.0 / (h * h) + nu.norm_sq() * x.norm_sq())) <= 1e-12);
          CHECK(diag.imag() == 0.0);
        }
}

TEST_CASE("eigensolve validates the eigenvalue count") {
  std::vector<std::tuple<std::int64_t, std::int64_t, Complex>> trip;
  for (int i = 0; i < 5; ++i) trip.emplace_back(i, i, Complex(double(i), 0.0));
  const auto op = SparseOperator::from_triplets(5, std::move(trip));
  CHECK_THROWS_AS((void)eigensolve(op, 0, 1e-8, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)eigensolve(op, 6, 1e-8, 1), std::invalid_argument);
  const auto rep = eigensolve(op, 5, 1e-10, 1);
  REQUIRE(rep.converged);
  for (int j = 0; j < 5; ++j) CHECK(rep.eigenvalues[j] == doctest::Approx(double(j)).epsilon(1e-12));
}

TEST_CASE("memory budget is enforced") {
  GridSpec g;
  g.dim = 4;
  g.half_width = 5.0;
  g.points_per_axis = 128;  // 128^4 points is far past the budget
  CHECK_THROWS_AS((void)assemble_landau(Vec3<double>{1, 0, 0}, g), std::length_error);
}

TEST_CASE("eigensolve: identity operator") {
  const int n = 60;
  std::vector<std::tuple<std::int64_t, std::int64_t, Complex>> trip;
  for (int i = 0; i < n; ++i) trip.emplace_back(i, i, Complex(1.0, 0.0));
  const auto id = SparseOperator::from_triplets(n, std::move(trip));
  const auto rep = eigensolve(id, 5, 1e-10, 99);
  REQUIRE(rep.converged);
  for (double ev : rep.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-12));
  for (double r : rep.residuals) CHECK(r <= 1e-10);
}

TEST_CASE("eigensolve: 1-D Dirichlet sine modes") {
  // L = pi/2 makes the continuum eigenvalues m^2; the discrete values follow
  // the closed form (2/h^2)(1 - cos(m pi h / (2 L)))
  const int n = 99;
  const double box = M_PI / 2.0;
  const double h = 2.0 * box / (n + 1);
  const auto op = dirichlet_1d(n, box);
  const auto rep = eigensolve(op, 4, 1e-10, 7);
  REQUIRE(rep.converged);
  for (int m = 1; m <= 4; ++m) {
    const double oracle = (2.0 / (h * h)) * (1.0 - std::cos(m * M_PI * h / (2.0 * box)));
    CHECK(std::fabs(rep.eigenvalues[m - 1] - oracle) <= 1e-9 * std::max(1.0, oracle));
  }
  // the scaled box keeps the smallest eigenvalue within 0.1% of 1
  CHECK(std::fabs(rep.eigenvalues[0] - 1.0) <= 1e-3);
}

TEST_CASE("eigensolve agrees with a dense solver on small magnetic operators") {
  GridSpec g;
  g.dim = 2;
  g.half_width = 4.0;
  g.points_per_axis = 8;
  const auto op = assemble_canonical_2d(0.8, g);
  const auto rep = eigensolve(op, 6, 1e-10, 5);
  REQUIRE(rep.converged);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(op));
  for (int j = 0; j < 6; ++j)
    CHECK(std::fabs(rep.eigenvalues[j] - es.eigenvalues()(j)) <= 1e-10 * std::max(1.0, es.eigenvalues()(j)));
}

TEST_CASE("eigensolve is deterministic for a fixed seed") {
  GridSpec g;
  g.dim = 2;
  g.half_width = 4.0;
  g.points_per_axis = 10;
  const auto op = assemble_canonical_2d(1.0, g);
  const auto a = eigensolve(op, 3, 1e-9, 1234);
  const auto b = eigensolve(op, 3, 1e-9, 1234);
  for (int j = 0; j < 3; ++j) {
    CHECK(a.eigenvalues[j] == b.eigenvalues[j]);
    CHECK(a.residuals[j] == b.residuals[j]);
  }
}

TEST_CASE("kronecker sum: 4-D canonical spectrum from 2-D factor pairs") {
  const double mu = 1.0;
  GridSpec g2;
  g2.dim = 2;
  g2.half_width = 3.5;
  g2.points_per_axis = 7;
  const auto factor = assemble_canonical_2d(mu, g2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ef(to_dense(factor));

  GridSpec g4;
  g4.dim = 4;
  g4.half_width = 3.5;
  g4.points_per_axis = 7;
  const auto full = assemble_landau(Vec3<double>{mu, 0, 0}, g4);
  const auto rep = eigensolve(full, 4, 1e-9, 11);
  REQUIRE(rep.converged);

  std::vector<double> sums;
  for (int i = 0; i < ef.eigenvalues().size(); ++i)
    for (int j = 0; j < ef.eigenvalues().size(); ++j) sums.push_back(ef.eigenvalues()(i) + ef.eigenvalues()(j));
  std::sort(sums.begin(), sums.end());
  for (int j = 0; j < 4; ++j)
    CHECK(std::fabs(rep.eigenvalues[j] - sums[j]) <= 1e-8 * std::max(1.0, sums[j]));
}

TEST_CASE("free 4-D operator matches the separable sine-mode value") {
  GridSpec g;
  g.dim = 4;
  g.half_width = 3.0;
  g.points_per_axis = 8;
  const auto op = assemble_landau(Vec3<double>{}, g);
  const auto rep = eigensolve(op, 1, 1e-10, 21);
  REQUIRE(rep.converged);
  const double h = g.spacing();
  const double per_axis = (2.0 / (h * h)) * (1.0 - std::cos(M_PI * h / (2.0 * g.half_width)));
  CHECK(std::fabs(rep.eigenvalues[0] - 4.0 * per_axis) <= 1e-10 * std::max(1.0, 4.0 * per_axis));
}

TEST_CASE("4-D refinement is monotone and Richardson lands on the Landau level") {
  const double box = 4.5;
  auto ground = [&](int n_axis) {
    GridSpec g{4, box, n_axis};
    const auto rep = eigensolve(assemble_landau(Vec3<double>{1, 0, 0}, g), 1, 1e-8, 17);
    REQUIRE(rep.converged);
    return rep.eigenvalues[0];
  };
  const double coarse = ground(9), fine = ground(14);
  // second-order from below: the coarse value underestimates harder
  CHECK(coarse < fine);
  CHECK(fine < 4.0);
  const double r = (2.0 * box / 10.0) / (2.0 * box / 15.0);
  const double extrapolated = (r * r * fine - coarse) / (r * r - 1.0);
  CHECK(std::fabs(extrapolated - 4.0) / 4.0 <= 0.005);
}

TEST_CASE("threaded matvec is bitwise deterministic") {
  GridSpec g;
  g.dim = 2;
  g.half_width = 6.0;
  g.points_per_axis = 70;  // above the row-parallel threshold
  const auto op = assemble_canonical_2d(1.0, g);
  EigensolveOptions two;
  two.threads = 2;
  const auto a = eigensolve(op, 2, 1e-9, 77);
  const auto b = eigensolve(op, 2, 1e-9, 77, two);
  for (int j = 0; j < 2; ++j) {
    CHECK(a.eigenvalues[j] == b.eigenvalues[j]);
    CHECK(a.residuals[j] == b.residuals[j]);
  }
}

TEST_CASE("2-D factor ground state approaches 2 mu") {
  GridSpec g;
  g.dim = 2;
  g.half_width = 6.0;
  g.points_per_axis = 32;
  const auto op = assemble_canonical_2d(1.0, g);
  const auto rep = eigensolve(op, 1, 1e-8, 3);
  REQUIRE(rep.converged);
  CHECK(std::fabs(rep.eigenvalues[0] - 2.0) <= 0.08 * 2.0);
}

TEST_CASE("fock spectrum") {
  const auto fs = fock_spectrum(1.0, 2);
  REQUIRE(fs.levels.size() == 3);
  CHECK(fs.levels[0] == std::pair<double, int>{4.0, 1});
  CHECK(fs.levels[1] == std::pair<double, int>{8.0, 2});
  CHECK(fs.levels[2] == std::pair<double, int>{12.0, 3});
  CHECK(fs.flattened() == std::vector<double>{4, 8, 8, 12, 12, 12});

  const auto doubled = fock_spectrum(2.0, 2);
  for (std::size_t i = 0; i < fs.levels.size(); ++i)
    CHECK(doubled.levels[i].first == doctest::Approx(2.0 * fs.levels[i].first));

  CHECK_THROWS_AS((void)fock_spectrum(0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)fock_spectrum(1.0, -1), std::invalid_argument);
}

TEST_CASE("spectrum comparison") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  CHECK(compare_spectra(a, a, 1e-12).max_rel_deviation == 0.0);
  CHECK(compare_spectra(a, a, 1e-12).pass);

  const std::vector<double> b{1.0, 2.02, 3.0};
  const auto cmp = compare_spectra(a, b, 0.005);
  CHECK(!cmp.pass);
  CHECK(cmp.max_rel_deviation == doctest::Approx(0.02 / 2.02));

  // nearest mode: every grid value near some ladder rung
  const std::vector<double> grid{3.9, 3.95, 4.1, 7.9};
  const std::vector<double> ladder{4.0, 8.0, 12.0};
  const auto near = compare_spectra(grid, ladder, 0.05, PairingMode::nearest);
  CHECK(near.pass);
}
