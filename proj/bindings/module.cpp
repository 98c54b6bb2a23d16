#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qlandau/algebra.hpp"
#include "qlandau/canonicalize.hpp"
#include "qlandau/report.hpp"
#include "qlandau/spectral.hpp"
#include "qlandau/verify.hpp"
#include "qlandau/version.hpp"
#include "qlandau/weylops.hpp"

namespace py = pybind11;

namespace {

using qlandau::Mat4;
using qlandau::Vec3;
using qlandau::Vec4;

Vec3<double> to_vec3(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

std::array<std::array<double, 4>, 4> to_rows(const Mat4<double>& m) {
  std::array<std::array<double, 4>, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

py::dict spectrum_to_dict(const qlandau::spectral::SpectrumReport& r) {
  py::dict d;
  d["eigenvalues"] = r.eigenvalues;
  d["residuals"] = r.residuals;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qlandau, m) {
  m.doc() = "quaternionic Landau operator toolkit";
  m.attr("__version__") = qlandau::kVersion;

  m.def(
      "quat_mul",
      [](const std::array<double, 4>& p, const std::array<double, 4>& q) {
        const auto r = qlandau::quat_mul(qlandau::Quaternion<double>{p[0], p[1], p[2], p[3]},
                                         qlandau::Quaternion<double>{q[0], q[1], q[2], q[3]});
        return std::array<double, 4>{r.w, r.x, r.y, r.z};
      },
      py::arg("p"), py::arg("q"), "Hamilton product of quaternions (w, x, y, z)");

  m.def(
      "unit_matrix",
      [](const std::string& unit) {
        if (unit == "i") return to_rows(qlandau::unit_matrix<double>(qlandau::QuatUnit::i));
        if (unit == "j") return to_rows(qlandau::unit_matrix<double>(qlandau::QuatUnit::j));
        if (unit == "k") return to_rows(qlandau::unit_matrix<double>(qlandau::QuatUnit::k));
        throw std::invalid_argument("unit must be one of 'i', 'j', 'k'");
      },
      py::arg("unit"), "matrix representation of a quaternion unit on R^4");

  m.def(
      "field_matrix",
      [](const std::array<double, 3>& nu) { return to_rows(qlandau::field_matrix(to_vec3(nu))); },
      py::arg("nu"), "field matrix Omega_nu = nu1 i + nu2 j + nu3 k");

  m.def(
      "omega_form",
      [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
        const auto w = qlandau::omega_form(Vec4<double>{x[0], x[1], x[2], x[3]},
                                           Vec4<double>{y[0], y[1], y[2], y[3]});
        return std::array<double, 3>{w.v1, w.v2, w.v3};
      },
      py::arg("x"), py::arg("y"), "Im H-valued symplectic form on R^4");

  m.def(
      "vector_potential",
      [](const std::array<double, 3>& nu, const std::array<double, 4>& x) {
        const auto a =
            qlandau::vector_potential(to_vec3(nu), Vec4<double>{x[0], x[1], x[2], x[3]});
        return std::array<double, 4>{a.x0, a.x1, a.x2, a.x3};
      },
      py::arg("nu"), py::arg("x"), "vector potential A(x) = Omega_nu x");

  m.def(
      "canonical_rotation",
      [](const std::array<double, 3>& nu) {
        const auto cr = qlandau::canonical_rotation(to_vec3(nu));
        py::dict d;
        d["R"] = to_rows(cr.r);
        d["branch"] = qlandau::to_string(cr.branch);
        d["residual"] = cr.residual;
        return d;
      },
      py::arg("nu"), "SO(4) rotation with R Omega_nu R^-1 = |nu| i");

  m.def(
      "frame3",
      [](const std::array<double, 3>& nu) {
        const auto f = qlandau::frame3(to_vec3(nu));
        py::dict d;
        d["e1"] = std::array<double, 3>{f.e1.v1, f.e1.v2, f.e1.v3};
        d["e2"] = std::array<double, 3>{f.e2.v1, f.e2.v2, f.e2.v3};
        d["e3"] = std::array<double, 3>{f.e3.v1, f.e3.v2, f.e3.v3};
        d["degenerate"] = f.degenerate;
        return d;
      },
      py::arg("nu"), "direct orthonormal frame with e1 = nu/|nu|");

  m.def(
      "landau_terms",
      [](const std::array<double, 3>& nu) {
        // exact coefficients evaluated to complex doubles, keyed by
        // (coordinate exponents, derivative exponents) over (x0..x3)
        const qlandau::weyl::RatVec3 rnu{qlandau::Rat(nu[0]), qlandau::Rat(nu[1]),
                                         qlandau::Rat(nu[2])};
        const auto h = qlandau::weyl::build_landau(rnu);
        py::list terms;
        for (const auto& [key, c] : h.terms()) {
          py::tuple coord(4), deriv(4);
          for (int v = 0; v < 4; ++v) {
            coord[v] = int(key.coord[v]);
            deriv[v] = int(key.deriv[v]);
          }
          terms.append(py::make_tuple(coord, deriv, c.to_complex()));
        }
        return terms;
      },
      py::arg("nu"), "normal-ordered terms of the Landau operator H_nu");

  m.def(
      "landau_spectrum",
      [](const std::array<double, 3>& nu, double box, int points, int k, double tol,
         std::uint64_t seed, int threads) {
        qlandau::spectral::GridSpec grid{4, box, points};
        const auto op = qlandau::spectral::assemble_landau(to_vec3(nu), grid);
        qlandau::spectral::EigensolveOptions opts;
        opts.threads = threads;
        return spectrum_to_dict(qlandau::spectral::eigensolve(op, k, tol, seed, opts));
      },
      py::arg("nu"), py::arg("L") = 6.0, py::arg("N") = 16, py::arg("k") = 6,
      py::arg("tol") = 1e-8, py::arg("seed") = 42, py::arg("threads") = 1,
      "eigenvalues of the discretized 4-D Landau operator");

  m.def(
      "canonical2d_spectrum",
      [](double mu, double box, int points, int k, double tol, std::uint64_t seed, int threads) {
        qlandau::spectral::GridSpec grid{2, box, points};
        const auto op = qlandau::spectral::assemble_canonical_2d(mu, grid);
        qlandau::spectral::EigensolveOptions opts;
        opts.threads = threads;
        return spectrum_to_dict(qlandau::spectral::eigensolve(op, k, tol, seed, opts));
      },
      py::arg("mu"), py::arg("L") = 8.0, py::arg("N") = 64, py::arg("k") = 6,
      py::arg("tol") = 1e-8, py::arg("seed") = 42, py::arg("threads") = 1,
      "eigenvalues of one 2-D factor of the canonical operator");

  m.def(
      "landau_csr",
      [](const std::array<double, 3>& nu, double box, int points) {
        qlandau::spectral::GridSpec grid{4, box, points};
        const auto op = qlandau::spectral::assemble_landau(to_vec3(nu), grid);
        return py::make_tuple(op.row_ptr(), op.cols(), op.values(), op.dimension());
      },
      py::arg("nu"), py::arg("L") = 6.0, py::arg("N") = 16,
      "CSR triple (row_ptr, cols, values, n) of the discretized H_nu");

  m.def(
      "fock_spectrum",
      [](double mu, int n_max) {
        const auto fs = qlandau::spectral::fock_spectrum(mu, n_max);
        return fs.levels;
      },
      py::arg("mu"), py::arg("n_max") = 4, "(energy, multiplicity) Landau levels 4 mu (n+1)");

  m.def(
      "verify_json",
      [](const std::string& suite, std::uint64_t seed) {
        qlandau::Report report("verify");
        report.set_config({{"suite", suite}, {"seed", seed}});
        report.add_checks(qlandau::verify::run_suite(suite, seed));
        return report.to_json(true);
      },
      py::arg("suite") = "all", py::arg("seed") = 42,
      "run a verification suite and return the JSON report");
}
