#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qlandau/canonicalize.hpp"
#include "qlandau/report.hpp"
#include "qlandau/spectral.hpp"
#include "qlandau/verify.hpp"
#include "qlandau/version.hpp"

namespace {

using qlandau::CheckRecord;
using qlandau::Report;
namespace spectral = qlandau::spectral;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoConvergence = 4;

struct CommonOpts {
  std::vector<double> nu;
  double mu = 0.0;
  bool has_mu = false;
  double box = 6.0;
  int points = 16;
  int count = 6;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
  std::string format = "json";
  bool factor2d = false;
  bool compare_fock = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->configurable();
  cmd->add_option("--nu", o.nu, "magnetic field nu1,nu2,nu3")->delimiter(',')->expected(3);
  cmd->add_option("--mu", o.mu, "canonical field strength")->check(CLI::PositiveNumber);
  cmd->add_option("--L", o.box, "grid half-width")->check(CLI::PositiveNumber);
  cmd->add_option("--N", o.points, "points per axis");
  cmd->add_option("--k", o.count, "eigenvalue count")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "solver tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--threads", o.threads, "worker threads")->envname("QLANDAU_THREADS");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--factor2d", o.factor2d, "use the 2-D canonical factor");
  cmd->add_flag("--compare-fock", o.compare_fock, "compare against the analytic Landau levels");
}

nlohmann::ordered_json config_echo(const CommonOpts& o, bool with_grid) {
  nlohmann::ordered_json j;
  if (o.nu.size() == 3) j["nu"] = o.nu;
  if (o.has_mu) j["mu"] = o.mu;
  if (with_grid) {
    j["L"] = o.box;
    j["N"] = o.points;
    j["k"] = o.count;
    j["tol"] = o.tol;
    j["factor2d"] = o.factor2d;
    j["compare_fock"] = o.compare_fock;
  }
  j["seed"] = o.seed;
  j["threads"] = o.threads;
  j["format"] = o.format;
  return j;
}

int write_report(const Report& report, const std::string& out) {
  try {
    report.write(out);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return report.passed() ? kExitPass : kExitCheckFailure;
}

int run_verify(const std::string& suite, CommonOpts& o) {
  std::optional<qlandau::weyl::RatVec3> nu_override;
  if (o.nu.size() == 3)
    nu_override = qlandau::weyl::RatVec3{qlandau::Rat(o.nu[0]), qlandau::Rat(o.nu[1]),
                                         qlandau::Rat(o.nu[2])};
  Report report("verify");
  auto cfg = config_echo(o, false);
  cfg["suite"] = suite;
  report.set_config(cfg);
  report.add_checks(qlandau::verify::run_suite(suite, o.seed, nu_override));
  return write_report(report, o.out);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int write_csv(const spectral::SpectrumReport& sr, const std::string& path) {
  std::string text = "index,eigenvalue,residual\n";
  for (std::size_t i = 0; i < sr.eigenvalues.size(); ++i)
    text += std::to_string(i) + "," + format_double(sr.eigenvalues[i]) + "," +
            format_double(sr.residuals[i]) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitIo;
  }
  out << text;
  return kExitPass;
}

int run_spectrum(CommonOpts& o) {
  const bool four_d = o.nu.size() == 3 && !o.factor2d;
  if (!four_d && !(o.factor2d && o.has_mu)) {
    std::cerr << "error: spectrum needs --nu a,b,c (4-D) or --factor2d with --mu\n";
    return kExitUsage;
  }
  if (o.points < 8) {
    std::cerr << "error: --N must be at least 8\n";
    return kExitUsage;
  }

  Report report("spectrum");
  report.set_config(config_echo(o, true));

  spectral::GridSpec grid;
  grid.dim = four_d ? 4 : 2;
  grid.half_width = o.box;
  grid.points_per_axis = o.points;

  spectral::SparseOperator op;
  double level_unit = 0.0;  // lowest analytic level of the assembled operator
  try {
    if (four_d) {
      const qlandau::Vec3<double> nu{o.nu[0], o.nu[1], o.nu[2]};
      op = spectral::assemble_landau(nu, grid);
      level_unit = 4.0 * std::sqrt(nu.norm_sq());
    } else {
      op = spectral::assemble_canonical_2d(o.mu, grid);
      level_unit = 2.0 * o.mu;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const double herm = op.hermiticity_defect();
  report.add_checks({CheckRecord{"spectrum.hermitian_assembly", herm <= 1e-12, herm, 1e-12, ""}});

  spectral::EigensolveOptions eopts;
  eopts.threads = o.threads;
  spectral::SpectrumReport sr = spectral::eigensolve(op, o.count, o.tol, o.seed, eopts);
  sr.grid = grid;

  nlohmann::ordered_json spectrum_payload;
  spectrum_payload["eigenvalues"] = sr.eigenvalues;
  spectrum_payload["residuals"] = sr.residuals;
  spectrum_payload["iterations"] = sr.iterations;
  spectrum_payload["converged"] = sr.converged;
  spectrum_payload["grid"] = {{"d", grid.dim}, {"L", grid.half_width}, {"N", grid.points_per_axis},
                  {"h", grid.spacing()}};
  report.add_payload("spectrum", spectrum_payload);

  if (o.compare_fock && !sr.eigenvalues.empty() && level_unit > 0.0) {
    // the box breaks Landau degeneracy, so cluster locations are compared:
    // the ground state against the lowest level, the rest to nearest levels
    std::vector<double> ladder;
    for (int n = 0; n < 8; ++n)
      ladder.push_back(four_d ? level_unit * (n + 1) : level_unit * (2 * n + 1));
    const double ground_dev = std::fabs(sr.eigenvalues.front() - ladder.front()) / ladder.front();
    report.add_checks(
        {CheckRecord{"spectrum.fock_ground_level", ground_dev <= 0.1, ground_dev, 0.1, ""}});
    const auto cmp =
        spectral::compare_spectra(sr.eigenvalues, ladder, 1.0, spectral::PairingMode::nearest);
    report.add_payload("fock_comparison",
                       {{"nearest_level_deviations", cmp.deviations}, {"levels", ladder}});
  }

  int rc = kExitPass;
  if (o.format == "csv") {
    rc = write_csv(sr, o.out);
  } else {
    rc = write_report(report, o.out);
  }
  if (!sr.converged) {
    std::cerr << "error: eigensolver did not converge within the iteration cap\n";
    return kExitNoConvergence;
  }
  if (rc == kExitPass && !report.passed()) rc = kExitCheckFailure;
  return rc;
}

int run_canonicalize(CommonOpts& o) {
  if (o.nu.size() != 3) {
    std::cerr << "error: canonicalize needs --nu a,b,c\n";
    return kExitUsage;
  }
  const qlandau::Vec3<double> nu{o.nu[0], o.nu[1], o.nu[2]};
  const qlandau::CanonicalRotation cr = qlandau::canonical_rotation(nu);

  Report report("canonicalize");
  report.set_config(config_echo(o, false));
  const double scale = std::max(1.0, std::sqrt(nu.norm_sq()));
  report.add_checks({CheckRecord{"canonicalize.conjugation_residual", cr.residual <= 1e-10 * scale,
                                 cr.residual, 1e-10 * scale, ""}});
  std::vector<double> r_flat;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r_flat.push_back(cr.r(i, j));
  report.add_payload("canonicalize", {{"R", r_flat},
                                      {"branch", qlandau::to_string(cr.branch)},
                                      {"residual", cr.residual},
                                      {"norm", std::sqrt(nu.norm_sq())}});
  return write_report(report, o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic Landau operator toolkit"};
  app.set_config("--config", "", "key=value configuration file (sections per subcommand); flags override");
  app.require_subcommand(1);

  CommonOpts vo, so, co;
  std::string suite = "all";

  CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
  verify->add_option("suite", suite, "algebra|heisenberg|weyl|canonical|translations|all")
      ->check(CLI::IsMember({"algebra", "heisenberg", "weyl", "canonical", "translations", "all"}));
  add_common_flags(verify, vo);

  CLI::App* spectrum = app.add_subcommand("spectrum", "discretize and eigensolve");
  add_common_flags(spectrum, so);

  CLI::App* canonicalize = app.add_subcommand("canonicalize", "rotate a field onto the i-axis");
  add_common_flags(canonicalize, co);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (vo.format == "csv") {
        std::cerr << "error: --format csv applies to spectrum only\n";
        return kExitUsage;
      }
      vo.has_mu = verify->count("--mu") > 0;
      return run_verify(suite, vo);
    }
    if (spectrum->parsed()) {
      so.has_mu = spectrum->count("--mu") > 0;
      return run_spectrum(so);
    }
    if (canonicalize->parsed()) {
      co.has_mu = canonicalize->count("--mu") > 0;
      return run_canonicalize(co);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
