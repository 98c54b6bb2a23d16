#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlandau/algebra.hpp"

namespace qlandau::spectral {

using Complex = std::complex<double>;

struct GridSpec {
  int dim = 4;     // 2 or 4
  double half_width = 1.0;
  int points_per_axis = 8;

  double spacing() const { return 2.0 * half_width / (points_per_axis + 1); }
  std::int64_t total_points() const {
    std::int64_t n = 1;
    for (int d = 0; d < dim; ++d) n *= points_per_axis;
    return n;
  }
  /// Library-level sanity (assembly also works for tiny grids in tests).
  void validate(int min_points = 1) const;
};

/// Hermitian operator in compressed sparse row layout.
class SparseOperator {
 public:
  SparseOperator() = default;

  static SparseOperator from_triplets(std::int64_t n,
                                      std::vector<std::tuple<std::int64_t, std::int64_t, Complex>> triplets);

  std::int64_t dimension() const { return n_; }
  std::int64_t nonzeros() const { return static_cast<std::int64_t>(values_.size()); }

  void matvec(const Complex* x, Complex* y, int threads = 1) const;

  /// max |M(i,j) - conj(M(j,i))| over stored entries.
  double hermiticity_defect() const;

  const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::int32_t>& cols() const { return cols_; }
  const std::vector<Complex>& values() const { return values_; }

 private:
  std::int64_t n_ = 0;
  std::vector<std::int64_t> row_ptr_;
  std::vector<std::int32_t> cols_;
  std::vector<Complex> values_;
};

/// Memory budget for assembly; exceeding it throws std::length_error.
inline constexpr std::int64_t kAssemblyByteBudget = std::int64_t(3) << 30;

/// 4-D Landau operator -Delta - 2i<Omega x, grad> + |nu|^2 |x|^2 on a
/// Dirichlet box, second-order central differences.
SparseOperator assemble_landau(const Vec3<double>& nu, const GridSpec& grid);

/// One 2-D factor of the canonical operator (the (y0, y1) block); the 4-D
/// canonical operator is the Kronecker sum of two identical factors.
SparseOperator assemble_canonical_2d(double mu, const GridSpec& grid);

struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  int iterations = 0;      // matrix-block applications
  bool converged = false;
  GridSpec grid;
  std::optional<Vec3<double>> nu;
  std::optional<double> mu;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

struct EigensolveOptions {
  int max_subspace = 0;    // 0: automatic
  int max_rounds = 60;
  int threads = 1;
};

/// k smallest eigenvalues of a Hermitian operator by a block Krylov method
/// with full reorthogonalization and thick restarts. Deterministic for a
/// fixed seed. Throws std::invalid_argument on bad k; non-convergence is
/// reported, not thrown.
SpectrumReport eigensolve(const SparseOperator& op, int k, double tol, std::uint64_t seed,
                          const EigensolveOptions& opts = {});

struct FockSpectrum {
  double mu = 0.0;
  int n_max = 0;
  std::vector<std::pair<double, int>> levels;  // (energy 4 mu (n+1), multiplicity n+1)

  std::vector<double> flattened() const;  // energies repeated by multiplicity
};

/// Landau levels of the canonical operator, 4 mu (n1 + n2 + 1).
FockSpectrum fock_spectrum(double mu, int n_max);

enum class PairingMode { pairwise, nearest };

struct SpectrumComparison {
  double max_rel_deviation = 0.0;
  bool pass = false;
  std::vector<double> deviations;
};

/// Compare sorted eigenvalue lists: index-paired over the common prefix, or
/// each value of `a` against the nearest value of `b` (used for grid-vs-Fock,
/// where box truncation inflates cluster multiplicities).
SpectrumComparison compare_spectra(const std::vector<double>& a, const std::vector<double>& b,
                                   double rel_tol, PairingMode mode = PairingMode::pairwise);

}  // namespace qlandau::spectral
