#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qlandau/algebra.hpp"
#include "qlandau/rational.hpp"

namespace qlandau::weyl {

// ---------------------------------------------------------------------------
// Normal-ordered polynomial-coefficient differential operators with exact
// complex-rational coefficients. A term is x^a D^b over the variables of a
// declared chart; composition applies the Leibniz rule and re-normal-orders.
// ---------------------------------------------------------------------------

constexpr std::size_t kMaxVars = 8;

/// Ordered variable set. Operators on different charts never mix; ChartMap
/// is the only bridge.
class Chart {
 public:
  explicit Chart(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i]; }
  const std::vector<std::string>& names() const { return vars_; }

  friend bool operator==(const Chart& a, const Chart& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> vars);
ChartPtr chart_tx();   // (t1, t2, t3, x0, x1, x2, x3)
ChartPtr chart_x();    // (x0, x1, x2, x3)
ChartPtr chart_y();    // (y0, y1, y2, y3)
ChartPtr chart_z();    // (z1, zb1, z2, zb2)
ChartPtr chart_r3();   // (x1, x2, x3)

using Exps = std::array<std::uint8_t, kMaxVars>;

struct TermKey {
  Exps coord{};
  Exps deriv{};
  auto operator<=>(const TermKey&) const = default;
};

/// Multivariate polynomial with exact coefficients, used as the target of
/// operator application.
class Polynomial {
 public:
  explicit Polynomial(ChartPtr chart) : chart_(std::move(chart)) {}

  const ChartPtr& chart() const { return chart_; }
  const std::map<Exps, CRat>& terms() const { return terms_; }

  void add(const Exps& e, const CRat& c);
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  static Polynomial monomial(ChartPtr chart, const Exps& e, const CRat& c);

 private:
  ChartPtr chart_;
  std::map<Exps, CRat> terms_;
};

class DiffOp {
 public:
  explicit DiffOp(ChartPtr chart) : chart_(std::move(chart)) {}

  static DiffOp zero(ChartPtr chart) { return DiffOp(std::move(chart)); }
  static DiffOp identity(ChartPtr chart);
  static DiffOp coordinate(ChartPtr chart, std::size_t var);
  static DiffOp derivative(ChartPtr chart, std::size_t var);
  static DiffOp monomial(ChartPtr chart, const Exps& coord, const Exps& deriv, const CRat& coeff);

  const ChartPtr& chart() const { return chart_; }
  const std::map<TermKey, CRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const TermKey& key, const CRat& coeff);

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a);
  friend DiffOp operator*(const CRat& s, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  /// Operator composition with normal re-ordering (Leibniz).
  friend DiffOp compose(const DiffOp& p, const DiffOp& q);

  /// Positional rename onto a chart of the same arity.
  DiffOp renamed(ChartPtr chart) const;

  /// Apply to a polynomial over the coordinate variables of the same chart.
  Polynomial apply(const Polynomial& f) const;

  /// Deterministic sorted term list, e.g. "(-2+0i) x0 D[x1]".
  std::string to_string() const;

 private:
  ChartPtr chart_;
  std::map<TermKey, CRat> terms_;

  void check_same_chart(const DiffOp& other) const;
};

DiffOp commutator(const DiffOp& p, const DiffOp& q);

/// Invertible linear-with-conjugation substitution between charts; maps a
/// normal-ordered operator by substituting generator images and re-composing.
struct ChartMap {
  ChartPtr source;
  ChartPtr target;
  std::vector<DiffOp> coord_images;
  std::vector<DiffOp> deriv_images;

  DiffOp apply(const DiffOp& p) const;
};

/// x0 + i x1 = z1, x2 + i x3 = z2 (or the y-chart equivalents). With
/// `conjugated` the complex structure is reversed: z1 = x0 - i x1.
ChartMap real_to_complex_map(const ChartPtr& real_chart, bool conjugated = false);
ChartMap complex_to_real_map(const ChartPtr& real_chart, bool conjugated = false);

// -- Builders ---------------------------------------------------------------

using RatVec3 = Vec3<Rat>;

struct HeisenbergFields {
  std::array<DiffOp, 4> f;  // F0..F3
  std::array<DiffOp, 3> t;  // T1..T3
};

/// The seven generating vector fields on the (t, x) chart.
HeisenbergFields build_heisenberg_fields();

/// Laplace element Q = sum F_a^2 + sum T_l^2.
DiffOp build_laplace_element();

/// Sub-Laplacian sum F_a^2.
DiffOp build_sub_laplacian();

/// Partial Fourier transform in the center variables: D[t_l] -> i nu_l.
/// Throws std::invalid_argument if P carries a t-coordinate factor.
DiffOp partial_fourier(const DiffOp& p, const RatVec3& nu);

/// Landau operator H_nu = -sum_a (D[x_a] + i A_a)^2 with A = Omega_nu x.
DiffOp build_landau(const RatVec3& nu);

/// Canonical operator on the y chart (field of strength mu along the first
/// imaginary direction). Throws std::invalid_argument for mu < 0.
DiffOp build_canonical(const Rat& mu);

/// Angular momentum components l1, l2, l3 on the x chart (hbar = 1).
std::array<DiffOp, 3> build_angular_momentum();

/// Angular momentum in R^3 (for the su(2) bracket check).
std::array<DiffOp, 3> build_angular_momentum_r3();

struct LadderOps {
  DiffOp a1, a2, a1_dag, a2_dag;
};

/// Annihilation/creation pairs on the complex chart; throws for mu <= 0.
LadderOps build_ladder(const Rat& mu);

/// Complex form of the canonical operator with an explicit sign on the
/// angular term: -4 { Dz.Dzb + s(mu/2)(z Dz - zb Dzb) - (mu/2)^2 |z|^2 }.
DiffOp build_canonical_complex(const Rat& mu, int sign);

struct ChiralityResult {
  int sign;                        // sign in build_canonical_complex matching the ladder form
  bool ladder_identity;            // build_canonical_complex(mu, sign) == 4(a+a) + 4mu
  bool transform_matches_opposite; // chart transform of build_canonical == build_canonical_complex(mu, -sign)
  bool conjugate_flips;            // conjugated chart transform == build_canonical_complex(mu, sign)
};

/// Settles the angular-term sign by exact comparison. Throws std::logic_error
/// if neither sign yields an identity.
ChiralityResult resolve_chirality(const Rat& mu);

}  // namespace qlandau::weyl
