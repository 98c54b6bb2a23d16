#include "qlandau/weylops.hpp"

#include <sstream>
#include <stdexcept>

namespace qlandau::weyl {

namespace {

Rat binomial(unsigned n, unsigned k) {
  Rat r(1);
  for (unsigned j = 0; j < k; ++j) r = r * Rat(n - j) / Rat(j + 1);
  return r;
}

Rat falling(unsigned n, unsigned k) {
  Rat r(1);
  for (unsigned j = 0; j < k; ++j) r = r * Rat(n - j);
  return r;
}

}  // namespace

ChartPtr make_chart(std::vector<std::string> vars) {
  if (vars.size() > kMaxVars) throw std::invalid_argument("chart too large");
  return std::make_shared<const Chart>(std::move(vars));
}

ChartPtr chart_tx() {
  static const ChartPtr c = make_chart({"t1", "t2", "t3", "x0", "x1", "x2", "x3"});
  return c;
}
ChartPtr chart_x() {
  static const ChartPtr c = make_chart({"x0", "x1", "x2", "x3"});
  return c;
}
ChartPtr chart_y() {
  static const ChartPtr c = make_chart({"y0", "y1", "y2", "y3"});
  return c;
}
ChartPtr chart_z() {
  static const ChartPtr c = make_chart({"z1", "zb1", "z2", "zb2"});
  return c;
}
ChartPtr chart_r3() {
  static const ChartPtr c = make_chart({"x1", "x2", "x3"});
  return c;
}

// -- Polynomial ---------------------------------------------------------------

void Polynomial::add(const Exps& e, const CRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::monomial(ChartPtr chart, const Exps& e, const CRat& c) {
  Polynomial p(std::move(chart));
  p.add(e, c);
  return p;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& point) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> m = c.to_complex();
    for (std::size_t v = 0; v < chart_->size(); ++v)
      for (unsigned p = 0; p < e[v]; ++p) m *= point[v];
    acc += m;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!(*a.chart_ == *b.chart_)) throw std::invalid_argument("polynomial chart mismatch");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(*a.chart_ == *b.chart_)) throw std::invalid_argument("polynomial chart mismatch");
  Polynomial r(a.chart_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e{};
      for (std::size_t v = 0; v < kMaxVars; ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      r.add(e, ca * cb);
    }
  return r;
}

// -- DiffOp -------------------------------------------------------------------

DiffOp DiffOp::identity(ChartPtr chart) {
  DiffOp op(std::move(chart));
  op.add_term(TermKey{}, CRat(1));
  return op;
}

DiffOp DiffOp::coordinate(ChartPtr chart, std::size_t var) {
  TermKey k{};
  k.coord[var] = 1;
  DiffOp op(std::move(chart));
  op.add_term(k, CRat(1));
  return op;
}

DiffOp DiffOp::derivative(ChartPtr chart, std::size_t var) {
  TermKey k{};
  k.deriv[var] = 1;
  DiffOp op(std::move(chart));
  op.add_term(k, CRat(1));
  return op;
}

DiffOp DiffOp::monomial(ChartPtr chart, const Exps& coord, const Exps& deriv, const CRat& coeff) {
  DiffOp op(std::move(chart));
  op.add_term(TermKey{coord, deriv}, coeff);
  return op;
}

void DiffOp::add_term(const TermKey& key, const CRat& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_same_chart(const DiffOp& other) const {
  if (!(*chart_ == *other.chart_)) throw std::invalid_argument("operator chart mismatch");
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  a.check_same_chart(b);
  DiffOp r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  a.check_same_chart(b);
  DiffOp r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

DiffOp operator-(const DiffOp& a) {
  DiffOp r(a.chart_);
  for (const auto& [k, c] : a.terms_) r.add_term(k, -c);
  return r;
}

DiffOp operator*(const CRat& s, const DiffOp& a) {
  DiffOp r(a.chart_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  return *a.chart_ == *b.chart_ && a.terms_ == b.terms_;
}

// (x^a D^b)(x^c D^d) = sum_k binom(b,k) falling(c,k) x^{a+c-k} D^{b-k+d},
// the componentwise Leibniz re-ordering of D^b past x^c.
DiffOp compose(const DiffOp& p, const DiffOp& q) {
  p.check_same_chart(q);
  const std::size_t nv = p.chart_->size();
  DiffOp r(p.chart_);
  for (const auto& [kp, cp] : p.terms_) {
    for (const auto& [kq, cq] : q.terms_) {
      Exps kmax{};
      for (std::size_t v = 0; v < nv; ++v) kmax[v] = std::min(kp.deriv[v], kq.coord[v]);
      // odometer over 0 <= k <= kmax
      Exps k{};
      while (true) {
        Rat factor(1);
        for (std::size_t v = 0; v < nv; ++v)
          if (k[v] > 0) factor *= binomial(kp.deriv[v], k[v]) * falling(kq.coord[v], k[v]);
        TermKey key{};
        for (std::size_t v = 0; v < nv; ++v) {
          key.coord[v] = static_cast<std::uint8_t>(kp.coord[v] + kq.coord[v] - k[v]);
          key.deriv[v] = static_cast<std::uint8_t>(kp.deriv[v] - k[v] + kq.deriv[v]);
        }
        r.add_term(key, cp * cq * CRat(factor));
        std::size_t v = 0;
        for (; v < nv; ++v) {
          if (k[v] < kmax[v]) {
            ++k[v];
            break;
          }
          k[v] = 0;
        }
        if (v == nv) break;
      }
    }
  }
  return r;
}

DiffOp commutator(const DiffOp& p, const DiffOp& q) {
  return compose(p, q) - compose(q, p);
}

DiffOp DiffOp::renamed(ChartPtr chart) const {
  if (chart->size() != chart_->size()) throw std::invalid_argument("rename arity mismatch");
  DiffOp r(std::move(chart));
  r.terms_ = terms_;
  return r;
}

Polynomial DiffOp::apply(const Polynomial& f) const {
  if (!(*chart_ == *f.chart())) throw std::invalid_argument("operator/polynomial chart mismatch");
  const std::size_t nv = chart_->size();
  Polynomial r(chart_);
  for (const auto& [k, c] : terms_) {
    for (const auto& [e, fc] : f.terms()) {
      // differentiate the monomial x^e by D^{k.deriv}
      bool vanishes = false;
      Rat factor(1);
      Exps out{};
      for (std::size_t v = 0; v < nv; ++v) {
        if (k.deriv[v] > e[v]) {
          vanishes = true;
          break;
        }
        factor *= falling(e[v], k.deriv[v]);
        out[v] = static_cast<std::uint8_t>(e[v] - k.deriv[v] + k.coord[v]);
      }
      if (vanishes) continue;
      r.add(out, c * fc * CRat(factor));
    }
  }
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t v = 0; v < chart_->size(); ++v) {
      if (k.coord[v] == 0) continue;
      os << " " << chart_->name(v);
      if (k.coord[v] > 1) os << "^" << int(k.coord[v]);
    }
    for (std::size_t v = 0; v < chart_->size(); ++v) {
      if (k.deriv[v] == 0) continue;
      os << " D[" << chart_->name(v) << "]";
      if (k.deriv[v] > 1) os << "^" << int(k.deriv[v]);
    }
  }
  return os.str();
}

// -- ChartMap -----------------------------------------------------------------

DiffOp ChartMap::apply(const DiffOp& p) const {
  if (!(*p.chart() == *source)) throw std::invalid_argument("chart map source mismatch");
  DiffOp result = DiffOp::zero(target);
  for (const auto& [k, c] : p.terms()) {
    DiffOp acc = c * DiffOp::identity(target);
    for (std::size_t v = 0; v < source->size(); ++v)
      for (unsigned e = 0; e < k.coord[v]; ++e) acc = compose(acc, coord_images[v]);
    for (std::size_t v = 0; v < source->size(); ++v)
      for (unsigned e = 0; e < k.deriv[v]; ++e) acc = compose(acc, deriv_images[v]);
    result = result + acc;
  }
  return result;
}

ChartMap real_to_complex_map(const ChartPtr& real_chart, bool conjugated) {
  if (real_chart->size() != 4) throw std::invalid_argument("real chart must have 4 variables");
  const ChartPtr z = chart_z();
  const CRat i = CRat::unit_i();
  const CRat ci = conjugated ? -i : i;  // conjugation flips every explicit i
  const CRat half(Rat(1, 2));
  auto zc = [&](std::size_t v) { return DiffOp::coordinate(z, v); };
  auto zd = [&](std::size_t v) { return DiffOp::derivative(z, v); };

  ChartMap m{real_chart, z, {}, {}};
  // x0 = (z1 + zb1)/2, x1 = -+ i/2 (z1 - zb1); same pattern for (x2, x3)
  m.coord_images = {half * (zc(0) + zc(1)), (-ci) * (half * (zc(0) - zc(1))),
                    half * (zc(2) + zc(3)), (-ci) * (half * (zc(2) - zc(3)))};
  // D[x0] = Dz1 + Dzb1, D[x1] = +- i (Dz1 - Dzb1)
  m.deriv_images = {zd(0) + zd(1), ci * (zd(0) - zd(1)), zd(2) + zd(3), ci * (zd(2) - zd(3))};
  return m;
}

ChartMap complex_to_real_map(const ChartPtr& real_chart, bool conjugated) {
  if (real_chart->size() != 4) throw std::invalid_argument("real chart must have 4 variables");
  const ChartPtr z = chart_z();
  const CRat i = CRat::unit_i();
  const CRat ci = conjugated ? -i : i;
  const CRat half(Rat(1, 2));
  auto xc = [&](std::size_t v) { return DiffOp::coordinate(real_chart, v); };
  auto xd = [&](std::size_t v) { return DiffOp::derivative(real_chart, v); };

  ChartMap m{z, real_chart, {}, {}};
  // z1 = x0 +- i x1, zb1 = x0 -+ i x1
  m.coord_images = {xc(0) + ci * xc(1), xc(0) - ci * xc(1), xc(2) + ci * xc(3), xc(2) - ci * xc(3)};
  // Dz1 = (D[x0] -+ i D[x1])/2, Dzb1 = (D[x0] +- i D[x1])/2
  m.deriv_images = {half * (xd(0) - ci * xd(1)), half * (xd(0) + ci * xd(1)),
                    half * (xd(2) - ci * xd(3)), half * (xd(2) + ci * xd(3))};
  return m;
}

// -- Builders -----------------------------------------------------------------

HeisenbergFields build_heisenberg_fields() {
  const ChartPtr c = chart_tx();
  auto coord = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto deriv = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  // t-slots are 0..2, x-slots are 3..6
  auto dx = [&](std::size_t a) { return deriv(3 + a); };
  auto dt = [&](std::size_t l) { return deriv(l); };
  auto x = [&](std::size_t a) { return coord(3 + a); };

  HeisenbergFields hf{{DiffOp::zero(c), DiffOp::zero(c), DiffOp::zero(c), DiffOp::zero(c)},
                      {DiffOp::zero(c), DiffOp::zero(c), DiffOp::zero(c)}};
  hf.f[0] = dx(0) - compose(x(1), dt(0)) - compose(x(2), dt(1)) - compose(x(3), dt(2));
  hf.f[1] = dx(1) + compose(x(0), dt(0)) + compose(x(3), dt(1)) - compose(x(2), dt(2));
  hf.f[2] = dx(2) - compose(x(3), dt(0)) + compose(x(0), dt(1)) + compose(x(1), dt(2));
  hf.f[3] = dx(3) + compose(x(2), dt(0)) - compose(x(1), dt(1)) + compose(x(0), dt(2));
  for (std::size_t l = 0; l < 3; ++l) hf.t[l] = dt(l);
  return hf;
}

DiffOp build_sub_laplacian() {
  const auto hf = build_heisenberg_fields();
  DiffOp q = DiffOp::zero(chart_tx());
  for (const auto& f : hf.f) q = q + compose(f, f);
  return q;
}

DiffOp build_laplace_element() {
  const auto hf = build_heisenberg_fields();
  DiffOp q = build_sub_laplacian();
  for (const auto& t : hf.t) q = q + compose(t, t);
  return q;
}

DiffOp partial_fourier(const DiffOp& p, const RatVec3& nu) {
  if (!(*p.chart() == *chart_tx())) throw std::invalid_argument("partial_fourier expects the (t, x) chart");
  const ChartPtr cx = chart_x();
  const CRat i = CRat::unit_i();
  DiffOp r = DiffOp::zero(cx);
  for (const auto& [k, c] : p.terms()) {
    for (std::size_t l = 0; l < 3; ++l)
      if (k.coord[l] != 0)
        throw std::invalid_argument("operator has a t-coordinate factor; not in the transform's domain");
    CRat coeff = c;
    for (std::size_t l = 0; l < 3; ++l)
      for (unsigned e = 0; e < k.deriv[l]; ++e) coeff *= i * CRat(nu[l]);
    TermKey key{};
    for (std::size_t a = 0; a < 4; ++a) {
      key.coord[a] = k.coord[3 + a];
      key.deriv[a] = k.deriv[3 + a];
    }
    r.add_term(key, coeff);
  }
  return r;
}

DiffOp build_landau(const RatVec3& nu) {
  const ChartPtr c = chart_x();
  const Mat4<Rat> omega = field_matrix(nu);
  const CRat i = CRat::unit_i();
  DiffOp h = DiffOp::zero(c);
  for (std::size_t a = 0; a < 4; ++a) {
    DiffOp d = DiffOp::derivative(c, a);
    for (std::size_t b = 0; b < 4; ++b)
      d = d + (i * CRat(omega(a, b))) * DiffOp::coordinate(c, b);
    h = h - compose(d, d);
  }
  return h;
}

DiffOp build_canonical(const Rat& mu) {
  if (mu < 0) throw std::invalid_argument("mu must be nonnegative");
  const ChartPtr c = chart_y();
  const CRat imu = CRat::unit_i() * CRat(mu);
  auto yc = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto yd = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  const DiffOp covs[4] = {yd(0) - imu * yc(1), yd(1) + imu * yc(0),
                          yd(2) - imu * yc(3), yd(3) + imu * yc(2)};
  DiffOp h = DiffOp::zero(c);
  for (const auto& d : covs) h = h - compose(d, d);
  return h;
}

std::array<DiffOp, 3> build_angular_momentum() {
  const ChartPtr c = chart_x();
  const CRat mi = -CRat::unit_i();
  auto xc = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto xd = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  auto wedge = [&](std::size_t a, std::size_t b) { return compose(xc(a), xd(b)) - compose(xc(b), xd(a)); };
  return {mi * (wedge(0, 1) + wedge(2, 3)),
          mi * (wedge(0, 2) + wedge(3, 1)),
          mi * (wedge(0, 3) + wedge(1, 2))};
}

std::array<DiffOp, 3> build_angular_momentum_r3() {
  const ChartPtr c = chart_r3();
  const CRat mi = -CRat::unit_i();
  auto xc = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto xd = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  auto wedge = [&](std::size_t a, std::size_t b) { return compose(xc(a), xd(b)) - compose(xc(b), xd(a)); };
  return {mi * wedge(1, 2), mi * wedge(2, 0), mi * wedge(0, 1)};
}

LadderOps build_ladder(const Rat& mu) {
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  const ChartPtr c = chart_z();
  const CRat half_mu{Rat(mu) / 2};
  auto zc = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto zd = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  // chart slots: z1=0, zb1=1, z2=2, zb2=3
  return {zd(1) + half_mu * zc(0), zd(3) + half_mu * zc(2),
          -zd(0) + half_mu * zc(1), -zd(2) + half_mu * zc(3)};
}

DiffOp build_canonical_complex(const Rat& mu, int sign) {
  const ChartPtr c = chart_z();
  const CRat s{Rat(sign)};
  const CRat half_mu{Rat(mu) / 2};
  auto zc = [&](std::size_t v) { return DiffOp::coordinate(c, v); };
  auto zd = [&](std::size_t v) { return DiffOp::derivative(c, v); };
  DiffOp inner = compose(zd(0), zd(1)) + compose(zd(2), zd(3));
  inner = inner + (s * half_mu) * (compose(zc(0), zd(0)) - compose(zc(1), zd(1)) +
                                   compose(zc(2), zd(2)) - compose(zc(3), zd(3)));
  inner = inner - (half_mu * half_mu) * (compose(zc(0), zc(1)) + compose(zc(2), zc(3)));
  return CRat(-4) * inner;
}

ChiralityResult resolve_chirality(const Rat& mu) {
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  const auto lad = build_ladder(mu);
  DiffOp ladder_form = CRat(4) * (compose(lad.a1_dag, lad.a1) + compose(lad.a2_dag, lad.a2)) +
                       CRat(Rat(4) * mu) * DiffOp::identity(chart_z());

  int sign = 0;
  for (int s : {+1, -1})
    if (build_canonical_complex(mu, s) == ladder_form) sign = s;
  if (sign == 0) throw std::logic_error("no angular sign reproduces the ladder form");

  const DiffOp canonical = build_canonical(mu);
  const DiffOp transformed = real_to_complex_map(chart_y(), false).apply(canonical);
  const DiffOp transformed_conj = real_to_complex_map(chart_y(), true).apply(canonical);

  ChiralityResult r{};
  r.sign = sign;
  r.ladder_identity = true;
  r.transform_matches_opposite = (transformed == build_canonical_complex(mu, -sign));
  r.conjugate_flips = (transformed_conj == build_canonical_complex(mu, sign));
  return r;
}

}  // namespace qlandau::weyl
