#include "polygf/polygon_series.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace polygf {

QuadraticFormSpec::QuadraticFormSpec(std::string name, int dim, std::vector<long long> A)
    : name_(std::move(name)), dim_(dim), A_(std::move(A)) {
  if (A_.size() != static_cast<std::size_t>(dim * dim)) throw ConfigError("quadratic form " + name_ + ": wrong matrix size");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (this->A(i, j) != this->A(j, i)) throw ConfigError("quadratic form " + name_ + ": matrix not symmetric");
  auto [p, n] = signature();
  if (p + n != dim) throw ConfigError("quadratic form " + name_ + ": degenerate");
  if (p != 1) throw ConfigError("quadratic form " + name_ + ": signature must be (1, r-1)");
}

std::vector<Real> QuadraticFormSpec::real_matrix() const {
  std::vector<Real> r(A_.size());
  for (std::size_t i = 0; i < A_.size(); ++i) r[i] = Real(A_[i]);
  return r;
}

Real QuadraticFormSpec::Q(std::span<const Real> x) const { return B(x, x) / 2; }

Real QuadraticFormSpec::B(std::span<const Real> x, std::span<const Real> y) const {
  Real s = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s += x[static_cast<std::size_t>(i)] * Real(A(i, j)) * y[static_cast<std::size_t>(j)];
  return s;
}

Complex QuadraticFormSpec::B(std::span<const Real> n, std::span<const Complex> z) const {
  Complex s = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s += n[static_cast<std::size_t>(i)] * Real(A(i, j)) * z[static_cast<std::size_t>(j)];
  return s;
}

long long QuadraticFormSpec::twice_Q(std::span<const long long> n) const {
  long long s = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s += n[static_cast<std::size_t>(i)] * A(i, j) * n[static_cast<std::size_t>(j)];
  return s;
}

std::vector<long long> QuadraticFormSpec::apply(std::span<const long long> n) const {
  std::vector<long long> r(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r[static_cast<std::size_t>(i)] += A(i, j) * n[static_cast<std::size_t>(j)];
  return r;
}

std::pair<int, int> QuadraticFormSpec::signature() const {
  Eigen::MatrixXd M(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) M(i, j) = double(A(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  int p = 0, n = 0;
  for (int i = 0; i < dim_; ++i) {
    double e = es.eigenvalues()(i);
    if (e > 1e-9) ++p;
    else if (e < -1e-9) ++n;
  }
  return {p, n};
}

SeriesValue theta_indefinite(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                             std::span<const Complex> z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  const int r = Q.dim();
  if (chi.dim() != r || static_cast<int>(z.size()) != r) throw ConfigError("theta_indefinite: dimension mismatch");
  LatticeSumProblem p;
  p.dim = r;
  p.A = Q.real_matrix();
  p.lin.assign(static_cast<std::size_t>(r), Complex(0));
  p.shift.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) p.lin[static_cast<std::size_t>(i)] += Real(Q.A(i, j)) * z[static_cast<std::size_t>(j)];
    p.shift[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)].imag() / tau.v();
  }
  p.region = &chi;
  return lattice_sum(p, tau, opt);
}

Complex elliptic_factor(const QuadraticFormSpec& Q, std::span<const long long> l, std::span<const Complex> z,
                        const ModularPoint& tau) {
  std::vector<Real> lr(l.begin(), l.end());
  return e2pi(-Q.Q(lr) * tau.tau() - Q.B(lr, z));
}

namespace {

template <class F>
void for_box(int r, long long N, F&& f) {
  std::vector<long long> n(static_cast<std::size_t>(r), -N);
  for (;;) {
    f(n);
    int i = r - 1;
    while (i >= 0 && n[static_cast<std::size_t>(i)] == N) n[static_cast<std::size_t>(i--)] = -N;
    if (i < 0) return;
    ++n[static_cast<std::size_t>(i)];
  }
}

int chi_int(const CharacteristicRegion& chi, std::span<const Real> x) {
  Real w = chi(x);
  int k = static_cast<int>(std::lround(w));
  if (Real(k) != w) throw ConfigError("exact term check needs an integer valued weight");
  return k;
}

}  // namespace

std::vector<ExactTerm> shifted_terms(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                                     std::span<const Real> alpha, std::span<const long long> l,
                                     std::span<const long long> m, long long N) {
  const int r = Q.dim();
  std::vector<ExactTerm> out;
  std::vector<Real> x(static_cast<std::size_t>(r));
  std::vector<long long> n(static_cast<std::size_t>(r));
  auto Al = Q.apply(l);
  for_box(r, N, [&](const std::vector<long long>& np) {
    for (int i = 0; i < r; ++i) {
      auto iu = static_cast<std::size_t>(i);
      n[iu] = np[iu] - l[iu];
      // y/v of the shifted point is alpha + l
      x[iu] = Real(n[iu]) + alpha[iu] + Real(l[iu]);
    }
    int w = chi_int(chi, x);
    if (w == 0) return;
    ExactTerm t;
    t.chi = w;
    long long nAl = 0, nAm = 0;
    auto An = Q.apply(n);
    for (int i = 0; i < r; ++i) {
      auto iu = static_cast<std::size_t>(i);
      nAl += n[iu] * Al[iu];
      nAm += An[iu] * m[iu];
    }
    t.tau2 = Q.twice_Q(n) + 2 * nAl;
    t.zc = An;
    t.c_den = 1;
    t.c_num = ((nAm % 1) + 1) % 1;
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<ExactTerm> factored_terms(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                                      std::span<const Real> alpha, std::span<const long long> l, long long N) {
  const int r = Q.dim();
  std::vector<ExactTerm> out;
  std::vector<Real> x(static_cast<std::size_t>(r));
  auto Al = Q.apply(l);
  long long lAl = Q.twice_Q(l);
  for_box(r, N, [&](const std::vector<long long>& n) {
    for (int i = 0; i < r; ++i) x[static_cast<std::size_t>(i)] = Real(n[static_cast<std::size_t>(i)]) + alpha[static_cast<std::size_t>(i)];
    int w = chi_int(chi, x);
    if (w == 0) return;
    ExactTerm t;
    t.chi = w;
    t.tau2 = Q.twice_Q(n) - lAl;
    t.zc = Q.apply(n);
    for (int i = 0; i < r; ++i) t.zc[static_cast<std::size_t>(i)] -= Al[static_cast<std::size_t>(i)];
    t.c_num = 0;
    t.c_den = 1;
    out.push_back(std::move(t));
  });
  return out;
}

MultisetDiff compare_multisets(std::vector<ExactTerm> a, std::vector<ExactTerm> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  MultisetDiff d;
  d.lhs_size = a.size();
  d.rhs_size = b.size();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      ++d.only_lhs;
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      ++d.only_rhs;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return d;
}

namespace series {

namespace {

LinearConstraint lc(std::initializer_list<Real> a) { return LinearConstraint{std::vector<Real>(a)}; }

Cone negated(const Cone& c) {
  Cone r;
  for (const auto& k : c.constraints) {
    LinearConstraint m = k;
    for (Real& a : m.a) a = -a;
    r.constraints.push_back(m);
  }
  return r;
}

Real sgn_(Real x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

const QuadraticFormSpec& form_f1() {
  static const QuadraticFormSpec f("triangle", 1, {3});
  return f;
}
const QuadraticFormSpec& form_f2() {
  static const QuadraticFormSpec f("parallelogram", 2, {0, 3, 3, 0});
  return f;
}
const QuadraticFormSpec& form_f3() {
  static const QuadraticFormSpec f("trapezoid", 2, {3, 0, 0, -3});
  return f;
}
const QuadraticFormSpec& form_f4() {
  static const QuadraticFormSpec f("pentagon", 3, {0, 3, 0, 3, 0, 0, 0, 0, -3});
  return f;
}
const QuadraticFormSpec& form_f5() {
  static const QuadraticFormSpec f("hexagon", 4, {0, 3, 0, 0, 3, 0, 0, 0, 0, 0, -3, 0, 0, 0, 0, -3});
  return f;
}

const CharacteristicRegion& region_full1() {
  static const CharacteristicRegion r = regions::full(1);
  return r;
}

const CharacteristicRegion& region_chi2() {
  static const CharacteristicRegion r = [] {
    Cone c{{lc({1, 0}), lc({0, 1})}};
    return CharacteristicRegion("chi2", 2, {c, negated(c)}, [](std::span<const Real> x) {
      return sgn_(x[0]) * regions::H(x[0] * x[1]);
    });
  }();
  return r;
}

const CharacteristicRegion& region_chi3() {
  static const CharacteristicRegion r = [] {
    Cone c{{lc({1, -1}), lc({0, 1})}};
    return CharacteristicRegion("chi3", 2, {c, negated(c)}, [](std::span<const Real> x) {
      return sgn_(x[0]) * regions::H(std::abs(x[0]) - std::abs(x[1])) * regions::Hstar(x[0] * x[1]);
    });
  }();
  return r;
}

const CharacteristicRegion& region_chi4() {
  static const CharacteristicRegion r = [] {
    Cone c{{lc({1, 0, -1}), lc({1, 0, 1}), lc({0, 1, -1}), lc({0, 1, 1})}};
    return CharacteristicRegion("chi4", 3, {c, negated(c)}, [](std::span<const Real> x) {
      return regions::Hstar(std::abs(x[0]) - std::abs(x[2])) * regions::Hstar(std::abs(x[1]) - std::abs(x[2])) *
             regions::Hstar(x[0] * x[1]);
    });
  }();
  return r;
}

const CharacteristicRegion& region_g4() {
  static const CharacteristicRegion r = [] {
    Cone c{{lc({1, 0, -1}), lc({0, 1, -1}), lc({0, 0, 1})}};
    return CharacteristicRegion("g4", 3, {c, negated(c)}, [](std::span<const Real> x) {
      bool s1 = x[0] >= x[2] && x[1] >= x[2] && x[2] >= 0;
      bool s3 = x[0] < x[2] && x[1] < x[2] && x[2] < 0;
      return (s1 || s3) ? Real(1) : Real(0);
    });
  }();
  return r;
}

const CharacteristicRegion& region_chi5() {
  static const CharacteristicRegion r = [] {
    Cone c{{lc({0, 0, 1, 0}), lc({0, 0, 0, 1}), lc({1, 0, -1, 0}), lc({1, 0, 0, -1}), lc({0, 1, -1, 0}),
            lc({0, 1, 0, -1})}};
    return CharacteristicRegion("chi5", 4, {c, negated(c)}, [](std::span<const Real> x) {
      Real m = std::min(std::abs(x[0]), std::abs(x[1]));
      bool in = std::abs(x[2]) <= m && std::abs(x[3]) <= m && x[0] * x[1] >= 0 && x[0] * x[2] >= 0 && x[0] * x[3] >= 0;
      return in ? sgn_(x[0] - x[2]) : Real(0);
    });
  }();
  return r;
}

}  // namespace series

SeriesValue f1_series(Complex z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  std::array<Complex, 1> zz{z};
  return theta_indefinite(series::form_f1(), series::region_full1(), zz, tau, opt);
}
SeriesValue f2_series(const Vec2& z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return theta_indefinite(series::form_f2(), series::region_chi2(), z, tau, opt);
}
SeriesValue f3_series(const Vec2& z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return theta_indefinite(series::form_f3(), series::region_chi3(), z, tau, opt);
}
SeriesValue f4_series(const Vec3& z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return theta_indefinite(series::form_f4(), series::region_chi4(), z, tau, opt);
}
SeriesValue g4_series(const Vec3& z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return theta_indefinite(series::form_f4(), series::region_g4(), z, tau, opt);
}
SeriesValue f5_series(const Vec4& z, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return theta_indefinite(series::form_f5(), series::region_chi5(), z, tau, opt);
}

Complex f1(Complex z, const ModularPoint& tau) { return f1_series(z, tau).value; }
Complex f2(const Vec2& z, const ModularPoint& tau) { return f2_series(z, tau).value; }
Complex f3(const Vec2& z, const ModularPoint& tau) { return f3_series(z, tau).value; }
Complex f4(const Vec3& z, const ModularPoint& tau) { return f4_series(z, tau).value; }
Complex g4(const Vec3& z, const ModularPoint& tau) { return g4_series(z, tau).value; }
Complex f5(const Vec4& z, const ModularPoint& tau) { return f5_series(z, tau).value; }

Complex f1_theta_form(Complex z, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  return -tau.qpow(Real(3) / 8) * e2pi(Real(1.5) * z) * theta(Real(3) * z + Real(1.5) * tau.tau() + Real(0.5), T);
}

Complex f2_closed(const Vec2& z, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  Complex a = Real(3) * z[0], b = Real(3) * z[1];
  if (lattice_distance(a, T) < pole_guard || lattice_distance(b, T) < pole_guard)
    throw PoleError("f2_closed: 3 z_j on the lattice");
  return -I * std::pow(eta(T), 3) * theta(a + b, T) / (theta(a, T) * theta(b, T));
}

namespace {

Complex f3_prefactor(const Vec2& z, long long F) {
  return e2pi(Real(3) * (Real(0.5) + Real(F)) * (z[1] - z[0]));
}

Complex f3_second_arg(const Vec2& z, long long F, const ModularPoint& tau) {
  return Real(3) * z[0] - Real(3 * F) * tau.tau() - Real(1.5) * tau.tau() + Real(0.5);
}

}  // namespace

Complex f3_closed(const Vec2& z, const ModularPoint& tau) {
  long long F = guarded_floor(z[1].imag() / tau.v(), "f3_closed");
  return f3_prefactor(z, F) * appell_A(Real(3) * (z[0] - z[1]), f3_second_arg(z, F, tau), tau.scaled(3));
}

Complex f3_hat(const Vec2& z, const ModularPoint& tau) {
  long long F = guarded_floor(z[1].imag() / tau.v(), "f3_hat");
  return f3_prefactor(z, F) * appell_A_hat(Real(3) * (z[0] - z[1]), f3_second_arg(z, F, tau), tau.scaled(3));
}

G4Reduction g4_reduction(const Vec3& z, const ModularPoint& tau) {
  const Real v = tau.v();
  G4Reduction g;
  g.Y1 = 3 * guarded_floor((z[0].imag() - z[2].imag()) / v, "g4: (y1-y3)/v");
  g.Y2 = 3 * guarded_floor((z[1].imag() - z[2].imag()) / v, "g4: (y2-y3)/v");
  g.Y3 = 3 * guarded_floor(z[2].imag() / v, "g4: y3/v");
  const Real Y1 = Real(g.Y1), Y2 = Real(g.Y2), Y3 = Real(g.Y3);
  const Complex t = tau.tau();
  Real qexp = (Y1 * Y2 + Y1 * Y3 + Y2 * Y3) / 3 + Y3 * Y3 / 6 + Y3 / 2 - Real(3) / 8;
  g.prefactor = I * e2pi(qexp * t + z[0] * (-Y2 - Y3) + z[1] * (-Y1 - Y3) + z[2] * (Y3 - Real(1.5)));
  g.w = {Real(3) * (z[0] + z[1] - z[2]) - (Y1 + Y2 + Y3) * t - Real(1.5) * t + Real(0.5),
         Real(3) * z[0] - (Y1 + Y3) * t, Real(3) * z[1] - (Y2 + Y3) * t};
  return g;
}

Complex g4_closed(const Vec3& z, const ModularPoint& tau) {
  G4Reduction g = g4_reduction(z, tau);
  return g.prefactor * F_star_closed(g.w[0], g.w[1], g.w[2], tau.scaled(3));
}

Complex g4_via_F_star_series(const Vec3& z, const ModularPoint& tau) {
  G4Reduction g = g4_reduction(z, tau);
  return g.prefactor * F_star_series(g.w[0], g.w[1], g.w[2], tau.scaled(3)).value;
}

Complex f4_closed(const Vec3& z, const ModularPoint& tau) {
  return g4_closed(z, tau) + g4_closed({-z[0], -z[1], z[2]}, tau);
}

Complex F_star_hat(const Vec3& w, const ModularPoint& tau) {
  Complex e3 = std::pow(eta(tau), 3);
  Complex pre = e2pi(-tau.tau() / Real(2) - w[0] + w[1] + w[2]);
  return I * theta(w[0], tau) * mu_hat(w[0], w[1], tau) * mu_hat(w[0], w[2], tau) +
         pre * e3 * theta(w[1] + w[2], tau) / (theta(w[1], tau) * theta(w[2], tau)) *
             mu_hat(w[0] + tau.tau(), w[1] + w[2], tau);
}

Complex f4_hat(const Vec3& z, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  Complex s = 0;
  for (Real sg : {Real(1), Real(-1)}) {
    Vec3 w{Real(3) * (sg * z[0] + sg * z[1] - z[2]) - Real(1.5) * tau.tau() + Real(0.5), sg * Real(3) * z[0],
           sg * Real(3) * z[1]};
    s += F_star_hat(w, T);
  }
  return I * e2pi(-Real(3) / 8 * tau.tau() - Real(1.5) * z[2]) * s;
}

}  // namespace polygf
