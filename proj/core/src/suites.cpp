#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "polygf/appell.hpp"
#include "polygf/geometry.hpp"
#include "polygf/harness.hpp"
#include "polygf/jumps.hpp"
#include "polygf/polygon_series.hpp"

namespace polygf::harness {

namespace {

using CVec = std::vector<Complex>;
using VecFn = std::function<Complex(const CVec&, const ModularPoint&)>;

Real rel(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / std::max<Real>(1, std::abs(rhs)); }

Vec2 v2(const CVec& z) { return {z[0], z[1]}; }
Vec3 v3(const CVec& z) { return {z[0], z[1], z[2]}; }
Vec4 v4(const CVec& z) { return {z[0], z[1], z[2], z[3]}; }

std::vector<Locus> units(int r) {
  std::vector<Locus> L;
  for (int j = 0; j < r; ++j) {
    Locus c(static_cast<std::size_t>(r), 0);
    c[static_cast<std::size_t>(j)] = 1;
    L.push_back(c);
  }
  return L;
}

// alpha in (0.05, 0.95) off the loci, then each coordinate moved by an integer in [-shift, shift]
std::vector<Real> draw_alpha(RunContext& c, int r, const std::vector<Locus>& loci, int shift = 0) {
  auto a = sample_alpha(c.rng, r, loci);
  if (shift > 0)
    for (auto& x : a) x += Real(c.rng.integer(-shift, shift));
  return a;
}

CVec draw_z(RunContext& c, const ModularPoint& tau, const std::vector<Real>& alpha) {
  return sample_z(c.rng, tau, alpha);
}

// all integer vectors in [-b, b]^r
std::vector<std::vector<long long>> grid(int r, long long b) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(static_cast<std::size_t>(r), -b);
  for (;;) {
    out.push_back(v);
    int i = r - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i--)] = -b;
    if (i < 0) return out;
    ++v[static_cast<std::size_t>(i)];
  }
}

CVec shifted(const CVec& z, const std::vector<long long>& l, const std::vector<long long>& m, const ModularPoint& tau) {
  CVec w = z;
  for (std::size_t j = 0; j < z.size(); ++j) w[j] += Real(l[j]) * tau.tau() + Real(m[j]);
  return w;
}

CVec scaled(const CVec& z, Complex k) {
  CVec w = z;
  for (auto& x : w) x /= k;
  return w;
}

std::string vec_str(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------- elliptic laws

// q-exponent (times 2) and zeta exponents of a stated elliptic prefactor
struct Prefactor {
  long long tau2;
  std::vector<long long> zc;
};
using StatedLaw = std::function<Prefactor(const std::vector<long long>&)>;

Prefactor generic_prefactor(const QuadraticFormSpec& Q, const std::vector<long long>& l) {
  auto Al = Q.apply(l);
  Prefactor p{-Q.twice_Q(l), {}};
  for (auto x : Al) p.zc.push_back(-x);
  return p;
}

Complex prefactor_value(const Prefactor& p, const CVec& z, const ModularPoint& tau) {
  Complex e = Real(p.tau2) / 2 * tau.tau();
  for (std::size_t j = 0; j < z.size(); ++j) e += Real(p.zc[j]) * z[j];
  return e2pi(e);
}

// exponent level: stated law equals q^{-Q(l)} e(-B(l,z)), and the term multisets
// of Theta(z + l tau + m) and the factored side agree on the box
void exact_elliptic(Outcome& o, const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                    const std::vector<Real>& alpha, const StatedLaw& law, long long lbound,
                    const std::vector<std::vector<long long>>& mset, long long box) {
  const int r = Q.dim();
  for (const auto& l : grid(r, lbound)) {
    Prefactor s = law(l), g = generic_prefactor(Q, l);
    o.require(s.tau2 == g.tau2 && s.zc == g.zc, "stated prefactor differs at l=" + vec_str(l));
    auto rhs = factored_terms(Q, chi, alpha, l, box);
    for (const auto& m : mset) {
      auto lhs = shifted_terms(Q, chi, alpha, l, m, box);
      auto d = compare_multisets(lhs, rhs);
      o.require(d.equal(), "term multisets differ at l=" + vec_str(l) + " m=" + vec_str(m));
    }
  }
}

void numeric_elliptic(Outcome& o, const VecFn& f, const CVec& z, const ModularPoint& tau, const StatedLaw& law,
                      const std::vector<std::vector<long long>>& ls, const std::vector<std::vector<long long>>& ms) {
  Complex base = f(z, tau);
  for (const auto& l : ls) {
    Complex rhs = prefactor_value(law(l), z, tau) * base;
    for (const auto& m : ms) o.add(rel(f(shifted(z, l, m, tau), tau), rhs));
  }
}

// ---------------------------------------------------------------- modular laws

using Multiplier = std::function<Complex(const SL2Matrix&, const CVec&, const ModularPoint&)>;

Real modular_residual(const VecFn& f, const Multiplier& m, const SL2Matrix& g, const CVec& z, const ModularPoint& tau) {
  Complex ct = g.cocycle(tau.tau());
  Complex lhs = f(scaled(z, ct), tau.transformed(g));
  Complex rhs = m(g, z, tau) * f(z, tau);
  return rel(lhs, rhs);
}

void modular_panel(Outcome& o, RunContext& c, int npts, const std::function<CVec(const ModularPoint&)>& draw,
                   const VecFn& f, const Multiplier& m) {
  for (int p = 0; p < npts; ++p) {
    ModularPoint tau = sample_tau(c.rng);
    CVec z = draw(tau);
    for (const auto& g : *c.panel) o.add(modular_residual(f, m, g, z, tau));
  }
}

// ---------------------------------------------------------------- limits

// residuals of a batch of limit reports; the alternative quoted forms are
// reported but do not decide the outcome
struct LimitLog {
  Outcome o;
  Real tol;
  Real quoted_max = -1;
  Real conv_max = 0;
  void record(const JumpReport& r) {
    o.add(r.residual);
    Real conv = r.limit.convergence / std::max<Real>(1, std::abs(r.closed_form));
    conv_max = std::max(conv_max, conv);
    if (conv > 100 * tol) o.require(false, r.name + ": extrapolation did not settle (" + std::to_string(double(conv)) + ")");
    if (r.quoted_residual) quoted_max = std::max(quoted_max, *r.quoted_residual);
  }
  Outcome done() {
    if (conv_max > tol) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "extrapolation spread up to %.1e", double(conv_max));
      o.detail += (o.detail.empty() ? "" : "; ") + std::string(buf);
    }
    if (quoted_max >= 0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "quoted form residual up to %.1e", double(quoted_max));
      o.detail += (o.detail.empty() ? "" : "; ") + std::string(buf);
    }
    return o;
  }
};

// ---------------------------------------------------------------- independent scalar oracles

// composite 10-point Gauss-Legendre for 2 int_0^x exp(-pi t^2) dt
Real E_quadrature(Real x) {
  static const Real node[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244, 0.8650633666889845,
                               0.9739065285171717};
  static const Real weight[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
                                 0.0666713443086881};
  const int pieces = 64;
  Real h = x / pieces, s = 0;
  for (int k = 0; k < pieces; ++k) {
    Real mid = (k + Real(0.5)) * h;
    for (int j = 0; j < 5; ++j)
      for (Real sign : {Real(-1), Real(1)}) {
        Real t = mid + sign * node[j] * h / 2;
        s += weight[j] * std::exp(-pi * t * t);
      }
  }
  return s * h;  // 2 * (h/2) * sum
}

long long modp(long long a, long long m) { return ((a % m) + m) % m; }

// Jacobi symbol (a/n), n odd positive, by factoring n and listing squares mod p
int jacobi_bruteforce(long long a, long long n) {
  int result = 1;
  long long m = n;
  for (long long p = 3; m > 1; p += 2) {
    while (m % p == 0) {
      m /= p;
      long long r = modp(a, p);
      if (r == 0) return 0;
      bool square = false;
      for (long long x = 1; x < p && !square; ++x) square = (x * x) % p == r;
      result *= square ? 1 : -1;
    }
  }
  return result;
}

bool subgroup_direct(const SL2Matrix& g, Subgroup s) {
  bool g03 = modp(g.c, 3) == 0;
  bool g2 = modp(g.a, 2) == 1 && modp(g.b, 2) == 0 && modp(g.c, 2) == 0 && modp(g.d, 2) == 1;
  switch (s) {
    case Subgroup::SL2Z:
      return true;
    case Subgroup::Gamma0_3:
      return g03;
    case Subgroup::Gamma_2:
      return g2;
    case Subgroup::Gamma0_3_cap_Gamma_2:
      return g03 && g2;
  }
  return false;
}

// ---------------------------------------------------------------- case bodies: scalar kernels

Outcome E_odd(RunContext& c) {
  Outcome o;
  o.require(error_function_E(0) == 0, "E(0) != 0");
  for (int k = 0; k < c.points(100); ++k) {
    Real x = c.rng.uniform(-5, 5);
    o.add(std::abs(error_function_E(x) + error_function_E(-x)));
  }
  return o;
}

Outcome E_quad(RunContext& c) {
  Outcome o;
  o.add(std::abs(error_function_E(2) - E_quadrature(2)));
  Real prev = -2;
  for (int k = 0; k < c.points(20); ++k) {
    Real x = c.rng.uniform(-4, 4);
    o.add(std::abs(error_function_E(x) - E_quadrature(x)));
  }
  for (Real x = -2.5; x <= 2.5; x += Real(0.125)) {
    Real e = error_function_E(x);
    o.require(e > prev && std::abs(e) < 1, "E not strictly increasing inside (-1,1)");
    prev = e;
  }
  return o;
}

Outcome kronecker_brute(RunContext& c) {
  Outcome o;
  o.require(kronecker_symbol(1, 1) == 1 && kronecker_symbol(3, 5) == -1 && kronecker_symbol(2, 15) == 1,
            "tabulated values");
  for (int k = 0; k < c.points(400); ++k) {
    long long a = c.rng.integer(-60, 60), n = 2 * c.rng.integer(0, 120) + 1;
    o.require(kronecker_symbol(a, n) == jacobi_bruteforce(a, n),
              "(" + std::to_string(a) + "/" + std::to_string(n) + ")");
    ++o.points;
  }
  return o;
}

Outcome kronecker_mult(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(400); ++k) {
    long long a = c.rng.integer(-60, 60), b = c.rng.integer(-60, 60);
    long long n = (2 * c.rng.integer(0, 120) + 1) * (c.rng.coin() ? 1 : -1);
    o.require(kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n),
              "in a at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n));
    long long m = 2 * c.rng.integer(0, 40) + 1, n2 = 2 * c.rng.integer(0, 40) + 1;
    o.require(kronecker_symbol(a, m * n2) == kronecker_symbol(a, m) * kronecker_symbol(a, n2), "in n");
    ++o.points;
  }
  return o;
}

Outcome nu_roots(RunContext& c) {
  Outcome o;
  o.add(std::abs(nu_eta(SL2Matrix::make(1, 0, 0, 1)) - Real(1)));
  o.add(std::abs(nu_eta(SL2Matrix::make(1, 1, 0, 1)) - std::exp(I * pi / Real(12))));
  o.add(std::abs(nu_eta(SL2Matrix::make(0, -1, 1, 0)) - std::exp(-I * pi / Real(4))));
  for (int k = 0; k < c.points(50); ++k) {
    Complex v = nu_eta(sample_sl2(c.rng, 12));
    o.add(std::max(std::abs(std::abs(v) - 1), std::abs(std::pow(v, 24) - Real(1))));
  }
  return o;
}

Outcome nu_cocycle(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(50); ++k) {
    SL2Matrix g = sample_sl2(c.rng, 5), h = sample_sl2(c.rng, 5);
    Complex q = nu_eta(g * h) / (nu_eta(g) * nu_eta(h));
    o.add(std::abs(std::pow(q, 24) - Real(1)));
  }
  return o;
}

Outcome nu_vs_eta(RunContext& c) {
  Outcome o;
  std::vector<SL2Matrix> mats{SL2Matrix::make(1, 1, 0, 1), SL2Matrix::make(0, -1, 1, 0),
                               SL2Matrix::make(-1, 0, 0, -1), SL2Matrix::make(0, 1, -1, 0)};
  for (int k = 0; k < c.points(30); ++k) mats.push_back(sample_sl2(c.rng, 4));
  for (const auto& g : mats) {
    ModularPoint tau = sample_tau(c.rng);
    Complex lhs = eta(tau.transformed(g));
    Complex rhs = nu_eta(g) * half_power(g.cocycle(tau.tau()), 1) * eta(tau);
    o.add(rel(lhs, rhs));
  }
  return o;
}

Outcome subgroups(RunContext& c) {
  Outcome o;
  o.require(subgroup_member(SL2Matrix::make(1, 2, 0, 1), Subgroup::Gamma0_3_cap_Gamma_2), "(1,2;0,1)");
  o.require(subgroup_member(SL2Matrix::make(1, 0, 6, 1), Subgroup::Gamma0_3_cap_Gamma_2), "(1,0;6,1)");
  o.require(!subgroup_member(SL2Matrix::make(0, -1, 1, 0), Subgroup::Gamma0_3), "(0,-1;1,0)");
  for (int k = 0; k < c.points(200); ++k) {
    SL2Matrix g = sample_sl2(c.rng, 30);
    for (auto s : {Subgroup::Gamma0_3, Subgroup::Gamma_2, Subgroup::Gamma0_3_cap_Gamma_2})
      o.require(subgroup_member(g, s) == subgroup_direct(g, s), g.str() + " in " + subgroup_name(s));
    ++o.points;
  }
  bool threw = false;
  try {
    SL2Matrix::make(1, 1, 1, 1);
  } catch (const DomainError&) {
    threw = true;
  }
  o.require(threw, "det != 1 accepted");
  return o;
}

// ---------------------------------------------------------------- eta and theta

Outcome eta_dual(RunContext& c) {
  Outcome o;
  for (Real v : {Real(1), Real(2)}) {
    Complex e = eta(ModularPoint(0, v));
    o.require(e.real() > 0 && std::abs(e.imag()) < 1e-15, "eta(iv) not positive real");
  }
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    o.add(rel(eta_series(tau).value, eta_product(tau).value));
  }
  return o;
}

Outcome eta_translate(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    o.add(rel(eta(ModularPoint(tau.tau() + Real(1))), std::exp(I * pi / Real(12)) * eta(tau)));
  }
  return o;
}

Complex draw_point(RunContext& c, const ModularPoint& tau, Real amin, Real amax) {
  return from_elliptic(c.rng.uniform(amin, amax), c.rng.uniform(-0.5, 0.5), tau);
}

Outcome theta_dual(RunContext& c) {
  Outcome o;
  o.add(rel(theta_series(0.25, ModularPoint(0, 1)).value, theta_product(0.25, ModularPoint(0, 1)).value));
  for (int k = 0; k < c.points(30); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1.5, 1.5);
    o.add(rel(theta_series(z, tau).value, theta_product(z, tau).value));
  }
  return o;
}

Outcome theta_odd(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(100); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1.5, 1.5);
    Complex t = theta(z, tau);
    o.add(std::abs(theta(-z, tau) + t) / std::max<Real>(1, std::abs(t)));
  }
  return o;
}

Outcome theta_quasi(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1, 1);
    for (long long l = -2; l <= 2; ++l)
      for (long long m = -2; m <= 2; ++m)
        o.add(rel(theta_series(z + Real(l) * tau.tau() + Real(m), tau).value, theta_quasi_period(z, l, m, tau)));
  }
  return o;
}

Outcome theta_eta_cube(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng, 0.8, 3);
    Complex t = tau.tau();
    Complex lhs = std::pow(eta(tau), 3) / (theta(0.5, tau) * theta(t / Real(2), tau));
    Complex rhs = -I / Real(2) * tau.qpow(0.25) * theta(t / Real(2) - Real(0.5), tau);
    o.add(rel(lhs, rhs));
  }
  return o;
}

Outcome theta_mod(RunContext& c) {
  Outcome o;
  std::vector<SL2Matrix> mats{SL2Matrix::make(1, 0, 0, 1), SL2Matrix::make(1, 1, 0, 1), SL2Matrix::make(0, -1, 1, 0)};
  for (const auto& g : *c.panel) mats.push_back(g);
  for (int k = 0; k < c.points(16); ++k) mats.push_back(sample_sl2(c.rng, 3));
  for (const auto& g : mats) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1, 1);
    Complex ct = g.cocycle(tau.tau());
    o.add(rel(theta_series(z / ct, tau.transformed(g)).value, theta_modular(g, z, tau)));
  }
  return o;
}

// theta(m) directly; theta(l tau + m) relative to the growth e^{pi l^2 v} near l tau
Outcome theta_zeros(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    for (long long l = -2; l <= 2; ++l)
      for (long long m = -2; m <= 2; ++m) {
        Complex w = Real(l) * tau.tau() + Real(m);
        if (l == 0) o.add(std::abs(theta(w, tau)));
        Real growth = std::exp(pi * Real(l * l) * tau.v()) * std::max<Real>(1, std::abs(w));
        o.add(std::abs(theta(w, tau)) / growth);
      }
  }
  return o;
}

Outcome theta_zeros_unscaled(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    for (long long l = -2; l <= 2; ++l)
      for (long long m = -2; m <= 2; ++m) o.add(std::abs(theta(Real(l) * tau.tau() + Real(m), tau)));
  }
  return o;
}

// ---------------------------------------------------------------- Appell functions

Outcome bilateral(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(25); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, units(2)));
    Complex rhs = -I * std::pow(eta(tau), 3) * theta(z[0] + z[1], tau) / (theta(z[0], tau) * theta(z[1], tau));
    o.add(rel(bilateral_zeta_sum(z[0], z[1], tau).value, rhs));
  }
  return o;
}

std::vector<Locus> appell_loci() { return {{1, 0}, {0, 1}, {1, -1}, {1, 1}}; }

Outcome diag_shift(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, appell_loci(), 1));
    Complex t = tau.tau();
    o.add(rel(mu(z[0] + t, z[1] + t, tau), mu(z[0], z[1], tau)));
    o.add(rel(appell_A_series(z[0] + Real(1), z[1], tau).value, -appell_A_series(z[0], z[1], tau).value));
    Complex A0 = appell_A_series(z[0], z[1], tau).value;
    for (long long l = -2; l <= 2; ++l) {
      Real L = Real(l);
      Complex rhs = (l % 2 == 0 ? Real(1) : Real(-1)) * e2pi(-L * L * t / Real(2) - L * z[1]) * A0;
      o.add(rel(appell_A_series(z[0] + L * t, z[1] + L * t, tau).value, rhs));
    }
  }
  return o;
}

Outcome mu_translation(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    // z1, z2, z0, z1+z0, z2+z0 all off the lattice
    auto a = draw_alpha(c, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, -1, 0}, {1, 1, 1}});
    auto z = draw_z(c, tau, a);
    Complex z1 = z[0], z2 = z[1], z0 = z[2];
    Complex rhs = mu(z1, z2, tau) + I * std::pow(eta(tau), 3) * theta(z1 + z2 + z0, tau) * theta(z0, tau) /
                                        (theta(z1, tau) * theta(z2, tau) * theta(z1 + z0, tau) * theta(z2 + z0, tau));
    o.add(rel(mu(z1 + z0, z2 + z0, tau), rhs));
  }
  return o;
}

Outcome mu_rel(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(25); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, appell_loci()));
    Complex z1 = z[0], z2 = z[1], t = tau.tau();
    Complex m = mu(z1, z2, tau);
    Complex lhs = m + tau.qpow(-0.5) * e2pi(-z1 + z2) * mu(z1 + t, z2, tau);
    o.add(rel(lhs, -I * tau.qpow(Real(-1) / 8) * e2pi((-z1 + z2) / Real(2))));
    o.add(rel(mu(-z1, -z2, tau), m));
    o.add(rel(mu(z2, z1, tau), m));
    o.add(rel(-mu(z1 + Real(1), z2, tau), m));
    o.add(rel(mu(0.5, t / Real(2), tau), -tau.qpow(Real(1) / 8) / Real(2)));
  }
  return o;
}

Outcome half_period(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(25); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto a = draw_alpha(c, 1, {{1}, {2}});
    Complex z = draw_z(c, tau, a)[0], t = tau.tau();
    Complex half = t / Real(2);
    Complex rhs = -tau.qpow(Real(1) / 8) / Real(2) * theta(z - half + Real(0.5), tau) +
                  tau.qpow(0.25) / Real(2) * theta(half - Real(0.5), tau) * theta(z - half, tau) *
                      theta(z + Real(0.5), tau) / theta(z, tau);
    o.add(rel(appell_A(z, z - half + Real(0.5), tau), rhs));
  }
  return o;
}

Outcome A_hat_elliptic(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(4); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, appell_loci()));
    Complex base = appell_A_hat(z[0], z[1], tau), t = tau.tau();
    for (const auto& l : grid(2, 1))
      for (const auto& m : grid(2, 1)) {
        Real l1 = Real(l[0]), l2 = Real(l[1]);
        Real sign = ((l[0] + m[0]) % 2 == 0) ? 1 : -1;
        Complex f = sign * e2pi((l1 - l2) * z[0] - l1 * z[1] + (l1 * l1 / 2 - l1 * l2) * t);
        auto w = shifted({z[0], z[1]}, l, m, tau);
        o.add(rel(appell_A_hat(w[0], w[1], tau), f * base));
      }
  }
  return o;
}

Outcome A_hat_modular(RunContext& c) {
  Outcome o;
  VecFn f = [](const CVec& z, const ModularPoint& t) { return appell_A_hat(z[0], z[1], t); };
  Multiplier m = [](const SL2Matrix& g, const CVec& z, const ModularPoint& t) {
    Complex ct = g.cocycle(t.tau());
    return ct * std::exp(pi * I * Real(g.c) * (-z[0] * z[0] + Real(2) * z[0] * z[1]) / ct);
  };
  modular_panel(o, c, c.points(3), [&](const ModularPoint& tau) { return draw_z(c, tau, draw_alpha(c, 2, appell_loci())); },
                f, m);
  return o;
}

std::vector<Locus> triple_loci() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, -1, 0}, {1, 0, -1}, {1, -1, -1}}; }

Outcome F_closed_case(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, triple_loci()));
    o.add(rel(F_series(z[0], z[1], z[2], tau).value, F_closed(z[0], z[1], z[2], tau)));
  }
  return o;
}

Outcome F_star_closed_case(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, triple_loci()));
    o.add(rel(F_star_series(z[0], z[1], z[2], tau).value, F_star_closed(z[0], z[1], z[2], tau)));
  }
  return o;
}

Outcome quadrant(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, {{1, 0}, {0, 1}, {1, 1}}));
    Complex rhs = -I * std::pow(eta(tau), 3) * theta(z[0] + z[1], tau) / (theta(z[0], tau) * theta(z[1], tau));
    o.add(rel(signed_quadrant_sum(z[0], z[1], tau).value, rhs));
  }
  return o;
}

Outcome F_difference(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, triple_loci()));
    Complex lhs = F_star_series(z[0], z[1], z[2], tau).value - F_series(z[0], z[1], z[2], tau).value;
    Complex pre = tau.qpow(Real(-1) / 8) * e2pi((-z[0] + z[1] + z[2]) / Real(2));
    Complex rhs =
        -pre * I * std::pow(eta(tau), 3) * theta(z[1] + z[2], tau) / (theta(z[1], tau) * theta(z[2], tau));
    o.add(rel(lhs, rhs));
  }
  return o;
}

Outcome R_props(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1.5, 1.5);
    auto s = R_series(z, tau);
    o.add(rel(R(-z, tau), s.value));
    o.require(s.tail_bound <= 1e-12 * std::max<Real>(1, std::abs(s.value)), "R tail bound above 1e-12");
  }
  for (Real v : {Real(0.9), Real(1.5), Real(2)}) o.add(std::abs(R(0, ModularPoint(0, v)).imag()));
  return o;
}

Outcome T_case(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(10); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    ModularPoint t3 = tau.scaled(3);
    Complex t = tau.tau();
    o.add(std::abs(theta_quotient_T(Real(1) / 6, tau)));
    Complex z = draw_point(c, tau, 0.1, 0.4);
    Complex T = theta_quotient_T(z, tau);
    Complex direct = theta(Real(1.5) * t + Real(0.5), t3) * theta(Real(3) * z + Real(0.5), t3) *
                     theta(Real(3) * z + Real(1.5) * t, t3) / theta(Real(3) * z + Real(1.5) * t + Real(0.5), t3);
    o.add(rel(T, direct));
    o.add(rel(theta_quotient_T(z + Real(1), tau), -T));
    o.add(rel(theta_quotient_T(z + Real(2), tau), T));
  }
  return o;
}

Outcome T_period_plus(RunContext& c) {
  Outcome o;
  ModularPoint tau = sample_tau(c.rng);
  Complex z = draw_point(c, tau, 0.1, 0.4);
  o.add(rel(theta_quotient_T(z + Real(1), tau), theta_quotient_T(z, tau)));
  return o;
}

// ---------------------------------------------------------------- shape sums

const std::vector<std::vector<long long>>& unit_box(int r) {
  static const std::vector<std::vector<long long>> b[5] = {{}, grid(1, 1), grid(2, 1), grid(3, 1), grid(4, 1)};
  return b[r];
}

Prefactor law_f1(const std::vector<long long>& l) { return {-3 * l[0] * l[0], {-3 * l[0]}}; }
Prefactor law_f2(const std::vector<long long>& l) { return {-6 * l[0] * l[1], {-3 * l[1], -3 * l[0]}}; }
Prefactor law_f3(const std::vector<long long>& l) {
  return {-3 * (l[0] * l[0] - l[1] * l[1]), {-3 * l[0], 3 * l[1]}};
}
Prefactor law_f4(const std::vector<long long>& l) {
  return {-6 * l[0] * l[1] + 3 * l[2] * l[2], {-3 * l[1], -3 * l[0], 3 * l[2]}};
}
// f1 shift law with the opposite sign on the q exponent
Prefactor law_f1_plus(const std::vector<long long>& l) { return {3 * l[0] * l[0], {-3 * l[0]}}; }

VecFn fn_f1 = [](const CVec& z, const ModularPoint& t) { return f1(z[0], t); };
VecFn fn_f2 = [](const CVec& z, const ModularPoint& t) { return f2(v2(z), t); };
VecFn fn_f3 = [](const CVec& z, const ModularPoint& t) { return f3(v2(z), t); };
VecFn fn_f4 = [](const CVec& z, const ModularPoint& t) { return f4(v3(z), t); };
VecFn fn_g4 = [](const CVec& z, const ModularPoint& t) { return g4(v3(z), t); };
VecFn fn_f5 = [](const CVec& z, const ModularPoint& t) { return f5(v4(z), t); };
VecFn fn_f3_hat = [](const CVec& z, const ModularPoint& t) { return f3_hat(v2(z), t); };
VecFn fn_f4_hat = [](const CVec& z, const ModularPoint& t) { return f4_hat(v3(z), t); };

std::vector<Locus> loci_f3() { return {{0, 1}, {1, -1}}; }
std::vector<Locus> loci_g4() { return {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 0, 0}, {0, 1, 0}, {2, 2, -2}}; }
// loci of f4 = g4(z) + g4(-z1,-z2,z3)
std::vector<Locus> loci_f4() {
  return {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {2, 2, -2}, {2, 2, 2}};
}

struct ExactSpec {
  const QuadraticFormSpec* Q;
  const CharacteristicRegion* chi;
  std::vector<Locus> loci;
  StatedLaw law;
  long long box;
};

Outcome elliptic_case(RunContext& c, const ExactSpec& s, const VecFn& f, int npts) {
  Outcome o;
  const int r = s.Q->dim();
  auto alpha = draw_alpha(c, r, s.loci);
  exact_elliptic(o, *s.Q, *s.chi, alpha, s.law, 1, unit_box(r), s.box);
  for (int p = 0; p < npts; ++p) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, r, s.loci));
    numeric_elliptic(o, f, z, tau, s.law, unit_box(r), unit_box(r));
  }
  return o;
}

// exponent-level comparison for every built in form and region
Outcome all_forms_exact(RunContext& c) {
  Outcome o;
  using namespace series;
  struct Item {
    const QuadraticFormSpec* Q;
    const CharacteristicRegion* chi;
    std::vector<Locus> loci;
    long long box;
  };
  std::vector<Item> items{{&form_f1(), &region_full1(), {}, 6},
                          {&form_f2(), &region_chi2(), units(2), 5},
                          {&form_f3(), &region_chi3(), loci_f3(), 5},
                          {&form_f4(), &region_chi4(), loci_f4(), 3},
                          {&form_f4(), &region_g4(), loci_g4(), 3},
                          {&form_f5(), &region_chi5(), {}, 2}};
  for (const auto& it : items) {
    const int r = it.Q->dim();
    std::vector<Real> alpha;
    if (r == 4)
      alpha = {c.rng.uniform(0.1, 0.2), c.rng.uniform(0.1, 0.2), c.rng.uniform(0, 0.05), c.rng.uniform(0, 0.05)};
    else
      alpha = draw_alpha(c, r, it.loci);
    auto sig = it.Q->signature();
    o.require(sig.first == 1 && sig.second == r - 1, it.Q->name() + ": signature is not (1, r-1)");
    auto law = [&](const std::vector<long long>& l) { return generic_prefactor(*it.Q, l); };
    std::vector<std::vector<long long>> ms = unit_box(r);
    if (r == 4) ms = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, 1, -1}};
    exact_elliptic(o, *it.Q, *it.chi, alpha, law, 1, ms, it.box);
    ++o.points;
  }
  return o;
}

// triangles

Outcome f1_theta(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(30); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z = draw_point(c, tau, -1.5, 1.5);
    o.add(rel(f1(z, tau), f1_theta_form(z, tau)));
  }
  return o;
}

Outcome f1_elliptic(RunContext& c) {
  return elliptic_case(c, {&series::form_f1(), &series::region_full1(), {}, law_f1, 6}, fn_f1, c.points(8));
}

Outcome f1_elliptic_plus(RunContext& c) {
  Outcome o;
  ModularPoint tau = sample_tau(c.rng);
  auto z = draw_z(c, tau, draw_alpha(c, 1, {}));
  numeric_elliptic(o, fn_f1, z, tau, law_f1_plus, {{1}, {-1}}, {{0}});
  return o;
}

Outcome f1_modular(RunContext& c) {
  Outcome o;
  Multiplier m = [](const SL2Matrix& g, const CVec& z, const ModularPoint& t) {
    Complex ct = g.cocycle(t.tau());
    return Real(kronecker_symbol(3 * g.c, g.d)) * std::exp(pi * I * Real(g.d - 1) / Real(4)) * half_power(ct, 1) *
           std::exp(Real(3) * pi * I * Real(g.c) * z[0] * z[0] / ct);
  };
  modular_panel(o, c, c.points(3), [&](const ModularPoint& tau) { return CVec{draw_point(c, tau, -1, 1)}; }, fn_f1, m);
  return o;
}

// parallelograms

Outcome f2_symmetry(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(20); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, units(2), 1));
    o.add(rel(f2({z[1], z[0]}, tau), f2(v2(z), tau)));
  }
  return o;
}

Outcome f2_closed_case(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(50); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, units(2), 1));
    o.add(rel(f2(v2(z), tau), f2_closed(v2(z), tau)));
  }
  return o;
}

Outcome f2_elliptic(RunContext& c) {
  return elliptic_case(c, {&series::form_f2(), &series::region_chi2(), units(2), law_f2, 5}, fn_f2, c.points(3));
}

Outcome f2_modular(RunContext& c) {
  Outcome o;
  VecFn f = [](const CVec& z, const ModularPoint& t) { return f2_closed(v2(z), t); };
  Multiplier m = [](const SL2Matrix& g, const CVec& z, const ModularPoint& t) {
    Complex ct = g.cocycle(t.tau());
    return ct * std::exp(Real(6) * pi * I * Real(g.c) * z[0] * z[1] / ct);
  };
  // the panel plus two elements of Gamma0(3) outside Gamma(2)
  std::vector<SL2Matrix> mats = *c.panel;
  mats.push_back(SL2Matrix::make(1, 0, 3, 1));
  mats.push_back(SL2Matrix::make(-1, 1, -3, 2));
  for (int p = 0; p < c.points(3); ++p) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, units(2)));
    for (const auto& g : mats) o.add(modular_residual(f, m, g, z, tau));
  }
  // the raw sum obeys the same law where it can be evaluated directly on both sides
  for (int p = 0; p < c.points(3); ++p) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, units(2)));
    o.add(modular_residual(fn_f2, m, SL2Matrix::make(1, 2, 0, 1), z, tau));
  }
  return o;
}

// points with y2 = l v and x2 - l u = x
CVec on_wall(RunContext& c, const ModularPoint& tau, Real x, long long l) {
  auto a = sample_alpha(c.rng, 1, {{1}}, 0.05, 0.95, 0.1);
  Complex z1 = draw_z(c, tau, a)[0];
  return {z1, Real(l) * tau.tau() + x};
}

Real generic_third(RunContext& c) {
  for (;;) {
    Real x = c.rng.uniform(-0.5, 0.5);
    if (distance_to_integer(3 * x) > 0.3) return x;
  }
}

Outcome f2_limits(RunContext& c, int which) {
  LimitLog log{{}, 1e-6};
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    long long l = c.rng.integer(-1, 1);
    Real x = which < 2 ? Real(c.rng.integer(-1, 2)) / 3 : generic_third(c);
    auto z = on_wall(c, tau, x, l);
    JumpReport r = which == 0   ? limits::f2_pole_jump(z[0], z[1], tau)
                   : which == 1 ? limits::f2_pole_limit(z[0], z[1], tau)
                   : which == 2 ? limits::f2_jump(z[0], z[1], tau)
                                : limits::f2_limit(z[0], z[1], tau);
    log.record(r);
  }
  return log.done();
}

// trapezoids

Outcome f3_appell(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(50); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, loci_f3(), 1));
    o.add(rel(f3(v2(z), tau), f3_closed(v2(z), tau)));
  }
  return o;
}

Outcome f3_elliptic(RunContext& c) {
  return elliptic_case(c, {&series::form_f3(), &series::region_chi3(), loci_f3(), law_f3, 5}, fn_f3, c.points(3));
}

Multiplier mult_f3 = [](const SL2Matrix& g, const CVec& z, const ModularPoint& t) {
  Complex ct = g.cocycle(t.tau());
  return ct * std::exp(pi * I * Real(g.c) * (Real(3) * z[0] * z[0] - Real(3) * z[1] * z[1]) / ct);
};

Outcome f3_hat_modular(RunContext& c) {
  Outcome o;
  modular_panel(o, c, c.points(3), [&](const ModularPoint& tau) { return draw_z(c, tau, draw_alpha(c, 2, loci_f3())); },
                fn_f3_hat, mult_f3);
  return o;
}

Outcome f3_hat_elliptic(RunContext& c) {
  Outcome o;
  for (int p = 0; p < c.points(3); ++p) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 2, loci_f3()));
    numeric_elliptic(o, fn_f3_hat, z, tau, law_f3, unit_box(2), unit_box(2));
  }
  return o;
}

Outcome f3_limit_general(RunContext& c) {
  LimitLog log{{}, 1e-6};
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = on_wall(c, tau, c.rng.uniform(-0.5, 0.5), c.rng.integer(-1, 1));
    log.record(limits::f3_limit(z[0], z[1], tau));
  }
  return log.done();
}

Outcome f3_limit_lattice(RunContext& c) {
  LimitLog log{{}, 1e-6};
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    Complex z1 = draw_z(c, tau, draw_alpha(c, 1, {}))[0];
    log.record(limits::f3_limit_lattice(z1, c.rng.integer(-1, 1), c.rng.integer(-1, 1), tau));
  }
  return log.done();
}

Outcome f3_jump(RunContext& c) {
  LimitLog log{{}, 1e-6};
  for (int k = 0; k < c.points(5); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = on_wall(c, tau, c.rng.uniform(-0.5, 0.5), c.rng.integer(-1, 1));
    log.record(limits::f3_jump(z[0], z[1], tau));
  }
  return log.done();
}

// pentagons

Outcome f4_symmetry(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(10); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, loci_f4()));
    o.add(rel(f4({z[1], z[0], z[2]}, tau), f4(v3(z), tau)));
  }
  return o;
}

Outcome g4_F_star(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(25); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, loci_g4(), 1));
    Complex raw = g4(v3(z), tau);
    o.add(rel(raw, g4_via_F_star_series(v3(z), tau)));
    o.add(rel(raw, g4_closed(v3(z), tau)));
  }
  return o;
}

Outcome f4_split(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(10); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = draw_z(c, tau, draw_alpha(c, 3, loci_f4()));
    o.add(rel(f4(v3(z), tau), g4(v3(z), tau) + g4({-z[0], -z[1], z[2]}, tau)));
    o.add(rel(f4(v3(z), tau), f4_closed(v3(z), tau)));
  }
  // term level: chi4 = g4 region plus its image under (x1,x2,x3) -> (-x1,-x2,x3)
  auto a = draw_alpha(c, 3, loci_f4());
  for (const auto& n : grid(3, 4)) {
    std::vector<Real> x{Real(n[0]) + a[0], Real(n[1]) + a[1], Real(n[2]) + a[2]};
    std::vector<Real> xr{-x[0], -x[1], x[2]};
    Real lhs = series::region_chi4()(x), rhs = series::region_g4()(x) + series::region_g4()(xr);
    o.require(lhs == rhs, "chi4 differs from the symmetrised g4 region at n=" + vec_str(n));
  }
  return o;
}

Outcome f4_elliptic(RunContext& c) {
  return elliptic_case(c, {&series::form_f4(), &series::region_chi4(), loci_f4(), law_f4, 3}, fn_f4, c.points(1));
}

Outcome g4_elliptic(RunContext& c) {
  return elliptic_case(c, {&series::form_f4(), &series::region_g4(), loci_g4(), law_f4, 3}, fn_g4, c.points(1));
}

Multiplier mult_f4 = [](const SL2Matrix& g, const CVec& z, const ModularPoint& t) {
  Complex ct = g.cocycle(t.tau());
  return Real(kronecker_symbol(3 * g.c, g.d)) * std::exp(pi * I * Real(1 - g.d) / Real(4)) * half_power(ct, 3) *
         std::exp(pi * I * Real(g.c) * (Real(6) * z[0] * z[1] - Real(3) * z[2] * z[2]) / ct);
};

Outcome f4_hat_modular(RunContext& c) {
  Outcome o;
  modular_panel(o, c, c.points(3), [&](const ModularPoint& tau) { return draw_z(c, tau, draw_alpha(c, 3, loci_f4())); },
                fn_f4_hat, mult_f4);
  return o;
}

Outcome f4_hat_elliptic(RunContext& c) {
  Outcome o;
  ModularPoint tau = sample_tau(c.rng);
  auto z = draw_z(c, tau, draw_alpha(c, 3, loci_f4()));
  numeric_elliptic(o, fn_f4_hat, z, tau, law_f4, unit_box(3), unit_box(3));
  return o;
}

// alpha for a point with y on the walls selected by the shape of the jump
enum class Wall { g4_z3, g4_z1, g4_z2, f4_z3, f4_minus, f4_plus, f4_both };

std::vector<Real> wall_alpha(RunContext& c, Wall w) {
  const Real gap = 0.08;
  auto lvl = [&] { return Real(c.rng.integer(-1, 1)); };
  for (;;) {
    std::vector<Real> a{c.rng.uniform(0.05, 0.95), c.rng.uniform(0.05, 0.95), c.rng.uniform(0.05, 0.95)};
    std::vector<Locus> off;
    switch (w) {
      case Wall::g4_z3:
        a[2] = lvl();
        off = {{1, 0, -1}, {0, 1, -1}, {1, 1, -1}, {2, 2, -2}};
        break;
      case Wall::g4_z1:
        a[0] = a[2] + lvl();
        off = {{0, 0, 1}, {0, 1, -1}, {0, 1, 0}, {2, 2, -2}};
        break;
      case Wall::g4_z2:
        a[1] = a[2] + lvl();
        off = {{0, 0, 1}, {1, 0, -1}, {1, 0, 0}, {2, 2, -2}};
        break;
      case Wall::f4_z3:
        a[2] = lvl();
        off = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 2, 0}};
        break;
      case Wall::f4_minus:
        a[0] = a[2] + lvl();
        off = {{0, 0, 1}, {0, 0, 2}, {0, 1, -1}, {0, 1, 1}, {0, 1, 0}, {2, 2, -2}, {2, 2, 2}};
        break;
      case Wall::f4_plus:
        a[0] = -a[2] + lvl();
        off = {{0, 0, 1}, {0, 0, 2}, {0, 1, -1}, {0, 1, 1}, {0, 1, 0}, {2, 2, -2}, {2, 2, 2}};
        break;
      case Wall::f4_both:
        a[2] = Real(0.5) + lvl();
        a[0] = a[2] + lvl();
        off = {{0, 1, -1}, {0, 1, 1}, {0, 1, 0}, {2, 2, -2}, {2, 2, 2}};
        break;
    }
    bool ok = true;
    for (const auto& L : off) ok = ok && distance_to_integer(L[0] * a[0] + L[1] * a[1] + L[2] * a[2]) >= gap;
    if (ok) return a;
  }
}

Outcome wall_jump(RunContext& c, Wall w) {
  LimitLog log{{}, 1e-6};
  for (int k = 0; k < c.points(3); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto z = v3(draw_z(c, tau, wall_alpha(c, w)));
    JumpReport r;
    switch (w) {
      case Wall::g4_z3: r = limits::g4_jump_z3(z, tau); break;
      case Wall::g4_z1: r = limits::g4_jump_z1(z, tau); break;
      case Wall::g4_z2: r = limits::g4_jump_z2(z, tau); break;
      case Wall::f4_z3: r = limits::f4_jump_z3(z, tau); break;
      case Wall::f4_minus: r = limits::f4_jump_z1_minus(z, tau); break;
      case Wall::f4_plus: r = limits::f4_jump_z1_plus(z, tau); break;
      case Wall::f4_both: r = limits::f4_jump_z1_both(z, tau); break;
    }
    log.record(r);
  }
  return log.done();
}

Outcome g4_limit_zero(RunContext& c, bool below) {
  LimitLog log{{}, 1e-5};
  for (int k = 0; k < c.points(3); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    auto a = sample_alpha(c.rng, 2, {{1, 0}, {0, 1}, {1, 1}, {2, 2}, {2, 0}, {0, 2}}, 0.05, 0.95, 0.08);
    auto z = draw_z(c, tau, a);
    log.record(below ? limits::g4_limit_z3_zero_below(z[0], z[1], tau) : limits::g4_limit_z3_zero(z[0], z[1], tau));
  }
  return log.done();
}

Outcome g4_limit_wall(RunContext& c, bool first) {
  LimitLog log{{}, 1e-5};
  for (int k = 0; k < c.points(3); ++k) {
    ModularPoint tau = sample_tau(c.rng);
    // (z_other, z3)
    auto a = sample_alpha(c.rng, 2, {{1, 0}, {2, 0}, {0, 1}, {1, -1}, {1, 1}}, 0.05, 0.95, 0.08);
    a[0] += Real(c.rng.integer(-1, 1));
    a[1] += Real(c.rng.integer(-1, 1));
    auto z = draw_z(c, tau, a);
    log.record(first ? limits::g4_limit_z1_to_z3(z[0], z[1], tau) : limits::g4_limit_z2_to_z3(z[0], z[1], tau));
  }
  return log.done();
}

// hexagons

bool in_D(const std::array<Real, 4>& x) {
  Real m = std::min(std::abs(x[0]), std::abs(x[1]));
  return std::abs(x[2]) <= m && std::abs(x[3]) <= m && x[0] * x[1] >= 0 && x[0] * x[2] >= 0 && x[0] * x[3] >= 0;
}

Complex f5_brute(const Vec4& z, const ModularPoint& tau, long long N) {
  const Real v = tau.v();
  Complex s = 0;
  for (long long n1 = -N; n1 <= N; ++n1)
    for (long long n2 = -N; n2 <= N; ++n2)
      for (long long n3 = -N; n3 <= N; ++n3)
        for (long long n4 = -N; n4 <= N; ++n4) {
          std::array<Real, 4> x{Real(n1) + z[0].imag() / v, Real(n2) + z[1].imag() / v, Real(n3) + z[2].imag() / v,
                                Real(n4) + z[3].imag() / v};
          if (!in_D(x)) continue;
          Real w = sgn(x[0] - x[2]);
          if (w == 0) continue;
          Complex e = Real(3 * n1 * n2) * tau.tau() - Real(1.5) * Real(n3 * n3 + n4 * n4) * tau.tau() +
                      Real(3 * n2) * z[0] + Real(3 * n1) * z[1] - Real(3 * n3) * z[2] - Real(3 * n4) * z[3];
          s += w * e2pi(e);
        }
  return s;
}

std::vector<Real> f5_alpha(RunContext& c) {
  return {c.rng.uniform(0.1, 0.2), c.rng.uniform(0.1, 0.2), c.rng.uniform(0.01, 0.05), c.rng.uniform(0.01, 0.05)};
}

Outcome f5_brute_force(RunContext& c) {
  Outcome o;
  for (int k = 0; k < c.points(10); ++k) {
    ModularPoint tau = sample_tau(c.rng, 1.2, 2.5);
    auto z = v4(draw_z(c, tau, f5_alpha(c)));
    o.add(rel(f5(z, tau), f5_brute(z, tau, 20)));
  }
  return o;
}

Outcome f5_elliptic(RunContext& c) {
  Outcome o;
  const auto& Q = series::form_f5();
  auto law = [&](const std::vector<long long>& l) { return generic_prefactor(Q, l); };
  exact_elliptic(o, Q, series::region_chi5(), f5_alpha(c), law, 1,
                 {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {1, -1, 1, -1}}, 2);
  ModularPoint tau = sample_tau(c.rng, 1.2, 2.5);
  auto z = draw_z(c, tau, f5_alpha(c));
  numeric_elliptic(o, fn_f5, z, tau, law, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}, {{0, 1, 0, 0}});
  return o;
}

Outcome f5_sign(RunContext& c) {
  Outcome o;
  auto a = f5_alpha(c);
  const auto& chi = series::region_chi5();
  for (const auto& n : grid(4, 3)) {
    std::vector<Real> x(4), xr(4);
    for (int j = 0; j < 4; ++j) {
      x[static_cast<std::size_t>(j)] = Real(n[static_cast<std::size_t>(j)]) + a[static_cast<std::size_t>(j)];
      xr[static_cast<std::size_t>(j)] = -x[static_cast<std::size_t>(j)];
    }
    o.require(chi(xr) == -chi(x), "chi5(-x) != -chi5(x) at n=" + vec_str(n));
  }
  for (int k = 0; k < c.points(3); ++k) {
    ModularPoint tau = sample_tau(c.rng, 1.2, 2.5);
    auto z = v4(draw_z(c, tau, f5_alpha(c)));
    o.add(rel(f5({-z[0], -z[1], -z[2], -z[3]}, tau), -f5(z, tau)));
  }
  return o;
}

// ---------------------------------------------------------------- oracle

using geometry::Shape;

// alpha for a reference polygon of the shape, away from degenerate and non generic configurations
std::vector<Real> oracle_alpha(RunContext& c, Shape s) {
  const auto& spec = geometry::shape_spec(s);
  const int r = spec.r;
  std::vector<Locus> loci = units(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (Real sg : {Real(1), Real(-1)}) {
        Locus L(static_cast<std::size_t>(r), 0);
        L[static_cast<std::size_t>(i)] = 1;
        L[static_cast<std::size_t>(j)] = sg;
        loci.push_back(L);
      }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto a = sample_alpha(c.rng, r, loci, 0.05, 0.95, 0.1);
    if (s == Shape::trapezoid && !(a[1] < a[0])) continue;
    if (s == Shape::pentagon && !(a[2] < std::min(a[0], a[1]))) continue;
    try {
      auto ref = geometry::make_reference(s, a);
      if (!geometry::generic_offsets(ref)) continue;
    } catch (const DomainError&) {
      continue;
    }
    return a;
  }
  throw ConfigError("no admissible reference polygon found for " + spec.name);
}

std::vector<Real> draw_beta(RunContext& c, int r) {
  std::vector<Real> b;
  for (int j = 0; j < r; ++j) b.push_back(c.rng.uniform(-0.5, 0.5));
  return b;
}

Outcome oracle_match(RunContext& c, Shape s, geometry::PentagonMode mode) {
  Outcome o;
  const int r = geometry::shape_spec(s).r;
  for (int k = 0; k < 2; ++k) {
    auto a = oracle_alpha(c, s);
    auto b = draw_beta(c, r);
    auto rep = geometry::crosscheck(s, a, b, c.area_max, mode);
    o.add(std::max(rep.max_area_error, rep.max_linear_error));
    o.require(rep.only_geometric == 0 && rep.only_algebraic == 0 && rep.sign_mismatch == 0,
              rep.shape + ": " + std::to_string(rep.only_geometric) + " geometric only, " +
                  std::to_string(rep.only_algebraic) + " algebraic only, " + std::to_string(rep.sign_mismatch) +
                  " sign mismatches");
    o.require(rep.matched > 0, rep.shape + ": no terms below the cutoff");
    if (rep.overall_sign != 1) o.require(false, rep.shape + ": every sign flipped");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(rep.matched) + " terms";
  }
  return o;
}

const std::vector<Shape>& core_shapes() {
  static const std::vector<Shape> v{Shape::triangle, Shape::parallelogram, Shape::trapezoid, Shape::pentagon};
  return v;
}

Outcome area_consistency(RunContext& c) {
  Outcome o;
  for (Shape s : core_shapes()) {
    const auto& spec = geometry::shape_spec(s);
    auto ref = geometry::make_reference(s, oracle_alpha(c, s));
    geometry::EnumerationOptions opt;
    opt.q_cut = c.area_max;
    for (const auto& p : geometry::enumerate(ref, opt).instances) {
      o.add(std::abs(p.area - std::sqrt(Real(3)) / 2 * spec.form->Q(p.x)));
      o.require(p.area <= std::sqrt(Real(3)) / 2 * c.area_max * (1 + 1e-12), spec.name + ": instance above cutoff");
    }
  }
  return o;
}

Outcome edge_determinism(RunContext& c) {
  Outcome o;
  for (Shape s : core_shapes()) {
    const auto& spec = geometry::shape_spec(s);
    auto ref = geometry::make_reference(s, oracle_alpha(c, s));
    geometry::EnumerationOptions opt;
    opt.q_cut = c.area_max;
    for (const auto& p : geometry::enumerate(ref, opt).instances) {
      const auto N = static_cast<std::size_t>(spec.N);
      Real ex = 0, ey = 0;
      for (std::size_t k = 0; k < N; ++k) {
        Real th = spec.direction_deg[k] * pi / 180;
        Real dx = std::sqrt(Real(3)) * std::cos(th) * p.lengths[k], dy = std::sqrt(Real(3)) * std::sin(th) * p.lengths[k];
        const auto& A = p.vertices[k];
        const auto& B = p.vertices[(k + 1) % N];
        o.add(std::hypot(B[0] - A[0] - dx, B[1] - A[1] - dy));
        ex += dx;
        ey += dy;
      }
      o.add(std::hypot(ex, ey));
      // closing lengths from the table
      for (std::size_t k = 0; k < N; ++k) {
        Real l = 0;
        for (std::size_t j = 0; j < p.x.size(); ++j) l += Real(spec.lengths[k * p.x.size() + j]) * p.x[j];
        o.add(std::abs(l - p.lengths[k]));
      }
    }
  }
  return o;
}

Outcome translation_invariance(RunContext& c) {
  Outcome o;
  for (Shape s : core_shapes()) {
    auto ref = geometry::make_reference(s, oracle_alpha(c, s));
    geometry::EnumerationOptions a, b;
    a.q_cut = b.q_cut = c.area_max;
    auto r1 = geometry::TriangularLattice::rho1(), r2 = geometry::TriangularLattice::rho2();
    long long i = c.rng.integer(-3, 3), j = c.rng.integer(-3, 3);
    b.translate = {Real(i) * r1[0] + Real(j) * r2[0], Real(i) * r1[1] + Real(j) * r2[1]};
    auto e1 = geometry::enumerate(ref, a), e2 = geometry::enumerate(ref, b);
    o.require(e1.instances.size() == e2.instances.size(), "instance counts differ");
    for (std::size_t k = 0; k < std::min(e1.instances.size(), e2.instances.size()); ++k) {
      o.require(e1.instances[k].n == e2.instances[k].n && e1.instances[k].sign == e2.instances[k].sign,
                "instance " + vec_str(e1.instances[k].n) + " differs");
      o.add(std::abs(e1.instances[k].area - e2.instances[k].area));
    }
  }
  return o;
}

Outcome chi_equiv(RunContext& c) {
  Outcome o;
  auto run = [&](Shape s, geometry::PentagonMode m) {
    auto rep = geometry::chi_equivalence(s, oracle_alpha(c, s), 6, m);
    o.require(rep.disagreements == 0, geometry::shape_spec(s).name + ": " + std::to_string(rep.disagreements) +
                                          " of " + std::to_string(rep.candidates) + " candidates disagree");
    o.points += rep.candidates;
  };
  for (Shape s : core_shapes()) run(s, geometry::PentagonMode::union_f4);
  run(Shape::pentagon, geometry::PentagonMode::single_g4);
  return o;
}

Outcome geometric_sum(RunContext& c) {
  Outcome o;
  for (Shape s : core_shapes()) {
    const auto& spec = geometry::shape_spec(s);
    if (s == Shape::pentagon) continue;  // two reference polygons, covered by the term match
    auto a = oracle_alpha(c, s);
    auto ref = geometry::make_reference(s, a);
    geometry::EnumerationOptions opt;
    opt.q_cut = c.area_max;
    auto e = geometry::enumerate(ref, opt);
    ModularPoint tau = sample_tau(c.rng);
    auto bstar = draw_beta(c, spec.N);
    auto beta = geometry::beta_from_star(spec, bstar);
    Complex g = geometry::geometric_generating_sum(e, geometry::w_from_tau(tau.tau()), bstar);
    Complex alg = geometry::algebraic_partial_sum(spec, *spec.region, a, beta, tau.tau(), c.area_max, e.radius);
    o.add(rel(g, alg));
  }
  return o;
}

Outcome hexagon_explore(RunContext& c) {
  Outcome o;
  std::vector<Real> a{0.14, 0.36, 0.5, 0.75};
  auto rep = geometry::crosscheck(Shape::hexagon, a, draw_beta(c, 4), 5);
  o.add(std::max(rep.max_area_error, rep.max_linear_error));
  o.require(rep.perfect(), "hexagon: " + std::to_string(rep.only_geometric) + " geometric only, " +
                               std::to_string(rep.only_algebraic) + " algebraic only");
  o.detail = std::to_string(rep.matched) + " hexagons matched against the region D terms";
  return o;
}

// ---------------------------------------------------------------- registry

std::vector<VerificationCase> build() {
  std::vector<VerificationCase> v;
  auto add = [&](std::string id, std::string suite, std::string summary, Real tol, std::function<Outcome(RunContext&)> f,
                 bool info = false) {
    v.push_back({std::move(id), std::move(suite), std::move(summary), tol, info, std::move(f)});
  };
  const std::string P = "preliminaries";
  add("numerics.E_odd", P, "E(-x) = -E(x)", 1e-14, E_odd);
  add("numerics.E_quadrature", P, "E against Gauss-Legendre quadrature, monotone", 1e-13, E_quad);
  add("numerics.kronecker_bruteforce", P, "Kronecker symbol against squares mod p", 0, kronecker_brute);
  add("numerics.kronecker_multiplicative", P, "Kronecker symbol multiplicative in both slots", 0, kronecker_mult);
  add("numerics.nu_eta_roots", P, "nu_eta values are 24th roots of unity", 1e-13, nu_roots);
  add("numerics.nu_eta_cocycle", P, "nu_eta(gh)/(nu_eta(g)nu_eta(h)) is a 24th root of unity", 1e-12, nu_cocycle);
  add("numerics.nu_eta_vs_eta", P, "eta(g tau) = nu_eta(g) (c tau+d)^(1/2) eta(tau)", 1e-11, nu_vs_eta);
  add("numerics.subgroups", P, "congruence subgroup membership", 0, subgroups);
  add("eta.series_vs_product", P, "pentagonal series equals the product", 1e-12, eta_dual);
  add("eta.translation", P, "eta(tau+1) = e(1/24) eta(tau)", 1e-12, eta_translate);
  add("theta.series_vs_product", P, "theta series equals the triple product", 1e-12, theta_dual);
  add("theta.odd", P, "theta(-z) = -theta(z)", 1e-12, theta_odd);
  add("theta.quasi_period", P, "theta(z + l tau + m) quasi periodicity", 1e-11, theta_quasi);
  add("theta.eta_cube", P, "eta^3 / (theta(1/2) theta(tau/2)) as a theta value", 1e-11, theta_eta_cube);
  add("theta.modular", P, "theta under SL2(Z) with multiplier nu_eta^3", 1e-10, theta_mod);
  add("theta.zero_set", P, "theta vanishes on Z tau + Z", 1e-12, theta_zeros);
  add("theta.zero_set_unscaled", P, "|theta(l tau + m)| at rounded lattice points", 1e-12, theta_zeros_unscaled, true);
  add("appell.bilateral_zeta_sum", P, "bilateral zeta sum as a theta quotient", 1e-10, bilateral);
  add("appell.diagonal_shift", P, "mu and A under simultaneous tau shifts", 1e-11, diag_shift);
  add("appell.mu_shift", P, "mu(z1+z0, z2+z0) - mu(z1, z2) as a theta quotient", 1e-10, mu_translation);
  add("appell.mu_relations", P, "mu under z1 -> z1+tau, symmetries, mu(1/2, tau/2)", 1e-11, mu_rel);
  add("appell.half_period", P, "A(z, z - tau/2 + 1/2) in theta functions", 1e-11, half_period);
  add("appell.completion_elliptic", P, "completed A elliptic law", 1e-10, A_hat_elliptic);
  add("appell.completion_modular", P, "completed A modular law on the panel", 1e-9, A_hat_modular);
  add("appell.F_closed", P, "triple sum F through mu and theta", 1e-10, F_closed_case);
  add("appell.F_star_closed", P, "triple sum F* through mu and theta", 1e-10, F_star_closed_case);
  add("appell.quadrant_sum", P, "signed quadrant sum as a theta quotient", 1e-10, quadrant);
  add("appell.F_star_minus_F", P, "F* - F via the quadrant sum", 1e-10, F_difference);
  add("appell.R_symmetry", P, "R even, real on the imaginary axis, tail below 1e-12", 1e-12, R_props);
  add("appell.T_quotient", P, "T(1/6) = 0, T(z+1) = -T(z), equals its theta composition", 1e-11, T_case);
  add("appell.T_period_plus", P, "T(z+1) = T(z)", 1e-11, T_period_plus, true);
  add("indefinite.elliptic_exact", P, "exponent level shift law for every built in form", 0, all_forms_exact);

  const std::string T = "triangles";
  add("f1.theta_form", T, "triangle sum as a theta value at 3 tau", 1e-11, f1_theta);
  add("f1.elliptic", T, "triangle sum shift law, exact and numeric", 1e-11, f1_elliptic);
  add("f1.elliptic_plus_sign", T, "shift law with factor q^(+3l^2/2)", 1e-11, f1_elliptic_plus, true);
  add("f1.modular", T, "triangle sum modular law on the panel", 1e-9, f1_modular);

  const std::string Pa = "parallelograms";
  add("f2.symmetry", Pa, "f2(z1,z2) = f2(z2,z1)", 1e-12, f2_symmetry);
  add("f2.closed_form", Pa, "parallelogram sum as a theta quotient", 1e-10, f2_closed_case);
  add("f2.elliptic", Pa, "parallelogram sum shift law, exact and numeric", 1e-11, f2_elliptic);
  add("f2.modular", Pa, "parallelogram sum modular law on Gamma0(3)", 1e-9, f2_modular);
  add("f2.jump.pole_weighted", Pa, "eps times the jump at a pole line", 1e-6, [](RunContext& c) { return f2_limits(c, 0); });
  add("f2.limit.pole_weighted", Pa, "eps times the one sided limit at a pole line", 1e-6, [](RunContext& c) { return f2_limits(c, 1); });
  add("f2.jump.generic", Pa, "no jump across a generic wall point", 1e-6, [](RunContext& c) { return f2_limits(c, 2); });
  add("f2.limit.generic", Pa, "one sided limit at a generic wall point", 1e-6, [](RunContext& c) { return f2_limits(c, 3); });

  const std::string Tr = "trapezoids";
  add("f3.appell_form", Tr, "trapezoid sum as an Appell function", 1e-10, f3_appell);
  add("f3.elliptic", Tr, "trapezoid sum shift law, exact and numeric", 1e-11, f3_elliptic);
  add("f3.completion_modular", Tr, "completed trapezoid sum modular law", 1e-9, f3_hat_modular);
  add("f3.completion_elliptic", Tr, "completed trapezoid sum shift law", 1e-10, f3_hat_elliptic);
  add("f3.limit.general", Tr, "one sided limit onto y2 in Z v", 1e-6, f3_limit_general);
  add("f3.limit.lattice_point", Tr, "one sided limit at z2 = l tau + m", 1e-6, f3_limit_lattice);
  add("f3.jump", Tr, "jump across y2 in Z v", 1e-6, f3_jump);

  const std::string Pe = "pentagons";
  add("f4.symmetry", Pe, "f4(z1,z2,z3) = f4(z2,z1,z3)", 1e-11, f4_symmetry);
  add("g4.F_star_form", Pe, "half pentagon sum through F*", 1e-9, g4_F_star);
  add("f4.split", Pe, "f4 = g4(z) + g4(-z1,-z2,z3), terms and values", 1e-9, f4_split);
  add("f4.elliptic", Pe, "pentagon sum shift law, exact and numeric", 1e-11, f4_elliptic);
  add("g4.elliptic", Pe, "half pentagon sum shift law, exact and numeric", 1e-11, g4_elliptic);
  add("f4.completion_modular", Pe, "completed pentagon sum modular law", 1e-8, f4_hat_modular);
  add("f4.completion_elliptic", Pe, "completed pentagon sum shift law", 1e-9, f4_hat_elliptic);
  add("g4.jump.z3", Pe, "jump of g4 across y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::g4_z3); });
  add("g4.jump.z1", Pe, "jump of g4 across y1 - y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::g4_z1); });
  add("g4.jump.z2", Pe, "jump of g4 across y2 - y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::g4_z2); });
  add("f4.jump.z3", Pe, "no jump of f4 across y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::f4_z3); });
  add("f4.jump.z1_minus", Pe, "jump of f4 across y1 - y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::f4_minus); });
  add("f4.jump.z1_plus", Pe, "jump of f4 across y1 + y3 in Z v", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::f4_plus); });
  add("f4.jump.z1_both", Pe, "jump of f4 across both walls at once", 1e-6, [](RunContext& c) { return wall_jump(c, Wall::f4_both); });
  add("g4.limit.z3_zero", Pe, "g4(z1, z2, i eps) as eps -> 0+", 1e-5, [](RunContext& c) { return g4_limit_zero(c, false); });
  add("g4.limit.z3_zero_below", Pe, "g4(z1, z2, -i eps) as eps -> 0+", 1e-5, [](RunContext& c) { return g4_limit_zero(c, true); });
  add("g4.limit.z1_to_z3", Pe, "g4(z3 + i eps, z2, z3) as eps -> 0+", 1e-5, [](RunContext& c) { return g4_limit_wall(c, true); });
  add("g4.limit.z2_to_z3", Pe, "g4(z1, z3 + i eps, z3) as eps -> 0+", 1e-5, [](RunContext& c) { return g4_limit_wall(c, false); });

  const std::string O = "oracle";
  using geometry::PentagonMode;
  add("oracle.triangle", O, "triangle enumeration against the f1 terms", 1e-12,
      [](RunContext& c) { return oracle_match(c, Shape::triangle, PentagonMode::union_f4); });
  add("oracle.parallelogram", O, "parallelogram enumeration against the f2 terms", 1e-12,
      [](RunContext& c) { return oracle_match(c, Shape::parallelogram, PentagonMode::union_f4); });
  add("oracle.trapezoid", O, "trapezoid enumeration against the f3 terms", 1e-12,
      [](RunContext& c) { return oracle_match(c, Shape::trapezoid, PentagonMode::union_f4); });
  add("oracle.pentagon", O, "two reference pentagons against the f4 terms", 1e-12,
      [](RunContext& c) { return oracle_match(c, Shape::pentagon, PentagonMode::union_f4); });
  add("oracle.pentagon_g4", O, "one reference pentagon against the g4 terms", 1e-12,
      [](RunContext& c) { return oracle_match(c, Shape::pentagon, PentagonMode::single_g4); });
  add("oracle.area_consistency", O, "area = (sqrt3/2) Q(n + alpha) per instance", 1e-12, area_consistency);
  add("oracle.edge_determinism", O, "edges follow from the independent lengths", 1e-12, edge_determinism);
  add("oracle.translation_invariance", O, "lattice translates give the same instances", 1e-12, translation_invariance);
  add("oracle.chi_equivalence", O, "geometric indicator equals chi on every candidate", 0, chi_equiv);
  add("oracle.geometric_sum", O, "weighted geometric sum equals the algebraic partial sum", 1e-12, geometric_sum);

  const std::string H = "hexagon-explore";
  add("f5.brute_force", H, "hexagon sum against a plain box loop", 1e-10, f5_brute_force);
  add("f5.elliptic_exact", H, "hexagon sum shift law, exact and numeric", 1e-10, f5_elliptic);
  add("f5.sign_symmetry", H, "f5(-z) = -f5(z)", 1e-11, f5_sign);
  add("oracle.hexagon", H, "hexagon enumeration against the region D terms", 1e-12, hexagon_explore, true);
  return v;
}

}  // namespace

const std::vector<VerificationCase>& registry() {
  static const std::vector<VerificationCase> r = build();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"preliminaries", "triangles", "parallelograms", "trapezoids",
                                          "pentagons",     "oracle",    "hexagon-explore"};
  return s;
}

}  // namespace polygf::harness
