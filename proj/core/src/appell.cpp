#include "polygf/appell.hpp"

#include <cmath>

#include "polygf/lattice_sum.hpp"
#include "summation.hpp"

namespace polygf {

namespace {

void pole_check(Complex z, const ModularPoint& tau, const char* what) {
  if (lattice_distance(z, tau) < pole_guard) throw PoleError(std::string(what) + ": argument on the lattice Z tau + Z");
}

Real sign_of_parity(long long n) { return (n % 2 == 0) ? Real(1) : Real(-1); }

}  // namespace

SeriesValue appell_A_series(Complex z1, Complex z2, const ModularPoint& tau) {
  pole_check(z1, tau, "appell_A");
  const Complex t = tau.tau();
  const Complex tpi(0, 2 * pi);
  auto term = [&](long long n) {
    Real nr = Real(n);
    Complex X = I * pi * nr * (nr + 1) * t + tpi * nr * z2;
    Complex arg = z1 + nr * t;
    Complex res;
    if (arg.imag() >= 0) {
      res = std::exp(X) / (Real(1) - std::exp(tpi * arg));
    } else {
      // 1/(1-w) = -w^{-1}/(1-w^{-1})
      res = -std::exp(X - tpi * arg) / (Real(1) - std::exp(-tpi * arg));
    }
    return sign_of_parity(n) * res;
  };
  long long c = static_cast<long long>(std::floor(-z2.imag() / tau.v() - Real(0.5)));
  SeriesValue s = detail::sum_bilateral(term, c);
  Complex pre = std::exp(I * pi * z1);
  s.value *= pre;
  s.abs_sum *= std::abs(pre);
  s.tail_bound *= std::abs(pre);
  return s;
}

Complex appell_A(Complex z1, Complex z2, const ModularPoint& tau) { return appell_A_series(z1, z2, tau).value; }

Complex mu(Complex z1, Complex z2, const ModularPoint& tau) {
  pole_check(z2, tau, "mu");
  return appell_A(z1, z2, tau) / theta(z2, tau);
}

SeriesValue R_series(Complex z, const ModularPoint& tau) {
  const Real v = tau.v();
  const Real alpha = z.imag() / v;
  const Real s2v = std::sqrt(2 * v);
  const Complex t = tau.tau();
  auto term = [&](long long k) -> Complex {
    Real n = Real(k) + Real(0.5);
    Real arg = (n + alpha) * s2v;
    Complex phase = -I * pi * n * n * t - Complex(0, 2 * pi) * n * z;
    Real sn = n > 0 ? 1 : -1;
    Real x = std::sqrt(pi) * std::abs(arg);
    Complex val;
    if (arg == 0) {
      val = sn * std::exp(phase);
    } else if ((arg > 0) == (n > 0)) {
      // sgn(n) - E(arg) = sgn(n) erfc(x); combine in log space
      Real ec = std::erfc(x);
      if (ec == 0) return Complex(0);
      val = sn * std::exp(phase + std::log(ec));
    } else {
      val = sn * (2 - std::erfc(x)) * std::exp(phase);
    }
    return sign_of_parity(k) * val;
  };
  long long c = static_cast<long long>(std::floor(-alpha));
  return detail::sum_bilateral(term, c);
}

Complex R(Complex z, const ModularPoint& tau) { return R_series(z, tau).value; }

namespace {

long long strip_index(Complex z, const ModularPoint& tau) { return static_cast<long long>(std::floor(z.imag() / tau.v())); }

Complex appell_A_hat_direct(Complex z1, Complex z2, const ModularPoint& tau) {
  return appell_A(z1, z2, tau) + (I / Real(2)) * theta(z2, tau) * R(z1 - z2, tau);
}

}  // namespace

// both arguments are moved into 0 <= Im < v first; A and theta*R cancel badly far out
Complex appell_A_hat(Complex z1, Complex z2, const ModularPoint& tau) {
  const Complex t = tau.tau();
  long long l1 = strip_index(z1, tau), l2 = strip_index(z2, tau);
  Complex u = z1 - Real(l1) * t, v = z2 - Real(l2) * t;
  Real a = Real(l1), b = Real(l2);
  Complex ex = Complex(0, 2 * pi) * ((a - b) * u - a * v) + I * pi * t * (a * a - 2 * a * b);
  return sign_of_parity(l1) * std::exp(ex) * appell_A_hat_direct(u, v, tau);
}

Complex mu_hat(Complex z1, Complex z2, const ModularPoint& tau) {
  pole_check(z2, tau, "mu_hat");
  const Complex t = tau.tau();
  long long k = strip_index(z1, tau), m = strip_index(z2, tau);
  Complex u = z1 - Real(k) * t, v = z2 - Real(m) * t;
  Real d = Real(k - m);
  Complex ex = I * pi * d * d * t + Complex(0, 2 * pi) * d * (u - v);
  return sign_of_parity(k + m) * std::exp(ex) * appell_A_hat_direct(u, v, tau) / theta(v, tau);
}

SeriesValue bilateral_zeta_sum(Complex z1, Complex z2, const ModularPoint& tau) {
  Real a1 = z1.imag() / tau.v();
  if (!(a1 > 0 && a1 < 1)) throw ConvergenceError("bilateral_zeta_sum: needs 0 < Im z1 < v");
  pole_check(z2, tau, "bilateral_zeta_sum");
  const Complex t = tau.tau();
  const Complex tpi(0, 2 * pi);
  auto term = [&](long long n) {
    Real nr = Real(n);
    Complex arg = z2 + nr * t;
    if (arg.imag() >= 0) return std::exp(tpi * nr * z1) / (Real(1) - std::exp(tpi * arg));
    return -std::exp(tpi * (nr * z1 - arg)) / (Real(1) - std::exp(-tpi * arg));
  };
  return detail::sum_bilateral(term, 0);
}

namespace {

const CharacteristicRegion& orthants3() {
  static const CharacteristicRegion r = regions::orthants(3, 1);
  return r;
}

const CharacteristicRegion& quadrants2() {
  static const CharacteristicRegion r = regions::orthants(2, -1);
  return r;
}

SeriesValue triple_sum(Complex w1, Complex w2, Complex w3, const ModularPoint& tau, std::vector<Real> shift) {
  LatticeSumProblem p;
  p.dim = 3;
  p.A = {1, 1, 1, 1, 0, 1, 1, 1, 0};
  p.lin = {w1 + tau.tau() / Real(2) + Real(0.5), w2, w3};
  p.constant = -tau.tau() / Real(8) - w1 / Real(2) + w2 / Real(2) + w3 / Real(2);
  p.shift = std::move(shift);
  p.region = &orthants3();
  return lattice_sum(p, tau);
}

}  // namespace

SeriesValue F_star_series(Complex w1, Complex w2, Complex w3, const ModularPoint& tau) {
  Real a2 = w2.imag() / tau.v(), a3 = w3.imag() / tau.v();
  if (!(a2 > 0 && a2 < 2 && a3 > 0 && a3 < 2))
    throw ConvergenceError("F_star_series: needs 0 < Im w2, Im w3 < 2v");
  return triple_sum(w1, w2, w3, tau, {0.5, 0.5, 0.5});
}

SeriesValue F_series(Complex w1, Complex w2, Complex w3, const ModularPoint& tau) {
  Real a2 = w2.imag() / tau.v(), a3 = w3.imag() / tau.v();
  if (!(std::abs(a2) < 1 && std::abs(a3) < 1)) throw ConvergenceError("F_series: needs |Im w2|, |Im w3| < v");
  return triple_sum(w1, w2, w3, tau, {-0.5, 0.5, 0.5});
}

Complex F_closed(Complex w1, Complex w2, Complex w3, const ModularPoint& tau) {
  Complex e3 = std::pow(eta(tau), 3);
  return I * theta(w1, tau) * mu(w1, w2, tau) * mu(w1, w3, tau) -
         e3 * theta(w2 + w3, tau) / (theta(w2, tau) * theta(w3, tau)) * mu(w1, w2 + w3, tau);
}

Complex F_star_closed(Complex w1, Complex w2, Complex w3, const ModularPoint& tau) {
  Complex e3 = std::pow(eta(tau), 3);
  Complex pre = e2pi(-tau.tau() / Real(2) - w1 + w2 + w3);
  return I * theta(w1, tau) * mu(w1, w2, tau) * mu(w1, w3, tau) +
         pre * e3 * theta(w2 + w3, tau) / (theta(w2, tau) * theta(w3, tau)) * mu(w1 + tau.tau(), w2 + w3, tau);
}

SeriesValue signed_quadrant_sum(Complex w2, Complex w3, const ModularPoint& tau) {
  Real a2 = w2.imag() / tau.v(), a3 = w3.imag() / tau.v();
  if (!(a2 > 0 && a2 < 1 && a3 > 0 && a3 < 1)) throw ConvergenceError("signed_quadrant_sum: needs 0 < Im w2, Im w3 < v");
  LatticeSumProblem p;
  p.dim = 2;
  p.A = {0, 1, 1, 0};
  p.lin = {w2, w3};
  p.shift = {0.5, 0.5};
  p.region = &quadrants2();
  return lattice_sum(p, tau);
}

Complex signed_quadrant_closed(Complex w2, Complex w3, const ModularPoint& tau) {
  return -I * std::pow(eta(tau), 3) * theta(w2 + w3, tau) / (theta(w2, tau) * theta(w3, tau));
}

Complex theta_quotient_T(Complex z, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  Complex t3h = Real(1.5) * tau.tau();
  Complex den = theta(Real(3) * z + t3h + Real(0.5), T);
  if (std::abs(den) == 0 || lattice_distance(Real(3) * z + t3h + Real(0.5), T) < pole_guard)
    throw PoleError("theta_quotient_T: pole");
  return theta(t3h + Real(0.5), T) * theta(Real(3) * z + Real(0.5), T) * theta(Real(3) * z + t3h, T) / den;
}

}  // namespace polygf
