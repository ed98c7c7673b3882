#include "polygf/theta.hpp"

#include <cmath>

#include "summation.hpp"

namespace polygf {

ModularPoint::ModularPoint(Complex tau) : tau_(tau) {
  if (!(tau.imag() > 0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
    throw DomainError("tau must lie in the upper half plane");
}

EllipticCoords elliptic_coords(Complex z, const ModularPoint& tau) {
  Real alpha = z.imag() / tau.v();
  return {alpha, z.real() - alpha * tau.u()};
}

Complex from_elliptic(Real alpha, Real beta, const ModularPoint& tau) {
  return alpha * tau.tau() + beta;
}

Real lattice_distance(Complex z, const ModularPoint& tau) {
  Real l0 = std::round(z.imag() / tau.v());
  Real best = std::abs(z);
  for (Real dl = -1; dl <= 1; ++dl) {
    Complex w = z - (l0 + dl) * tau.tau();
    Real m0 = std::round(w.real());
    for (Real dm = -1; dm <= 1; ++dm) best = std::min(best, std::abs(w - (m0 + dm)));
  }
  return best;
}

SeriesValue eta_series(const ModularPoint& tau) {
  // exponent 2 pi i tau (6n+1)^2/24, sign (-1)^n
  auto term = [&](long long n) {
    Real k = Real(6 * n + 1);
    Complex t = e2pi(tau.tau() * (k * k / 24));
    return (n % 2 == 0) ? t : -t;
  };
  return detail::sum_bilateral(term, 0);
}

SeriesValue eta_product(const ModularPoint& tau) {
  Complex q = tau.nome();
  Complex p(1);
  Complex qn = q;
  SeriesValue out;
  long long n = 1;
  for (; n < 10000000; ++n) {
    p *= (Real(1) - qn);
    if (std::abs(qn) < default_series_tol) break;
    qn *= q;
  }
  out.value = tau.qpow(Real(1) / 24) * p;
  out.terms = n;
  out.abs_sum = std::abs(out.value);
  out.tail_bound = std::abs(out.value) * 2 * std::abs(qn);
  return out;
}

Complex eta(const ModularPoint& tau) { return eta_series(tau).value; }

SeriesValue theta_series(Complex z, const ModularPoint& tau) {
  // n = k + 1/2; exponent pi i n^2 tau + 2 pi i n (z + 1/2)
  Complex t = tau.tau();
  auto term = [&](long long k) {
    Real n = Real(k) + Real(0.5);
    return std::exp(I * pi * (n * n * t + 2 * n * (z + Real(0.5))));
  };
  // Gaussian |.| peaks at n = -y/v
  long long c = static_cast<long long>(std::floor(-z.imag() / tau.v()));
  return detail::sum_bilateral(term, c);
}

SeriesValue theta_product(Complex z, const ModularPoint& tau) {
  Complex q = tau.nome();
  Complex zeta = e2pi(z);
  Complex zinv = Real(1) / zeta;
  Complex p = Real(1) - zeta;  // n = 1 factor (1 - zeta q^0)
  Complex qn = q;
  long long n = 1;
  Real scale = std::max(std::abs(zeta), std::abs(zinv));
  for (; n < 10000000; ++n) {
    p *= (Real(1) - qn) * (Real(1) - zeta * qn) * (Real(1) - zinv * qn);
    if (std::abs(qn) * scale < default_series_tol) break;
    qn *= q;
  }
  SeriesValue out;
  out.value = -I * tau.qpow(Real(1) / 8) * std::exp(-I * pi * z) * p;
  out.terms = n;
  out.abs_sum = std::abs(out.value);
  out.tail_bound = std::abs(out.value) * 3 * std::abs(qn) * scale;
  return out;
}

Complex theta(Complex z, const ModularPoint& tau) {
  Real l = std::round(z.imag() / tau.v());
  Complex z0 = z - l * tau.tau();
  Real m = std::round(z0.real());
  z0 -= m;
  Complex base = theta_series(z0, tau).value;
  if (l == 0 && m == 0) return base;
  long long li = static_cast<long long>(l), mi = static_cast<long long>(m);
  Real sign = ((li + mi) % 2 == 0) ? 1 : -1;
  return sign * e2pi(-l * l * tau.tau() / Real(2) - l * z0) * base;
}

Complex theta_quasi_period(Complex z, long long l, long long m, const ModularPoint& tau) {
  Real sign = ((l + m) % 2 == 0) ? 1 : -1;
  Real lr = Real(l);
  return sign * e2pi(-lr * lr * tau.tau() / Real(2) - lr * z) * theta(z, tau);
}

Complex theta_modular(const SL2Matrix& g, Complex z, const ModularPoint& tau) {
  Complex nu = nu_eta(g);
  Complex w = g.cocycle(tau.tau());
  return nu * nu * nu * std::sqrt(w) * std::exp(I * pi * Real(g.c) * z * z / w) * theta(z, tau);
}

}  // namespace polygf
