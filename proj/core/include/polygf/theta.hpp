#pragma once

#include "polygf/numerics.hpp"

namespace polygf {

// tau in the upper half plane
class ModularPoint {
 public:
  ModularPoint(Complex tau);
  ModularPoint(Real u, Real v) : ModularPoint(Complex(u, v)) {}

  Complex tau() const { return tau_; }
  Real u() const { return tau_.real(); }
  Real v() const { return tau_.imag(); }
  Complex nome() const { return e2pi(tau_); }

  // q^r = e^{2 pi i r tau}
  Complex qpow(Real r) const { return e2pi(r * tau_); }

  ModularPoint scaled(Real k) const { return ModularPoint(k * tau_); }
  ModularPoint transformed(const SL2Matrix& g) const { return ModularPoint(g.apply(tau_)); }

 private:
  Complex tau_;
};

// z = alpha tau + beta, alpha = y/v
struct EllipticCoords {
  Real alpha;
  Real beta;
};

EllipticCoords elliptic_coords(Complex z, const ModularPoint& tau);
Complex from_elliptic(Real alpha, Real beta, const ModularPoint& tau);

// Distance from z to the nearest point of Z tau + Z.
Real lattice_distance(Complex z, const ModularPoint& tau);

// Summation result with a bound on the discarded tail.
struct SeriesValue {
  Complex value;
  Real tail_bound = 0;   // estimated |discarded terms|
  Real abs_sum = 0;      // sum of |terms| kept
  long long terms = 0;
};

// Pentagonal series sum_n (-1)^n q^{(6n+1)^2/24}
SeriesValue eta_series(const ModularPoint& tau);
// q^{1/24} prod (1 - q^n), slow for small v
SeriesValue eta_product(const ModularPoint& tau);
Complex eta(const ModularPoint& tau);

// sum over n in 1/2 + Z of q^{n^2/2} e^{2 pi i n (z + 1/2)}, no reduction
SeriesValue theta_series(Complex z, const ModularPoint& tau);
// triple product form
SeriesValue theta_product(Complex z, const ModularPoint& tau);
// reduces z modulo the lattice first, then sums
Complex theta(Complex z, const ModularPoint& tau);

// (-1)^{l+m} q^{-l^2/2} zeta^{-l} theta(z): value of theta(z + l tau + m)
Complex theta_quasi_period(Complex z, long long l, long long m, const ModularPoint& tau);

// nu_eta^3 (c tau+d)^{1/2} e^{pi i c z^2/(c tau+d)} theta(z; tau):
// value of theta(z/(c tau+d); gamma tau)
Complex theta_modular(const SL2Matrix& g, Complex z, const ModularPoint& tau);

}  // namespace polygf
