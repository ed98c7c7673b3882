#pragma once

#include "polygf/theta.hpp"

namespace polygf {

// A(z1,z2) = e^{pi i z1} sum_n (-1)^n q^{n(n+1)/2} e^{2 pi i n z2} / (1 - e^{2 pi i z1} q^n)
// throws PoleError when z1 is within pole_guard of Z tau + Z
SeriesValue appell_A_series(Complex z1, Complex z2, const ModularPoint& tau);
Complex appell_A(Complex z1, Complex z2, const ModularPoint& tau);

// mu = A / theta(z2)
Complex mu(Complex z1, Complex z2, const ModularPoint& tau);

// R(z) = sum_{n in 1/2+Z} (sgn n - E((n + y/v) sqrt(2v))) (-1)^{n-1/2} q^{-n^2/2} e^{-2 pi i n z}
SeriesValue R_series(Complex z, const ModularPoint& tau);
Complex R(Complex z, const ModularPoint& tau);

// Completions: A + (i/2) theta(z2) R(z1 - z2) and its quotient by theta(z2).
Complex appell_A_hat(Complex z1, Complex z2, const ModularPoint& tau);
Complex mu_hat(Complex z1, Complex z2, const ModularPoint& tau);

// sum_n zeta1^n / (1 - zeta2 q^n), converges for 0 < Im z1 < v
SeriesValue bilateral_zeta_sum(Complex z1, Complex z2, const ModularPoint& tau);

// Triple sums with summand (-1)^{n1} q^{n1(n1+1)/2 + n1 n2 + n1 n3 + n2 n3} zeta^n
// and prefactor q^{-1/8} zeta1^{-1/2} zeta2^{1/2} zeta3^{1/2}.
//   F*: over N0^3 and (-N)^3, needs 0 < Im w2, Im w3 < 2v
//   F : over N x N0^2 and (-N0) x (-N)^2, needs |Im w2|, |Im w3| < v
SeriesValue F_star_series(Complex w1, Complex w2, Complex w3, const ModularPoint& tau);
SeriesValue F_series(Complex w1, Complex w2, Complex w3, const ModularPoint& tau);

// i theta(w1) mu(w1,w2) mu(w1,w3) - eta^3 theta(w2+w3)/(theta(w2)theta(w3)) mu(w1,w2+w3),
// equals F for 0 < Im w2, Im w3 < v
Complex F_closed(Complex w1, Complex w2, Complex w3, const ModularPoint& tau);
// i theta(w1) mu(w1,w2) mu(w1,w3)
//   + q^{-1/2} e(-w1+w2+w3) eta^3 theta(w2+w3)/(theta(w2)theta(w3)) mu(w1+tau,w2+w3)
Complex F_star_closed(Complex w1, Complex w2, Complex w3, const ModularPoint& tau);

// sum_{n2,n3>=0} - sum_{n2,n3<0} of q^{n2 n3} zeta2^{n2} zeta3^{n3}
SeriesValue signed_quadrant_sum(Complex w2, Complex w3, const ModularPoint& tau);
// closed form of the quadrant sum: -i eta^3 theta(w2+w3) / (theta(w2) theta(w3))
Complex signed_quadrant_closed(Complex w2, Complex w3, const ModularPoint& tau);

// T(z) = theta(3tau/2+1/2) theta(3z+1/2) theta(3z+3tau/2) / theta(3z+3tau/2+1/2), all at 3tau
Complex theta_quotient_T(Complex z, const ModularPoint& tau);

}  // namespace polygf
