#pragma once

#include <cstdint>
#include <string>

#include "polygf/config.hpp"

namespace polygf {

// e^{2 pi i x}
Complex e2pi(Complex x);

// e^{2 pi i x} with x real, exact at rationals with small denominators is not
// attempted; cos/sin of 2 pi x
Complex e2pi_real(Real x);

Real sgn(Real x);

// E(x) = 2 * int_0^x e^{-pi t^2} dt = erf(sqrt(pi) x)
Real error_function_E(Real x);

// 1 - E(x), accurate for large positive x
Real error_function_E_complement(Real x);

// Kronecker symbol (a/n) for any integers, n may be zero or negative.
int kronecker_symbol(long long a, long long n);

struct SL2Matrix {
  long long a = 1, b = 0, c = 0, d = 1;

  // throws DomainError unless ad - bc = 1
  static SL2Matrix make(long long a, long long b, long long c, long long d);

  long long det() const { return a * d - b * c; }
  SL2Matrix operator*(const SL2Matrix& o) const;
  SL2Matrix inverse() const { return {d, -b, -c, a}; }
  bool operator==(const SL2Matrix&) const = default;

  Complex apply(Complex tau) const { return (Complex(Real(a)) * tau + Real(b)) / (Complex(Real(c)) * tau + Real(d)); }
  Complex cocycle(Complex tau) const { return Complex(Real(c)) * tau + Real(d); }

  std::string str() const;
};

// Multiplier of eta: eta(gamma tau) = nu_eta(gamma) sqrt(c tau + d) eta(tau),
// principal square root.
Complex nu_eta(const SL2Matrix& g);

// nu_eta(g) = (Kronecker sign) exp(pi i m / 12); returns m mod 24
int nu_eta_exponent24(const SL2Matrix& g);

enum class Subgroup { SL2Z, Gamma0_3, Gamma_2, Gamma0_3_cap_Gamma_2 };

bool subgroup_member(const SL2Matrix& g, Subgroup s);
std::string subgroup_name(Subgroup s);

long long floor_div(long long a, long long b);
long long mod_pos(long long a, long long m);

// floor(x), but refuses x within floor_guard of an integer
long long guarded_floor(Real x, const char* what);

// principal branch of (c tau + d)^{k/2}
Complex half_power(Complex w, int k);

}  // namespace polygf
