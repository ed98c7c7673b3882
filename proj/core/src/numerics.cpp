#include "polygf/numerics.hpp"

#include <cmath>
#include <sstream>

namespace polygf {

Complex e2pi(Complex x) {
  return std::exp(Complex(Real(0), 2 * pi) * x);
}

Complex e2pi_real(Real x) {
  // reduce first so large x keeps its fractional part
  Real f = x - std::round(x);
  return {std::cos(2 * pi * f), std::sin(2 * pi * f)};
}

Real sgn(Real x) {
  return x > 0 ? Real(1) : (x < 0 ? Real(-1) : Real(0));
}

Real error_function_E(Real x) {
  return std::erf(std::sqrt(pi) * x);
}

Real error_function_E_complement(Real x) {
  return std::erfc(std::sqrt(pi) * x);
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

int kronecker_symbol(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int r = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) r = -r;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (mod_pos(a, 2) == 0) return 0;
    long long a8 = mod_pos(a, 8);
    if (a8 == 3 || a8 == 5) r = -r;
  }
  a = mod_pos(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long n8 = n % 8;
      if (n8 == 3 || n8 == 5) r = -r;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) r = -r;
    a %= n;
  }
  return n == 1 ? r : 0;
}

SL2Matrix SL2Matrix::make(long long a, long long b, long long c, long long d) {
  SL2Matrix g{a, b, c, d};
  if (g.det() != 1) throw DomainError("matrix " + g.str() + " has determinant " + std::to_string(g.det()) + ", expected 1");
  return g;
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string SL2Matrix::str() const {
  std::ostringstream s;
  s << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return s.str();
}

namespace {

__extension__ typedef __int128 i128;

long long mulmod(long long x, long long y, long long m) {
  return static_cast<long long>((static_cast<i128>(mod_pos(x, m)) * mod_pos(y, m)) % m);
}

}  // namespace

int nu_eta_exponent24(const SL2Matrix& g) {
  const long long M = 24;
  long long e;
  if (mod_pos(g.c, 2) == 1) {
    // (a+d)c - bd(c^2-1) - 3c
    e = mulmod(g.a + g.d, g.c, M) - mulmod(mulmod(g.b, g.d, M), mulmod(g.c, g.c, M) - 1, M) - mulmod(3, g.c, M);
  } else {
    // ac(1-d^2) + d(b-c+3) - 3
    e = mulmod(mulmod(g.a, g.c, M), 1 - mulmod(g.d, g.d, M), M) + mulmod(g.d, g.b - g.c + 3, M) - 3;
  }
  return static_cast<int>(mod_pos(e, M));
}

Complex nu_eta(const SL2Matrix& g) {
  int k;
  if (mod_pos(g.c, 2) == 1)
    k = kronecker_symbol(g.d, g.c < 0 ? -g.c : g.c);
  else
    k = kronecker_symbol(g.c, g.d);
  if (k == 0) throw DomainError("nu_eta: degenerate Kronecker symbol for " + g.str());
  int m = nu_eta_exponent24(g);
  Real t = pi * Real(m) / 12;
  return Real(k) * Complex(std::cos(t), std::sin(t));
}

bool subgroup_member(const SL2Matrix& g, Subgroup s) {
  if (g.det() != 1) return false;
  bool g03 = mod_pos(g.c, 3) == 0;
  bool g2 = mod_pos(g.a, 2) == 1 && mod_pos(g.b, 2) == 0 && mod_pos(g.c, 2) == 0 && mod_pos(g.d, 2) == 1;
  switch (s) {
    case Subgroup::SL2Z: return true;
    case Subgroup::Gamma0_3: return g03;
    case Subgroup::Gamma_2: return g2;
    case Subgroup::Gamma0_3_cap_Gamma_2: return g03 && g2;
  }
  return false;
}

std::string subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::SL2Z: return "SL2(Z)";
    case Subgroup::Gamma0_3: return "Gamma0(3)";
    case Subgroup::Gamma_2: return "Gamma(2)";
    case Subgroup::Gamma0_3_cap_Gamma_2: return "Gamma0(3)&Gamma(2)";
  }
  return "?";
}

long long guarded_floor(Real x, const char* what) {
  Real r = std::round(x);
  if (std::abs(x - r) < floor_guard)
    throw DomainError(std::string(what) + ": y/v is within 1e-9 of the integer " + std::to_string(static_cast<long long>(r)));
  return static_cast<long long>(std::floor(x));
}

Complex half_power(Complex w, int k) {
  Complex s = std::sqrt(w);
  Complex r(1);
  int n = k < 0 ? -k : k;
  for (int i = 0; i < n; ++i) r *= s;
  return k < 0 ? Complex(1) / r : r;
}

}  // namespace polygf
