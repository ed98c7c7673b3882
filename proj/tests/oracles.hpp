#pragma once

// Independent reference evaluations used by the unit tests.  Everything here is
// a plain loop over the defining sum or product, with no reduction, reuse of
// library internals, or shared summation code.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using C = std::complex<double>;
constexpr double pi = 3.14159265358979323846;
const C I{0, 1};

inline C e(C x) { return std::exp(2.0 * pi * I * x); }

inline double sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline double H(double x) { return x > 0 ? 1 : 0; }
inline double Hs(double x) { return x >= 0 ? 1 : 0; }

// q^{1/24} prod (1 - q^n)
inline C eta(C tau) {
  C q = e(tau), p = 1, qn = q;
  for (int n = 1; n < 400 && std::abs(qn) > 1e-300; ++n, qn *= q) p *= 1.0 - qn;
  return e(tau / 24.0) * p;
}

// triple product: -i q^{1/8} zeta^{-1/2} prod (1-q^n)(1-zeta q^{n-1})(1-zeta^{-1} q^n)
inline C theta_product(C z, C tau) {
  C q = e(tau), zeta = e(z), p = 1;
  C qn = q;
  for (int n = 1; n < 400 && std::abs(qn) > 1e-300; ++n, qn *= q)
    p *= (1.0 - qn) * (1.0 - zeta * qn / q) * (1.0 - qn / zeta);
  return -I * e(tau / 8.0) * e(-z / 2.0) * p;
}

// sum over n in 1/2 + Z of e^{pi i n} q^{n^2/2} zeta^n
inline C theta_sum(C z, C tau, int N = 60) {
  C s = 0;
  for (int k = -N; k < N; ++k) {
    double n = k + 0.5;
    s += std::exp(I * pi * n + I * pi * n * n * tau + 2.0 * pi * I * n * z);
  }
  return s;
}

// e^{pi i z1} sum (-1)^n q^{n(n+1)/2} e^{2 pi i n z2} / (1 - e^{2 pi i z1} q^n)
inline C appell_A(C z1, C z2, C tau, int N = 80) {
  C s = 0;
  for (int n = -N; n <= N; ++n) {
    double nr = n;
    C num = std::exp(I * pi * nr * (nr + 1) * tau + 2.0 * pi * I * nr * z2);
    s += (n % 2 == 0 ? 1.0 : -1.0) * num / (1.0 - e(z1 + nr * tau));
  }
  return std::exp(I * pi * z1) * s;
}

// Simpson rule for 2 int_0^x exp(-pi t^2) dt
inline double E(double x) {
  const int n = 20000;
  double h = x / n, s = 0;
  for (int k = 0; k <= n; ++k) {
    double t = k * h;
    double w = (k == 0 || k == n) ? 1 : (k % 2 ? 4 : 2);
    s += w * std::exp(-pi * t * t);
  }
  return 2 * s * h / 3;
}

// sum over n in 1/2 + Z of (sgn(n) - E((n + Im z/v) sqrt(2v))) (-1)^{n-1/2} e^{-pi i n^2 tau - 2 pi i n z}
inline C R(C z, C tau, int N = 40) {
  double v = tau.imag(), a = z.imag() / v;
  C s = 0;
  for (int k = -N; k < N; ++k) {
    double n = k + 0.5;
    double arg = (n + a) * std::sqrt(2 * v);
    C phase = -I * pi * n * n * tau - 2.0 * pi * I * n * z;
    double sg = k % 2 == 0 ? 1.0 : -1.0;
    if ((arg > 0) == (n > 0)) {
      // sgn(n) - E(arg) = sgn(n) erfc(sqrt(pi) |arg|), taken in logs so huge phases meet tiny weights
      double x = std::sqrt(pi) * std::abs(arg);
      double ec = std::erfc(x);
      double lw = ec > 0 ? std::log(ec) : -x * x - std::log(x * std::sqrt(pi));
      s += sg * sgn(n) * std::exp(lw + phase);
    } else {
      s += sg * (sgn(n) - std::erf(std::sqrt(pi) * arg)) * std::exp(phase);
    }
  }
  return s;
}

// generic box sum: sum_{|n_j| <= N} w(n + alpha) q^{Q(n)} e^{2 pi i B(n, z)} for an
// integer matrix A with Q(n) = n^T A n / 2, B(n, z) = n^T A z
template <int D>
C box_sum(const std::array<std::array<int, D>, D>& A, const std::array<C, D>& z, C tau,
          const std::function<double(const std::array<double, D>&)>& w, int N) {
  std::array<double, D> alpha;
  for (int j = 0; j < D; ++j) alpha[j] = z[j].imag() / tau.imag();
  std::array<int, D> n;
  n.fill(-N);
  C s = 0;
  while (true) {
    std::array<double, D> x;
    for (int j = 0; j < D; ++j) x[j] = n[j] + alpha[j];
    double c = w(x);
    if (c != 0) {
      double Q = 0;
      C B = 0;
      for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
          Q += 0.5 * n[i] * A[i][j] * n[j];
          B += double(n[i] * A[i][j]) * z[j];
        }
      s += c * std::exp(2.0 * pi * I * (Q * tau + B));
    }
    int j = 0;
    while (j < D && ++n[j] > N) n[j++] = -N;
    if (j == D) break;
  }
  return s;
}

inline double chi2(const std::array<double, 2>& x) { return sgn(x[0]) * H(x[0] * x[1]); }
inline double chi3(const std::array<double, 2>& x) {
  return sgn(x[0]) * H(std::abs(x[0]) - std::abs(x[1])) * Hs(x[0] * x[1]);
}
inline double chi4(const std::array<double, 3>& x) {
  return Hs(std::abs(x[0]) - std::abs(x[2])) * Hs(std::abs(x[1]) - std::abs(x[2])) * Hs(x[0] * x[1]);
}
// S1 = {x1, x2 >= x3 >= 0} and -S3 with S3 = {x1, x2 > x3 > 0}
inline double g4_weight(const std::array<double, 3>& x) {
  bool s1 = x[0] >= x[2] && x[1] >= x[2] && x[2] >= 0;
  bool s3 = -x[0] > -x[2] && -x[1] > -x[2] && -x[2] > 0;
  return (s1 || s3) ? 1 : 0;
}
inline double chi5(const std::array<double, 4>& x) {
  double m = std::min(std::abs(x[0]), std::abs(x[1]));
  bool D = std::abs(x[2]) <= m && std::abs(x[3]) <= m && x[0] * x[1] >= 0 && x[0] * x[2] >= 0 && x[0] * x[3] >= 0;
  return D ? sgn(x[0] - x[2]) : 0;
}

// the quadratic forms, as integer matrices with Q = n^T A n / 2
inline const std::array<std::array<int, 2>, 2> A2{{{0, 3}, {3, 0}}};
inline const std::array<std::array<int, 2>, 2> A3{{{3, 0}, {0, -3}}};
inline const std::array<std::array<int, 3>, 3> A4{{{0, 3, 0}, {3, 0, 0}, {0, 0, -3}}};
inline const std::array<std::array<int, 4>, 4> A5{{{0, 3, 0, 0}, {3, 0, 0, 0}, {0, 0, -3, 0}, {0, 0, 0, -3}}};

// F* as a plain double cone loop
inline C F_star(C w1, C w2, C w3, C tau, int N = 40) {
  C s = 0;
  auto term = [&](int a, int b, int c) {
    double n1 = a, n2 = b, n3 = c;
    C ex = (n1 * (n1 + 1) / 2 + n1 * n2 + n1 * n3 + n2 * n3) * tau + n1 * w1 + n2 * w2 + n3 * w3;
    return (a % 2 == 0 ? 1.0 : -1.0) * e(ex);
  };
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b)
      for (int c = 0; c <= N; ++c) s += term(a, b, c) + term(-a - 1, -b - 1, -c - 1);
  return e(-tau / 8.0 - w1 / 2.0 + w2 / 2.0 + w3 / 2.0) * s;
}

}  // namespace oracle
