#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polygf/appell.hpp"
#include "polygf/sampling.hpp"

using namespace polygf;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max<Real>(1, std::abs(b)); }

Complex at(Real a, Real b, const ModularPoint& t) { return a * t.tau() + b; }

}  // namespace

TEST(Appell, AgainstDirectSum) {
  Rng rng(1);
  for (int k = 0; k < 25; ++k) {
    ModularPoint t = sample_tau(rng);
    Complex z1 = at(rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5), t);
    Complex z2 = at(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5), t);
    EXPECT_LT(rel(appell_A(z1, z2, t), oracle::appell_A(z1, z2, t.tau())), 1e-11);
  }
}

TEST(Appell, MuAtHalfPeriods) {
  // mu(1/2, tau/2) = -q^{1/8} / 2
  for (Real v : {0.8, 1.5, 2.2}) {
    ModularPoint t(0.2, v);
    Complex want = -Real(0.5) * oracle::e(t.tau() / Real(8));
    EXPECT_LT(rel(mu(0.5, t.tau() / Real(2), t), want), 1e-12);
  }
}

TEST(Appell, MuSymmetric) {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    ModularPoint t = sample_tau(rng);
    Complex u = at(rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5), t);
    Complex w = at(rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5), t);
    EXPECT_LT(rel(mu(u, w, t), mu(w, u, t)), 1e-11);
    EXPECT_LT(rel(mu(-u, -w, t), mu(u, w, t)), 1e-11);
  }
}

TEST(Appell, MuPoleRejected) { EXPECT_THROW(mu(0.3, 0, ModularPoint(0, 1)), PoleError); }

TEST(R, AgainstDirectSum) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    ModularPoint t = sample_tau(rng);
    Complex z = at(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5), t);
    EXPECT_LT(rel(R(z, t), oracle::R(z, t.tau())), 1e-12);
  }
}

TEST(R, EvenAndRealOnImaginaryAxis) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    ModularPoint t(0, rng.uniform(0.8, 2.5));
    Complex z(0, rng.uniform(-1, 1));
    EXPECT_LT(rel(R(-z, t), R(z, t)), 1e-13);
    EXPECT_LT(std::abs(R(z, t).imag()), 1e-13);
  }
}

TEST(Completion, EllipticLaw) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    ModularPoint t = sample_tau(rng, 0.8, 1.6);
    Complex z1 = at(rng.uniform(0.1, 0.9), rng.uniform(-0.5, 0.5), t);
    Complex z2 = at(rng.uniform(0.1, 0.9), rng.uniform(-0.5, 0.5), t);
    long long l1 = rng.integer(-1, 1), l2 = rng.integer(-1, 1), m1 = rng.integer(-1, 1), m2 = rng.integer(-1, 1);
    Real a = Real(l1), b = Real(l2);
    Complex lhs = appell_A_hat(z1 + a * t.tau() + Real(m1), z2 + b * t.tau() + Real(m2), t);
    Real sign = (l1 + m1) % 2 == 0 ? 1 : -1;
    Complex fac = sign * oracle::e((a - b) * z1 - a * z2 + (a * a / 2 - a * b) * t.tau());
    Complex rhs = fac * appell_A_hat(z1, z2, t);
    EXPECT_LT(std::abs(lhs - rhs) / std::max<Real>(1e-300, std::abs(rhs)), 1e-10);
  }
}

TEST(Completion, ModularLawUnderInversion) {
  // A hat at (z/tau; -1/tau) with the pieces from the direct sums
  SL2Matrix S = SL2Matrix::make(0, -1, 1, 0);
  ModularPoint t(0.1, 1.1);
  Complex z1 = at(0.3, 0.1, t), z2 = at(0.55, -0.2, t);
  Complex ct = S.cocycle(t.tau());
  Complex lhs = appell_A_hat(z1 / ct, z2 / ct, t.transformed(S));
  Complex rhs = ct * std::exp(I * pi * (-z1 * z1 + Real(2) * z1 * z2) / ct) * appell_A_hat(z1, z2, t);
  EXPECT_LT(rel(lhs, rhs), 1e-10);
}

TEST(Completion, HatDefinitionAtFundamentalPoint) {
  ModularPoint t(0.05, 1.3);
  Complex z1 = at(0.4, 0.1, t), z2 = at(0.2, 0.3, t);
  Complex want = oracle::appell_A(z1, z2, t.tau()) + (I / 2.0) * oracle::theta_product(z2, t.tau()) * oracle::R(z1 - z2, t.tau());
  EXPECT_LT(rel(appell_A_hat(z1, z2, t), want), 1e-11);
}

TEST(TripleSums, FStarDirect) {
  Rng rng(6);
  for (int k = 0; k < 10; ++k) {
    ModularPoint t = sample_tau(rng, 1.0, 2.0);
    Complex w1 = at(rng.uniform(-0.4, 0.4), rng.uniform(-0.5, 0.5), t);
    Complex w2 = at(rng.uniform(0.1, 0.9), rng.uniform(-0.5, 0.5), t);
    Complex w3 = at(rng.uniform(0.1, 0.9), rng.uniform(-0.5, 0.5), t);
    Complex direct = oracle::F_star(w1, w2, w3, t.tau());
    EXPECT_LT(rel(F_star_series(w1, w2, w3, t).value, direct), 1e-11);
    EXPECT_LT(rel(F_star_closed(w1, w2, w3, t), direct), 1e-10);
  }
}

TEST(TripleSums, FStarDomain) {
  ModularPoint t(0, 1);
  EXPECT_THROW(F_star_series(0.1, Complex(0.1, 2.5), Complex(0.1, 0.5), t), ConvergenceError);
}

TEST(TripleSums, QuadrantSum) {
  ModularPoint t(0.1, 1.2);
  Complex w2 = at(0.3, 0.1, t), w3 = at(0.45, -0.2, t);
  // sum_{n2,n3 >= 0} - sum_{n2,n3 < 0} q^{n2 n3} e(n2 w2 + n3 w3)
  Complex direct = 0;
  for (int a = 0; a < 200; ++a)
    for (int b = 0; b < 200; ++b) {
      Complex x = Real(a * b) * t.tau() + Real(a) * w2 + Real(b) * w3;
      Complex y = Real((a + 1) * (b + 1)) * t.tau() - Real(a + 1) * w2 - Real(b + 1) * w3;
      direct += oracle::e(x) - oracle::e(y);
    }
  EXPECT_LT(rel(bilateral_zeta_sum(w2, w3, t).value, direct), 1e-11);
  EXPECT_LT(rel(signed_quadrant_closed(w2, w3, t), direct), 1e-11);
}

TEST(ThetaQuotientT, VanishesAtOneSixth) {
  for (Real v : {0.9, 1.4, 2.0}) EXPECT_LT(std::abs(theta_quotient_T(Real(1) / 6, ModularPoint(0.1, v))), 1e-12);
}

TEST(ThetaQuotientT, SignFlipUnderUnitShift) {
  ModularPoint t(0.1, 1.2);
  Complex z = at(0.2, 0.1, t);
  EXPECT_LT(rel(theta_quotient_T(z + Real(1), t), -theta_quotient_T(z, t)), 1e-12);
  EXPECT_LT(rel(theta_quotient_T(z + Real(2), t), theta_quotient_T(z, t)), 1e-12);
}
