#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polygf/sampling.hpp"
#include "polygf/theta.hpp"

using namespace polygf;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max<Real>(1, std::abs(b)); }

}  // namespace

TEST(Eta, AgainstProduct) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    ModularPoint t = sample_tau(rng);
    EXPECT_LT(rel(eta(t), oracle::eta(t.tau())), 1e-13);
    EXPECT_LT(rel(eta_series(t).value, oracle::eta(t.tau())), 1e-13);
  }
}

TEST(Eta, ValueAtI) {
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  Real want = std::tgamma(Real(0.25)) / (2 * std::pow(pi, Real(0.75)));
  EXPECT_NEAR(std::abs(eta(ModularPoint(0, 1)) - Complex(want)), 0, 1e-14);
}

TEST(Theta, AgainstTripleProduct) {
  Rng rng(2);
  for (int k = 0; k < 30; ++k) {
    ModularPoint t = sample_tau(rng);
    auto z = sample_z(rng, t, std::vector<Real>{rng.uniform(-0.9, 0.9)});
    EXPECT_LT(rel(theta(z[0], t), oracle::theta_product(z[0], t.tau())), 1e-12);
    EXPECT_LT(rel(theta(z[0], t), oracle::theta_sum(z[0], t.tau())), 1e-12);
  }
}

TEST(Theta, ZeroAtOriginWithUnitTau) {
  EXPECT_LT(std::abs(theta(0, ModularPoint(0, 1))), 1e-14);
}

TEST(Theta, OddProperty) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    ModularPoint t = sample_tau(rng);
    Complex z(rng.uniform(-1, 1), rng.uniform(-1, 1));
    EXPECT_LT(rel(theta(-z, t), -theta(z, t)), 1e-13);
  }
}

TEST(Theta, QuasiPeriodProperty) {
  Rng rng(4);
  for (int k = 0; k < 40; ++k) {
    ModularPoint t = sample_tau(rng, 0.8, 1.5);
    Complex z = sample_z(rng, t, std::vector<Real>{rng.uniform(0, 1)})[0];
    long long l = rng.integer(-2, 2), m = rng.integer(-3, 3);
    Complex lhs = oracle::theta_product(z + Real(l) * t.tau() + Real(m), t.tau());
    Real sign = (l + m) % 2 == 0 ? 1 : -1;
    Complex rhs = sign * oracle::e(-Real(l * l) * t.tau() / Real(2) - Real(l) * z) * oracle::theta_product(z, t.tau());
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-11);
    EXPECT_LT(std::abs(theta_quasi_period(z, l, m, t) - rhs) / std::abs(rhs), 1e-11);
  }
}

TEST(Theta, ModularLawOnRandomMatrices) {
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    SL2Matrix g = sample_sl2(rng, 3);
    ModularPoint t = sample_tau(rng, 0.8, 1.2);
    Complex z(rng.uniform(-0.4, 0.4), rng.uniform(-0.3, 0.3));
    Complex ct = g.cocycle(t.tau());
    Complex gt = g.apply(t.tau());
    if (gt.imag() < 0.1) continue;
    Complex lhs = oracle::theta_product(z / ct, gt);
    EXPECT_LT(rel(lhs, theta_modular(g, z, t)), 1e-10) << g.str();
  }
}

TEST(Theta, EllipticCoordinatesRoundTrip) {
  ModularPoint t(0.3, 1.1);
  Complex z(0.17, 0.62);
  auto c = elliptic_coords(z, t);
  EXPECT_NEAR(std::abs(from_elliptic(c.alpha, c.beta, t) - z), 0, 1e-15);
  EXPECT_NEAR(c.alpha, 0.62 / 1.1, 1e-15);
}

TEST(Theta, SeriesReportsTail) {
  auto s = theta_series(Complex(0.1, 0.2), ModularPoint(0, 1.3));
  EXPECT_GT(s.terms, 0);
  EXPECT_GE(s.tail_bound, 0);
  EXPECT_LT(s.tail_bound, 1e-15);
}
