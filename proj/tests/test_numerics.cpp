#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polygf/numerics.hpp"
#include "polygf/sampling.hpp"
#include "polygf/theta.hpp"

using namespace polygf;

TEST(ErrorFunction, MatchesSimpsonQuadrature) {
  for (double x : {-2.3, -1.0, -0.31, 0.0, 0.07, 0.5, 1.4, 2.0}) EXPECT_NEAR(error_function_E(x), oracle::E(x), 1e-13) << x;
}

TEST(ErrorFunction, OddAndBounded) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Real x = rng.uniform(-6, 6);
    EXPECT_EQ(error_function_E(-x), -error_function_E(x));
    EXPECT_LE(std::abs(error_function_E(x)), 1);
  }
}

TEST(ErrorFunction, ComplementKeepsTailDigits) {
  // 1 - E(x) = erfc(sqrt(pi) x); at x = 5 this is about 1e-35
  Real c = error_function_E_complement(5);
  EXPECT_GT(c, 0);
  EXPECT_NEAR(c / std::erfc(std::sqrt(pi) * 5), 1, 1e-14);
}

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long powmod(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  if (b < 0) b += m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

}  // namespace

TEST(Kronecker, EulerCriterionForOddPrimes) {
  for (long long p = 3; p < 60; ++p) {
    if (!is_prime(p)) continue;
    for (long long a = -30; a <= 30; ++a) {
      long long r = powmod(a, (p - 1) / 2, p);
      int want = r == 0 ? 0 : (r == 1 ? 1 : -1);
      EXPECT_EQ(kronecker_symbol(a, p), want) << a << " " << p;
    }
  }
}

TEST(Kronecker, SpecialDenominators) {
  EXPECT_EQ(kronecker_symbol(5, 1), 1);
  EXPECT_EQ(kronecker_symbol(1, 0), 1);
  EXPECT_EQ(kronecker_symbol(2, 0), 0);
  // (a/2) = 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  EXPECT_EQ(kronecker_symbol(4, 2), 0);
  EXPECT_EQ(kronecker_symbol(7, 2), 1);
  EXPECT_EQ(kronecker_symbol(3, 2), -1);
  EXPECT_EQ(kronecker_symbol(5, 2), -1);
}

TEST(SL2, RejectsWrongDeterminant) {
  EXPECT_THROW(SL2Matrix::make(1, 1, 1, 1), DomainError);
  EXPECT_NO_THROW(SL2Matrix::make(7, 2, 24, 7));
}

TEST(SL2, SubgroupMembership) {
  auto g = SL2Matrix::make(7, 2, 24, 7);
  EXPECT_TRUE(subgroup_member(g, Subgroup::Gamma0_3));
  EXPECT_TRUE(subgroup_member(g, Subgroup::Gamma_2));
  EXPECT_FALSE(subgroup_member(SL2Matrix::make(1, 1, 0, 1), Subgroup::Gamma_2));
  auto s = SL2Matrix::make(0, -1, 1, 0);
  EXPECT_FALSE(subgroup_member(s, Subgroup::Gamma0_3));
  EXPECT_TRUE(subgroup_member(SL2Matrix::make(1, 0, 6, 1), Subgroup::Gamma0_3_cap_Gamma_2));
  EXPECT_TRUE(subgroup_member(SL2Matrix::make(1, 2, 0, 1), Subgroup::Gamma0_3_cap_Gamma_2));
}

TEST(NuEta, AgainstEtaProductRatio) {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    SL2Matrix g = sample_sl2(rng, 4);
    Complex tau(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.6));
    Complex gt = g.apply(tau);
    if (gt.imag() < 0.05) continue;
    Complex ratio = oracle::eta(gt) / (oracle::eta(tau) * std::sqrt(g.cocycle(tau)));
    EXPECT_NEAR(std::abs(ratio - nu_eta(g)), 0, 1e-10) << g.str();
  }
}

TEST(NuEta, TwentyFourthRoots) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    SL2Matrix g = sample_sl2(rng, 9);
    Complex n = nu_eta(g);
    EXPECT_NEAR(std::abs(std::pow(n, 24) - Real(1)), 0, 1e-12);
    Complex w = std::exp(I * pi * Real(nu_eta_exponent24(g)) / Real(12));
    EXPECT_LT(std::min(std::abs(n - w), std::abs(n + w)), 1e-12);
  }
}

TEST(Rng, SeededStreamsRepeat) {
  Rng a(42), b(42), c(43);
  for (int k = 0; k < 10; ++k) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  EXPECT_EQ(derive_seed(1, "f2.closed_form"), derive_seed(1, "f2.closed_form"));
  EXPECT_NE(derive_seed(1, "f2.closed_form"), derive_seed(2, "f2.closed_form"));
}

TEST(Sampling, TauInDesignRange) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    ModularPoint t = sample_tau(rng);
    EXPECT_GE(t.v(), 0.8);
    EXPECT_LE(t.v(), 2.5);
    EXPECT_LE(std::abs(t.u()), 0.5);
  }
}

TEST(Floor, GuardRefusesNearIntegers) {
  EXPECT_EQ(guarded_floor(2.5, "x"), 2);
  EXPECT_EQ(guarded_floor(-0.5, "x"), -1);
  EXPECT_THROW(guarded_floor(3.0 + 1e-12, "x"), DomainError);
}
