#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polygf/jumps.hpp"
#include "polygf/polygon_series.hpp"
#include "polygf/region.hpp"
#include "polygf/sampling.hpp"

using namespace polygf;
using oracle::C;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max<Real>(1, std::abs(b)); }

// the theta quotient at 3 tau built from the oracle product
C quotient3(C a, C b, C tau) {
  C T = 3.0 * tau;
  return -oracle::I * std::pow(oracle::eta(T), 3) * oracle::theta_product(3.0 * (a + b), T) /
         (oracle::theta_product(3.0 * a, T) * oracle::theta_product(3.0 * b, T));
}

C f2_brute(C z1, C z2, C tau, int N = 30) {
  return oracle::box_sum<2>(oracle::A2, {z1, z2}, tau, oracle::chi2, N);
}
C f3_brute(C z1, C z2, C tau, int N = 30) {
  return oracle::box_sum<2>(oracle::A3, {z1, z2}, tau, oracle::chi3, N);
}

}  // namespace

TEST(Forms, SignaturesAreLorentzian) {
  EXPECT_EQ(series::form_f1().signature(), std::make_pair(1, 0));
  EXPECT_EQ(series::form_f2().signature(), std::make_pair(1, 1));
  EXPECT_EQ(series::form_f3().signature(), std::make_pair(1, 1));
  EXPECT_EQ(series::form_f4().signature(), std::make_pair(1, 2));
  EXPECT_EQ(series::form_f5().signature(), std::make_pair(1, 3));
}

TEST(Forms, QuadraticValues) {
  std::vector<Real> x{1.5, -0.5, 0.25, 2};
  EXPECT_DOUBLE_EQ(series::form_f2().Q(std::span(x).first(2)), 3 * 1.5 * -0.5);
  EXPECT_DOUBLE_EQ(series::form_f3().Q(std::span(x).first(2)), 1.5 * (1.5 * 1.5 - 0.25));
  EXPECT_DOUBLE_EQ(series::form_f4().Q(std::span(x).first(3)), 3 * 1.5 * -0.5 - 1.5 * 0.0625);
  EXPECT_DOUBLE_EQ(series::form_f5().Q(x), 3 * 1.5 * -0.5 - 1.5 * 0.0625 - 1.5 * 4);
}

TEST(Regions, CharacteristicValues) {
  auto& c2 = series::region_chi2();
  std::vector<Real> p{0.3, 0.4}, n{-0.3, -0.4}, mix{0.3, -0.4};
  EXPECT_EQ(c2(p), 1);
  EXPECT_EQ(c2(n), -1);
  EXPECT_EQ(c2(mix), 0);
  auto& c4 = series::region_chi4();
  std::vector<Real> edge{0.5, 0.7, 0.5}, out{0.5, 0.7, 0.6};
  EXPECT_EQ(c4(edge), 1);  // closed at |x1| = |x3|
  EXPECT_EQ(c4(out), 0);
}

TEST(Triangle, PeriodicInUnitShifts) {
  ModularPoint t(0.1, 1.2);
  Complex z(0.2, 0.1);
  EXPECT_LT(rel(f1(z + Real(1), t), f1(z, t)), 1e-14);
}

TEST(Triangle, ShiftByTau) {
  // f1(z + tau) = q^{-3/2} zeta^{-3} f1(z) at z = 0.2 + 0.1i, tau = 1.2i
  ModularPoint t(0, 1.2);
  C z(0.2, 0.1);
  C want = oracle::e(-1.5 * t.tau() - 3.0 * z) * f1(z, t);
  EXPECT_LT(std::abs(f1(z + t.tau(), t) - want) / std::abs(want), 1e-12);
}

TEST(Triangle, ModularUnderGamma0Of3) {
  // (1,0;6,1) at z = 0.1 + 0.05i, tau = i; (18/1) = 1 and e^{pi i (d-1)/4} = 1
  SL2Matrix g = SL2Matrix::make(1, 0, 6, 1);
  ModularPoint t(0, 1);
  C z(0.1, 0.05);
  C ct = g.cocycle(t.tau());
  C gt = g.apply(t.tau());
  C direct = 0;
  for (int n = -60; n <= 60; ++n) direct += oracle::e(1.5 * n * n * gt + 3.0 * n * z / ct);
  C rhs = std::sqrt(ct) * std::exp(3.0 * oracle::pi * oracle::I * 6.0 * z * z / ct) * f1(z, t);
  EXPECT_LT(rel(direct, rhs), 1e-10);
}

TEST(Triangle, ThetaValue) {
  ModularPoint t(0.2, 1.1);
  C z(0.13, 0.2);
  // sum q^{3n^2/2} zeta^{3n} = theta at 3 tau with a half period shift
  C direct = 0;
  for (int n = -40; n <= 40; ++n) direct += oracle::e(1.5 * n * n * t.tau() + 3.0 * n * z);
  EXPECT_LT(rel(f1(z, t), direct), 1e-13);
  EXPECT_LT(rel(f1_theta_form(z, t), direct), 1e-12);
}

TEST(Parallelogram, GenericEvaluatorMatchesDoubleLoop) {
  ModularPoint t(0, 1.5);
  std::vector<Complex> z{{0.1, 0.2}, {0.15, 0.3}};
  auto s = theta_indefinite(series::form_f2(), series::region_chi2(), z, t);
  EXPECT_LT(rel(s.value, f2_brute(z[0], z[1], t.tau())), 1e-12);
  EXPECT_LT(s.tail_bound, 1e-12);
}

TEST(Parallelogram, ClosedFormAtExamplePoint) {
  ModularPoint t(0, 1.3);
  Vec2 z{Complex(0.11, 0.23), Complex(0.31, 0.37)};
  C brute = f2_brute(z[0], z[1], t.tau());
  EXPECT_LT(rel(f2(z, t), brute), 1e-12);
  EXPECT_LT(rel(f2_closed(z, t), brute), 1e-10);
  EXPECT_LT(rel(quotient3(z[0], z[1], t.tau()), brute), 1e-10);
}

TEST(Parallelogram, ClosedFormRandom) {
  Rng rng(12);
  for (int k = 0; k < 15; ++k) {
    ModularPoint t = sample_tau(rng);
    auto z = sample_z(rng, t, std::vector<Real>{rng.uniform(0.05, 0.95), rng.uniform(-0.95, -0.05)});
    C brute = f2_brute(z[0], z[1], t.tau());
    EXPECT_LT(rel(f2({z[0], z[1]}, t), brute), 1e-12);
    EXPECT_LT(rel(f2_closed({z[0], z[1]}, t), brute), 1e-10);
  }
}

TEST(Parallelogram, Symmetric) {
  ModularPoint t(0.1, 1.1);
  Vec2 z{Complex(0.11, 0.23), Complex(0.31, 0.37)};
  EXPECT_LT(rel(f2(z, t), f2({z[1], z[0]}, t)), 1e-14);
}

TEST(Parallelogram, ShiftFactorDiagonal) {
  // l = (1,1), m = 0: factor q^{-3} zeta1^{-3} zeta2^{-3}
  ModularPoint t(0, 1.3);
  Vec2 z{Complex(0.11, 0.23), Complex(0.31, 0.37)};
  Vec2 zs{z[0] + t.tau(), z[1] + t.tau()};
  C want = oracle::e(-3.0 * t.tau() - 3.0 * z[0] - 3.0 * z[1]) * f2_brute(z[0], z[1], t.tau());
  EXPECT_LT(std::abs(f2(zs, t) - want) / std::abs(want), 1e-11);
}

TEST(Trapezoid, AppellFormAtExamplePoint) {
  ModularPoint t(0, 1.2);
  Vec2 z{Complex(0.27, 0.41), Complex(0.13, 0.19)};
  C brute = f3_brute(z[0], z[1], t.tau());
  EXPECT_LT(rel(f3(z, t), brute), 1e-12);
  EXPECT_LT(rel(f3_closed(z, t), brute), 1e-10);
  // the Appell form written out with the direct Appell sum
  C T = 3.0 * t.tau();
  C want = oracle::e(1.5 * (z[1] - z[0])) * oracle::appell_A(3.0 * (z[0] - z[1]), 3.0 * z[0] - 1.5 * t.tau() + 0.5, T);
  EXPECT_LT(rel(want, brute), 1e-10);
}

TEST(Trapezoid, ShiftFactorSecondVariable) {
  // l = (0,1): factor q^{3/2} zeta2^3
  ModularPoint t(0, 1.2);
  Vec2 z{Complex(0.27, 0.41), Complex(0.13, 0.19)};
  C want = oracle::e(1.5 * t.tau() + 3.0 * z[1]) * f3_brute(z[0], z[1], t.tau());
  EXPECT_LT(std::abs(f3({z[0], z[1] + t.tau()}, t) - want) / std::abs(want), 1e-11);
}

TEST(Trapezoid, CompletionInvariantUnderTranslationByTwo) {
  SL2Matrix g = SL2Matrix::make(1, 2, 0, 1);
  ModularPoint t(0.1, 1.2);
  Vec2 z{Complex(0.27, 0.41), Complex(0.13, 0.19)};
  EXPECT_LT(rel(f3_hat(z, t.transformed(g)), f3_hat(z, t)), 1e-9);
}

TEST(Trapezoid, CompletionModularUnderGamma0Of3) {
  SL2Matrix g = SL2Matrix::make(1, 0, 6, 1);
  ModularPoint t(0.05, 1.1);
  Vec2 z{Complex(0.07, 0.42), Complex(0.03, 0.17)};
  C ct = g.cocycle(t.tau());
  C lhs = f3_hat({z[0] / ct, z[1] / ct}, t.transformed(g));
  C rhs = ct * std::exp(oracle::pi * oracle::I * 6.0 * (3.0 * z[0] * z[0] - 3.0 * z[1] * z[1]) / ct) * f3_hat(z, t);
  EXPECT_LT(rel(lhs, rhs), 1e-9);
}

TEST(Pentagon, SymmetricInFirstTwo) {
  ModularPoint t(0, 1.1);
  Vec3 z{Complex(0.21, 0.52), Complex(0.33, 0.61), Complex(0.12, 0.24)};
  EXPECT_LT(rel(f4(z, t), f4({z[1], z[0], z[2]}, t)), 1e-13);
}

TEST(Pentagon, HalfSumAtExamplePoint) {
  ModularPoint t(0, 1.1);
  Vec3 z{Complex(0.21, 0.52), Complex(0.33, 0.61), Complex(0.12, 0.24)};
  C brute = oracle::box_sum<3>(oracle::A4, {z[0], z[1], z[2]}, t.tau(), oracle::g4_weight, 25);
  EXPECT_LT(rel(g4(z, t), brute), 1e-12);
  EXPECT_LT(rel(g4_closed(z, t), brute), 1e-9);
  EXPECT_LT(rel(g4_via_F_star_series(z, t), brute), 1e-9);
}

TEST(Pentagon, FullSumAgainstBoxLoop) {
  ModularPoint t(0.1, 1.1);
  Vec3 z{Complex(0.21, 0.52), Complex(0.33, 0.61), Complex(0.12, 0.24)};
  C brute = oracle::box_sum<3>(oracle::A4, {z[0], z[1], z[2]}, t.tau(), oracle::chi4, 25);
  EXPECT_LT(rel(f4(z, t), brute), 1e-12);
  EXPECT_LT(rel(f4_closed(z, t), brute), 1e-9);
  EXPECT_LT(rel(g4(z, t) + g4({-z[0], -z[1], z[2]}, t), brute), 1e-12);
}

TEST(Pentagon, ShiftFactorThirdVariable) {
  // l = (0,0,1): factor q^{3/2} zeta3^3
  ModularPoint t(0, 1.1);
  Vec3 z{Complex(0.21, 0.52), Complex(0.33, 0.61), Complex(0.12, 0.24)};
  C want = oracle::e(1.5 * t.tau() + 3.0 * z[2]) * f4(z, t);
  EXPECT_LT(std::abs(f4({z[0], z[1], z[2] + t.tau()}, t) - want) / std::abs(want), 1e-11);
}

TEST(Pentagon, CompletionPeriodicUnderTranslationByTwo) {
  SL2Matrix g = SL2Matrix::make(1, 2, 0, 1);
  ModularPoint t(0.1, 1.2);
  Vec3 z{Complex(0.21, 0.52), Complex(0.33, 0.61), Complex(0.12, 0.24)};
  // (3c/d) = (0/1) = 1 and e^{pi i (1-d)/4} = 1
  EXPECT_LT(rel(f4_hat(z, t.transformed(g)), f4_hat(z, t)), 1e-8);
}

TEST(Hexagon, AgainstBoxLoop) {
  ModularPoint t(0.05, 1.6);
  Real al[4] = {0.15, 0.18, 0.03, 0.02};
  Vec4 z;
  for (int j = 0; j < 4; ++j) z[j] = al[j] * t.tau() + Real(0.1 * (j + 1));
  C brute = oracle::box_sum<4>(oracle::A5, {z[0], z[1], z[2], z[3]}, t.tau(), oracle::chi5, 14);
  EXPECT_LT(rel(f5(z, t), brute), 1e-10);
  EXPECT_LT(rel(f5({-z[0], -z[1], -z[2], -z[3]}, t), -brute), 1e-10);
}

TEST(ExactShifts, TermMultisetsAgree) {
  // Theta(z + l tau + m) and q^{-Q(l)} e^{-2 pi i B(l,z)} Theta(z) as exact term lists
  std::vector<Real> alpha{0.3, 0.45};
  for (long long l1 = -1; l1 <= 1; ++l1)
    for (long long l2 = -1; l2 <= 1; ++l2) {
      std::vector<long long> l{l1, l2}, m{1, 0};
      auto a = shifted_terms(series::form_f2(), series::region_chi2(), alpha, l, m, 6);
      auto b = factored_terms(series::form_f2(), series::region_chi2(), alpha, l, 6);
      EXPECT_TRUE(compare_multisets(a, b).equal()) << l1 << " " << l2;
    }
}

TEST(ExactShifts, DetectsWrongFactor) {
  std::vector<Real> alpha{0.3, 0.45};
  std::vector<long long> l{1, 0}, l_wrong{0, 1}, m{0, 0};
  auto a = shifted_terms(series::form_f2(), series::region_chi2(), alpha, l, m, 6);
  auto b = factored_terms(series::form_f2(), series::region_chi2(), alpha, l_wrong, 6);
  EXPECT_FALSE(compare_multisets(a, b).equal());
}

TEST(Limits, ParallelogramPoleJump) {
  // x2 - u y2 / v = 1/3, y2 = 0: eps (f2(z2 + i eps) - f2(z2 - i eps)) -> 1/(3 pi)
  ModularPoint t(0, 1.4);
  auto r = limits::f2_pole_jump(Complex(0.2, 0.3), Complex(1.0 / 3, 0), t);
  EXPECT_LT(std::abs(r.limit.value - Complex(1 / (3 * pi))), 1e-6);
}

TEST(Limits, ParallelogramGenericWall) {
  ModularPoint t(0, 1.4);
  C z1(0.2, 0.3), z2(0.21, 0);
  auto j = limits::f2_jump(z1, z2, t);
  EXPECT_LT(std::abs(j.limit.value), 1e-6);
  auto l = limits::f2_limit(z1, z2, t);
  EXPECT_LT(std::abs(l.limit.value - quotient3(z1, z2, t.tau())), 1e-6);
  // the widest sample against the box loop
  Real eps = l.limit.eps.front();
  EXPECT_LT(std::abs(l.limit.samples.front() - f2_brute(z1, z2 + C(0, eps), t.tau(), 80)), 1e-10);
}

TEST(Limits, TrapezoidJump) {
  // y2 = 0, x2 = 0.2: jump -q^{3/8} zeta1^{3/2} theta(3 z1 + 3 tau/2 + 1/2; 3 tau)
  ModularPoint t(0, 1.3);
  C z1(0.23, 0.31 * 1.3);
  auto r = limits::f3_jump(z1, C(0.2, 0), t);
  C want = -oracle::e(0.375 * t.tau() + 1.5 * z1) * oracle::theta_product(3.0 * z1 + 1.5 * t.tau() + 0.5, 3.0 * t.tau());
  EXPECT_LT(std::abs(r.limit.value - want), 1e-6);
  EXPECT_LT(std::abs(r.closed_form - want), 1e-12);
}

TEST(Limits, TrapezoidLatticePoint) {
  ModularPoint t(0, 1.3);
  C z1(0.23, 0.31 * 1.3);
  for (long long l : {0, 1}) {
    auto r = limits::f3_limit_lattice(z1, l, 0, t);
    EXPECT_LT(r.residual, 1e-6) << l;
  }
  // l = 1 against l = 0: the q^{3/2 l^2} factor
  C a = limits::f3_limit_lattice_closed(z1, 0, t), b = limits::f3_limit_lattice_closed(z1, 1, t);
  EXPECT_LT(std::abs(b - oracle::e(1.5 * t.tau()) * a), 1e-12);
}

TEST(Limits, HalfPentagonJumpAcrossZ3) {
  ModularPoint t(0, 1.2);
  Vec3 z{Complex(0.1, 0.3 * 1.2), Complex(0.2, 0.45 * 1.2), Complex(0.05, 0)};
  auto r = limits::g4_jump_z3(z, t);
  EXPECT_LT(std::abs(r.limit.value - quotient3(z[0], z[1], t.tau())), 1e-6);
}

TEST(Limits, PentagonNoJumpAcrossZ3) {
  ModularPoint t(0, 1.2);
  Vec3 z{Complex(0.1, 0.3 * 1.2), Complex(0.2, 0.45 * 1.2), Complex(0.05, 0)};
  auto r = limits::f4_jump_z3(z, t);
  EXPECT_LT(std::abs(r.limit.value), 1e-6);
}

TEST(Limits, HalfPentagonJumpIsTrapezoid) {
  // y1 - y3 = 0: the jump of g4 equals f3(z1 + z2 - z3, z2 - z3)
  ModularPoint t(0, 1.2);
  Vec3 z{Complex(0.3, 0.2 * 1.2), Complex(0.1, 0.6 * 1.2), Complex(0.05, 0.2 * 1.2)};
  auto r = limits::g4_jump_z1(z, t);
  C want = f3_brute(z[0] + z[1] - z[2], z[1] - z[2], t.tau());
  EXPECT_LT(std::abs(r.limit.value - want), 1e-6);
}

TEST(Limits, RejectsPointsOffTheWall) {
  ModularPoint t(0, 1.2);
  EXPECT_THROW(limits::f3_jump(Complex(0.2, 0.3), Complex(0.2, 0.5), t), DomainError);
}
