#include "polygf/jumps.hpp"

#include <cmath>

namespace polygf::limits {

namespace {

constexpr Real half = Real(0.5);

long long level(Real y, Real v, const char* what) {
  Real a = y / v;
  long long l = std::llround(a);
  if (std::abs(a - Real(l)) > 1e-10) throw DomainError(std::string(what) + " is not on the jump locus");
  return l;
}

void require_off(Real y, Real v, const char* what) {
  Real a = y / v;
  if (std::abs(a - std::round(a)) < 1e-9) throw DomainError(std::string(what) + " lies on a jump locus");
}

Real rel(Complex a, Complex b) { return std::abs(a - b) / std::max<Real>(1, std::abs(b)); }

JumpReport make(std::string name, LimitEstimate L, Complex closed) {
  JumpReport r;
  r.name = std::move(name);
  r.limit = std::move(L);
  r.closed_form = closed;
  r.residual = rel(r.limit.value, closed);
  return r;
}

void quote(JumpReport& r, Complex q) {
  r.quoted_form = q;
  r.quoted_residual = rel(r.limit.value, q);
}

Complex e3(const ModularPoint& T) { return std::pow(eta(T), 3); }

const Complex iv(Real e) { return Complex(0, e); }

}  // namespace

JumpReport f2_pole_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  long long l = level(z2.imag(), v, "y2");
  Complex x = z2 - Real(l) * tau.tau();
  if (std::abs(3 * x.real() - std::round(3 * x.real())) > 1e-9)
    throw DomainError("f2_pole_jump: x2 - u y2/v must lie in Z/3");
  auto L = richardson_limit([&](Real e) { return e * (f2({z1, z2 + iv(e)}, tau) - f2({z1, z2 - iv(e)}, tau)); }, v, o);
  return make("f2.jump.pole_weighted", L, e2pi(Real(-3 * l) * z1) / (3 * pi));
}

JumpReport f2_pole_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  long long l = level(z2.imag(), v, "y2");
  Complex x = z2 - Real(l) * tau.tau();
  if (std::abs(3 * x.real() - std::round(3 * x.real())) > 1e-9)
    throw DomainError("f2_pole_limit: x2 - u y2/v must lie in Z/3");
  auto L = richardson_limit([&](Real e) { return e * f2({z1, z2 + iv(e)}, tau); }, v, o);
  return make("f2.limit.pole_weighted", L, e2pi(Real(-3 * l) * z1) / (6 * pi));
}

JumpReport f2_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  (void)level(z2.imag(), v, "y2");
  auto L = richardson_limit([&](Real e) { return f2({z1, z2 + iv(e)}, tau) - f2({z1, z2 - iv(e)}, tau); }, v, o);
  return make("f2.jump.generic", L, Complex(0));
}

JumpReport f2_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  (void)level(z2.imag(), v, "y2");
  ModularPoint T = tau.scaled(3);
  auto L = richardson_limit([&](Real e) { return f2({z1, z2 + iv(e)}, tau); }, v, o);
  auto r = make("f2.limit.generic", L, f2_closed({z1, z2}, tau));
  quote(r, -I * e3(T) * theta(Real(3) * (z1 + z2), T) / theta(Real(3) * z2, T));
  return r;
}

Complex f3_limit_closed(Complex z1, Complex z2, const ModularPoint& tau) {
  const Real v = tau.v();
  long long l = level(z2.imag(), v, "y2");
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real L = Real(l);
  Complex pre = tau.qpow(-Real(1.5) * L * (L + 1)) * e2pi(-Real(1.5) * z1 + (3 * L + Real(1.5)) * z2);
  Complex a = Real(3) * z1 - Real(3) * z2 + 3 * L * t;
  Complex b = Real(3) * z2 - 3 * L * t + half;
  return pre * (theta(Real(3) * z1 - Real(1.5) * t + half, T) * mu(b, Real(1.5) * t, T) +
                I * e3(T) * theta(a - Real(1.5) * t, T) * theta(Real(3) * z1 + half, T) /
                    (theta(a, T) * theta(b, T) * theta(Real(1.5) * t, T)));
}

JumpReport f3_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  long long l = level(z2.imag(), v, "y2");
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real L = Real(l);
  auto Lim = richardson_limit([&](Real e) { return f3({z1, z2 + iv(e)}, tau); }, v, o);
  auto r = make("f3.limit.general", Lim, f3_limit_closed(z1, z2, tau));
  Complex quoted = tau.qpow(-Real(1.5) * L * (L + 1)) * e2pi(-Real(1.5) * z1 + (3 * L + Real(1.5)) * z2) *
                       theta(Real(3) * z1 - Real(1.5) * t + half, T) * mu(Real(3) * z2 - 3 * L * t + half, Real(1.5) * t, T) -
                   I * e2pi(Real(1.5) * (z2 - z1)) * e3(T) * theta(Real(3) * (z1 - z2) - Real(1.5) * t, T) *
                       theta(Real(3) * z1 + half, T) /
                       (theta(Real(3) * (z1 - z2), T) * theta(Real(3) * z2 + half, T) * theta(Real(1.5) * t, T));
  quote(r, quoted);
  return r;
}

Complex f3_limit_lattice_closed(Complex z1, long long l, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real L = Real(l);
  Complex c = e2pi(-Real(1.5) * z1);
  return -half * tau.qpow(Real(1.5) * L * L + Real(3) / 8) * c * theta(Real(3) * z1 - Real(1.5) * t + half, T) +
         half * tau.qpow(Real(1.5) * L * L + Real(3) / 4) * c * theta(Real(1.5) * t - half, T) *
             theta(Real(3) * z1 - Real(1.5) * t, T) * theta(Real(3) * z1 + half, T) / theta(Real(3) * z1, T);
}

JumpReport f3_limit_lattice(Complex z1, long long l, long long m, const ModularPoint& tau, const RichardsonOptions& o) {
  require_off(z1.imag(), tau.v(), "y1");
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real L = Real(l);
  Complex z2 = L * t + Real(m);
  auto Lim = richardson_limit([&](Real e) { return f3({z1, z2 + iv(e)}, tau); }, tau.v(), o);
  auto r = make("f3.limit.lattice_point", Lim, f3_limit_lattice_closed(z1, l, tau));
  Complex c = e2pi(-Real(1.5) * z1);
  quote(r, -half * tau.qpow(Real(1.5) * L * L + Real(3) / 8) * c * theta(Real(3) * z1 - Real(1.5) * t + half, T) -
               half * tau.qpow(Real(1.5) * L * L + Real(3) / 4) * c * theta(Real(1.5) * t - half, T) *
                   theta(Real(3) * z1 - Real(1.5) * t, T) * theta(Real(3) * z1 + half, T) / theta(Real(3) * z1, T));
  return r;
}

JumpReport f3_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  require_off(z1.imag(), v, "y1");
  long long l = level(z2.imag(), v, "y2");
  ModularPoint T = tau.scaled(3);
  const Real L = Real(l);
  auto Lim = richardson_limit([&](Real e) { return f3({z1, z2 + iv(e)}, tau) - f3({z1, z2 - iv(e)}, tau); }, v, o);
  Complex closed = -tau.qpow(-Real(1.5) * L * L + Real(3) / 8) * e2pi(Real(1.5) * z1 + 3 * L * z2) *
                   theta(Real(3) * z1 + Real(1.5) * tau.tau() + half, T);
  return make("f3.jump", Lim, closed);
}

namespace {

Complex f2_quotient(Complex a, Complex b, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  return -I * e3(T) * theta(Real(3) * (a + b), T) / (theta(Real(3) * a, T) * theta(Real(3) * b, T));
}

Complex wall_factor(Complex za, Complex zb, long long l, const ModularPoint& tau) {
  const Real L = Real(l);
  return e2pi(3 * L * (za - zb)) * tau.qpow(-Real(1.5) * L * L);
}

}  // namespace

JumpReport g4_jump_z3(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l = level(z[2].imag(), v, "y3");
  require_off(z[0].imag() - z[2].imag(), v, "y1-y3");
  require_off(z[1].imag() - z[2].imag(), v, "y2-y3");
  auto Lim = richardson_limit(
      [&](Real e) { return g4({z[0], z[1], z[2] + iv(e)}, tau) - g4({z[0], z[1], z[2] - iv(e)}, tau); }, v, o);
  const Real L = Real(l);
  Complex closed = tau.qpow(-Real(1.5) * L * L) * e2pi(3 * L * z[2]) * f2_quotient(z[0], z[1], tau);
  return make("g4.jump.z3", Lim, closed);
}

JumpReport g4_jump_z1(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l = level(z[0].imag() - z[2].imag(), v, "y1-y3");
  require_off(z[2].imag(), v, "y3");
  require_off(z[1].imag() - z[2].imag(), v, "y2-y3");
  auto Lim = richardson_limit(
      [&](Real e) { return g4({z[0] + iv(e), z[1], z[2]}, tau) - g4({z[0] - iv(e), z[1], z[2]}, tau); }, v, o);
  Complex closed = wall_factor(z[0], z[2], l, tau) * f3({z[0] + z[1] - z[2], z[1] - z[2]}, tau);
  return make("g4.jump.z1", Lim, closed);
}

JumpReport g4_jump_z2(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l = level(z[1].imag() - z[2].imag(), v, "y2-y3");
  require_off(z[2].imag(), v, "y3");
  require_off(z[0].imag() - z[2].imag(), v, "y1-y3");
  auto Lim = richardson_limit(
      [&](Real e) { return g4({z[0], z[1] + iv(e), z[2]}, tau) - g4({z[0], z[1] - iv(e), z[2]}, tau); }, v, o);
  Complex closed = wall_factor(z[1], z[2], l, tau) * f3({z[0] + z[1] - z[2], z[0] - z[2]}, tau);
  return make("g4.jump.z2", Lim, closed);
}

JumpReport f4_jump_z3(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  (void)level(z[2].imag(), v, "y3");
  require_off(z[0].imag() - z[2].imag(), v, "y1-y3");
  require_off(z[1].imag() - z[2].imag(), v, "y2-y3");
  auto Lim = richardson_limit(
      [&](Real e) { return f4({z[0], z[1], z[2] + iv(e)}, tau) - f4({z[0], z[1], z[2] - iv(e)}, tau); }, v, o);
  return make("f4.jump.z3", Lim, Complex(0));
}

namespace {

LimitEstimate f4_z1_jump(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  return richardson_limit(
      [&](Real e) { return f4({z[0] + iv(e), z[1], z[2]}, tau) - f4({z[0] - iv(e), z[1], z[2]}, tau); }, tau.v(), o);
}

Complex f4_minus_term(const Vec3& z, long long l1, const ModularPoint& tau) {
  return wall_factor(z[0], z[2], l1, tau) * f3({z[0] + z[1] - z[2], z[1] - z[2]}, tau);
}

Complex f4_plus_term(const Vec3& z, long long l2, const ModularPoint& tau) {
  return wall_factor(z[0], -z[2], l2, tau) * f3({z[0] + z[1] + z[2], z[1] + z[2]}, tau);
}

}  // namespace

JumpReport f4_jump_z1_minus(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l1 = level(z[0].imag() - z[2].imag(), v, "y1-y3");
  for (Real y : {z[2].imag(), z[1].imag() - z[2].imag(), z[0].imag() + z[2].imag(), z[1].imag() + z[2].imag()})
    require_off(y, v, "f4_jump_z1_minus hypothesis");
  return make("f4.jump.z1_minus", f4_z1_jump(z, tau, o), f4_minus_term(z, l1, tau));
}

JumpReport f4_jump_z1_plus(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l2 = level(z[0].imag() + z[2].imag(), v, "y1+y3");
  for (Real y : {z[2].imag(), z[1].imag() - z[2].imag(), z[0].imag() - z[2].imag(), z[1].imag() + z[2].imag()})
    require_off(y, v, "f4_jump_z1_plus hypothesis");
  auto r = make("f4.jump.z1_plus", f4_z1_jump(z, tau, o), f4_plus_term(z, l2, tau));
  quote(r, wall_factor(z[0], z[2], l2, tau) * f3({z[0] + z[1] + z[2], z[1] + z[2]}, tau));
  return r;
}

JumpReport f4_jump_z1_both(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o) {
  const Real v = tau.v();
  long long l1 = level(z[0].imag() - z[2].imag(), v, "y1-y3");
  long long l2 = level(z[0].imag() + z[2].imag(), v, "y1+y3");
  for (Real y : {z[2].imag(), z[1].imag() - z[2].imag(), z[1].imag() + z[2].imag()})
    require_off(y, v, "f4_jump_z1_both hypothesis");
  Complex a = f3({z[0] + z[1] - z[2], z[1] - z[2]}, tau);
  Complex b = f3({z[0] + z[1] + z[2], z[1] + z[2]}, tau);
  auto r = make("f4.jump.z1_both", f4_z1_jump(z, tau, o), f4_minus_term(z, l1, tau) + f4_plus_term(z, l2, tau));
  // quoted with real exponents y/v
  const Real a1 = z[0].imag() / v, a3 = z[2].imag() / v;
  const Complex d = z[0] - z[2];
  Complex quoted = e2pi(3 * a1 * d) * tau.qpow(-Real(1.5) * (a1 * a1 + a3 * a3)) *
                   (e2pi(-d * z[2].imag() / Real(2)) * tau.qpow(3 * z[0].imag() * a3) * a +
                    e2pi(d * a3) * tau.qpow(-3 * z[0].imag() * a3) * b);
  quote(r, quoted);
  return r;
}

Complex g4_limit_z3_zero_quoted(Complex z1, Complex z2, const ModularPoint& tau) {
  const Real v = tau.v();
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real F1 = Real(guarded_floor(z1.imag() / v, "y1/v")), F2 = Real(guarded_floor(z2.imag() / v, "y2/v"));
  Complex s = Real(3) * (z1 + z2);
  Complex w = s - Real(1.5) * t + half;
  Complex first = -tau.qpow(-Real(1.5) * (F1 * F1 + F2 * F2) - Real(1.5) * (F1 + F2) - Real(3) / 8) *
                  e2pi(3 * F1 * z1 + 3 * F2 * z2) * theta(w, T) * mu(w - 3 * F2 * t, Real(3) * z1, T) *
                  mu(w - 3 * F1 * t, Real(3) * z2, T);
  Complex second = -I * e3(T) / (Real(2) * theta(Real(3) * z1, T) * theta(Real(3) * z2, T)) *
                   (-theta(s, T) + tau.qpow(Real(3) / 8) * theta_quotient_T(z1 + z2, tau));
  return first + second;
}

Complex g4_limit_z3_zero_closed(Complex z1, Complex z2, const ModularPoint& tau) {
  return g4_limit_z3_zero_quoted(z1, z2, tau) + f2_quotient(z1, z2, tau);
}

JumpReport g4_limit_z3_zero(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  require_off(z1.imag(), tau.v(), "y1");
  require_off(z2.imag(), tau.v(), "y2");
  auto Lim = richardson_limit([&](Real e) { return g4({z1, z2, iv(e)}, tau); }, tau.v(), o);
  auto r = make("g4.limit.z3_zero", Lim, g4_limit_z3_zero_closed(z1, z2, tau));
  quote(r, g4_limit_z3_zero_quoted(z1, z2, tau));
  return r;
}

JumpReport g4_limit_z3_zero_below(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o) {
  require_off(z1.imag(), tau.v(), "y1");
  require_off(z2.imag(), tau.v(), "y2");
  auto Lim = richardson_limit([&](Real e) { return g4({z1, z2, -iv(e)}, tau); }, tau.v(), o);
  return make("g4.limit.z3_zero_below", Lim, g4_limit_z3_zero_quoted(z1, z2, tau));
}

namespace {

// both floors already zero: 0 <= y3 < v, 0 <= y2 - y3 < v
Complex wall_limit_reduced(Complex z2, Complex z3, const ModularPoint& tau) {
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  Complex w = Real(3) * z2 - Real(1.5) * t + half;
  Complex a = -half * e2pi(-Real(1.5) * z3) * theta(w, T) * mu(w, Real(3) * z3, T) *
              (Real(-1) + tau.qpow(Real(3) / 8) * theta_quotient_T(z2, tau) / theta(Real(3) * z2, T));
  Complex b = -I * tau.qpow(-Real(3) / 8) * e2pi(Real(1.5) * z3) * e3(T) * theta(Real(3) * (z2 + z3), T) /
              (theta(Real(3) * z2, T) * theta(Real(3) * z3, T)) *
              mu(Real(3) * z2 + Real(1.5) * t + half, Real(3) * (z2 + z3), T);
  return a + b;
}

Complex wall_limit_quoted(Complex z2, Complex z3, bool z2_form, const ModularPoint& tau) {
  // z2_form: the variant with theta(z2 - 3tau/2 + 1/2) and zeta3^{3 floor(y2/v)}
  const Real v = tau.v();
  ModularPoint T = tau.scaled(3);
  const Complex t = tau.tau();
  const Real G = Real(guarded_floor((z2.imag() - z3.imag()) / v, "(y2-y3)/v"));
  const Real G3 = Real(guarded_floor(z3.imag() / v, "y3/v"));
  const Real Gz = z2_form ? Real(guarded_floor(z2.imag() / v, "y2/v")) : G3;
  Complex a = -half * tau.qpow(-Real(1.5) * G * G - Real(1.5) * G) * e2pi(3 * G * z2 + (-3 * G - Real(1.5)) * z3) *
              theta(z2 - Real(1.5) * t + half, T) * mu(Real(3) * z2 - 3 * G * t - Real(1.5) * t + half, Real(3) * z3, T) *
              (Real(-1) + tau.qpow(Real(3) / 8) * theta_quotient_T(z2, tau) / theta(Real(3) * z2, T));
  Complex b = -I * tau.qpow(-Real(1.5) * G3 - Real(3) / 8) * e2pi((3 * Gz + Real(1.5)) * z3) * e3(T) *
              theta(Real(3) * (z2 + z3), T) / (theta(Real(3) * z2, T) * theta(Real(3) * z3, T)) *
              mu(Real(3) * z2 + Real(1.5) * t + half, Real(3) * (z2 + z3) - 3 * G3 * t, T);
  return a + b;
}

}  // namespace

Complex g4_limit_z1_to_z3_closed(Complex z2, Complex z3, const ModularPoint& tau) {
  const Real v = tau.v();
  const long long G = guarded_floor((z2.imag() - z3.imag()) / v, "(y2-y3)/v");
  const long long G3 = guarded_floor(z3.imag() / v, "y3/v");
  const Complex t = tau.tau();
  Complex z2r = z2 - Real(G + G3) * t, z3r = z3 - Real(G3) * t;
  const Real g = Real(G), g3 = Real(G3);
  return tau.qpow(-3 * g3 * (g3 + g) + Real(1.5) * g3 * g3) * e2pi(-3 * (g3 + g) * z3r - 3 * g3 * z2r + 3 * g3 * z3r) *
         wall_limit_reduced(z2r, z3r, tau);
}

JumpReport g4_limit_z1_to_z3(Complex z2, Complex z3, const ModularPoint& tau, const RichardsonOptions& o) {
  require_off(z3.imag(), tau.v(), "y3");
  require_off(z2.imag() - z3.imag(), tau.v(), "y2-y3");
  auto Lim = richardson_limit([&](Real e) { return g4({z3 + iv(e), z2, z3}, tau); }, tau.v(), o);
  auto r = make("g4.limit.z1_to_z3", Lim, g4_limit_z1_to_z3_closed(z2, z3, tau));
  quote(r, wall_limit_quoted(z2, z3, true, tau));
  return r;
}

JumpReport g4_limit_z2_to_z3(Complex z1, Complex z3, const ModularPoint& tau, const RichardsonOptions& o) {
  require_off(z3.imag(), tau.v(), "y3");
  require_off(z1.imag() - z3.imag(), tau.v(), "y1-y3");
  auto Lim = richardson_limit([&](Real e) { return g4({z1, z3 + iv(e), z3}, tau); }, tau.v(), o);
  auto r = make("g4.limit.z2_to_z3", Lim, g4_limit_z1_to_z3_closed(z1, z3, tau));
  quote(r, wall_limit_quoted(z1, z3, false, tau));
  return r;
}

}  // namespace polygf::limits
