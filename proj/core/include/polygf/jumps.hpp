#pragma once

#include <optional>
#include <string>

#include "polygf/extrapolation.hpp"
#include "polygf/polygon_series.hpp"

namespace polygf {

// Extrapolated one-sided limit or jump of a raw lattice sum against a closed form.
struct JumpReport {
  std::string name;
  LimitEstimate limit;
  Complex closed_form;
  Real residual = 0;  // |limit - closed| / max(1, |closed|)
  // alternative closed form, where it differs from closed_form
  std::optional<Complex> quoted_form;
  std::optional<Real> quoted_residual;
};

namespace limits {

// f2 near y2 in Z v.  z2 is the point on the jump locus.
// eps (f2(z1,z2+i eps) - f2(z1,z2-i eps)) -> zeta1^{-3 y2/v} / (3 pi), needs 3(z2 - l tau) in Z
JumpReport f2_pole_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
// eps f2(z1, z2 + i eps) -> zeta1^{-3 y2/v} / (6 pi)
JumpReport f2_pole_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
// generic x2: jump 0
JumpReport f2_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
// generic x2: f2(z1, z2 + i eps) -> -i eta^3 theta(3(z1+z2)) / (theta(3z1) theta(3z2))
JumpReport f2_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});

// f3(z1, z2 + i eps) for y2 = l v
JumpReport f3_limit(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
// same, at z2 = l tau + m
JumpReport f3_limit_lattice(Complex z1, long long l, long long m, const ModularPoint& tau,
                            const RichardsonOptions& o = {});
// f3(z1,z2+i eps) - f3(z1,z2-i eps) -> -q^{-3l^2/2+3/8} zeta1^{3/2} zeta2^{3l} theta(3z1+3tau/2+1/2; 3tau)
JumpReport f3_jump(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});

// jumps of g4 across y3, y1 - y3, y2 - y3 in Z v
JumpReport g4_jump_z3(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport g4_jump_z1(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport g4_jump_z2(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});

// jumps of f4: across y3 (zero), across y1 - y3, across y1 + y3, across both
JumpReport f4_jump_z3(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport f4_jump_z1_minus(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport f4_jump_z1_plus(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport f4_jump_z1_both(const Vec3& z, const ModularPoint& tau, const RichardsonOptions& o = {});

// one-sided limits of g4 onto its walls
// g4(z1, z2, i eps); the quoted form is the limit from below, reported alongside
JumpReport g4_limit_z3_zero(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
JumpReport g4_limit_z3_zero_below(Complex z1, Complex z2, const ModularPoint& tau, const RichardsonOptions& o = {});
// g4(z3 + i eps, z2, z3)
JumpReport g4_limit_z1_to_z3(Complex z2, Complex z3, const ModularPoint& tau, const RichardsonOptions& o = {});
// g4(z1, z3 + i eps, z3)
JumpReport g4_limit_z2_to_z3(Complex z1, Complex z3, const ModularPoint& tau, const RichardsonOptions& o = {});

// closed forms, exposed for the CLI and tests
Complex f3_limit_closed(Complex z1, Complex z2, const ModularPoint& tau);
Complex f3_limit_lattice_closed(Complex z1, long long l, const ModularPoint& tau);
Complex g4_limit_z3_zero_closed(Complex z1, Complex z2, const ModularPoint& tau);  // from above
Complex g4_limit_z3_zero_quoted(Complex z1, Complex z2, const ModularPoint& tau);  // from below
Complex g4_limit_z1_to_z3_closed(Complex z2, Complex z3, const ModularPoint& tau);

}  // namespace limits
}  // namespace polygf
