#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#ifndef POLYGF_REAL
#define POLYGF_REAL double
#endif

namespace polygf {

using Real = POLYGF_REAL;
using Complex = std::complex<Real>;

inline constexpr Real pi = std::numbers::pi_v<Real>;
inline constexpr Complex I{0, 1};

// Relative tolerance at which series truncation stops by default.
inline constexpr Real default_series_tol = Real(1e-17);

// Distance to the lattice Z tau + Z below which a pole is declared.
inline constexpr Real pole_guard = Real(1e-8);

// Distance of y/v from an integer below which floor() is refused.
inline constexpr Real floor_guard = Real(1e-9);

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Argument sits on a pole or an excluded locus of a meromorphic function.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// A series is outside its convergence domain or failed to meet tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace polygf
