#pragma once

#include <cmath>
#include <string>

#include "polygf/theta.hpp"

namespace polygf::detail {

// Sums term(k) over all integers k, walking outward from `center` on each
// side.  A side stops once its terms are decreasing and negligible against
// the running absolute sum; the discarded tail is estimated from the last
// ratio, which for Gaussian-type terms is an upper bound.
template <class F>
SeriesValue sum_bilateral(F&& term, long long center, Real tol = default_series_tol,
                          long long max_terms = 2000000) {
  SeriesValue out;
  Complex acc = term(center);
  out.abs_sum = std::abs(acc);
  out.terms = 1;
  for (int dir : {1, -1}) {
    Real prev = std::abs(acc);
    int quiet = 0;
    for (long long k = center + dir;; k += dir) {
      Complex t = term(k);
      Real a = std::abs(t);
      if (!std::isfinite(a)) throw OverflowError("series term overflow at index " + std::to_string(k));
      acc += t;
      out.abs_sum += a;
      ++out.terms;
      bool small = a <= tol * out.abs_sum;
      if (small && a <= prev) {
        if (++quiet >= 2) {
          Real rho = prev > 0 ? a / prev : 0;
          out.tail_bound += rho < 1 ? a * rho / (1 - rho) : a;
          break;
        }
      } else {
        quiet = 0;
      }
      prev = a;
      if (out.terms > max_terms) throw ConvergenceError("bilateral series did not converge");
    }
  }
  out.value = acc;
  return out;
}

}  // namespace polygf::detail
