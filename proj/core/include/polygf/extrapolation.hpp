#pragma once

#include <functional>
#include <vector>

#include "polygf/config.hpp"

namespace polygf {

struct RichardsonOptions {
  int kmin = 4;
  int kmax = 12;
  int order = 3;  // powers eps, eps^2, ..., eps^order on the last order+1 samples
};

struct LimitEstimate {
  Complex value;
  Real convergence = 0;  // |R_{n,n} - R_{n,n-1}|
  std::vector<Real> eps;
  std::vector<Complex> samples;
};

// lim_{eps -> 0+} f(eps) from samples at eps_k = scale 2^{-k}
LimitEstimate richardson_limit(const std::function<Complex(Real)>& f, Real scale,
                               const RichardsonOptions& opt = {});

// Neville table for samples at eps, eps/2, eps/4, ... (ratio 2); returns the
// last diagonal entry and the difference to its left neighbour.
std::pair<Complex, Real> richardson_table(const std::vector<Complex>& s);

}  // namespace polygf
