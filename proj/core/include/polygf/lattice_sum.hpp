#pragma once

#include <vector>

#include "polygf/region.hpp"
#include "polygf/theta.hpp"

namespace polygf {

// sum_{n in Z^r} chi(n + shift) exp(2 pi i (tau n^T A n / 2 + lin . n + c))
struct LatticeSumProblem {
  int dim = 0;
  std::vector<Real> A;        // symmetric, row major r x r
  std::vector<Complex> lin;
  Complex constant{0};
  std::vector<Real> shift;
  const CharacteristicRegion* region = nullptr;
};

struct LatticeSumOptions {
  Real tol = default_series_tol;
  long long max_terms = 400000000;
  // truncate every coordinate to |n_j| <= nmax (0 disables); used for
  // brute force cross checks
  long long nmax_override = 0;
};

SeriesValue lattice_sum(const LatticeSumProblem& p, const ModularPoint& tau,
                        const LatticeSumOptions& opt = {});

// Plain box summation over |n_j| <= N, no adaptivity.
SeriesValue lattice_sum_box(const LatticeSumProblem& p, const ModularPoint& tau, long long N);

}  // namespace polygf
