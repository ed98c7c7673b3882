#include "polygf/extrapolation.hpp"

#include <cmath>
#include <limits>

namespace polygf {

std::pair<Complex, Real> richardson_table(const std::vector<Complex>& s) {
  const std::size_t n = s.size();
  if (n == 0) throw ConfigError("richardson: no samples");
  if (n == 1) return {s[0], std::numeric_limits<Real>::infinity()};
  // T[i][j], j <= i
  std::vector<std::vector<Complex>> T(n);
  for (std::size_t i = 0; i < n; ++i) {
    T[i].resize(i + 1);
    T[i][0] = s[i];
    for (std::size_t j = 1; j <= i; ++j) {
      Real p = std::ldexp(Real(1), static_cast<int>(j));
      T[i][j] = T[i][j - 1] + (T[i][j - 1] - T[i - 1][j - 1]) / (p - 1);
    }
  }
  return {T[n - 1][n - 1], std::abs(T[n - 1][n - 1] - T[n - 1][n - 2])};
}

LimitEstimate richardson_limit(const std::function<Complex(Real)>& f, Real scale, const RichardsonOptions& opt) {
  if (opt.kmax < opt.kmin || opt.kmax - opt.kmin < opt.order) throw ConfigError("richardson: not enough samples");
  LimitEstimate r;
  for (int k = opt.kmin; k <= opt.kmax; ++k) {
    Real e = std::ldexp(scale, -k);
    r.eps.push_back(e);
    r.samples.push_back(f(e));
  }
  std::vector<Complex> tail(r.samples.end() - (opt.order + 1), r.samples.end());
  auto [v, c] = richardson_table(tail);
  r.value = v;
  r.convergence = c;
  return r;
}

}  // namespace polygf
