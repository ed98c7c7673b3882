#include "polygf/lattice_sum.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

namespace polygf {

namespace {

constexpr long long NEG_INF = LLONG_MIN / 4;
constexpr long long POS_INF = LLONG_MAX / 4;
constexpr Real bound_slack = Real(1e-9);

struct Interval {
  long long lo, hi;
};

struct Slab {
  Complex value{0};
  Real abs_sum = 0;
};

class Summer {
 public:
  Summer(const LatticeSumProblem& p, const ModularPoint& tau, const LatticeSumOptions& opt)
      : p_(p), tau_(tau.tau()), v_(tau.v()), opt_(opt), r_(p.dim),
        n_(static_cast<std::size_t>(p.dim)), x_(static_cast<std::size_t>(p.dim)) {
    if (!p.region || p.region->dim() != r_) throw ConfigError("lattice_sum: region dimension mismatch");
    if (p.A.size() != static_cast<std::size_t>(r_ * r_) || p.lin.size() != static_cast<std::size_t>(r_) ||
        p.shift.size() != static_cast<std::size_t>(r_))
      throw ConfigError("lattice_sum: inconsistent problem dimensions");
  }

  SeriesValue run() {
    Slab s = level(0);
    SeriesValue out;
    out.value = s.value;
    out.abs_sum = abs_sum_;
    out.tail_bound = tail_;
    out.terms = terms_;
    return out;
  }

 private:
  Real A(int i, int j) const { return p_.A[static_cast<std::size_t>(i * r_ + j)]; }

  std::vector<Interval> intervals(int j) const {
    std::vector<Interval> iv;
    const auto& region = *p_.region;
    Real sh = p_.shift[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < region.cones().size(); ++k) {
      Real lo = -INFINITY, hi = INFINITY;
      bool feasible = true;
      for (const auto& c : region.projected(k, j)) {
        Real s = 0;
        for (int i = 0; i < j; ++i) s += c.a[static_cast<std::size_t>(i)] * x_[static_cast<std::size_t>(i)];
        Real cj = c.a[static_cast<std::size_t>(j)];
        if (cj == 0) {
          if (s < -bound_slack) feasible = false;
        } else if (cj > 0) {
          lo = std::max(lo, -s / cj);
        } else {
          hi = std::min(hi, s / -cj);
        }
      }
      if (!feasible || lo > hi + 2 * bound_slack) continue;
      Interval I{NEG_INF, POS_INF};
      if (std::isfinite(lo)) I.lo = static_cast<long long>(std::ceil(lo - sh - bound_slack));
      if (std::isfinite(hi)) I.hi = static_cast<long long>(std::floor(hi - sh + bound_slack));
      if (opt_.nmax_override > 0) {
        I.lo = std::max(I.lo, -opt_.nmax_override);
        I.hi = std::min(I.hi, opt_.nmax_override);
      }
      if (I.lo <= I.hi) iv.push_back(I);
    }
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& I : iv) {
      if (!merged.empty() && I.lo <= merged.back().hi + 1)
        merged.back().hi = std::max(merged.back().hi, I.hi);
      else
        merged.push_back(I);
    }
    return merged;
  }

  void set(int j, long long n) {
    n_[static_cast<std::size_t>(j)] = n;
    x_[static_cast<std::size_t>(j)] = Real(n) + p_.shift[static_cast<std::size_t>(j)];
  }

  void count() {
    if (++terms_ > opt_.max_terms) throw ConvergenceError("lattice sum exceeded the term budget; series likely divergent");
  }

  Slab level(int j) { return j == r_ - 1 ? row(j) : outer(j); }

  // innermost coordinate: exponent is quadratic in t = n_j
  Slab row(int j) {
    const Complex tpi = Complex(0, 2 * pi);
    Complex E2 = tpi * tau_ * (A(j, j) / 2);
    Complex E1 = tpi * p_.lin[static_cast<std::size_t>(j)];
    Complex E0 = tpi * p_.constant;
    for (int i = 0; i < j; ++i) {
      Real ni = Real(n_[static_cast<std::size_t>(i)]);
      E1 += tpi * tau_ * (A(i, j) * ni);
      E0 += tpi * p_.lin[static_cast<std::size_t>(i)] * ni;
      for (int k = 0; k < j; ++k) E0 += tpi * tau_ * (A(i, k) * ni * Real(n_[static_cast<std::size_t>(k)]) / 2);
    }
    // g(t) = -Re E(t), term magnitude e^{-g}
    Real g2 = -E2.real(), g1 = -E1.real();
    auto slope = [&](Real t) { return g1 + 2 * g2 * t; };

    Slab s;
    Real env = 0;
    auto visit = [&](long long t) {
      set(j, t);
      count();
      Real tr = Real(t);
      Complex e = E0 + E1 * tr + E2 * (tr * tr);
      Real mag = std::exp(e.real());
      if (!std::isfinite(mag)) throw OverflowError("lattice sum term overflow");
      env += mag;
      Real w = (*p_.region)(x_);
      if (w != 0) {
        Complex term = w * std::exp(e);
        s.value += term;
        Real a = std::abs(term);
        s.abs_sum += a;
        abs_sum_ += a;
      }
      return mag;
    };
    // true when the tail beyond t in direction d is negligible
    auto done = [&](long long t, int d, Real mag) {
      Real sl = d * slope(Real(t));
      if (g2 < 0) throw ConvergenceError("lattice sum diverges: indefinite direction unbounded in the region");
      if (sl <= 0) return false;
      Real rho = std::exp(-sl);
      Real bound = rho < 1 ? mag * rho / (1 - rho) : INFINITY;
      if (bound <= opt_.tol * std::max(abs_sum_, env)) {
        tail_ += bound;
        return true;
      }
      return false;
    };
    auto walk = [&](long long start, long long stop, int d) {
      for (long long t = start;; t += d) {
        if ((d > 0 && t > stop) || (d < 0 && t < stop)) break;
        Real mag = visit(t);
        if (d > 0 ? stop >= POS_INF : stop <= NEG_INF) {
          if (done(t, d, mag)) break;
        }
      }
    };

    for (const auto& I : intervals(j)) {
      bool lo_inf = I.lo <= NEG_INF, hi_inf = I.hi >= POS_INF;
      if (!lo_inf && !hi_inf) {
        if (I.hi - I.lo > opt_.max_terms) throw ConvergenceError("lattice sum: row too long");
        walk(I.lo, I.hi, 1);
      } else if (!lo_inf) {
        walk(I.lo, POS_INF, 1);
      } else if (!hi_inf) {
        walk(I.hi, NEG_INF, -1);
      } else {
        if (!(g2 > 0)) throw ConvergenceError("lattice sum diverges: unbounded row without quadratic decay");
        long long c = static_cast<long long>(std::llround(-g1 / (2 * g2)));
        walk(c, POS_INF, 1);
        walk(c - 1, NEG_INF, -1);
      }
    }
    return s;
  }

  Slab outer(int j) {
    Slab s;
    auto visit = [&](long long t) {
      set(j, t);
      Slab sub = level(j + 1);
      s.value += sub.value;
      s.abs_sum += sub.abs_sum;
      return sub.abs_sum;
    };
    auto walk_inf = [&](long long start, int d) {
      Real prev = -1;
      int quiet = 0;
      long long steps = 0;
      for (long long t = start;; t += d, ++steps) {
        Real a = visit(t);
        bool small = a <= opt_.tol * abs_sum_;
        bool decreasing = prev < 0 ? false : a <= prev;
        if (a == 0 && steps >= 3) decreasing = true;
        if (small && decreasing && steps >= 2) {
          Real rho = prev > 0 ? a / prev : 0;
          Real est = rho < 1 ? a / (1 - rho) : INFINITY;
          if (est <= opt_.tol * std::max(abs_sum_, Real(1e-300)) || a == 0) {
            if (++quiet >= 3) {
              tail_ += est;
              break;
            }
          } else {
            quiet = 0;
          }
        } else {
          quiet = 0;
        }
        prev = a;
        if (steps > 50000000) throw ConvergenceError("lattice sum: outer level did not converge");
      }
    };

    for (const auto& I : intervals(j)) {
      bool lo_inf = I.lo <= NEG_INF, hi_inf = I.hi >= POS_INF;
      if (!lo_inf && !hi_inf) {
        for (long long t = I.lo; t <= I.hi; ++t) visit(t);
      } else if (!lo_inf) {
        walk_inf(I.lo, 1);
      } else if (!hi_inf) {
        walk_inf(I.hi, -1);
      } else {
        long long c = static_cast<long long>(std::llround(-p_.shift[static_cast<std::size_t>(j)]));
        walk_inf(c, 1);
        walk_inf(c - 1, -1);
      }
    }
    return s;
  }

  const LatticeSumProblem& p_;
  Complex tau_;
  Real v_;
  LatticeSumOptions opt_;
  int r_;
  std::vector<long long> n_;
  std::vector<Real> x_;
  Real abs_sum_ = 0;
  Real tail_ = 0;
  long long terms_ = 0;
};

}  // namespace

SeriesValue lattice_sum(const LatticeSumProblem& p, const ModularPoint& tau, const LatticeSumOptions& opt) {
  return Summer(p, tau, opt).run();
}

SeriesValue lattice_sum_box(const LatticeSumProblem& p, const ModularPoint& tau, long long N) {
  const int r = p.dim;
  std::vector<long long> n(static_cast<std::size_t>(r), -N);
  std::vector<Real> x(static_cast<std::size_t>(r));
  SeriesValue out;
  const Complex tpi = Complex(0, 2 * pi);
  for (;;) {
    Complex e = p.constant;
    for (int i = 0; i < r; ++i) {
      Real ni = Real(n[static_cast<std::size_t>(i)]);
      x[static_cast<std::size_t>(i)] = ni + p.shift[static_cast<std::size_t>(i)];
      e += p.lin[static_cast<std::size_t>(i)] * ni;
      for (int k = 0; k < r; ++k)
        e += tau.tau() * (p.A[static_cast<std::size_t>(i * r + k)] * ni * Real(n[static_cast<std::size_t>(k)]) / 2);
    }
    Real w = (*p.region)(x);
    if (w != 0) {
      Complex t = w * std::exp(tpi * e);
      out.value += t;
      out.abs_sum += std::abs(t);
    }
    ++out.terms;
    int i = r - 1;
    while (i >= 0 && n[static_cast<std::size_t>(i)] == N) n[static_cast<std::size_t>(i--)] = -N;
    if (i < 0) break;
    ++n[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace polygf
