#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "polygf/theta.hpp"

namespace polygf {

// xoshiro256** seeded through splitmix64; the output sequence is fixed
// across platforms, unlike the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  Real uniform(Real lo, Real hi);
  long long integer(long long lo, long long hi);  // inclusive
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t s_[4];
};

// stable per-case stream: hash of the case id mixed into the run seed
std::uint64_t derive_seed(std::uint64_t seed, std::string_view id);

// v in [0.8, 2.5], u in [-0.5, 0.5]
ModularPoint sample_tau(Rng& rng, Real vmin = Real(0.8), Real vmax = Real(2.5));

// A linear combination c . alpha that has to stay away from the integers.
using Locus = std::vector<Real>;

// alpha_j uniform in (lo, hi), redrawn until every locus is at distance >= gap from Z
std::vector<Real> sample_alpha(Rng& rng, int r, const std::vector<Locus>& loci, Real lo = Real(0.05),
                               Real hi = Real(0.95), Real gap = Real(0.02));

// z_j = alpha_j tau + beta_j with beta_j uniform in [-1/2, 1/2]
std::vector<Complex> sample_z(Rng& rng, const ModularPoint& tau, std::span<const Real> alpha);

Real distance_to_integer(Real x);

SL2Matrix sample_sl2(Rng& rng, long long bound);

}  // namespace polygf
