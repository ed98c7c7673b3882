#include "polygf/sampling.hpp"

#include <cmath>
#include <numeric>

namespace polygf {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& w : s_) w = splitmix(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t out = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return out;
}

Real Rng::uniform(Real lo, Real hi) {
  Real u = Real(next() >> 11) * Real(0x1.0p-53);
  return lo + (hi - lo) * u;
}

long long Rng::integer(long long lo, long long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t x = seed ^ rotl(h, 17);
  return splitmix(x);
}

ModularPoint sample_tau(Rng& rng, Real vmin, Real vmax) {
  Real u = rng.uniform(-0.5, 0.5);
  Real v = rng.uniform(vmin, vmax);
  return ModularPoint(u, v);
}

Real distance_to_integer(Real x) { return std::abs(x - std::round(x)); }

std::vector<Real> sample_alpha(Rng& rng, int r, const std::vector<Locus>& loci, Real lo, Real hi, Real gap) {
  std::vector<Real> a(static_cast<std::size_t>(r));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (auto& x : a) x = rng.uniform(lo, hi);
    bool ok = true;
    for (const auto& c : loci) {
      Real s = std::inner_product(c.begin(), c.end(), a.begin(), Real(0));
      if (distance_to_integer(s) < gap) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  throw ConfigError("sample_alpha: constraints leave no admissible region");
}

std::vector<Complex> sample_z(Rng& rng, const ModularPoint& tau, std::span<const Real> alpha) {
  std::vector<Complex> z;
  for (Real a : alpha) z.push_back(from_elliptic(a, rng.uniform(-0.5, 0.5), tau));
  return z;
}

SL2Matrix sample_sl2(Rng& rng, long long bound) {
  for (;;) {
    long long a = rng.integer(-bound, bound), c = rng.integer(-bound, bound);
    if (std::gcd(a, c) != 1) continue;
    // extended Euclid for b, d with ad - bc = 1
    long long r0 = a, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    // s0 a + t0 c = r0 = +-1
    long long d = s0 * r0, b = -t0 * r0;
    long long k = rng.integer(-2, 2);
    b += k * a;
    d += k * c;
    return SL2Matrix::make(a, b, c, d);
  }
}

}  // namespace polygf
