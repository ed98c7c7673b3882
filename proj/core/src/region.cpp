#include "polygf/region.hpp"

#include <algorithm>
#include <cmath>

namespace polygf {

bool Cone::contains(std::span<const Real> x, Real slack) const {
  for (const auto& c : constraints) {
    Real s = 0;
    for (std::size_t i = 0; i < c.a.size(); ++i) s += c.a[i] * x[i];
    if (s < -slack) return false;
  }
  return true;
}

namespace {

void normalize(LinearConstraint& c) {
  Real m = 0;
  for (Real a : c.a) m = std::max(m, std::abs(a));
  if (m > 0)
    for (Real& a : c.a) {
      a /= m;
      if (std::abs(a) < Real(1e-14)) a = 0;
    }
}

bool is_zero(const LinearConstraint& c) {
  return std::all_of(c.a.begin(), c.a.end(), [](Real a) { return a == 0; });
}

bool same(const LinearConstraint& x, const LinearConstraint& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (std::abs(x.a[i] - y.a[i]) > Real(1e-12)) return false;
  return true;
}

}  // namespace

std::vector<LinearConstraint> eliminate_variable(const std::vector<LinearConstraint>& cs, int k) {
  std::vector<LinearConstraint> pos, neg, out;
  auto ku = static_cast<std::size_t>(k);
  for (const auto& c : cs) {
    if (c.a[ku] > 0) pos.push_back(c);
    else if (c.a[ku] < 0) neg.push_back(c);
    else out.push_back(c);
  }
  for (const auto& p : pos)
    for (const auto& m : neg) {
      LinearConstraint r;
      r.a.resize(p.a.size());
      for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] = -m.a[ku] * p.a[i] + p.a[ku] * m.a[i];
      r.a[ku] = 0;
      out.push_back(std::move(r));
    }
  std::vector<LinearConstraint> dedup;
  for (auto& c : out) {
    normalize(c);
    if (is_zero(c)) continue;
    if (std::none_of(dedup.begin(), dedup.end(), [&](const LinearConstraint& d) { return same(c, d); }))
      dedup.push_back(c);
  }
  return dedup;
}

CharacteristicRegion::CharacteristicRegion(std::string name, int dim, std::vector<Cone> cones, Weight chi)
    : name_(std::move(name)), dim_(dim), cones_(std::move(cones)), chi_(std::move(chi)) {
  for (const auto& cone : cones_) {
    for (const auto& c : cone.constraints)
      if (static_cast<int>(c.a.size()) != dim_) throw ConfigError("region " + name_ + ": constraint of wrong dimension");
    std::vector<std::vector<LinearConstraint>> levels(static_cast<std::size_t>(dim_));
    std::vector<LinearConstraint> cur = cone.constraints;
    for (auto& c : cur) normalize(c);
    for (int j = dim_ - 1; j >= 0; --j) {
      levels[static_cast<std::size_t>(j)] = cur;
      if (j > 0) cur = eliminate_variable(cur, j);
    }
    projections_.push_back(std::move(levels));
  }
}

namespace regions {

Real H(Real x) { return x > 0 ? 1 : 0; }
Real Hstar(Real x) { return x >= 0 ? 1 : 0; }

CharacteristicRegion full(int dim) {
  return CharacteristicRegion("full", dim, {Cone{}}, [](std::span<const Real>) { return Real(1); });
}

CharacteristicRegion orthants(int dim, Real w_minus) {
  Cone plus, minus;
  for (int i = 0; i < dim; ++i) {
    LinearConstraint c;
    c.a.assign(static_cast<std::size_t>(dim), 0);
    c.a[static_cast<std::size_t>(i)] = 1;
    plus.constraints.push_back(c);
    c.a[static_cast<std::size_t>(i)] = -1;
    minus.constraints.push_back(c);
  }
  return CharacteristicRegion("orthants", dim, {plus, minus}, [w_minus](std::span<const Real> x) {
    bool all_pos = true, all_neg = true;
    for (Real t : x) {
      all_pos = all_pos && t > 0;
      all_neg = all_neg && t < 0;
    }
    return all_pos ? Real(1) : (all_neg ? w_minus : Real(0));
  });
}

}  // namespace regions

}  // namespace polygf
