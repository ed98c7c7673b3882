#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polygf/config.hpp"

namespace polygf {

// a . x >= 0
struct LinearConstraint {
  std::vector<Real> a;
};

// Intersection of homogeneous half spaces.
struct Cone {
  std::vector<LinearConstraint> constraints;
  bool contains(std::span<const Real> x, Real slack = 0) const;
};

// A weight chi(x) on R^r together with finitely many polyhedral cones whose
// union covers its support.  chi is evaluated exactly; the cones only
// provide summation bounds.
class CharacteristicRegion {
 public:
  using Weight = std::function<Real(std::span<const Real>)>;

  CharacteristicRegion(std::string name, int dim, std::vector<Cone> cones, Weight chi);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<Cone>& cones() const { return cones_; }
  Real operator()(std::span<const Real> x) const { return chi_(x); }

  // constraints of cone k after eliminating x_{j+1..r-1}
  const std::vector<LinearConstraint>& projected(std::size_t cone, int level) const {
    return projections_[cone][static_cast<std::size_t>(level)];
  }

 private:
  std::string name_;
  int dim_;
  std::vector<Cone> cones_;
  Weight chi_;
  std::vector<std::vector<std::vector<LinearConstraint>>> projections_;
};

// Fourier-Motzkin elimination of variable k from a homogeneous system.
std::vector<LinearConstraint> eliminate_variable(const std::vector<LinearConstraint>& cs, int k);

namespace regions {

Real H(Real x);       // 1 for x > 0
Real Hstar(Real x);   // 1 for x >= 0

// sum over all n (weight 1, full space)
CharacteristicRegion full(int dim);
// weight +1 on {x > 0}, w_minus on {x < 0} (componentwise)
CharacteristicRegion orthants(int dim, Real w_minus);

}  // namespace regions

}  // namespace polygf
