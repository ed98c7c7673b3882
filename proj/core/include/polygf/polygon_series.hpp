#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "polygf/appell.hpp"
#include "polygf/lattice_sum.hpp"
#include "polygf/region.hpp"

namespace polygf {

// Q(x) = x^T A x / 2, B(x,y) = x^T A y; A integral and symmetric.
class QuadraticFormSpec {
 public:
  QuadraticFormSpec(std::string name, int dim, std::vector<long long> A);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  long long A(int i, int j) const { return A_[static_cast<std::size_t>(i * dim_ + j)]; }
  std::vector<Real> real_matrix() const;

  Real Q(std::span<const Real> x) const;
  Real B(std::span<const Real> x, std::span<const Real> y) const;
  Complex B(std::span<const Real> n, std::span<const Complex> z) const;
  // n^T A n as an exact integer
  long long twice_Q(std::span<const long long> n) const;
  std::vector<long long> apply(std::span<const long long> n) const;

  // (positive, negative) eigenvalue counts
  std::pair<int, int> signature() const;

 private:
  std::string name_;
  int dim_;
  std::vector<long long> A_;
};

// Theta_{Q,chi}(z) = sum_n chi(n + y/v) q^{Q(n)} e^{2 pi i B(n,z)}
SeriesValue theta_indefinite(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                             std::span<const Complex> z, const ModularPoint& tau,
                             const LatticeSumOptions& opt = {});

// q^{-Q(l)} e^{-2 pi i B(l, z)}
Complex elliptic_factor(const QuadraticFormSpec& Q, std::span<const long long> l,
                        std::span<const Complex> z, const ModularPoint& tau);

// One term of the series in exact exponent form:
//   chi * q^{tau2/2} * prod_j e^{2 pi i zc_j z_j} * e^{2 pi i c}
// with tau2 and zc integral, c a residue mod 1 (numerator over den).
struct ExactTerm {
  int chi;
  long long tau2;
  std::vector<long long> zc;
  long long c_num;
  long long c_den;
  auto operator<=>(const ExactTerm&) const = default;
};

// Terms of Theta(z + l tau + m) for n in the box |n_j + l_j| <= N, written
// in the variable z (alpha enters only through chi).
std::vector<ExactTerm> shifted_terms(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                                     std::span<const Real> alpha, std::span<const long long> l,
                                     std::span<const long long> m, long long N);
// Terms of q^{-Q(l)} e^{-2 pi i B(l,z)} Theta(z) for n in |n_j| <= N.
std::vector<ExactTerm> factored_terms(const QuadraticFormSpec& Q, const CharacteristicRegion& chi,
                                      std::span<const Real> alpha, std::span<const long long> l, long long N);

struct MultisetDiff {
  std::size_t lhs_size = 0, rhs_size = 0, only_lhs = 0, only_rhs = 0;
  bool equal() const { return only_lhs == 0 && only_rhs == 0; }
};
MultisetDiff compare_multisets(std::vector<ExactTerm> a, std::vector<ExactTerm> b);

namespace series {

const QuadraticFormSpec& form_f1();
const QuadraticFormSpec& form_f2();
const QuadraticFormSpec& form_f3();
const QuadraticFormSpec& form_f4();
const QuadraticFormSpec& form_f5();

const CharacteristicRegion& region_full1();
const CharacteristicRegion& region_chi2();
const CharacteristicRegion& region_chi3();
const CharacteristicRegion& region_chi4();
const CharacteristicRegion& region_g4();
const CharacteristicRegion& region_chi5();

}  // namespace series

using Vec2 = std::array<Complex, 2>;
using Vec3 = std::array<Complex, 3>;
using Vec4 = std::array<Complex, 4>;

// raw lattice sums
SeriesValue f1_series(Complex z, const ModularPoint& tau, const LatticeSumOptions& opt = {});
SeriesValue f2_series(const Vec2& z, const ModularPoint& tau, const LatticeSumOptions& opt = {});
SeriesValue f3_series(const Vec2& z, const ModularPoint& tau, const LatticeSumOptions& opt = {});
SeriesValue f4_series(const Vec3& z, const ModularPoint& tau, const LatticeSumOptions& opt = {});
SeriesValue g4_series(const Vec3& z, const ModularPoint& tau, const LatticeSumOptions& opt = {});
SeriesValue f5_series(const Vec4& z, const ModularPoint& tau, const LatticeSumOptions& opt = {});

Complex f1(Complex z, const ModularPoint& tau);
Complex f2(const Vec2& z, const ModularPoint& tau);
Complex f3(const Vec2& z, const ModularPoint& tau);
Complex f4(const Vec3& z, const ModularPoint& tau);
Complex g4(const Vec3& z, const ModularPoint& tau);
Complex f5(const Vec4& z, const ModularPoint& tau);

// -q^{3/8} zeta^{3/2} theta(3z + 3tau/2 + 1/2; 3tau)
Complex f1_theta_form(Complex z, const ModularPoint& tau);
// -i eta^3(3tau) theta(3z1+3z2)/(theta(3z1) theta(3z2)), all at 3tau
Complex f2_closed(const Vec2& z, const ModularPoint& tau);
// (zeta2/zeta1)^{3(1/2+F)} A(3(z1-z2), 3z1 - 3F tau - 3tau/2 + 1/2; 3tau), F = floor(y2/v)
Complex f3_closed(const Vec2& z, const ModularPoint& tau);
Complex f3_hat(const Vec2& z, const ModularPoint& tau);

// g4 through F* with the shift by Y = 3 floor((y1-y3, y2-y3, y3)/v)
struct G4Reduction {
  long long Y1, Y2, Y3;
  Complex prefactor;
  Vec3 w;  // arguments of F* at 3 tau
};
G4Reduction g4_reduction(const Vec3& z, const ModularPoint& tau);
Complex g4_closed(const Vec3& z, const ModularPoint& tau);          // F* via mu and theta
Complex g4_via_F_star_series(const Vec3& z, const ModularPoint& tau);
Complex f4_closed(const Vec3& z, const ModularPoint& tau);

Complex F_star_hat(const Vec3& w, const ModularPoint& tau);
Complex f4_hat(const Vec3& z, const ModularPoint& tau);

}  // namespace polygf
