#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polygf/geometry.hpp"

using namespace polygf;
using namespace polygf::geometry;

namespace {

// shoelace area of a clockwise polygon
Real shoelace(const std::vector<Point>& v) {
  Real s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return -s / 2;
}

const PolygonInstance* find(const Enumeration& e, std::vector<long long> n) {
  for (const auto& p : e.instances)
    if (p.n == n) return &p;
  return nullptr;
}

}  // namespace

TEST(Enumeration, ParallelogramBaseInstance) {
  std::vector<Real> alpha{0.3, 0.4};
  auto ref = make_reference(Shape::parallelogram, alpha);
  auto e = enumerate(ref);
  const PolygonInstance* p = find(e, {0, 0});
  ASSERT_NE(p, nullptr);
  EXPECT_NEAR(p->area, std::sqrt(Real(3)) / 2 * 3 * 0.12, 1e-12);
  EXPECT_EQ(p->sign, 1);
  EXPECT_NEAR(shoelace(p->vertices), p->area, 1e-12);
}

TEST(Enumeration, ParallelogramMixedSignsExcluded) {
  std::vector<Real> alpha{0.3, 0.4};
  auto e = enumerate(make_reference(Shape::parallelogram, alpha));
  EXPECT_EQ(find(e, {-2, 1}), nullptr);
  const auto& s = shape_spec(Shape::parallelogram);
  std::vector<Real> x{-1.7, 1.4};
  auto p = build_polygon(s, x, default_vertex());
  EXPECT_FALSE(p.valid);
}

TEST(Enumeration, TriangleBelowSmallestArea) {
  std::vector<Real> alpha{0.4};
  auto ref = make_reference(Shape::triangle, alpha);
  EnumerationOptions opt;
  opt.q_cut = 1.5 * 0.16 * 0.99;  // just below Q(0.4)
  auto e = enumerate(ref, opt);
  EXPECT_TRUE(e.instances.empty());
  std::vector<Real> beta{0.1, 0.2, 0.3};
  EXPECT_EQ(geometric_generating_sum(e, Complex(0, 1), beta), Complex(0));
  opt.q_cut = 1.5 * 0.16 * 1.01;
  EXPECT_EQ(enumerate(ref, opt).instances.size(), 1u);
}

TEST(Enumeration, AreasMatchShoelaceAndForm) {
  for (Shape s : {Shape::triangle, Shape::parallelogram, Shape::trapezoid, Shape::pentagon}) {
    const auto& sp = shape_spec(s);
    std::vector<Real> alpha;
    for (int j = 0; j < sp.r; ++j) alpha.push_back(0.37 - 0.11 * j);
    auto e = enumerate(make_reference(s, alpha));
    ASSERT_FALSE(e.instances.empty()) << sp.name;
    for (const auto& p : e.instances) {
      EXPECT_NEAR(shoelace(p.vertices), p.area, 1e-11) << sp.name;
      EXPECT_NEAR(p.area, std::sqrt(Real(3)) / 2 * sp.form->Q(p.x), 1e-11) << sp.name;
      EXPECT_LE(p.area, std::sqrt(Real(3)) / 2 * 12 + 1e-12);
    }
  }
}

TEST(Enumeration, LexicographicAndDeterministic) {
  std::vector<Real> alpha{0.3, 0.4};
  auto ref = make_reference(Shape::parallelogram, alpha);
  EnumerationOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = enumerate(ref, one), b = enumerate(ref, many);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t k = 0; k < a.instances.size(); ++k) EXPECT_EQ(a.instances[k].n, b.instances[k].n);
  EXPECT_TRUE(std::is_sorted(a.instances.begin(), a.instances.end(),
                             [](const auto& x, const auto& y) { return x.n < y.n; }));
  EXPECT_EQ(to_json(a.instances), to_json(b.instances));
}

TEST(Enumeration, TranslationByLatticeVector) {
  std::vector<Real> alpha{0.3, 0.2};
  auto ref = make_reference(Shape::trapezoid, alpha);
  EnumerationOptions opt;
  auto a = enumerate(ref, opt);
  Point r1 = TriangularLattice::rho1(), r2 = TriangularLattice::rho2();
  opt.translate = {2 * r1[0] - r2[0], 2 * r1[1] - r2[1]};
  auto b = enumerate(ref, opt);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t k = 0; k < a.instances.size(); ++k) {
    EXPECT_EQ(a.instances[k].n, b.instances[k].n);
    EXPECT_NEAR(a.instances[k].area, b.instances[k].area, 1e-12);
  }
}

TEST(Lattice, Coordinates) {
  auto c = TriangularLattice::coords({Real(1.5), std::sqrt(Real(3)) / 2});
  EXPECT_NEAR(c[0], 2, 1e-15);
  EXPECT_NEAR(c[1], 1, 1e-15);
  EXPECT_TRUE(TriangularLattice::contains({Real(0.5), std::sqrt(Real(3)) / 2}));
  EXPECT_FALSE(TriangularLattice::contains({Real(0.17), 0}));
}

TEST(Reference, DefaultOffsetsAreGeneric) {
  for (Shape s : {Shape::triangle, Shape::parallelogram, Shape::trapezoid, Shape::pentagon}) {
    const auto& sp = shape_spec(s);
    std::vector<Real> alpha;
    for (int j = 0; j < sp.r; ++j) alpha.push_back(0.41 - 0.13 * j);
    EXPECT_TRUE(generic_offsets(make_reference(s, alpha))) << sp.name;
  }
}

TEST(Crosscheck, PerfectBijections) {
  struct Case {
    Shape s;
    std::vector<Real> alpha, beta;
  };
  std::vector<Case> cases{{Shape::triangle, {0.4}, {0.13}},
                          {Shape::parallelogram, {0.3, 0.4}, {0.11, -0.27}},
                          {Shape::trapezoid, {0.45, 0.2}, {0.3, 0.05}},
                          {Shape::pentagon, {0.45, 0.35, 0.15}, {0.2, -0.1, 0.33}}};
  for (const auto& c : cases) {
    auto m = crosscheck(c.s, c.alpha, c.beta, 12);
    EXPECT_TRUE(m.perfect()) << m.shape;
    EXPECT_GT(m.matched, 0) << m.shape;
    EXPECT_EQ(m.overall_sign, 1) << m.shape;
    EXPECT_EQ(m.geometric_terms, m.algebraic_terms) << m.shape;
  }
  auto g = crosscheck(Shape::pentagon, std::vector<Real>{0.45, 0.35, 0.15}, std::vector<Real>{0.2, -0.1, 0.33}, 12,
                      PentagonMode::single_g4);
  EXPECT_TRUE(g.perfect());
}

TEST(Crosscheck, IndicatorEqualsChi) {
  for (Shape s : {Shape::triangle, Shape::parallelogram, Shape::trapezoid, Shape::pentagon}) {
    const auto& sp = shape_spec(s);
    std::vector<Real> alpha;
    for (int j = 0; j < sp.r; ++j) alpha.push_back(0.43 - 0.12 * j);
    auto r = chi_equivalence(s, alpha, 4);
    EXPECT_GT(r.candidates, 0);
    EXPECT_EQ(r.disagreements, 0) << sp.name;
  }
}

TEST(Crosscheck, GeometricSumEqualsAlgebraicPartialSum) {
  std::vector<Real> alpha{0.3, 0.4}, beta_star{0.05, 0.12, -0.07, 0.2};
  const auto& sp = shape_spec(Shape::parallelogram);
  auto e = enumerate(make_reference(Shape::parallelogram, alpha));
  Complex tau(0.1, 1.0);
  Complex g = geometric_generating_sum(e, w_from_tau(tau), beta_star);
  auto beta = beta_from_star(sp, beta_star);
  Complex a = algebraic_partial_sum(sp, *sp.region, alpha, beta, tau, 12, e.radius);
  EXPECT_LT(std::abs(g - a), 1e-12);
}

TEST(Output, CsvHasHeaderAndRows) {
  std::vector<Real> alpha{0.3, 0.4};
  auto e = enumerate(make_reference(Shape::parallelogram, alpha));
  std::ostringstream os;
  write_csv(os, e.instances);
  std::string s = os.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), e.instances.size() + 1);
}
