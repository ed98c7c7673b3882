#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polygf/polygon_series.hpp"

namespace polygf::geometry {

using Point = std::array<Real, 2>;

enum class Shape { triangle, parallelogram, trapezoid, pentagon, hexagon };

struct ShapeSpec {
  Shape shape;
  std::string name;
  int N;  // vertices
  int r;  // independent lengths
  std::vector<Real> direction_deg;  // clockwise edge directions of the reference polygon
  // oriented lengths = lengths * x, N x r row major; the first r rows are unimodular
  std::vector<long long> lengths;
  // integer lift added to frac(alpha) to obtain a valid reference polygon
  std::vector<long long> lift;
  const QuadraticFormSpec* form;
  const CharacteristicRegion* region;
};

const ShapeSpec& shape_spec(Shape s);
Shape parse_shape(const std::string& name);
const std::vector<Shape>& all_shapes();

// rho1 = (1,0), rho2 = (-1/2, sqrt3/2); edge unit is the primitive lattice
// vector along each line family (Euclidean length sqrt 3)
struct TriangularLattice {
  static Point rho1() { return {1, 0}; }
  static Point rho2() { return {Real(-0.5), std::sqrt(Real(3)) / 2}; }
  static std::array<Real, 2> coords(Point p);  // p = a rho1 + b rho2
  static bool contains(Point p, Real tol = 1e-9);
};

struct PolygonInstance {
  std::vector<long long> n;
  std::vector<Real> x;        // n + alpha
  std::vector<Real> lengths;  // oriented lengths, N entries
  std::vector<Point> vertices;
  Real area = 0;  // Euclidean
  int sign = 0;   // sgn((v1)_2 - (vN)_2)^(N-1)
  bool valid = false;
  std::string reason;  // why invalid
};

// Polygon from V1 and the algebraic lengths x: the first r edges come from x,
// the last two from closing the polygon.  Checks nondegeneracy, strict
// convexity, clockwise orientation, and that the closing lengths agree with
// the shape's length table.
PolygonInstance build_polygon(const ShapeSpec& s, std::span<const Real> x, Point V1);

struct ReferencePolygon {
  Shape shape;
  std::vector<Real> alpha;  // the class: lengths are congruent to alpha mod Z
  PolygonInstance poly;     // Delta_0
  std::array<Real, 3> offsets;  // x-intercepts of the three line families, reduced
};

inline Point default_vertex() { return {Real(0.17), 0}; }

ReferencePolygon make_reference(Shape s, std::span<const Real> alpha, Point V1 = default_vertex());

// True if no line of one family meets a line of each other family in a common
// point, checked in a window of lattice translates.
bool generic_offsets(const ReferencePolygon& ref, int window = 4, Real tol = 1e-9);

bool congruent(const PolygonInstance& p, const ReferencePolygon& ref, Real tol = 1e-9);

struct EnumerationOptions {
  Real q_cut = 12;  // keep area <= (sqrt3/2) q_cut
  Point translate{0, 0};  // lattice vector added to V1
  long long radius = 0;   // 0: automatic
  bool keep_rejected = false;
  unsigned threads = 0;   // 0: hardware
};

struct Enumeration {
  std::vector<PolygonInstance> instances;  // lexicographic in n
  std::vector<PolygonInstance> rejected;   // if requested
  long long radius = 0;
  long long candidates = 0;
};

// Elements of S(Delta_0) with v1 = V1 (+ translate) and area <= (sqrt3/2) q_cut.
Enumeration enumerate(const ReferencePolygon& ref, const EnumerationOptions& opt = {});

// Weight exponents of an instance: e^{2 pi i area w} e^{2 pi i sum l_k beta*_k}
Real linear_exponent(const PolygonInstance& p, std::span<const Real> beta_star);

// beta = A^{-1} L^T beta*, and a minimal norm beta* for a given beta
std::vector<Real> beta_from_star(const ShapeSpec& s, std::span<const Real> beta_star);
std::vector<Real> star_from_beta(const ShapeSpec& s, std::span<const Real> beta);

inline Complex w_from_tau(Complex tau) { return Real(2) * tau / std::sqrt(Real(3)); }

Complex geometric_generating_sum(const Enumeration& e, Complex w, std::span<const Real> beta_star);

// algebraic side: sum over chi != 0, Q(n + alpha) <= q_cut of
// chi q^{Q(x)} e^{2 pi i B(x, beta)}
Complex algebraic_partial_sum(const ShapeSpec& s, const CharacteristicRegion& chi, std::span<const Real> alpha,
                              std::span<const Real> beta, Complex tau, Real q_cut, long long radius);

struct TermMismatch {
  std::vector<long long> n;
  std::string what;
};

struct MatchReport {
  std::string shape;
  std::string mode;
  long long geometric_terms = 0;
  long long algebraic_terms = 0;
  long long matched = 0;
  long long only_geometric = 0;
  long long only_algebraic = 0;
  long long sign_mismatch = 0;
  Real max_area_error = 0;    // |area - (sqrt3/2) Q(x)|
  Real max_linear_error = 0;  // |sum l beta* - B(x, beta)|
  int overall_sign = 1;       // -1 if every matched sign is flipped
  long long radius = 0;
  std::vector<TermMismatch> mismatches;  // first few
  bool perfect() const {
    return only_geometric == 0 && only_algebraic == 0 && sign_mismatch == 0 && max_area_error < 1e-12 &&
           max_linear_error < 1e-12;
  }
};

enum class PentagonMode { union_f4, single_g4 };

// Term by term comparison of the geometric enumeration with the algebraic sum.
// alpha, beta from z = alpha tau + beta.
MatchReport crosscheck(Shape s, std::span<const Real> alpha, std::span<const Real> beta, Real q_cut,
                       PentagonMode mode = PentagonMode::union_f4);

// geometric indicator (sign or 0) against chi on every candidate in the box
struct ChiReport {
  long long candidates = 0;
  long long disagreements = 0;
  std::vector<TermMismatch> examples;
};
ChiReport chi_equivalence(Shape s, std::span<const Real> alpha, long long radius,
                          PentagonMode mode = PentagonMode::union_f4);

void write_csv(std::ostream& os, const std::vector<PolygonInstance>& v);
std::string to_json(const std::vector<PolygonInstance>& v);

}  // namespace polygf::geometry
