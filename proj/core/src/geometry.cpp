#include "polygf/geometry.hpp"

#include <algorithm>
#include <future>
#include <json.hpp>
#include <map>
#include <thread>

namespace polygf::geometry {

namespace {

const Real sqrt3 = std::sqrt(Real(3));

Point dir(Real deg) {
  Real a = deg * pi / 180;
  return {sqrt3 * std::cos(a), sqrt3 * std::sin(a)};
}

Real cross(Point a, Point b) { return a[0] * b[1] - a[1] * b[0]; }
Real dot(Point a, Point b) { return a[0] * b[0] + a[1] * b[1]; }

// family index 0,1,2 for the line directions 30, 270, 150 (and reverses)
int family(Real deg) {
  long long d = std::llround(deg);
  d = ((d % 180) + 180) % 180;
  if (d == 30) return 0;
  if (d == 90) return 1;
  if (d == 150) return 2;
  throw ConfigError("edge direction not on a line family");
}

std::vector<ShapeSpec> make_specs() {
  using namespace series;
  std::vector<ShapeSpec> v;
  v.push_back({Shape::triangle, "triangle", 3, 1, {30, 270, 150}, {1, 1, 1}, {0}, &form_f1(), &region_full1()});
  v.push_back({Shape::parallelogram, "parallelogram", 4, 2, {330, 210, 150, 30}, {1, 0, 0, 1, 1, 0, 0, 1}, {0, 0},
               &form_f2(), &region_chi2()});
  v.push_back({Shape::trapezoid, "trapezoid", 4, 2, {30, 270, 210, 150}, {1, 0, 1, -1, 0, 1, 1, -1}, {1, 0},
               &form_f3(), &region_chi3()});
  v.push_back({Shape::pentagon, "pentagon", 5, 3, {330, 210, 150, 90, 30},
               {1, 0, 0, 0, 1, 0, 1, 0, -1, 0, 0, 1, 0, 1, -1}, {1, 1, 0}, &form_f4(), &region_g4()});
  v.push_back({Shape::hexagon, "hexagon", 6, 4, {90, 30, 330, 270, 210, 150},
               {0, 0, 1, 0, 0, 1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 1, 0, -1, 1, 0, -1, 0}, {1, 1, 0, 0},
               &form_f5(), &region_chi5()});
  return v;
}

const std::vector<ShapeSpec>& specs() {
  static const std::vector<ShapeSpec> v = make_specs();
  return v;
}

long long length_entry(const ShapeSpec& s, int k, int j) {
  return s.lengths[static_cast<std::size_t>(k * s.r + j)];
}

Real frac(Real a) { return a - std::floor(a); }

Real dist_z(Real a) { return std::abs(a - std::round(a)); }

template <class F>
void box_loop(int r, long long R, long long first, F&& f) {
  // n[0] fixed to `first`, remaining coordinates over [-R, R]
  std::vector<long long> n(static_cast<std::size_t>(r), -R);
  n[0] = first;
  if (r == 1) {
    f(n);
    return;
  }
  for (;;) {
    f(n);
    int i = r - 1;
    while (i >= 1 && n[static_cast<std::size_t>(i)] == R) n[static_cast<std::size_t>(i--)] = -R;
    if (i < 1) return;
    ++n[static_cast<std::size_t>(i)];
  }
}

// Run f(first) for first in [-R,R] on a few threads, concatenating in order.
template <class T, class F>
std::vector<T> parallel_rows(long long R, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const long long rows = 2 * R + 1;
  const long long chunk = std::max<long long>(1, (rows + threads - 1) / threads);
  std::vector<std::future<std::vector<T>>> fut;
  for (long long a = -R; a <= R; a += chunk) {
    long long b = std::min(R, a + chunk - 1);
    fut.push_back(std::async(std::launch::async, [a, b, &f] {
      std::vector<T> out;
      for (long long k = a; k <= b; ++k) f(k, out);
      return out;
    }));
  }
  std::vector<T> all;
  for (auto& x : fut) {
    auto part = x.get();
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

long long auto_radius(std::span<const Real> alpha, Real q_cut) {
  Real d = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    d = std::min(d, dist_z(alpha[i]));
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      d = std::min({d, dist_z(alpha[i] + alpha[j]), dist_z(alpha[i] - alpha[j])});
  }
  if (d < 1e-6) throw DomainError("reference lengths too close to a degenerate configuration");
  return static_cast<long long>(std::ceil(q_cut / (Real(1.5) * d))) + 2;
}

std::vector<Real> reflect(std::span<const Real> a) { return {-a[0], -a[1], a[2]}; }

// |shoelace| of the closed edge path, no allocation; equals the area for any valid polygon
Real path_area(const ShapeSpec& s, const std::array<Point, 6>& d, std::span<const Real> x) {
  Point p{0, 0};
  Real twice = 0;
  for (int k = 0; k < s.N; ++k) {
    Real l = 0;
    for (int j = 0; j < s.r; ++j) l += Real(length_entry(s, k, j)) * x[static_cast<std::size_t>(j)];
    Point q{p[0] + l * d[static_cast<std::size_t>(k)][0], p[1] + l * d[static_cast<std::size_t>(k)][1]};
    twice += p[0] * q[1] - p[1] * q[0];
    p = q;
  }
  return std::abs(twice) / 2;
}

}  // namespace

const ShapeSpec& shape_spec(Shape s) { return specs()[static_cast<std::size_t>(s)]; }

Shape parse_shape(const std::string& name) {
  for (const auto& s : specs())
    if (s.name == name) return s.shape;
  throw ConfigError("unknown shape '" + name + "'");
}

const std::vector<Shape>& all_shapes() {
  static const std::vector<Shape> v{Shape::triangle, Shape::parallelogram, Shape::trapezoid, Shape::pentagon,
                                    Shape::hexagon};
  return v;
}

std::array<Real, 2> TriangularLattice::coords(Point p) {
  // p = a (1,0) + b (-1/2, sqrt3/2)
  Real b = p[1] * 2 / sqrt3;
  Real a = p[0] + b / 2;
  return {a, b};
}

bool TriangularLattice::contains(Point p, Real tol) {
  auto c = coords(p);
  return dist_z(c[0]) < tol && dist_z(c[1]) < tol;
}

PolygonInstance build_polygon(const ShapeSpec& s, std::span<const Real> x, Point V1) {
  PolygonInstance P;
  P.x.assign(x.begin(), x.end());
  const int N = s.N, r = s.r;
  P.lengths.assign(static_cast<std::size_t>(N), 0);
  for (int k = 0; k < r; ++k) {
    Real l = 0;
    for (int j = 0; j < r; ++j) l += Real(length_entry(s, k, j)) * x[static_cast<std::size_t>(j)];
    P.lengths[static_cast<std::size_t>(k)] = l;
  }
  Point S{0, 0};
  for (int k = 0; k < r; ++k) {
    Point d = dir(s.direction_deg[static_cast<std::size_t>(k)]);
    S[0] += P.lengths[static_cast<std::size_t>(k)] * d[0];
    S[1] += P.lengths[static_cast<std::size_t>(k)] * d[1];
  }
  // close with the last two directions
  Point a = dir(s.direction_deg[static_cast<std::size_t>(N - 2)]), b = dir(s.direction_deg[static_cast<std::size_t>(N - 1)]);
  Real det = cross(a, b);
  P.lengths[static_cast<std::size_t>(N - 2)] = cross(Point{-S[0], -S[1]}, b) / det;
  P.lengths[static_cast<std::size_t>(N - 1)] = cross(a, Point{-S[0], -S[1]}) / det;
  for (int k = r; k < N; ++k) {
    Real want = 0;
    for (int j = 0; j < r; ++j) want += Real(length_entry(s, k, j)) * x[static_cast<std::size_t>(j)];
    if (std::abs(want - P.lengths[static_cast<std::size_t>(k)]) > 1e-9 * (1 + std::abs(want))) {
      P.reason = "closing edge does not match length table";
      return P;
    }
  }
  P.vertices.resize(static_cast<std::size_t>(N));
  P.vertices[0] = V1;
  std::vector<Point> e(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    Point d = dir(s.direction_deg[static_cast<std::size_t>(k)]);
    Real l = P.lengths[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(k)] = {l * d[0], l * d[1]};
    if (k + 1 < N)
      P.vertices[static_cast<std::size_t>(k + 1)] = {P.vertices[static_cast<std::size_t>(k)][0] + l * d[0],
                                                     P.vertices[static_cast<std::size_t>(k)][1] + l * d[1]};
  }
  Real signed2 = 0;
  for (int k = 0; k < N; ++k) {
    // relative to v1 to keep the cancellation at the scale of the polygon
    const Point& o = P.vertices[0];
    const Point& p = P.vertices[static_cast<std::size_t>(k)];
    const Point& q = P.vertices[static_cast<std::size_t>((k + 1) % N)];
    signed2 += (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
  }
  P.area = std::abs(signed2) / 2;
  Real dy = P.vertices[0][1] - P.vertices[static_cast<std::size_t>(N - 1)][1];
  int sg = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
  P.sign = (N - 1) % 2 == 0 ? sg * sg : sg;

  for (int k = 0; k < N; ++k)
    if (std::abs(P.lengths[static_cast<std::size_t>(k)]) < 1e-9) {
      P.reason = "degenerate edge";
      return P;
    }
  Real turning = 0;
  for (int k = 0; k < N; ++k) {
    const Point& u = e[static_cast<std::size_t>(k)];
    const Point& w = e[static_cast<std::size_t>((k + 1) % N)];
    Real c = cross(u, w);
    if (c >= -1e-12 * std::sqrt(dot(u, u) * dot(w, w))) {
      P.reason = "not strictly convex clockwise";
      return P;
    }
    turning += std::atan2(c, dot(u, w));
  }
  if (std::abs(turning + 2 * pi) > 1e-6) {
    P.reason = "edges wind more than once";
    return P;
  }
  P.valid = true;
  return P;
}

ReferencePolygon make_reference(Shape s, std::span<const Real> alpha, Point V1) {
  const ShapeSpec& sp = shape_spec(s);
  if (static_cast<int>(alpha.size()) != sp.r) throw ConfigError("reference polygon: wrong number of lengths");
  ReferencePolygon ref;
  ref.shape = s;
  ref.alpha.assign(alpha.begin(), alpha.end());
  std::vector<Real> x(static_cast<std::size_t>(sp.r));
  for (int j = 0; j < sp.r; ++j) x[static_cast<std::size_t>(j)] = frac(alpha[static_cast<std::size_t>(j)]) + Real(sp.lift[static_cast<std::size_t>(j)]);
  ref.poly = build_polygon(sp, x, V1);
  if (!ref.poly.valid) throw DomainError("reference " + sp.name + " is degenerate: " + ref.poly.reason);
  for (int j = 0; j < sp.r; ++j)
    ref.poly.n.push_back(std::llround(x[static_cast<std::size_t>(j)] - alpha[static_cast<std::size_t>(j)]));
  // family offsets: x-intercept of the line through each edge, reduced mod the intercept spacing
  ref.offsets = {-1, -1, -1};
  for (int k = 0; k < sp.N; ++k) {
    Real deg = sp.direction_deg[static_cast<std::size_t>(k)];
    int f = family(deg);
    if (ref.offsets[static_cast<std::size_t>(f)] >= 0) continue;
    Point d = dir(deg);
    const Point& p = ref.poly.vertices[static_cast<std::size_t>(k)];
    Real t = p[0] - p[1] * d[0] / d[1];
    Real spacing = Real(0.5) / std::abs(d[1] / sqrt3);
    ref.offsets[static_cast<std::size_t>(f)] = t - spacing * std::floor(t / spacing);
  }
  return ref;
}

bool generic_offsets(const ReferencePolygon& ref, int window, Real tol) {
  const ShapeSpec& sp = shape_spec(ref.shape);
  // one base line per family present in the polygon
  std::array<bool, 3> have{false, false, false};
  std::array<Point, 3> base{}, d{};
  for (int k = 0; k < sp.N; ++k) {
    Real deg = sp.direction_deg[static_cast<std::size_t>(k)];
    int f = family(deg);
    if (have[static_cast<std::size_t>(f)]) continue;
    have[static_cast<std::size_t>(f)] = true;
    base[static_cast<std::size_t>(f)] = ref.poly.vertices[static_cast<std::size_t>(k)];
    d[static_cast<std::size_t>(f)] = dir(deg);
  }
  if (!(have[0] && have[1] && have[2])) return true;  // two families cannot meet in a triple point
  Point r1 = TriangularLattice::rho1(), r2 = TriangularLattice::rho2();
  for (int a = -window; a <= window; ++a)
    for (int b = -window; b <= window; ++b) {
      Point p{base[0][0] + a * r1[0] + b * r2[0], base[0][1] + a * r1[1] + b * r2[1]};
      // intersect p + s d0 with base1 + t d1
      Point w{base[1][0] - p[0], base[1][1] - p[1]};
      Real s = cross(w, d[1]) / cross(d[0], d[1]);
      Point X{p[0] + s * d[0][0], p[1] + s * d[0][1]};
      // transverse coordinate against family 2, in units of the line spacing 1/2
      Point y{X[0] - base[2][0], X[1] - base[2][1]};
      Real c = cross(d[2], y) / sqrt3 / Real(0.5);
      if (dist_z(c) < tol) return false;
    }
  return true;
}

bool congruent(const PolygonInstance& p, const ReferencePolygon& ref, Real tol) {
  if (p.vertices.size() != ref.poly.vertices.size()) return false;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    Point dlt{p.vertices[k][0] - ref.poly.vertices[k][0], p.vertices[k][1] - ref.poly.vertices[k][1]};
    if (!TriangularLattice::contains(dlt, tol)) return false;
  }
  return true;
}

Enumeration enumerate(const ReferencePolygon& ref, const EnumerationOptions& opt) {
  const ShapeSpec& sp = shape_spec(ref.shape);
  if (opt.q_cut <= 0) throw ConfigError("area cutoff must be positive");
  if (!TriangularLattice::contains(opt.translate)) throw ConfigError("translation is not a lattice vector");
  const Real amax = sqrt3 / 2 * opt.q_cut;
  long long R = opt.radius > 0 ? opt.radius : auto_radius(ref.alpha, opt.q_cut);
  const Point V1{ref.poly.vertices[0][0] + opt.translate[0], ref.poly.vertices[0][1] + opt.translate[1]};
  // the reference translated along with the candidates
  ReferencePolygon shifted = ref;
  for (auto& p : shifted.poly.vertices) {
    p[0] += opt.translate[0];
    p[1] += opt.translate[1];
  }
  std::array<Point, 6> dirs{};
  for (int k = 0; k < sp.N; ++k) dirs[static_cast<std::size_t>(k)] = dir(sp.direction_deg[static_cast<std::size_t>(k)]);
  for (;;) {
    struct Row {
      PolygonInstance p;
      bool kept;
    };
    auto rows = parallel_rows<Row>(R, opt.threads, [&](long long first, std::vector<Row>& out) {
      std::vector<Real> x(static_cast<std::size_t>(sp.r));
      box_loop(sp.r, R, first, [&](const std::vector<long long>& n) {
        for (int j = 0; j < sp.r; ++j) x[static_cast<std::size_t>(j)] = Real(n[static_cast<std::size_t>(j)]) + ref.alpha[static_cast<std::size_t>(j)];
        if (!opt.keep_rejected && path_area(sp, dirs, x) > amax * (1 + 1e-12)) return;
        PolygonInstance P = build_polygon(sp, x, V1);
        P.n = n;
        if (P.valid && !congruent(P, shifted)) {
          P.valid = false;
          P.reason = "vertices not congruent to the reference";
        }
        bool kept = P.valid && P.area <= amax;
        if (kept || opt.keep_rejected) out.push_back({std::move(P), kept});
      });
    });
    Enumeration E;
    E.radius = R;
    E.candidates = 1;
    for (int j = 0; j < sp.r; ++j) E.candidates *= 2 * R + 1;
    bool edge = false;
    for (auto& row : rows) {
      if (row.kept) {
        for (long long c : row.p.n) edge = edge || std::llabs(c) >= R - 1;
        E.instances.push_back(std::move(row.p));
      } else {
        E.rejected.push_back(std::move(row.p));
      }
    }
    if (!edge || opt.radius > 0) return E;
    R *= 2;
  }
}

Real linear_exponent(const PolygonInstance& p, std::span<const Real> beta_star) {
  Real s = 0;
  for (std::size_t k = 0; k < p.lengths.size(); ++k) s += p.lengths[k] * beta_star[k];
  return s;
}

namespace {

// solve the small dense system M y = b (Gaussian elimination, partial pivoting)
std::vector<Real> solve(std::vector<Real> M, std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(M[r * n + c]) > std::abs(M[p * n + c])) p = r;
    if (std::abs(M[p * n + c]) < 1e-14) throw ConfigError("singular system");
    for (std::size_t k = 0; k < n; ++k) std::swap(M[c * n + k], M[p * n + k]);
    std::swap(b[c], b[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      Real f = M[r * n + c] / M[c * n + c];
      for (std::size_t k = c; k < n; ++k) M[r * n + k] -= f * M[c * n + k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= M[c * n + c];
  return b;
}

}  // namespace

std::vector<Real> beta_from_star(const ShapeSpec& s, std::span<const Real> beta_star) {
  const int r = s.r, N = s.N;
  std::vector<Real> Lt(static_cast<std::size_t>(r), 0);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < N; ++k) Lt[static_cast<std::size_t>(j)] += Real(length_entry(s, k, j)) * beta_star[static_cast<std::size_t>(k)];
  return solve(s.form->real_matrix(), Lt);
}

std::vector<Real> star_from_beta(const ShapeSpec& s, std::span<const Real> beta) {
  // minimal norm solution of L^T b* = A beta: b* = L (L^T L)^{-1} A beta
  const int r = s.r, N = s.N;
  std::vector<Real> Ab(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) Ab[static_cast<std::size_t>(i)] += Real(s.form->A(i, j)) * beta[static_cast<std::size_t>(j)];
  std::vector<Real> G(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < N; ++k) G[static_cast<std::size_t>(i * r + j)] += Real(length_entry(s, k, i) * length_entry(s, k, j));
  auto y = solve(G, Ab);
  std::vector<Real> bs(static_cast<std::size_t>(N), 0);
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < r; ++j) bs[static_cast<std::size_t>(k)] += Real(length_entry(s, k, j)) * y[static_cast<std::size_t>(j)];
  return bs;
}

Complex geometric_generating_sum(const Enumeration& e, Complex w, std::span<const Real> beta_star) {
  if (w.imag() <= 0) throw DomainError("geometric sum needs Im w > 0");
  Complex s = 0;
  for (const auto& p : e.instances) s += Real(p.sign) * e2pi(p.area * w + linear_exponent(p, beta_star));
  return s;
}

Complex algebraic_partial_sum(const ShapeSpec& s, const CharacteristicRegion& chi, std::span<const Real> alpha,
                              std::span<const Real> beta, Complex tau, Real q_cut, long long radius) {
  auto parts = parallel_rows<Complex>(radius, 0, [&](long long first, std::vector<Complex>& out) {
    Complex acc = 0;
    std::vector<Real> x(static_cast<std::size_t>(s.r));
    box_loop(s.r, radius, first, [&](const std::vector<long long>& n) {
      for (int j = 0; j < s.r; ++j) x[static_cast<std::size_t>(j)] = Real(n[static_cast<std::size_t>(j)]) + alpha[static_cast<std::size_t>(j)];
      Real c = chi(x);
      if (c == 0) return;
      Real Q = s.form->Q(x);
      if (Q > q_cut) return;
      acc += c * e2pi(Q * tau + s.form->B(std::span<const Real>(x), beta));
    });
    out.push_back(acc);
  });
  Complex t = 0;
  for (auto c : parts) t += c;
  return t;
}

namespace {

struct AlgTerm {
  int chi;
  Real Q;
  Real lin;
};

std::map<std::vector<long long>, AlgTerm> algebraic_terms(const ShapeSpec& s, const CharacteristicRegion& chi,
                                                         std::span<const Real> alpha, std::span<const Real> beta,
                                                         Real q_cut, long long R) {
  using Entry = std::pair<std::vector<long long>, AlgTerm>;
  auto rows = parallel_rows<Entry>(R, 0, [&](long long first, std::vector<Entry>& out) {
    std::vector<Real> x(static_cast<std::size_t>(s.r));
    box_loop(s.r, R, first, [&](const std::vector<long long>& n) {
      for (int j = 0; j < s.r; ++j) x[static_cast<std::size_t>(j)] = Real(n[static_cast<std::size_t>(j)]) + alpha[static_cast<std::size_t>(j)];
      Real Q = s.form->Q(x);
      if (Q > q_cut) return;
      Real c = chi(x);
      if (c == 0) return;
      out.push_back({n, {static_cast<int>(c), Q, s.form->B(std::span<const Real>(x), beta)}});
    });
  });
  return {std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end())};
}

struct GeoTerm {
  int sign;
  Real area;
  Real lin;
};

void add_geometric(std::map<std::vector<long long>, GeoTerm>& m, const Enumeration& e, std::span<const Real> bstar,
                   bool reflected, long long& duplicates) {
  for (const auto& p : e.instances) {
    std::vector<long long> n = p.n;
    if (reflected) {
      n[0] = -n[0];
      n[1] = -n[1];
    }
    GeoTerm g{p.sign, p.area, linear_exponent(p, bstar)};
    if (!m.emplace(n, g).second) ++duplicates;
  }
}

}  // namespace

MatchReport crosscheck(Shape s, std::span<const Real> alpha, std::span<const Real> beta, Real q_cut, PentagonMode mode) {
  const ShapeSpec& sp = shape_spec(s);
  if (static_cast<int>(alpha.size()) != sp.r || static_cast<int>(beta.size()) != sp.r)
    throw ConfigError("crosscheck: wrong argument count");
  MatchReport rep;
  rep.shape = sp.name;
  const bool two = s == Shape::pentagon && mode == PentagonMode::union_f4;
  rep.mode = s == Shape::pentagon ? (two ? "f4" : "g4") : sp.form->name();
  const CharacteristicRegion& chi = two ? series::region_chi4() : *sp.region;

  std::map<std::vector<long long>, GeoTerm> geo;
  long long dup = 0;
  EnumerationOptions eo;
  eo.q_cut = q_cut;
  ReferencePolygon ref = make_reference(s, alpha);
  Enumeration e = enumerate(ref, eo);
  rep.radius = e.radius;
  add_geometric(geo, e, star_from_beta(sp, beta), false, dup);
  if (two) {
    auto ra = reflect(alpha), rb = reflect(beta);
    ReferencePolygon ref2 = make_reference(s, ra);
    Enumeration e2 = enumerate(ref2, eo);
    rep.radius = std::max(rep.radius, e2.radius);
    add_geometric(geo, e2, star_from_beta(sp, rb), true, dup);
  }
  auto alg = algebraic_terms(sp, chi, alpha, beta, q_cut, rep.radius);
  rep.geometric_terms = static_cast<long long>(geo.size()) + dup;
  rep.algebraic_terms = static_cast<long long>(alg.size());
  if (dup > 0) rep.mismatches.push_back({{}, std::to_string(dup) + " duplicated geometric terms"});
  rep.only_geometric += dup;

  long long flipped = 0;
  auto note = [&](const std::vector<long long>& n, std::string what) {
    if (rep.mismatches.size() < 20) rep.mismatches.push_back({n, std::move(what)});
  };
  for (const auto& [n, g] : geo) {
    auto it = alg.find(n);
    if (it == alg.end()) {
      ++rep.only_geometric;
      note(n, "geometric only");
      continue;
    }
    ++rep.matched;
    const AlgTerm& a = it->second;
    if (g.sign != a.chi) {
      ++rep.sign_mismatch;
      if (g.sign == -a.chi) ++flipped;
      note(n, "sign " + std::to_string(g.sign) + " vs chi " + std::to_string(a.chi));
    }
    rep.max_area_error = std::max(rep.max_area_error, std::abs(g.area - sqrt3 / 2 * a.Q));
    rep.max_linear_error = std::max(rep.max_linear_error, std::abs(g.lin - a.lin));
  }
  for (const auto& [n, a] : alg)
    if (!geo.count(n)) {
      ++rep.only_algebraic;
      note(n, "algebraic only");
    }
  if (rep.matched > 0 && flipped == rep.matched) rep.overall_sign = -1;
  return rep;
}

ChiReport chi_equivalence(Shape s, std::span<const Real> alpha, long long radius, PentagonMode mode) {
  const ShapeSpec& sp = shape_spec(s);
  const bool two = s == Shape::pentagon && mode == PentagonMode::union_f4;
  const CharacteristicRegion& chi = two ? series::region_chi4() : *sp.region;
  EnumerationOptions eo;
  eo.q_cut = std::numeric_limits<Real>::max();
  eo.radius = radius;
  eo.keep_rejected = true;
  std::map<std::vector<long long>, int> g;
  auto collect = [&](const Enumeration& e, bool refl) {
    for (const auto* list : {&e.instances, &e.rejected})
      for (const auto& p : *list) {
        std::vector<long long> n = p.n;
        if (refl) {
          n[0] = -n[0];
          n[1] = -n[1];
        }
        g[n] += p.valid ? p.sign : 0;
      }
  };
  collect(enumerate(make_reference(s, alpha), eo), false);
  if (two) {
    auto ra = reflect(alpha);
    collect(enumerate(make_reference(s, ra), eo), true);
  }
  ChiReport rep;
  std::vector<Real> x(static_cast<std::size_t>(sp.r));
  for (const auto& [n, val] : g) {
    // reflected candidates outside the first box are not compared
    bool inside = true;
    for (long long c : n) inside = inside && std::llabs(c) <= radius;
    if (!inside) continue;
    ++rep.candidates;
    for (int j = 0; j < sp.r; ++j) x[static_cast<std::size_t>(j)] = Real(n[static_cast<std::size_t>(j)]) + alpha[static_cast<std::size_t>(j)];
    int c = static_cast<int>(chi(x));
    if (c != val) {
      ++rep.disagreements;
      if (rep.examples.size() < 20)
        rep.examples.push_back({n, "geometric " + std::to_string(val) + " vs chi " + std::to_string(c)});
    }
  }
  return rep;
}

void write_csv(std::ostream& os, const std::vector<PolygonInstance>& v) {
  os << "n,x,sign,area,lengths\n";
  auto join = [](const auto& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ';';
      std::ostringstream t;
      t.precision(17);
      t << xs[i];
      s += t.str();
    }
    return s;
  };
  os.precision(17);
  for (const auto& p : v) os << join(p.n) << ',' << join(p.x) << ',' << p.sign << ',' << p.area << ',' << join(p.lengths) << '\n';
}

std::string to_json(const std::vector<PolygonInstance>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : v) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& q : p.vertices) verts.push_back({q[0], q[1]});
    a.push_back({{"n", p.n}, {"x", p.x}, {"sign", p.sign}, {"area", p.area}, {"lengths", p.lengths}, {"vertices", verts}});
  }
  return a.dump();
}

}  // namespace polygf::geometry
