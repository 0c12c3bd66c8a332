#pragma once

#include <array>
#include <vector>

namespace fsi {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& v);

// Counter-clockwise vertex loop; empty vector denotes the empty polygon.
using Polygon = std::vector<Vec2>;

// Shoelace signed area; >= 0 for counter-clockwise input, 0 for empty.
double polygon_area(const Polygon& p);

Vec2 polygon_centroid_of_vertices(const Polygon& p);

struct BoundingBox {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{0.0, 0.0};
};

BoundingBox bounding_box(const Polygon& p);

// Sutherland-Hodgman clip of `subject` against the convex polygon `clip`.
// A point counts as inside a clip half-plane when its signed distance is
// >= -eps. Consecutive duplicates and collinear vertices within eps are
// merged from the output. Throws std::invalid_argument for a degenerate
// (zero area) clip polygon.
Polygon clip_polygon(const Polygon& subject, const Polygon& clip, double eps = 1e-12);

struct Triangle {
  std::array<Vec2, 3> v;
};

// Fan triangulation about the vertex centroid. Valid for polygons that are
// star-shaped with respect to that centroid (all our clip outputs are
// convex); throws std::runtime_error if a fan triangle comes out inverted.
std::vector<Triangle> triangulate_fan(const Polygon& p, double eps = 1e-12);

double triangle_area(const Triangle& t);

// Quadrature rule on the reference triangle {x,y >= 0, x+y <= 1}.
// Weights are positive and sum to 1/2.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;
  int degree = 0;  // all bivariate monomials up to this degree are exact
};

// Conical-product rule, exact for polynomials up to `degree` in [1, 10].
QuadratureRule triangle_quadrature(int degree);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& points, std::vector<double>& weights);

// Bilinear map from the reference square [-1,1]^2 onto the quadrilateral
// through `corners` (counter-clockwise).
struct BilinearMap {
  std::array<Vec2, 4> corners;

  Vec2 eval(const Vec2& ref) const;
  // Columns are d(x)/d(xi) and d(x)/d(eta).
  void jacobian(const Vec2& ref, std::array<double, 4>& J, double& det) const;
  double jacobian_det(const Vec2& ref) const;
  // True when the Jacobian determinant is positive at all four corners,
  // i.e. the quadrilateral is convex and correctly oriented.
  bool nondegenerate() const;
  double diameter() const;
};

// Newton inversion of the bilinear map, started from the reference center.
// Returns ref coords with |eval(ref) - x| <= tol * diameter (tol defaults
// to 1e-13). Throws std::runtime_error with the residual on failure.
Vec2 inverse_bilinear(const BilinearMap& map, const Vec2& x, double tol = 1e-13,
                      int maxit = 50);

}  // namespace fsi
