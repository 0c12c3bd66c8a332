#include "fsi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsi {

double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

double polygon_area(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 3) return 0.0;
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = p[i];
    const Vec2& w = p[(i + 1) % n];
    a += u.x * w.y - w.x * u.y;
  }
  return 0.5 * a;
}

Vec2 polygon_centroid_of_vertices(const Polygon& p) {
  Vec2 c{0.0, 0.0};
  if (p.empty()) return c;
  for (const Vec2& v : p) c += v;
  return c * (1.0 / static_cast<double>(p.size()));
}

BoundingBox bounding_box(const Polygon& p) {
  BoundingBox b;
  if (p.empty()) return b;
  b.lo = b.hi = p[0];
  for (const Vec2& v : p) {
    b.lo.x = std::min(b.lo.x, v.x);
    b.lo.y = std::min(b.lo.y, v.y);
    b.hi.x = std::max(b.hi.x, v.x);
    b.hi.y = std::max(b.hi.y, v.y);
  }
  return b;
}

namespace {

// Removes consecutive duplicates and collinear vertices within eps.
Polygon clean_polygon(Polygon poly, double eps) {
  if (poly.size() < 3) return {};
  Polygon out;
  out.reserve(poly.size());
  for (const Vec2& v : poly) {
    if (out.empty() || norm(v - out.back()) > eps) out.push_back(v);
  }
  while (out.size() >= 2 && norm(out.front() - out.back()) <= eps) out.pop_back();
  if (out.size() < 3) return {};

  Polygon result;
  result.reserve(out.size());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = out[(i + n - 1) % n];
    const Vec2& b = out[i];
    const Vec2& c = out[(i + 1) % n];
    const Vec2 e = c - a;
    const double len = norm(e);
    // perpendicular distance of b from chord a-c
    const double dist = len > eps ? std::abs(cross(e, b - a)) / len : 0.0;
    if (dist > eps) result.push_back(b);
  }
  if (result.size() < 3) return {};
  return result;
}

Vec2 edge_intersection(const Vec2& s, const Vec2& e, const Vec2& a, const Vec2& b) {
  const Vec2 r = e - s;
  const Vec2 d = b - a;
  const double denom = cross(r, d);
  if (denom == 0.0) return (s + e) * 0.5;  // near-parallel fallback
  const double t = cross(a - s, d) / denom;
  return s + r * t;
}

}  // namespace

Polygon clip_polygon(const Polygon& subject, const Polygon& clip, double eps) {
  if (polygon_area(clip) <= eps * eps) {
    throw std::invalid_argument("clip_polygon: degenerate clip polygon");
  }
  if (subject.size() < 3) return {};

  Polygon output = subject;
  const std::size_t nc = clip.size();
  for (std::size_t i = 0; i < nc && !output.empty(); ++i) {
    const Vec2 a = clip[i];
    const Vec2 b = clip[(i + 1) % nc];
    const Vec2 d = b - a;
    const double len = norm(d);
    if (len <= eps) continue;

    const Polygon input = output;
    output.clear();
    Vec2 s = input.back();
    // signed distance to the half-plane left of a->b, normalized
    auto side = [&](const Vec2& p) { return cross(d, p - a) / len; };
    double side_s = side(s);
    for (const Vec2& e : input) {
      const double side_e = side(e);
      const bool in_e = side_e >= -eps;
      const bool in_s = side_s >= -eps;
      if (in_e) {
        if (!in_s) output.push_back(edge_intersection(s, e, a, b));
        output.push_back(e);
      } else if (in_s) {
        output.push_back(edge_intersection(s, e, a, b));
      }
      s = e;
      side_s = side_e;
    }
  }
  return clean_polygon(std::move(output), eps);
}

std::vector<Triangle> triangulate_fan(const Polygon& p, double eps) {
  if (p.size() < 3) return {};
  const Vec2 c = polygon_centroid_of_vertices(p);
  std::vector<Triangle> tris;
  tris.reserve(p.size());
  const std::size_t n = p.size();
  double scale = 0.0;
  for (const Vec2& v : p) scale = std::max(scale, norm(v - c));
  for (std::size_t i = 0; i < n; ++i) {
    Triangle t{{c, p[i], p[(i + 1) % n]}};
    if (triangle_area(t) < -eps * scale * scale) {
      throw std::runtime_error("triangulate_fan: polygon not star-shaped about its vertex centroid");
    }
    tris.push_back(t);
  }
  return tris;
}

double triangle_area(const Triangle& t) {
  return 0.5 * cross(t.v[1] - t.v[0], t.v[2] - t.v[0]);
}

void gauss_legendre(int n, std::vector<double>& points, std::vector<double>& weights) {
  points.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton on P_n
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    points[i] = -x;
    points[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

QuadratureRule triangle_quadrature(int degree) {
  if (degree < 1 || degree > 10) {
    throw std::invalid_argument("triangle_quadrature: degree must be in [1, 10]");
  }
  // Conical product x = u(1-v), y = v with Jacobian (1-v): a monomial
  // x^a y^b of total degree <= d becomes degree a in u and a+b+1 in v.
  const int nu = (degree + 2) / 2;
  const int nv = (degree + 3) / 2;
  std::vector<double> pu, wu, pv, wv;
  gauss_legendre(nu, pu, wu);
  gauss_legendre(nv, pv, wv);

  QuadratureRule rule;
  rule.degree = degree;
  rule.points.reserve(static_cast<std::size_t>(nu) * nv);
  rule.weights.reserve(static_cast<std::size_t>(nu) * nv);
  for (int i = 0; i < nu; ++i) {
    const double u = 0.5 * (pu[i] + 1.0);
    for (int j = 0; j < nv; ++j) {
      const double v = 0.5 * (pv[j] + 1.0);
      rule.points.emplace_back(u * (1.0 - v), v);
      rule.weights.push_back(0.25 * wu[i] * wv[j] * (1.0 - v));
    }
  }
  return rule;
}

Vec2 BilinearMap::eval(const Vec2& r) const {
  const double n0 = 0.25 * (1.0 - r.x) * (1.0 - r.y);
  const double n1 = 0.25 * (1.0 + r.x) * (1.0 - r.y);
  const double n2 = 0.25 * (1.0 + r.x) * (1.0 + r.y);
  const double n3 = 0.25 * (1.0 - r.x) * (1.0 + r.y);
  return corners[0] * n0 + corners[1] * n1 + corners[2] * n2 + corners[3] * n3;
}

void BilinearMap::jacobian(const Vec2& r, std::array<double, 4>& J, double& det) const {
  const Vec2 dxi = 0.25 * ((corners[1] - corners[0]) * (1.0 - r.y) +
                           (corners[2] - corners[3]) * (1.0 + r.y));
  const Vec2 deta = 0.25 * ((corners[3] - corners[0]) * (1.0 - r.x) +
                            (corners[2] - corners[1]) * (1.0 + r.x));
  J = {dxi.x, deta.x, dxi.y, deta.y};
  det = dxi.x * deta.y - deta.x * dxi.y;
}

double BilinearMap::jacobian_det(const Vec2& r) const {
  std::array<double, 4> J;
  double det;
  jacobian(r, J, det);
  return det;
}

bool BilinearMap::nondegenerate() const {
  const Vec2 ref[4] = {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
  for (const Vec2& r : ref) {
    if (jacobian_det(r) <= 0.0) return false;
  }
  return true;
}

double BilinearMap::diameter() const {
  return std::max(norm(corners[2] - corners[0]), norm(corners[3] - corners[1]));
}

Vec2 inverse_bilinear(const BilinearMap& map, const Vec2& x, double tol, int maxit) {
  Vec2 r{0.0, 0.0};
  const double target = tol * std::max(map.diameter(), 1e-300);
  double resid = 0.0;
  for (int it = 0; it < maxit; ++it) {
    const Vec2 f = map.eval(r) - x;
    resid = norm(f);
    if (resid <= target) return r;
    std::array<double, 4> J;
    double det;
    map.jacobian(r, J, det);
    if (det == 0.0) break;
    r.x -= (J[3] * f.x - J[1] * f.y) / det;
    r.y -= (-J[2] * f.x + J[0] * f.y) / det;
  }
  // final residual check after the last update
  const Vec2 f = map.eval(r) - x;
  if (norm(f) <= target) return r;
  throw std::runtime_error("inverse_bilinear: Newton did not converge, residual " +
                           std::to_string(norm(f)));
}

}  // namespace fsi
