#include "tricenter/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tricenter {

namespace {

constexpr double kDegenerateRel = 1e-12;
constexpr double kBoundaryBandRel = 1e-12;

double twice_signed_area(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

double angle_between(Point2 u, Point2 v) {
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTriangle: return "degenerate_triangle";
    case ErrorKind::DegenerateTrilinears: return "degenerate_trilinears";
    case ErrorKind::NotInterior: return "not_interior";
    case ErrorKind::TooCloseToBoundary: return "too_close_to_boundary";
    case ErrorKind::ToleranceNotReached: return "tolerance_not_reached";
    case ErrorKind::NegativeRadicand: return "negative_radicand";
    case ErrorKind::BracketFailure: return "bracket_failure";
    case ErrorKind::NoConvergence: return "no_convergence";
    case ErrorKind::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

SideLengths::SideLengths(double a, double b, double c) : a_(a), b_(b), c_(c), s_(0.5 * (a + b + c)) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)) || a <= 0 || b <= 0 || c <= 0) {
    throw DegenerateTriangle("degenerate triangle: side lengths must be finite and positive");
  }
  const double slack = kDegenerateRel * longest();
  if (!(a < b + c - slack && b < c + a - slack && c < a + b - slack)) {
    std::ostringstream msg;
    msg << "degenerate triangle: sides (" << a << ", " << b << ", " << c
        << ") violate the strict triangle inequality";
    throw DegenerateTriangle(msg.str());
  }
}

double SideLengths::longest() const { return std::max({a_, b_, c_}); }

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
  for (const Point2& p : v_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateTriangle("degenerate triangle: non-finite vertex coordinate");
    }
  }
  const double twice = twice_signed_area(a, b, c);
  const double longest = diameter();
  if (!(std::abs(twice) > kDegenerateRel * longest * longest)) {
    throw DegenerateTriangle("degenerate triangle: vertices are (nearly) collinear");
  }
  if (twice < 0) std::swap(v_[1], v_[2]);
}

double Triangle::diameter() const {
  return std::max({distance(v_[0], v_[1]), distance(v_[1], v_[2]), distance(v_[2], v_[0])});
}

SideLengths side_lengths(const Triangle& tri) {
  return SideLengths(distance(tri.b(), tri.c()), distance(tri.c(), tri.a()),
                     distance(tri.a(), tri.b()));
}

Triangle triangle_from_sides(double a, double b, double c) {
  const SideLengths sides(a, b, c);
  const double x = (a * a + c * c - b * b) / (2.0 * a);
  // y = 2*area/a; Heron avoids the cancellation in sqrt(c^2 - x^2).
  const double y = 2.0 * heron_area(sides) / a;
  return Triangle({x, y}, {0.0, 0.0}, {a, 0.0});
}

double area(const Triangle& tri) { return 0.5 * twice_signed_area(tri.a(), tri.b(), tri.c()); }

double heron_area(const SideLengths& sides) {
  std::array<double, 3> l{sides.a(), sides.b(), sides.c()};
  std::sort(l.begin(), l.end(), std::greater<>());
  const double a = l[0], b = l[1], c = l[2];
  const double prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(prod, 0.0));
}

double inradius(const Triangle& tri) { return area(tri) / side_lengths(tri).s(); }

TriangleAngles angles(const Triangle& tri) {
  const Point2 a = tri.a(), b = tri.b(), c = tri.c();
  return {angle_between(b - a, c - a), angle_between(c - b, a - b), angle_between(a - c, b - c)};
}

PointLocation classify_point(const Triangle& tri, Point2 p) {
  const double twice = 2.0 * area(tri);
  const double la = twice_signed_area(p, tri.b(), tri.c()) / twice;
  const double lb = twice_signed_area(tri.a(), p, tri.c()) / twice;
  const double lc = twice_signed_area(tri.a(), tri.b(), p) / twice;
  const double lo = std::min({la, lb, lc});
  if (lo > kBoundaryBandRel) return PointLocation::Interior;
  if (lo < -kBoundaryBandRel) return PointLocation::Exterior;
  return PointLocation::Boundary;
}

Trilinears signed_side_distances(const Triangle& tri, Point2 p) {
  const SideLengths s = side_lengths(tri);
  return {twice_signed_area(p, tri.b(), tri.c()) / s.a(),
          twice_signed_area(p, tri.c(), tri.a()) / s.b(),
          twice_signed_area(p, tri.a(), tri.b()) / s.c()};
}

Trilinears cartesian_to_trilinear(const Triangle& tri, Point2 p) {
  return signed_side_distances(tri, p);
}

Point2 trilinear_to_cartesian(const Triangle& tri, const Trilinears& t) {
  const SideLengths s = side_lengths(tri);
  const double wa = s.a() * t.tau_a, wb = s.b() * t.tau_b, wc = s.c() * t.tau_c;
  const double sum = wa + wb + wc;
  const double scale = std::abs(wa) + std::abs(wb) + std::abs(wc);
  if (!(std::abs(sum) > 1e-14 * scale) || !std::isfinite(sum)) {
    throw DegenerateTrilinears("trilinears describe a point at infinity");
  }
  return (wa / sum) * tri.a() + (wb / sum) * tri.b() + (wc / sum) * tri.c();
}

Trilinears exact_gauge(const Triangle& tri, const Trilinears& t) {
  const SideLengths s = side_lengths(tri);
  const double sum = s.a() * t.tau_a + s.b() * t.tau_b + s.c() * t.tau_c;
  if (sum == 0.0 || !std::isfinite(sum)) {
    throw DegenerateTrilinears("trilinears describe a point at infinity");
  }
  const double k = 2.0 * area(tri) / sum;
  return {k * t.tau_a, k * t.tau_b, k * t.tau_c};
}

CevianAngles cevian_angles(const Triangle& tri, Point2 p) {
  if (classify_point(tri, p) != PointLocation::Interior) {
    throw NotInterior("cevian angles need a strictly interior point");
  }
  const Point2 a = tri.a(), b = tri.b(), c = tri.c();
  return {angle_between(b - a, p - a), angle_between(p - a, c - a),
          angle_between(c - b, p - b), angle_between(p - b, a - b),
          angle_between(a - c, p - c), angle_between(p - c, b - c)};
}

VertexDistances vertex_distances(const Triangle& tri, Point2 p) {
  return {distance(p, tri.a()), distance(p, tri.b()), distance(p, tri.c())};
}

double distance_to_boundary(const Triangle& tri, Point2 p) {
  return std::min({segment_distance(p, tri.b(), tri.c()), segment_distance(p, tri.c(), tri.a()),
                   segment_distance(p, tri.a(), tri.b())});
}

Point2 incenter(const Triangle& tri) { return trilinear_to_cartesian(tri, {1.0, 1.0, 1.0}); }

Point2 circumcenter(const Triangle& tri) {
  const TriangleAngles ang = angles(tri);
  return trilinear_to_cartesian(tri, {std::cos(ang.alpha), std::cos(ang.beta), std::cos(ang.gamma)});
}

Point2 orthocenter(const Triangle& tri) {
  // H = A + B + C - 2O for the circumcenter O.
  const Point2 o = circumcenter(tri);
  return tri.a() + tri.b() + tri.c() - 2.0 * o;
}

}  // namespace tricenter
