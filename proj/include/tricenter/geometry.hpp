#pragma once

#include <array>
#include <cmath>

#include "tricenter/errors.hpp"

namespace tricenter {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }

/// Lengths of BC, CA, AB and the semiperimeter. Construction enforces the
/// strict triangle inequality.
class SideLengths {
 public:
  /// Throws DegenerateTriangle when the inequality fails or holds only within
  /// 1e-12 relative to the longest side.
  SideLengths(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double s() const { return s_; }
  double longest() const;

 private:
  double a_, b_, c_, s_;
};

/// A non-degenerate planar triangle ABC, stored counterclockwise. A clockwise
/// input is normalized by exchanging B and C, so a=|BC|, b=|CA|, c=|AB| always
/// refer to the stored labels.
class Triangle {
 public:
  /// Throws DegenerateTriangle when |2 area| <= 1e-12 * (longest side)^2 or any
  /// coordinate is not finite.
  Triangle(Point2 a, Point2 b, Point2 c);

  Point2 a() const { return v_[0]; }
  Point2 b() const { return v_[1]; }
  Point2 c() const { return v_[2]; }
  const std::array<Point2, 3>& vertices() const { return v_; }

  double diameter() const;
  Point2 centroid() const { return (1.0 / 3.0) * (v_[0] + v_[1] + v_[2]); }

 private:
  std::array<Point2, 3> v_;
};

struct Trilinears {
  double tau_a = 0.0;
  double tau_b = 0.0;
  double tau_c = 0.0;
};

/// Angles at the vertices between the sides and the cevians through P:
/// alpha1 = BAP, alpha2 = PAC, beta1 = CBP, beta2 = PBA, gamma1 = ACP, gamma2 = PCB.
struct CevianAngles {
  double alpha1, alpha2, beta1, beta2, gamma1, gamma2;
};

struct TriangleAngles {
  double alpha, beta, gamma;
};

struct VertexDistances {
  double r_a, r_b, r_c;
};

enum class PointLocation { Interior, Boundary, Exterior };

SideLengths side_lengths(const Triangle& tri);

/// Canonical pose: B=(0,0), C=(a,0), A in the upper half-plane.
Triangle triangle_from_sides(double a, double b, double c);

double area(const Triangle& tri);
/// Heron's formula in Kahan's cancellation-free ordering.
double heron_area(const SideLengths& sides);
double inradius(const Triangle& tri);

TriangleAngles angles(const Triangle& tri);

PointLocation classify_point(const Triangle& tri, Point2 p);

/// Signed distances to BC, CA, AB; positive on the interior side.
Trilinears signed_side_distances(const Triangle& tri, Point2 p);

/// Exact trilinears: tau are the true signed distances, so
/// a*tau_a + b*tau_b + c*tau_c = 2*area.
Trilinears cartesian_to_trilinear(const Triangle& tri, Point2 p);

/// Any gauge accepted. Throws DegenerateTrilinears for a point at infinity.
Point2 trilinear_to_cartesian(const Triangle& tri, const Trilinears& t);

/// Rescales homogeneous trilinears to the exact-distance gauge.
Trilinears exact_gauge(const Triangle& tri, const Trilinears& t);

/// Throws NotInterior unless p is strictly inside.
CevianAngles cevian_angles(const Triangle& tri, Point2 p);

VertexDistances vertex_distances(const Triangle& tri, Point2 p);

/// Unsigned distance from p to the nearest point of the boundary.
double distance_to_boundary(const Triangle& tri, Point2 p);

Point2 incenter(const Triangle& tri);
Point2 circumcenter(const Triangle& tri);
Point2 orthocenter(const Triangle& tri);

}  // namespace tricenter
