#pragma once

#include <functional>

#include "tricenter/geometry.hpp"

namespace tricenter {

// Potential and field of a uniformly charged triangle with unit density and
// unit Coulomb constant:
//   V(P) = integral over T of 1/|PQ|,   E = -grad V.

struct FieldVector {
  double ex = 0.0;
  double ey = 0.0;
};

inline double norm(FieldVector e) { return std::hypot(e.ex, e.ey); }

struct QuadratureConfig {
  double target_rel_tol = 1e-10;
  int max_subdivisions = 20;

  /// Throws InvalidArgument unless target_rel_tol is in (0, 1e-2].
  void validate() const;
};

/// Width of the band around the boundary, relative to the diameter, inside
/// which the closed forms refuse to evaluate.
inline constexpr double kBoundaryBand = 1e-9;

/// Closed form. Each side XY contributes d * log((r_X + r_Y + l)/(r_X + r_Y - l)),
/// with d the signed distance from p to the side's line (positive inside);
/// this is d * [log tan(psi/2)] taken over the side's angular window. The
/// signed sum covers both interior and exterior points.
/// Throws TooCloseToBoundary within kBoundaryBand * diameter of the boundary.
double potential_closed(const Triangle& tri, Point2 p);

/// Independent route: split T into the three triangles with apex p and
/// integrate each in polar coordinates about p. The radial integral of
/// r * (1/r) is exact, leaving a smooth 1D angular integral of the ray length
/// that is handed to adaptive Gauss-Kronrod. Valid everywhere, including the
/// boundary and the vertices.
double potential_quadrature(const Triangle& tri, Point2 p, const QuadratureConfig& cfg = {});

/// Polar kernel on a star-shaped region about the origin with ray length
/// ray(phi): the integral of 1/r over the region equals the integral of ray
/// over [0, 2 pi).
double polar_potential(const std::function<double(double)>& ray, const QuadratureConfig& cfg = {});

/// Closed-form field, E = -sum over sides of n_in * log((r_X + r_Y + l)/(r_X + r_Y - l))
/// with n_in the inward unit normal. Inside T this is the principal-value
/// integral; it is also valid outside T.
/// Throws TooCloseToBoundary within kBoundaryBand * diameter of the boundary.
FieldVector field_closed(const Triangle& tri, Point2 p);

enum class PotentialEvaluator { Closed, Quadrature };

/// Grid search for the maximum of V: a barycentric grid with grid_n
/// subdivisions per side, followed by refine_iters rounds of a local 9x9 grid
/// whose spacing shrinks by 4 each round. Deterministic; ties go to the lowest
/// grid index. Throws InvalidArgument if grid_n < 16.
Point2 brute_force_max(const Triangle& tri, int grid_n, int refine_iters,
                       PotentialEvaluator evaluator = PotentialEvaluator::Closed);

}  // namespace tricenter
