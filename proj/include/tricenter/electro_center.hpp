#pragma once

#include "tricenter/geometry.hpp"

namespace tricenter {

// The maximum point of the triangle's electrostatic potential, located through
// the scalar parameter lambda. With s the semiperimeter,
//   u = a coth(a lambda / 2s),  v = b coth(b lambda / 2s),  w = c coth(c lambda / 2s)
// are the pairwise sums r_B + r_C, r_C + r_A, r_A + r_B of the distances from
// the center to the vertices, and lambda is the unique positive root of the
// sub-triangle area balance
//   sum sqrt((u^2 - a^2)(a^2 - (v - w)^2)) = sqrt(2(a^2b^2 + b^2c^2 + c^2a^2) - (a^4 + b^4 + c^4)).

/// coth(x) for x > 0: series below 1e-4, 1 + 2e^{-2x}(1 + e^{-2x}) above 20.
double coth_stable(double x);
/// coth(x) - 1 = 2 / expm1(2x), accurate where coth(x) rounds to 1.
double coth_minus_one(double x);

struct Uvw {
  double u, v, w;
};

Uvw uvw(const SideLengths& sides, double lambda);

/// Left-hand side minus right-hand side of the lambda equation. Strictly
/// decreasing in lambda. Radicands that dip below zero by roundoff are clamped;
/// anything below -1e-12 relative throws NegativeRadicand.
double lambda_residual(const SideLengths& sides, double lambda);

/// sqrt(2(a^2b^2 + b^2c^2 + c^2a^2) - (a^4 + b^4 + c^4)), which is 4 * area.
double lambda_rhs(const SideLengths& sides);

struct LambdaSolution {
  double lambda;
  double u, v, w;
  double r_a, r_b, r_c;
  double residual;  // |lhs - rhs| at lambda
  int iterations;
};

/// Brackets the root by geometric expansion around the shape-based initial
/// guess, then runs a bisection-safeguarded secant/inverse-quadratic (Brent)
/// iteration. Converged once the bracket is narrower than tol * lambda and
/// |residual| < tol * rhs, or the bracket can no longer shrink in double.
/// Throws InvalidArgument for tol < 1e-14, BracketFailure if no sign change
/// turns up within 60 doublings.
LambdaSolution solve_lambda(const SideLengths& sides, double tol = 1e-14);

/// Cartesian point from the vertex-distance sums, by the explicit Cramer
/// solution of the two linear equations left after subtracting the third
/// circle equation from the first two.
Point2 point_from_uvw(const Triangle& tri, const Uvw& sums);

struct ElectrostaticCenter {
  Point2 point;
  LambdaSolution solution;
};

ElectrostaticCenter electrostatic_center(const Triangle& tri, double tol = 1e-14);

struct Theorem1Spreads {
  /// max - min of (s/l) log((r_X + r_Y - l)/(r_X + r_Y + l)) over the sides.
  double side_relation_spread;
  /// max - min of (1/sin alpha) log(tan(beta1/2) tan(gamma2/2)) and its cyclic
  /// companions, from the cevian angles.
  double angle_relation_spread;
};

/// Both spreads vanish at the stationary point of the field and only there.
/// Throws NotInterior.
Theorem1Spreads theorem1_check(const Triangle& tri, Point2 p);

/// The triangle center function
///   f(a,b,c) = sqrt((coth^2(a lambda/(a+b+c)) - 1)(a^2 - (b coth(b lambda/(a+b+c)) - c coth(c lambda/(a+b+c)))^2))
/// evaluated at a given lambda. Symmetric in (b, c), homogeneous of degree 1.
double center_function(double a, double b, double c, double lambda);

/// f(a,b,c) : f(b,c,a) : f(c,a,b) with a single shared lambda. Homogeneous;
/// not normalized to any gauge.
Trilinears center_function_trilinears(const SideLengths& sides, double tol = 1e-14);

/// Distance from the electrostatic center to side BC.
double kimberling_search_value(const SideLengths& sides, double tol = 1e-14);

}  // namespace tricenter
