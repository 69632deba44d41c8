#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricenter/geometry.hpp"
#include "tricenter/potential.hpp"

namespace tricenter {

// Extreme points of the Riesz potentials V_p(P) = integral over T of |PQ|^p.
// With R(phi) the length of the ray from P to the boundary in direction phi,
// an interior stationary point satisfies
//   integral over [0, 2 pi) of R(phi)^(p+1) e^(i phi) dphi = 0.

/// Riesz exponent. Every finite value is allowed; p = -1 is the electrostatic
/// case and p = 0 the logarithmic one.
class PExponent {
 public:
  explicit PExponent(double p);
  double value() const { return p_; }

 private:
  double p_;
};

struct RpSolveReport {
  Point2 point;
  double residual_norm;  // scale-free, see rp_center
  int iterations;
  double p;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, RpSolveReport best)
      : Error(ErrorKind::NoConvergence, what), best_(best) {}
  const RpSolveReport& best() const noexcept { return best_; }

 private:
  RpSolveReport best_;
};

/// integral of K_p(R(phi)) e^(i phi) dphi with K_p(R) = (R^(p+1) - 1)/(p+1)
/// and K_{-1}(R) = log R. Since the constant integrates to zero this is the
/// stationarity integral above divided by p + 1, which keeps it continuous
/// through p = -1; there it equals -E, minus the electrostatic field.
/// Each side is integrated in the angle psi between the ray and the side,
/// R = d / sin(psi), by adaptive Gauss-Kronrod.
/// Throws NotInterior unless p_pt is inside and off the boundary band.
FieldVector stationarity_residual(const Triangle& tri, Point2 p_pt, PExponent p);

/// Damped Newton on the stationarity integral with a central-difference
/// Jacobian (h = 1e-6 diameter), starting at `start` or, when that is absent
/// or not safely inside, the centroid. Steps
/// are halved until the iterate stays 1e-6 diameter inside T and the residual
/// decreases. Converged when
///   |integral of K_p(R) e^(i phi)| / integral of R^(p+1)
/// (scale-free) drops below tol. Throws InvalidArgument for tol < 1e-12 and
/// NoConvergence, carrying the best iterate, after 200 iterations or when no
/// damped step makes progress.
RpSolveReport rp_center(const Triangle& tri, PExponent p, double tol = 1e-12,
                        std::optional<Point2> start = std::nullopt);

/// Relative spread (max - min)/mean of angle(BPC)/area(BPC) and its cyclic
/// companions. Vanishes at the p = -2 center. Throws NotInterior.
double illuminating_center_check(const Triangle& tri, Point2 p_pt);

/// First moment about p_pt of the region bounded by the unit-circle inversion
/// of the boundary, (1/3) integral of R(phi)^-3 e^(i phi), by a fixed
/// quad_n-point Gauss-Legendre rule on each side's angular window in phi.
/// Equals minus stationarity_residual at p = -4. Throws NotInterior.
FieldVector inversion_first_moment(const Triangle& tri, Point2 p_pt, int quad_n = 64);

/// Norm of inversion_first_moment; zero at the p = -4 center.
double inversion_centroid_check(const Triangle& tri, Point2 p_pt, int quad_n = 64);

struct ArcPoint {
  double p;
  Point2 point;
  bool converged;
  double residual_norm;
  int iterations;
  std::string error;  // empty when converged
};

/// rp_center along sorted p_values by continuation: the solve nearest p = 2
/// starts from the centroid, the rest warm-start from their neighbour toward
/// it. p = -1 and p = 2 are inserted when inside the range and missing.
/// A failed point is recorded, not thrown. Throws InvalidArgument if p_values
/// is empty or unsorted.
std::vector<ArcPoint> potential_arc(const Triangle& tri, std::span<const double> p_values,
                                    double tol = 1e-12);

struct ArcLimit {
  Point2 limit;                    // quadratic extrapolation in 1/|p| to 0
  std::array<Point2, 3> samples;   // centers at |p| = 10, 20, 30
};

/// Numerical endpoint of the potential arc as p -> +inf (direction > 0) or
/// p -> -inf (direction < 0).
ArcLimit arc_limit(const Triangle& tri, int direction, double tol = 1e-12);

struct CurvePoint {
  double lambda;
  Point2 point;
};

/// The center formula with lambda as a free parameter, no root solve. The
/// part of u, v, w common to all sides (2s/lambda) is removed before forming
/// the Cartesian solution so small lambda keeps full precision.
/// Throws InvalidArgument for non-positive lambda.
std::vector<CurvePoint> lambda_curve(const Triangle& tri, std::span<const double> lambda_values);

/// bc ta(tb^2 - tc^2) + ca tb(tc^2 - ta^2) + ab tc(ta^2 - tb^2) in exact
/// trilinears, divided by abc rho^3 to make it scale-free.
double thomson_residual(const Triangle& tri, Point2 p_pt);

}  // namespace tricenter
