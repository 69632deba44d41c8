#pragma once

#include <cstdint>
#include <optional>

#include "tricenter/geometry.hpp"

namespace tricenter {

/// lambda for every equilateral triangle: 3 log(2 + sqrt 3).
double lambda_equilateral();

/// Shape parameter t = log(s^3 / (27 (s-a)(s-b)(s-c))); zero exactly for
/// equilateral triangles, positive otherwise.
double shape_parameter(const SideLengths& sides);

/// The same quantity written as log(s^2 / (27 rho^2)) with rho the inradius.
double shape_parameter_from_inradius(const SideLengths& sides);

/// Coefficient on t in the starting value for the lambda solve. Observed
/// values of (lambda - lambda0) / t sit between 1/2 and 1; 0.75 is the middle.
inline constexpr double kGuessSlope = 0.75;

/// lambda0 + kGuessSlope * t.
double initial_guess(const SideLengths& sides);

struct ShapeStats {
  double t;
  double lambda0;
  std::optional<double> ratio;  // (lambda - lambda0) / t, when lambda is known and t > 0
};

ShapeStats shape_stats(const SideLengths& sides, std::optional<double> lambda = std::nullopt);

/// Triangles with t below this are left out of ratio statistics (0/0).
inline constexpr double kSurveyMinShape = 1e-6;

struct RatioBandSummary {
  double min, max, mean;
  int used;      // triangles that entered the statistics
  int excluded;  // near-equilateral samples dropped
};

/// Side lengths sin(alpha) : sin(beta) : sin(pi - alpha - beta) for the
/// angle pair.
SideLengths sides_from_angles(double alpha, double beta);

/// Deterministic survey over n triangles whose two angles alpha, beta are
/// drawn uniformly from (0, pi/2)^2. Results depend only on (n, seed).
/// Throws InvalidArgument for n < 100.
RatioBandSummary ratio_band_survey(int n_triangles, std::uint64_t seed);

}  // namespace tricenter
