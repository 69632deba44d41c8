#include "tricenter/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tricenter/electro_center.hpp"

namespace tricenter {

double lambda_equilateral() { return 3.0 * std::log(2.0 + std::numbers::sqrt3); }

double shape_parameter(const SideLengths& sides) {
  const double s = sides.s();
  const double prod = (s - sides.a()) * (s - sides.b()) * (s - sides.c());
  // log of a ratio >= 1 by AM-GM; clamp away the roundoff below it.
  return std::max(0.0, std::log(s * s * s / (27.0 * prod)));
}

double shape_parameter_from_inradius(const SideLengths& sides) {
  const double s = sides.s();
  const double rho = heron_area(sides) / s;
  return std::max(0.0, std::log(s * s / (27.0 * rho * rho)));
}

double initial_guess(const SideLengths& sides) {
  return lambda_equilateral() + kGuessSlope * shape_parameter(sides);
}

ShapeStats shape_stats(const SideLengths& sides, std::optional<double> lambda) {
  ShapeStats out{shape_parameter(sides), lambda_equilateral(), std::nullopt};
  if (lambda && out.t > 0.0) out.ratio = (*lambda - out.lambda0) / out.t;
  return out;
}

SideLengths sides_from_angles(double alpha, double beta) {
  return SideLengths(std::sin(alpha), std::sin(beta), std::sin(std::numbers::pi - alpha - beta));
}

RatioBandSummary ratio_band_survey(int n_triangles, std::uint64_t seed) {
  if (n_triangles < 100) throw InvalidArgument("ratio_band_survey: need at least 100 triangles");
  std::mt19937_64 gen(seed);
  // 53 random bits -> (0, 1); avoids the implementation-defined
  // uniform_real_distribution so a seed means the same triangles everywhere.
  auto unit_open = [&gen] {
    for (;;) {
      const double x = double(gen() >> 11) * 0x1.0p-53;
      if (x > 0.0) return x;
    }
  };

  RatioBandSummary out{std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity(), 0.0, 0, 0};
  double sum = 0.0;
  for (int i = 0; i < n_triangles; ++i) {
    const double alpha = 0.5 * std::numbers::pi * unit_open();
    const double beta = 0.5 * std::numbers::pi * unit_open();
    std::optional<SideLengths> sides;
    try {
      sides.emplace(sides_from_angles(alpha, beta));
    } catch (const DegenerateTriangle&) {
      ++out.excluded;
      continue;
    }
    const double t = shape_parameter(*sides);
    if (t < kSurveyMinShape) {
      ++out.excluded;
      continue;
    }
    const double ratio = (solve_lambda(*sides).lambda - lambda_equilateral()) / t;
    out.min = std::min(out.min, ratio);
    out.max = std::max(out.max, ratio);
    sum += ratio;
    ++out.used;
  }
  out.mean = out.used > 0 ? sum / out.used : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace tricenter
