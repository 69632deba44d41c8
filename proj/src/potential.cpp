#include "tricenter/potential.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "tricenter/quadrature.hpp"

namespace tricenter {

namespace {

struct EdgeTerm {
  double d;        // signed distance to the side's line, positive inside
  double log_ratio;  // log((r1 + r2 + l) / (r1 + r2 - l))
  Point2 inward;   // unit inward normal
};

// r1 + r2 - l without cancellation. With x1, x2 the coordinates of the side's
// endpoints along the side measured from the foot of p, l = x2 - x1 and
//   r1 + r2 - l = (r1 + x1) + (r2 - x2),
// where each bracket is rewritten as d^2 / (r -+ x) whenever it would cancel.
double stable_excess(double d, double r1, double x1, double r2, double x2) {
  const double d2 = d * d;
  const double first = x1 >= 0 ? r1 + x1 : d2 / (r1 - x1);
  const double second = x2 <= 0 ? r2 - x2 : d2 / (r2 + x2);
  return first + second;
}

std::array<EdgeTerm, 3> edge_terms(const Triangle& tri, Point2 p) {
  const auto& v = tri.vertices();
  std::array<EdgeTerm, 3> out{};
  // Sides a = BC, b = CA, c = AB in that order.
  for (int i = 0; i < 3; ++i) {
    const Point2 x = v[(i + 1) % 3];
    const Point2 y = v[(i + 2) % 3];
    const double len = distance(x, y);
    const Point2 t = (1.0 / len) * (y - x);
    const Point2 n{-t.y, t.x};
    const double d = dot(p - x, n);
    const double x1 = dot(x - p, t);
    const double x2 = dot(y - p, t);
    const double excess = stable_excess(d, distance(p, x), x1, distance(p, y), x2);
    out[i] = {d, std::log1p(2.0 * len / excess), n};
  }
  return out;
}

void require_off_boundary(const Triangle& tri, Point2 p, const char* what) {
  if (distance_to_boundary(tri, p) <= kBoundaryBand * tri.diameter()) {
    throw TooCloseToBoundary(std::string(what) + ": point lies within the boundary band");
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(target_rel_tol > 0.0 && target_rel_tol <= 1e-2)) {
    throw InvalidArgument("quadrature target_rel_tol must lie in (0, 1e-2]");
  }
  if (max_subdivisions < 1) throw InvalidArgument("quadrature max_subdivisions must be positive");
}

double potential_closed(const Triangle& tri, Point2 p) {
  require_off_boundary(tri, p, "potential_closed");
  double v = 0.0;
  for (const EdgeTerm& e : edge_terms(tri, p)) v += e.d * e.log_ratio;
  return v;
}

FieldVector field_closed(const Triangle& tri, Point2 p) {
  require_off_boundary(tri, p, "field_closed");
  FieldVector f;
  for (const EdgeTerm& e : edge_terms(tri, p)) {
    f.ex -= e.inward.x * e.log_ratio;
    f.ey -= e.inward.y * e.log_ratio;
  }
  return f;
}

double potential_quadrature(const Triangle& tri, Point2 p, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto& v = tri.vertices();
  const double skip = 1e-14 * tri.diameter();
  // Every |PQ| is at most |PG| + diameter, so area / (|PG| + diameter) bounds
  // V from below. Sliver pieces (apex close to a side line) are held to that
  // share of the total rather than to their own tiny magnitude.
  const double floor_v = std::abs(area(tri)) / (distance(p, tri.centroid()) + tri.diameter());
  const quad::Tolerance tol{cfg.target_rel_tol * floor_v / 3.0, cfg.target_rel_tol,
                            cfg.max_subdivisions};
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Point2 x = v[(i + 1) % 3];
    const Point2 y = v[(i + 2) % 3];
    const Point2 t = (1.0 / distance(x, y)) * (y - x);
    const Point2 n{-t.y, t.x};
    const double d = dot(p - x, n);
    if (std::abs(d) <= skip) continue;  // apex on this side's line: zero-area piece
    const Point2 px = x - p;
    const Point2 py = y - p;
    const double phi0 = std::atan2(px.y, px.x);
    const double sweep = std::atan2(cross(px, py), dot(px, py));
    // Ray length from p to the line through x and y in direction phi.
    auto ray = [&](double phi) {
      const double c = std::cos(phi) * n.x + std::sin(phi) * n.y;
      return std::abs(d / c);
    };
    // When the apex nearly touches the side line the integrand has peaks of
    // relative width ~ d / |PX| at both window ends. Break points graded
    // geometrically toward the ends keep the adaptive depth bounded.
    std::vector<double> cuts{0.0};
    const double gx = std::abs(d) / (norm(px) * std::abs(sweep));
    for (double g = gx; g < 0.25; g *= 4.0) cuts.push_back(g);
    std::vector<double> right;
    const double gy = std::abs(d) / (norm(py) * std::abs(sweep));
    for (double g = gy; g < 0.25; g *= 4.0) right.push_back(1.0 - g);
    cuts.insert(cuts.end(), right.rbegin(), right.rend());
    cuts.push_back(1.0);
    quad::Tolerance piece_tol = tol;
    piece_tol.abs /= std::abs(sweep) * double(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const auto r = quad::integrate<double>([&](double tau) { return ray(phi0 + tau * sweep); },
                                             cuts[k], cuts[k + 1], piece_tol);
      total += sweep * r.value;
    }
  }
  return total;
}

double polar_potential(const std::function<double(double)>& ray, const QuadratureConfig& cfg) {
  cfg.validate();
  const quad::Tolerance tol{0.0, cfg.target_rel_tol, cfg.max_subdivisions};
  return quad::integrate<double>(ray, 0.0, 2.0 * std::numbers::pi, tol).value;
}

Point2 brute_force_max(const Triangle& tri, int grid_n, int refine_iters,
                       PotentialEvaluator evaluator) {
  if (grid_n < 16) throw InvalidArgument("brute_force_max: grid_n must be at least 16");
  if (refine_iters < 0) throw InvalidArgument("brute_force_max: refine_iters must be >= 0");

  const double margin = 10.0 * kBoundaryBand * tri.diameter();
  auto value = [&](Point2 q) {
    return evaluator == PotentialEvaluator::Closed ? potential_closed(tri, q)
                                                   : potential_quadrature(tri, q);
  };
  auto admissible = [&](Point2 q) {
    return classify_point(tri, q) == PointLocation::Interior && distance_to_boundary(tri, q) > margin;
  };

  const Point2 a = tri.a();
  const Point2 e1 = (1.0 / grid_n) * (tri.b() - a);
  const Point2 e2 = (1.0 / grid_n) * (tri.c() - a);

  Point2 best = tri.centroid();
  double best_v = -std::numeric_limits<double>::infinity();
  for (int j = 1; j < grid_n; ++j) {
    for (int k = 1; j + k < grid_n; ++k) {
      const Point2 q = a + double(j) * e1 + double(k) * e2;
      const double vq = value(q);
      if (vq > best_v) {
        best_v = vq;
        best = q;
      }
    }
  }

  double step = 0.25;
  for (int round = 0; round < refine_iters; ++round, step *= 0.25) {
    const Point2 center = best;
    for (int j = -4; j <= 4; ++j) {
      for (int k = -4; k <= 4; ++k) {
        const Point2 q = center + (j * step) * e1 + (k * step) * e2;
        if (!admissible(q)) continue;
        const double vq = (j == 0 && k == 0) ? best_v : value(q);
        if (vq > best_v) {
          best_v = vq;
          best = q;
        }
      }
    }
  }
  return best;
}

}  // namespace tricenter
