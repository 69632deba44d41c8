#include "tricenter/general_p.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tricenter/electro_center.hpp"
#include "tricenter/quadrature.hpp"

namespace tricenter {

namespace {

constexpr double kFdStep = 1e-6;        // Jacobian step, diameters
constexpr double kInteriorMargin = 1e-6;  // Newton iterates stay this far inside, diameters
constexpr int kMaxNewton = 200;
constexpr int kMaxHalvings = 40;

// Similarity placing the centroid at the origin with unit diameter.
struct UnitFrame {
  Point2 origin;
  double scale;

  explicit UnitFrame(const Triangle& tri) : origin(tri.centroid()), scale(tri.diameter()) {}
  Point2 to_unit(Point2 q) const { return (1.0 / scale) * (q - origin); }
  Point2 from_unit(Point2 q) const { return origin + scale * q; }
  Triangle map(const Triangle& tri) const {
    return Triangle(to_unit(tri.a()), to_unit(tri.b()), to_unit(tri.c()));
  }
};

void require_interior(const Triangle& tri, Point2 q, const char* what) {
  if (classify_point(tri, q) != PointLocation::Interior ||
      distance_to_boundary(tri, q) <= kBoundaryBand * tri.diameter()) {
    throw NotInterior(std::string(what) + ": point must be strictly inside the triangle");
  }
}

// K_p(R) up to an additive constant, which integrates to zero against
// e^(i phi). Near p = -1 the constant -1/(p+1) keeps the kernel bounded;
// elsewhere it is dropped since it would swamp R^(p+1) for large |p|.
double kernel(double r, double p) {
  const double q = p + 1.0;
  if (std::abs(q) >= 0.5) return std::pow(r, q) / q;
  const double lr = std::log(r);
  return q == 0.0 ? lr : std::expm1(q * lr) / q;
}

// {Re, Im} of the integral of K_p(R) e^(i phi) and the integral of R^(p+1).
std::array<double, 3> ray_moments(const Triangle& tri, Point2 pt, double p) {
  const auto& v = tri.vertices();
  const quad::Tolerance tol{1e-12, 1e-13, 40};
  std::array<double, 3> total{};
  for (int i = 0; i < 3; ++i) {
    const Point2 x = v[(i + 1) % 3];
    const Point2 y = v[(i + 2) % 3];
    const Point2 xy = y - x;
    const Point2 yx = x - y;
    const double d = std::abs(cross(xy, pt - x)) / norm(xy);
    const double psi0 = std::atan2(std::abs(cross(xy, pt - x)), dot(xy, pt - x));
    const double psi1 = std::numbers::pi - std::atan2(std::abs(cross(yx, pt - y)), dot(yx, pt - y));
    const double theta = std::atan2(yx.y, yx.x);
    auto integrand = [&](double psi) {
      const double r = d / std::sin(psi);
      const double k = kernel(r, p);
      return std::array<double, 3>{k * std::cos(psi + theta), k * std::sin(psi + theta),
                                   std::pow(r, p + 1.0)};
    };
    const auto res = quad::integrate<std::array<double, 3>>(integrand, psi0, psi1, tol);
    for (int j = 0; j < 3; ++j) total[j] += res.value[j];
  }
  return total;
}

struct Scaled {
  Point2 g;      // residual divided by the integral of R^(p+1)
  double norm;
};

Scaled scaled_residual(const Triangle& unit_tri, Point2 q, double p) {
  const auto m = ray_moments(unit_tri, q, p);
  const Point2 g{m[0] / m[2], m[1] / m[2]};
  return {g, tricenter::norm(g)};
}

double lagrange_at_zero(const std::array<double, 3>& h, int i) {
  double w = 1.0;
  for (int j = 0; j < 3; ++j) {
    if (j != i) w *= h[j] / (h[j] - h[i]);
  }
  return w;
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p)) throw InvalidArgument("exponent p must be finite");
}

FieldVector stationarity_residual(const Triangle& tri, Point2 p_pt, PExponent p) {
  require_interior(tri, p_pt, "stationarity_residual");
  const UnitFrame frame(tri);
  const auto m = ray_moments(frame.map(tri), frame.to_unit(p_pt), p.value());
  // The kernel's constant integrates to zero, so rescaling only multiplies by
  // diameter^(p+1).
  const double factor = std::pow(frame.scale, p.value() + 1.0);
  return {factor * m[0], factor * m[1]};
}

RpSolveReport rp_center(const Triangle& tri, PExponent p, double tol, std::optional<Point2> start) {
  if (!(tol >= 1e-12)) throw InvalidArgument("rp_center: tol must be at least 1e-12");
  const UnitFrame frame(tri);
  const Triangle unit = frame.map(tri);
  const double pv = p.value();

  auto inside = [&](Point2 q) {
    return classify_point(unit, q) == PointLocation::Interior &&
           distance_to_boundary(unit, q) > kInteriorMargin;
  };

  Point2 x = start ? frame.to_unit(*start) : unit.centroid();
  if (!inside(x)) x = unit.centroid();
  Scaled cur = scaled_residual(unit, x, pv);

  auto report = [&](int iters) {
    return RpSolveReport{frame.from_unit(x), cur.norm, iters, pv};
  };

  for (int iter = 0; iter < kMaxNewton; ++iter) {
    if (cur.norm < tol) return report(iter);

    // Central differences, one-sided where a probe would leave the triangle.
    std::array<Point2, 2> col{};
    const std::array<Point2, 2> dirs{Point2{kFdStep, 0.0}, Point2{0.0, kFdStep}};
    for (int k = 0; k < 2; ++k) {
      const Point2 fwd = x + dirs[k];
      const Point2 bwd = x - dirs[k];
      const bool f_ok = inside(fwd), b_ok = inside(bwd);
      if (f_ok && b_ok) {
        col[k] = (0.5 / kFdStep) * (scaled_residual(unit, fwd, pv).g - scaled_residual(unit, bwd, pv).g);
      } else if (f_ok) {
        col[k] = (1.0 / kFdStep) * (scaled_residual(unit, fwd, pv).g - cur.g);
      } else {
        col[k] = (1.0 / kFdStep) * (cur.g - scaled_residual(unit, bwd, pv).g);
      }
    }
    const double det = cross(col[0], col[1]);
    if (det == 0.0 || !std::isfinite(det)) {
      throw NoConvergence("rp_center: singular Jacobian", report(iter));
    }
    // step = -J^{-1} g with J = [col0 col1].
    const Point2 step{-(col[1].y * cur.g.x - col[1].x * cur.g.y) / det,
                      -(-col[0].y * cur.g.x + col[0].x * cur.g.y) / det};

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h, t *= 0.5) {
      const Point2 cand = x + t * step;
      if (!inside(cand)) continue;
      const Scaled next = scaled_residual(unit, cand, pv);
      if (next.norm < cur.norm) {
        x = cand;
        cur = next;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      std::ostringstream msg;
      msg << "rp_center: no damped step reduces the residual (p = " << pv << ", residual "
          << cur.norm << ")";
      throw NoConvergence(msg.str(), report(iter));
    }
  }
  if (cur.norm < tol) return report(kMaxNewton);
  throw NoConvergence("rp_center: iteration limit reached", report(kMaxNewton));
}

double illuminating_center_check(const Triangle& tri, Point2 p_pt) {
  require_interior(tri, p_pt, "illuminating_center_check");
  const auto& v = tri.vertices();
  std::array<double, 3> ratio{};
  for (int i = 0; i < 3; ++i) {
    const Point2 x = v[(i + 1) % 3] - p_pt;
    const Point2 y = v[(i + 2) % 3] - p_pt;
    const double angle = std::atan2(cross(x, y), dot(x, y));
    ratio[i] = angle / (0.5 * cross(x, y));
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  return (*hi - *lo) / ((ratio[0] + ratio[1] + ratio[2]) / 3.0);
}

FieldVector inversion_first_moment(const Triangle& tri, Point2 p_pt, int quad_n) {
  require_interior(tri, p_pt, "inversion_first_moment");
  if (quad_n < 2) throw InvalidArgument("inversion_first_moment: quad_n must be at least 2");
  const quad::GaussRule rule = quad::gauss_legendre(quad_n);
  const auto& v = tri.vertices();
  FieldVector m;
  for (int i = 0; i < 3; ++i) {
    const Point2 x = v[(i + 1) % 3] - p_pt;
    const Point2 y = v[(i + 2) % 3] - p_pt;
    const double phi0 = std::atan2(x.y, x.x);
    const double sweep = std::atan2(cross(x, y), dot(x, y));
    const Point2 edge = y - x;
    for (int k = 0; k < quad_n; ++k) {
      const double phi = phi0 + 0.5 * sweep * (rule.nodes[k] + 1.0);
      const Point2 e{std::cos(phi), std::sin(phi)};
      // Ray p + r e meets the line x + s edge where r = cross(x, edge) / cross(e, edge).
      const double r = cross(x, edge) / cross(e, edge);
      const double w = 0.5 * sweep * rule.weights[k] / (3.0 * r * r * r);
      m.ex += w * e.x;
      m.ey += w * e.y;
    }
  }
  return m;
}

double inversion_centroid_check(const Triangle& tri, Point2 p_pt, int quad_n) {
  return norm(inversion_first_moment(tri, p_pt, quad_n));
}

std::vector<ArcPoint> potential_arc(const Triangle& tri, std::span<const double> p_values, double tol) {
  if (p_values.empty()) throw InvalidArgument("potential_arc: no p values");
  if (!std::is_sorted(p_values.begin(), p_values.end())) {
    throw InvalidArgument("potential_arc: p values must be sorted");
  }
  std::vector<double> ps(p_values.begin(), p_values.end());
  const double lo = ps.front(), hi = ps.back();
  const double match = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  for (double special : {-1.0, 2.0}) {
    if (special < lo || special > hi) continue;
    const bool present = std::any_of(ps.begin(), ps.end(),
                                     [&](double q) { return std::abs(q - special) <= match; });
    if (!present) ps.insert(std::upper_bound(ps.begin(), ps.end(), special), special);
  }

  std::vector<ArcPoint> out(ps.size());
  auto solve = [&](std::size_t i, std::optional<Point2> start) -> std::optional<Point2> {
    try {
      const RpSolveReport r = rp_center(tri, PExponent(ps[i]), tol, start);
      out[i] = {ps[i], r.point, true, r.residual_norm, r.iterations, {}};
      return r.point;
    } catch (const NoConvergence& e) {
      out[i] = {ps[i], e.best().point, false, e.best().residual_norm, e.best().iterations, e.what()};
    } catch (const Error& e) {
      out[i] = {ps[i], Point2{NAN, NAN}, false, NAN, 0, e.what()};
    }
    return std::nullopt;
  };

  const auto anchor = static_cast<std::size_t>(
      std::min_element(ps.begin(), ps.end(),
                       [](double x, double y) { return std::abs(x - 2.0) < std::abs(y - 2.0); }) -
      ps.begin());
  const auto seed = solve(anchor, std::nullopt);
  std::optional<Point2> warm = seed;
  for (std::size_t i = anchor + 1; i < ps.size(); ++i) {
    if (auto r = solve(i, warm)) warm = r;
  }
  warm = seed;
  for (std::size_t i = anchor; i-- > 0;) {
    if (auto r = solve(i, warm)) warm = r;
  }
  return out;
}

ArcLimit arc_limit(const Triangle& tri, int direction, double tol) {
  if (direction == 0) throw InvalidArgument("arc_limit: direction must be nonzero");
  const double sign = direction > 0 ? 1.0 : -1.0;
  // Continuation from p = 2 outward in steps of 1/2.
  std::vector<double> ps;
  const int steps = sign > 0 ? 56 : 64;
  for (int k = 0; k <= steps; ++k) ps.push_back(2.0 + sign * 0.5 * k);
  if (sign < 0) std::reverse(ps.begin(), ps.end());
  const auto arc = potential_arc(tri, ps, tol);

  ArcLimit out{};
  const std::array<double, 3> mags{10.0, 20.0, 30.0};
  std::array<double, 3> h{};
  for (int i = 0; i < 3; ++i) {
    const double target = sign * mags[i];
    const auto it = std::find_if(arc.begin(), arc.end(),
                                 [&](const ArcPoint& a) { return std::abs(a.p - target) < 1e-9; });
    if (it == arc.end() || !it->converged) {
      std::ostringstream msg;
      msg << "arc_limit: no converged center at p = " << target;
      throw NoConvergence(msg.str(), {it == arc.end() ? Point2{} : it->point, NAN, 0, target});
    }
    out.samples[i] = it->point;
    h[i] = 1.0 / mags[i];
  }
  for (int i = 0; i < 3; ++i) out.limit = out.limit + lagrange_at_zero(h, i) * out.samples[i];
  return out;
}

namespace {

// coth(y) - 1/y without the cancellation near y = 0.
double coth_minus_reciprocal(double y) {
  if (y < 0.1) {
    const double y2 = y * y;
    return y * (1.0 / 3.0 +
                y2 * (-1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * (2.0 / 93555.0)))));
  }
  return coth_stable(y) - 1.0 / y;
}

// The same Cramer solution as point_from_uvw, with u = U + du etc. and the
// common U = 1/k taken out. The U^2 term is the same for all three circle
// equations and drops out, so for small lambda (u, v, w ~ 1/lambda) nothing
// large is subtracted.
Point2 curve_point(const Triangle& tri, const SideLengths& sides, double lambda) {
  const double k = lambda / (2.0 * sides.s());
  const double big = 1.0 / k;
  const double du = sides.a() * coth_minus_reciprocal(sides.a() * k);
  const double dv = sides.b() * coth_minus_reciprocal(sides.b() * k);
  const double dw = sides.c() * coth_minus_reciprocal(sides.c() * k);
  const auto [xa, ya] = tri.a();
  const auto [xb, yb] = tri.b();
  const auto [xc, yc] = tri.c();
  const double ka = xa * xa + ya * ya - (big * (dv + dw) + dv * dw);
  const double kb = xb * xb + yb * yb - (big * (dw + du) + dw * du);
  const double kc = xc * xc + yc * yc - (big * (du + dv) + du * dv);
  const double x = (ka * (yb - yc) + kb * (yc - ya) + kc * (ya - yb)) /
                   (2.0 * xa * (yb - yc) + 2.0 * xb * (yc - ya) + 2.0 * xc * (ya - yb));
  const double y = (ka * (xb - xc) + kb * (xc - xa) + kc * (xa - xb)) /
                   (2.0 * ya * (xb - xc) + 2.0 * yb * (xc - xa) + 2.0 * yc * (xa - xb));
  return {x, y};
}

}  // namespace

std::vector<CurvePoint> lambda_curve(const Triangle& tri, std::span<const double> lambda_values) {
  const SideLengths sides = side_lengths(tri);
  std::vector<CurvePoint> out;
  out.reserve(lambda_values.size());
  for (double l : lambda_values) {
    if (!(l > 0.0)) throw InvalidArgument("lambda_curve: lambda values must be positive");
    out.push_back({l, curve_point(tri, sides, l)});
  }
  return out;
}

double thomson_residual(const Triangle& tri, Point2 p_pt) {
  const SideLengths s = side_lengths(tri);
  const Trilinears t = cartesian_to_trilinear(tri, p_pt);
  const double a = s.a(), b = s.b(), c = s.c();
  const double ta = t.tau_a, tb = t.tau_b, tc = t.tau_c;
  const double value = b * c * ta * (tb * tb - tc * tc) + c * a * tb * (tc * tc - ta * ta) +
                       a * b * tc * (ta * ta - tb * tb);
  const double rho = inradius(tri);
  return value / (a * b * c * rho * rho * rho);
}

}  // namespace tricenter
