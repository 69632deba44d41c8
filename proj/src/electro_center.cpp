#include "tricenter/electro_center.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tricenter/approx.hpp"

namespace tricenter {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRadicandFloor = -1e-12;
constexpr int kMaxDoublings = 60;
constexpr int kMaxBrentIterations = 200;

// sqrt((u^2 - a^2)(a^2 - (v - w)^2)) for the side of length `len`, given the
// coth excesses of all three sides. `own` belongs to this side, `next` and
// `prev` to the two sides whose sums enter v - w.
double area_term(double len, double own_excess, double next_len, double next_excess,
                 double prev_len, double prev_excess) {
  const double u_minus = len * own_excess;
  const double first = u_minus * (2.0 * len + u_minus);
  const double diff = (next_len - prev_len) + (next_len * next_excess - prev_len * prev_excess);
  double second = (len - diff) * (len + diff);
  if (second < 0.0) {
    if (second < kRadicandFloor * len * len) {
      std::ostringstream msg;
      msg << "negative radicand " << second << " for side " << len;
      throw NegativeRadicand(msg.str());
    }
    second = 0.0;
  }
  return std::sqrt(first * second);
}

}  // namespace

double coth_stable(double x) {
  if (x < 1e-4) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
  if (x > 20.0) {
    const double q = std::exp(-2.0 * x);
    return 1.0 + 2.0 * q * (1.0 + q);
  }
  return 1.0 / std::tanh(x);
}

double coth_minus_one(double x) { return 2.0 / std::expm1(2.0 * x); }

Uvw uvw(const SideLengths& sides, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("uvw: lambda must be positive");
  const double k = lambda / (2.0 * sides.s());
  return {sides.a() * coth_stable(sides.a() * k), sides.b() * coth_stable(sides.b() * k),
          sides.c() * coth_stable(sides.c() * k)};
}

double lambda_rhs(const SideLengths& sides) { return 4.0 * heron_area(sides); }

double lambda_residual(const SideLengths& sides, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("lambda_residual: lambda must be positive");
  const double a = sides.a(), b = sides.b(), c = sides.c();
  const double k = lambda / (2.0 * sides.s());
  const double ea = coth_minus_one(a * k);
  const double eb = coth_minus_one(b * k);
  const double ec = coth_minus_one(c * k);
  const double lhs = area_term(a, ea, b, eb, c, ec) + area_term(b, eb, c, ec, a, ea) +
                     area_term(c, ec, a, ea, b, eb);
  return lhs - lambda_rhs(sides);
}

LambdaSolution solve_lambda(const SideLengths& sides, double tol) {
  if (!(tol >= 1e-14)) throw InvalidArgument("solve_lambda: tol must be at least 1e-14");
  const double rhs = lambda_rhs(sides);
  auto f = [&](double l) { return lambda_residual(sides, l); };

  const double guess = initial_guess(sides);
  double lo = guess / 8.0, hi = guess * 8.0;
  double flo = f(lo), fhi = f(hi);
  int doublings = 0;
  while (flo < 0.0) {
    if (++doublings > kMaxDoublings) throw BracketFailure("solve_lambda: no sign change below guess");
    lo *= 0.5;
    flo = f(lo);
  }
  while (fhi > 0.0) {
    if (++doublings > kMaxDoublings) throw BracketFailure("solve_lambda: no sign change above guess");
    hi *= 2.0;
    fhi = f(hi);
  }

  // Brent's method on [lo, hi] with f(lo) >= 0 >= f(hi).
  double xa = lo, xb = hi, xc = hi;
  double fa = flo, fb = fhi, fc = fhi;
  double d = xb - xa, e = d;
  int iter = 0;
  for (; iter < kMaxBrentIterations; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      xc = xa;
      fc = fa;
      e = d = xb - xa;
    }
    if (std::abs(fc) < std::abs(fb)) {
      xa = xb; xb = xc; xc = xa;
      fa = fb; fb = fc; fc = fa;
    }
    // Steps are floored at machine resolution, not at tol, so the residual
    // test can still be met after the bracket has become narrow.
    const double tol1 = 2.0 * kEps * std::abs(xb);
    const double xm = 0.5 * (xc - xb);
    const bool narrow = std::abs(xm) <= 0.5 * tol * std::abs(xb) + tol1;
    if (fb == 0.0 || (narrow && std::abs(fb) < tol * rhs) || std::abs(xm) <= tol1) break;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (xa == xc) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (xb - xa) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    xa = xb;
    fa = fb;
    xb += std::abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(xb);
  }
  if (iter == kMaxBrentIterations) throw BracketFailure("solve_lambda: iteration limit reached");

  const Uvw s = uvw(sides, xb);
  LambdaSolution sol{xb,
                     s.u,
                     s.v,
                     s.w,
                     0.5 * (s.v + s.w - s.u),
                     0.5 * (s.w + s.u - s.v),
                     0.5 * (s.u + s.v - s.w),
                     std::abs(fb),
                     iter};
  return sol;
}

Point2 point_from_uvw(const Triangle& tri, const Uvw& sums) {
  const auto [xa, ya] = tri.a();
  const auto [xb, yb] = tri.b();
  const auto [xc, yc] = tri.c();
  const double u = sums.u, v = sums.v, w = sums.w;
  const double ka = xa * xa + ya * ya - v * w;
  const double kb = xb * xb + yb * yb - w * u;
  const double kc = xc * xc + yc * yc - u * v;
  const double x = (ka * (yb - yc) + kb * (yc - ya) + kc * (ya - yb)) /
                   (2.0 * xa * (yb - yc) + 2.0 * xb * (yc - ya) + 2.0 * xc * (ya - yb));
  const double y = (ka * (xb - xc) + kb * (xc - xa) + kc * (xa - xb)) /
                   (2.0 * ya * (xb - xc) + 2.0 * yb * (xc - xa) + 2.0 * yc * (xa - xb));
  return {x, y};
}

ElectrostaticCenter electrostatic_center(const Triangle& tri, double tol) {
  const LambdaSolution sol = solve_lambda(side_lengths(tri), tol);
  return {point_from_uvw(tri, {sol.u, sol.v, sol.w}), sol};
}

Theorem1Spreads theorem1_check(const Triangle& tri, Point2 p) {
  const CevianAngles ca = cevian_angles(tri, p);  // throws NotInterior
  const SideLengths sides = side_lengths(tri);
  const VertexDistances r = vertex_distances(tri, p);
  auto side_q = [&](double len, double r1, double r2) {
    return sides.s() / len * std::log((r1 + r2 - len) / (r1 + r2 + len));
  };
  const double qa = side_q(sides.a(), r.r_b, r.r_c);
  const double qb = side_q(sides.b(), r.r_c, r.r_a);
  const double qc = side_q(sides.c(), r.r_a, r.r_b);

  const TriangleAngles ang = angles(tri);
  auto tan_q = [](double opposite, double x, double y) {
    return std::log(std::tan(0.5 * x) * std::tan(0.5 * y)) / std::sin(opposite);
  };
  const double ta = tan_q(ang.alpha, ca.beta1, ca.gamma2);
  const double tb = tan_q(ang.beta, ca.gamma1, ca.alpha2);
  const double tc = tan_q(ang.gamma, ca.alpha1, ca.beta2);

  auto spread = [](double x, double y, double z) {
    return std::max({x, y, z}) - std::min({x, y, z});
  };
  return {spread(qa, qb, qc), spread(ta, tb, tc)};
}

double center_function(double a, double b, double c, double lambda) {
  const double k = lambda / (a + b + c);
  const double ea = coth_minus_one(a * k);
  const double eb = coth_minus_one(b * k);
  const double ec = coth_minus_one(c * k);
  const double first = ea * (2.0 + ea);  // coth^2 - 1
  const double diff = (b - c) + (b * eb - c * ec);
  const double second = std::max((a - diff) * (a + diff), 0.0);
  return std::sqrt(first * second);
}

Trilinears center_function_trilinears(const SideLengths& sides, double tol) {
  const double lambda = solve_lambda(sides, tol).lambda;
  const double a = sides.a(), b = sides.b(), c = sides.c();
  return {center_function(a, b, c, lambda), center_function(b, c, a, lambda),
          center_function(c, a, b, lambda)};
}

double kimberling_search_value(const SideLengths& sides, double tol) {
  const Trilinears t = center_function_trilinears(sides, tol);
  const double denom = sides.a() * t.tau_a + sides.b() * t.tau_b + sides.c() * t.tau_c;
  return 2.0 * t.tau_a * heron_area(sides) / denom;
}

}  // namespace tricenter
