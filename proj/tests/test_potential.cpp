#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/test_support.hpp"
#include "tricenter/electro_center.hpp"
#include "tricenter/potential.hpp"
#include "tricenter/quadrature.hpp"

using namespace tricenter;
using namespace tricenter::testing;

namespace {
const Triangle kRef({-1, 0}, {2, 0}, {0, 2});
const Triangle kEq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
// At the centroid of the unit equilateral triangle each apex sub-triangle
// contributes d * 2 log cot(pi/12) with d = 1/(2 sqrt 3), and
// cot(pi/12) = 2 + sqrt 3.
const double kEqCentroidV = std::sqrt(3.0) * std::log(2.0 + std::sqrt(3.0));

Point2 fd_gradient(const Triangle& t, Point2 p, double h) {
  const double vx = (potential_closed(t, p + Point2{h, 0}) - potential_closed(t, p - Point2{h, 0})) / (2 * h);
  const double vy = (potential_closed(t, p + Point2{0, h}) - potential_closed(t, p - Point2{0, h})) / (2 * h);
  return {vx, vy};
}
}  // namespace

TEST_CASE("Gauss-Kronrod integrates smooth functions") {
  const auto r = quad::integrate<double>([](double x) { return std::exp(x); }, 0.0, 1.0, {});
  CHECK(rel_err(r.value, std::numbers::e - 1) < 1e-14);
  const auto s = quad::integrate<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0, {});
  CHECK(rel_err(s.value, 2.0 / 3.0) < 1e-10);
  const auto v = quad::integrate<std::array<double, 2>>(
      [](double x) { return std::array<double, 2>{std::cos(x), std::sin(x)}; }, 0.0, std::numbers::pi / 2, {});
  CHECK(rel_err(v.value[0], 1.0) < 1e-14);
  CHECK(rel_err(v.value[1], 1.0) < 1e-14);
}

TEST_CASE("Gauss-Kronrod reports unreachable tolerance") {
  quad::Tolerance tol;
  tol.max_depth = 2;
  tol.rel = 1e-15;
  CHECK_THROWS_AS(quad::integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tol),
                  ToleranceNotReached);
  try {
    quad::integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tol);
  } catch (const ToleranceNotReached& e) {
    CHECK(e.achieved() > 0);
    CHECK(e.kind() == ErrorKind::ToleranceNotReached);
  }
}

TEST_CASE("Gauss-Legendre rule") {
  const quad::GaussRule g = quad::gauss_legendre(10);
  double w = 0, x4 = 0;
  for (int i = 0; i < 10; ++i) {
    w += g.weights[i];
    x4 += g.weights[i] * std::pow(g.nodes[i], 18);
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x4 == doctest::Approx(2.0 / 19).epsilon(1e-14));
}

TEST_CASE("polar kernel on a disk gives 2 pi R") {
  for (double r : {0.5, 1.0, 3.0}) {
    CHECK(rel_err(polar_potential([r](double) { return r; }), 2 * std::numbers::pi * r) < 1e-14);
  }
  // Off-center point in the unit disk: ray length is the chord to the circle.
  const double c = 0.4;
  auto ray = [c](double phi) { return -c * std::cos(phi) + std::sqrt(1 - c * c * std::sin(phi) * std::sin(phi)); };
  // Integral of 1/|PQ| over the unit disk from distance c: 4 E(c), E the
  // complete elliptic integral of the second kind.
  CHECK(rel_err(polar_potential(ray), 4 * std::comp_ellint_2(c)) < 1e-10);
}

TEST_CASE("equilateral centroid against an independent oracle") {
  const Point2 g = kEq.centroid();
  CHECK(rel_err(duffy_potential(kEq, g), kEqCentroidV) < 1e-13);
  CHECK(rel_err(potential_closed(kEq, g), kEqCentroidV) < 1e-13);
  CHECK(rel_err(potential_quadrature(kEq, g), kEqCentroidV) < 1e-10);
}

TEST_CASE("closed form matches the Duffy oracle inside and outside") {
  Rng rng(201);
  for (int i = 0; i < 50; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 in = random_interior_point(rng, t, 0.05);
    CHECK(rel_err(potential_closed(t, in), duffy_potential(t, in, 400)) < 1e-8);
    const Point2 out = t.centroid() + Point2{rng.uniform(2, 5), rng.uniform(-3, 3)};
    CHECK(rel_err(potential_closed(t, out), duffy_potential(t, out)) < 1e-12);
  }
}

TEST_CASE("closed form and quadrature agree") {
  Rng rng(202);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 p = random_interior_point(rng, t, 1e-3);
    CHECK(rel_err(potential_closed(t, p), potential_quadrature(t, p)) < 1e-9);
  }
  CHECK(rel_err(potential_closed(kRef, {3, 3}), potential_quadrature(kRef, {3, 3})) < 1e-9);
}

TEST_CASE("boundary handling") {
  const double at_vertex = potential_quadrature(kRef, kRef.a());
  CHECK(std::isfinite(at_vertex));
  CHECK(at_vertex > 0);
  const Point2 mid = 0.5 * (kRef.b() + kRef.c());
  CHECK(std::isfinite(potential_quadrature(kRef, mid)));
  // Continuity across the boundary: just inside, on, and just outside.
  const Point2 n{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};  // outward normal of BC
  const double on = potential_quadrature(kRef, mid);
  CHECK(std::abs(potential_quadrature(kRef, mid - 1e-7 * n) - on) < 1e-5);
  CHECK(std::abs(potential_quadrature(kRef, mid + 1e-7 * n) - on) < 1e-5);

  CHECK_THROWS_AS(potential_closed(kRef, mid), TooCloseToBoundary);
  CHECK_THROWS_AS(potential_closed(kRef, kRef.a()), TooCloseToBoundary);
  CHECK_THROWS_AS(field_closed(kRef, mid), TooCloseToBoundary);
  CHECK_NOTHROW(potential_closed(kRef, mid - 1e-6 * n));

  QuadratureConfig bad;
  bad.target_rel_tol = 0.5;
  CHECK_THROWS_AS(potential_quadrature(kRef, mid, bad), InvalidArgument);
}

TEST_CASE("far field approaches area over distance") {
  const Point2 g = kRef.centroid();
  for (double d : {1e3, 1e5, 1e7}) {
    const Point2 p = g + Point2{0.6 * d, 0.8 * d};
    CHECK(rel_err(potential_closed(kRef, p) * d, area(kRef)) < 1.0 / d);
  }
}

TEST_CASE("reflection symmetry for an isosceles triangle") {
  const Triangle iso({0, 3}, {-1, 0}, {1, 0});
  for (double y : {-5.0, -0.3, 0.7, 1.9, 8.0}) {
    const Point2 p{0.37, y};
    const Point2 q{-0.37, y};
    if (classify_point(iso, p) == PointLocation::Boundary) continue;
    CHECK(rel_err(potential_closed(iso, p), potential_closed(iso, q)) < 1e-14);
  }
}

TEST_CASE("property: positivity and far-field bound") {
  Rng rng(203);
  for (int i = 0; i < 20; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 p0 = t.centroid();
    const double r = std::max({distance(p0, t.a()), distance(p0, t.b()), distance(p0, t.c())});
    for (int k = 0; k < 20; ++k) {
      const double dist = 2 * r * (1.05 + k);  // |P P0| > 2R
      const double th = rng.uniform(0, 2 * std::numbers::pi);
      const Point2 p = p0 + dist * Point2{std::cos(th), std::sin(th)};
      const double v = potential_closed(t, p);
      CHECK(v > 0);
      CHECK(v <= 4 * r * std::asin(r / (dist - r)));
    }
    CHECK(potential_closed(t, random_interior_point(rng, t)) > 0);
  }
}

TEST_CASE("property: rigid motions and scaling") {
  Rng rng(204);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 p = random_interior_point(rng, t);
    const Similarity rigid = random_similarity(rng, false);
    CHECK(rel_err(potential_closed(rigid(t), rigid(p)), potential_closed(t, p)) < 1e-12);
    const double s = std::exp(rng.uniform(-3, 3));
    const Similarity scale{0.0, s, {0, 0}};
    CHECK(rel_err(potential_closed(scale(t), scale(p)), s * potential_closed(t, p)) < 1e-12);
  }
}

TEST_CASE("field at symmetric and stationary points") {
  CHECK(norm(field_closed(kEq, kEq.centroid())) < 1e-14);
  const ElectrostaticCenter c = electrostatic_center(kRef);
  CHECK(norm(field_closed(kRef, c.point)) < 1e-8);
}

TEST_CASE("property: field is minus the gradient") {
  Rng rng(205);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 p = random_interior_point(rng, t, 0.05);
    const Point2 g = fd_gradient(t, p, 1e-6 * t.diameter());
    const FieldVector e = field_closed(t, p);
    const double scale = std::max(norm(g), potential_closed(t, p) / t.diameter());
    CHECK(std::hypot(e.ex + g.x, e.ey + g.y) < 1e-5 * scale);
  }
  // Outside as well.
  const Point2 p{3, 2};
  const Point2 g = fd_gradient(kRef, p, 1e-6);
  const FieldVector e = field_closed(kRef, p);
  CHECK(std::hypot(e.ex + g.x, e.ey + g.y) < 1e-5 * norm(g));
}

TEST_CASE("brute-force maximizer") {
  const Point2 eq = brute_force_max(kEq, 32, 0);
  CHECK(distance(eq, kEq.centroid()) < 1.0 / 32);
  CHECK(classify_point(kEq, eq) == PointLocation::Interior);

  const Point2 ref = brute_force_max(kRef, 64, 6);
  CHECK(distance(ref, {0.272557906914867702, 0.704148189723077020}) < 1e-4);
  CHECK(classify_point(kRef, ref) == PointLocation::Interior);
  CHECK(ref == brute_force_max(kRef, 64, 6));  // deterministic

  CHECK_THROWS_AS(brute_force_max(kRef, 15, 0), InvalidArgument);
}

TEST_CASE("brute-force maximizer on a thin triangle stays interior") {
  const Triangle thin({0, 0}, {10, 0}, {5, 0.2});
  const Point2 m = brute_force_max(thin, 32, 4);
  CHECK(classify_point(thin, m) == PointLocation::Interior);
  CHECK(distance(m, electrostatic_center(thin).point) < 1e-3 * thin.diameter());
}

TEST_CASE("quadrature reports an unreachable tolerance") {
  QuadratureConfig cfg;
  cfg.target_rel_tol = 1e-15;
  cfg.max_subdivisions = 1;
  try {
    potential_quadrature(kRef, {0.3, 0.5}, cfg);
    FAIL("expected ToleranceNotReached");
  } catch (const ToleranceNotReached& e) {
    CHECK(e.achieved() > 0);
  }
  cfg.target_rel_tol = 0.0;
  CHECK_THROWS_AS(potential_quadrature(kRef, {0.3, 0.5}, cfg), InvalidArgument);
}
