#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/test_support.hpp"
#include "tricenter/geometry.hpp"

using namespace tricenter;
using namespace tricenter::testing;

namespace {
const Triangle kRef({-1, 0}, {2, 0}, {0, 2});
}

TEST_CASE("side lengths of the reference triangle") {
  const SideLengths s = side_lengths(kRef);
  CHECK(s.a() == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
  CHECK(s.b() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(s.c() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(s.s() == doctest::Approx((std::sqrt(8.0) + std::sqrt(5.0) + 3.0) / 2).epsilon(1e-15));
}

TEST_CASE("equilateral side lengths at an arbitrary pose") {
  Rng rng(7);
  const Similarity g = random_similarity(rng, false);
  const Triangle t = g(Triangle({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}));
  const SideLengths s = side_lengths(t);
  CHECK(s.a() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.b() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.c() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.s() == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("triangle_from_sides canonical pose") {
  // Two-circle intersection by hand: x_A = (a^2 + c^2 - b^2) / 2a = 124/12,
  // y_A = sqrt(169 - x_A^2) = sqrt(560)/3.
  const Triangle t = triangle_from_sides(6, 9, 13);
  CHECK(t.b() == Point2{0, 0});
  CHECK(t.c() == Point2{6, 0});
  CHECK(t.a().x == doctest::Approx(124.0 / 12.0).epsilon(1e-15));
  CHECK(t.a().y == doctest::Approx(std::sqrt(560.0) / 3.0).epsilon(1e-15));
  CHECK(area(t) > 0);

  const Triangle eq = triangle_from_sides(1, 1, 1);
  CHECK(eq.a().y == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

  CHECK_THROWS_AS(triangle_from_sides(1, 1, 2), DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_sides(1, 1, 2 - 1e-14), DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_sides(1, 1, 3), DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_sides(-1, 1, 1), DegenerateTriangle);
}

TEST_CASE("degenerate vertex triples are rejected") {
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), DegenerateTriangle);
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {2, 1e-13}), DegenerateTriangle);
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {NAN, 1}), DegenerateTriangle);
  CHECK_NOTHROW(Triangle({0, 0}, {1, 0}, {2, 1e-6}));
}

TEST_CASE("area examples") {
  CHECK(area(triangle_from_sides(3, 4, 5)) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(area(kRef) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(area(triangle_from_sides(6, 9, 13)) == doctest::Approx(std::sqrt(560.0)).epsilon(1e-14));
  CHECK(heron_area(SideLengths(6, 9, 13)) == doctest::Approx(std::sqrt(560.0)).epsilon(1e-15));
}

TEST_CASE("inradius examples") {
  CHECK(inradius(triangle_from_sides(3, 4, 5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(inradius(triangle_from_sides(1, 1, 1)) == doctest::Approx(1 / (2 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(inradius(triangle_from_sides(6, 9, 13)) == doctest::Approx(std::sqrt(560.0) / 14).epsilon(1e-14));
}

TEST_CASE("classify_point") {
  CHECK(classify_point(kRef, kRef.centroid()) == PointLocation::Interior);
  CHECK(classify_point(kRef, kRef.a()) == PointLocation::Boundary);
  CHECK(classify_point(kRef, 0.5 * (kRef.b() + kRef.c())) == PointLocation::Boundary);
  // Reflect the centroid across BC.
  const Point2 g = kRef.centroid();
  const Point2 foot = kRef.b() + (dot(g - kRef.b(), kRef.c() - kRef.b()) / 8.0) * (kRef.c() - kRef.b());
  CHECK(classify_point(kRef, 2.0 * foot - g) == PointLocation::Exterior);
}

TEST_CASE("exact trilinears") {
  const Triangle t = triangle_from_sides(6, 9, 13);
  const Trilinears in = cartesian_to_trilinear(t, incenter(t));
  const double rho = inradius(t);
  CHECK(in.tau_a == doctest::Approx(rho).epsilon(1e-12));
  CHECK(in.tau_b == doctest::Approx(rho).epsilon(1e-12));
  CHECK(in.tau_c == doctest::Approx(rho).epsilon(1e-12));

  const Trilinears at_a = cartesian_to_trilinear(t, t.a());
  CHECK(std::abs(at_a.tau_b) < 1e-13);
  CHECK(std::abs(at_a.tau_c) < 1e-13);

  // Below side BC (the x-axis in the canonical pose) is beyond BC.
  CHECK(cartesian_to_trilinear(t, {3, -1}).tau_a < 0);

  const SideLengths s = side_lengths(t);
  const Trilinears q = cartesian_to_trilinear(t, {2, 1});
  CHECK(s.a() * q.tau_a + s.b() * q.tau_b + s.c() * q.tau_c == doctest::Approx(2 * area(t)).epsilon(1e-13));
}

TEST_CASE("trilinear_to_cartesian") {
  const Triangle t = triangle_from_sides(4, 5, 6);
  const SideLengths s = side_lengths(t);
  const Point2 i = trilinear_to_cartesian(t, {1, 1, 1});
  const Point2 i_ref = (1.0 / (s.a() + s.b() + s.c())) * (s.a() * t.a() + s.b() * t.b() + s.c() * t.c());
  CHECK(distance(i, i_ref) < 1e-14);

  const Point2 g = trilinear_to_cartesian(t, {1 / s.a(), 1 / s.b(), 1 / s.c()});
  CHECK(distance(g, t.centroid()) < 1e-14);

  // a*ta + b*tb + c*tc = 0: the line at infinity.
  CHECK_THROWS_AS(trilinear_to_cartesian(t, {1 / s.a(), -1 / s.b(), 0}), DegenerateTrilinears);
}

TEST_CASE("cevian angles") {
  const Triangle eq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  const CevianAngles e = cevian_angles(eq, eq.centroid());
  for (double x : {e.alpha1, e.alpha2, e.beta1, e.beta2, e.gamma1, e.gamma2}) {
    CHECK(x == doctest::Approx(std::numbers::pi / 6).epsilon(1e-14));
  }

  const Triangle t = triangle_from_sides(4, 5, 6);
  const TriangleAngles ang = angles(t);
  const CevianAngles i = cevian_angles(t, incenter(t));
  CHECK(i.alpha1 == doctest::Approx(ang.alpha / 2).epsilon(1e-13));
  CHECK(i.alpha2 == doctest::Approx(ang.alpha / 2).epsilon(1e-13));
  CHECK(i.beta1 == doctest::Approx(ang.beta / 2).epsilon(1e-13));
  CHECK(i.gamma2 == doctest::Approx(ang.gamma / 2).epsilon(1e-13));

  CHECK_THROWS_AS(cevian_angles(t, t.a()), NotInterior);
  CHECK_THROWS_AS(cevian_angles(t, {-5, -5}), NotInterior);
}

TEST_CASE("vertex distances") {
  const Triangle t = triangle_from_sides(4, 5, 6);  // acute
  const Point2 o = circumcenter(t);
  const VertexDistances r = vertex_distances(t, o);
  const SideLengths s = side_lengths(t);
  const double circumradius = s.a() * s.b() * s.c() / (4 * area(t));
  CHECK(r.r_a == doctest::Approx(circumradius).epsilon(1e-13));
  CHECK(r.r_b == doctest::Approx(circumradius).epsilon(1e-13));
  CHECK(r.r_c == doctest::Approx(circumradius).epsilon(1e-13));

  const VertexDistances at_a = vertex_distances(t, t.a());
  CHECK(at_a.r_a == 0.0);
  CHECK(at_a.r_b == doctest::Approx(s.c()).epsilon(1e-15));
  CHECK(at_a.r_c == doctest::Approx(s.b()).epsilon(1e-15));

  const Triangle eq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  const VertexDistances g = vertex_distances(eq, eq.centroid());
  for (double x : {g.r_a, g.r_b, g.r_c}) CHECK(x == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("orientation normalization for every vertex permutation") {
  const std::array<Point2, 3> v{Point2{0.1, 0.2}, Point2{3, -0.5}, Point2{1.2, 2.7}};
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    const Triangle t(v[p[0]], v[p[1]], v[p[2]]);
    CHECK(area(t) > 0);
    const SideLengths s = side_lengths(t);
    CHECK(s.a() == doctest::Approx(distance(t.b(), t.c())).epsilon(1e-15));
    CHECK(s.b() == doctest::Approx(distance(t.c(), t.a())).epsilon(1e-15));
    CHECK(s.c() == doctest::Approx(distance(t.a(), t.b())).epsilon(1e-15));
    CHECK(t.a() == v[p[0]]);
  }
}

TEST_CASE("property: Heron agrees with the cross product on 1000 triangles") {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_triangle(rng, 1.0);
    CHECK(rel_err(heron_area(side_lengths(t)), area(t)) < 1e-12);
  }
}

TEST_CASE("property: trilinear round trip on 1000 interior points") {
  Rng rng(102);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_triangle(rng, 1.0);
    const Point2 p = random_interior_point(rng, t, 1e-3);
    const Point2 back = trilinear_to_cartesian(t, cartesian_to_trilinear(t, p));
    CHECK(distance(back, p) <= 1e-10 * std::max(1.0, norm(p)));
  }
}

TEST_CASE("property: cevian pair sums reproduce the vertex angles") {
  Rng rng(103);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = random_triangle(rng, 1.0);
    const Point2 p = random_interior_point(rng, t, 1e-3);
    const CevianAngles c = cevian_angles(t, p);
    const TriangleAngles a = angles(t);
    CHECK(std::abs(c.alpha1 + c.alpha2 - a.alpha) < 1e-12);
    CHECK(std::abs(c.beta1 + c.beta2 - a.beta) < 1e-12);
    CHECK(std::abs(c.gamma1 + c.gamma2 - a.gamma) < 1e-12);
    CHECK(std::abs(a.alpha + a.beta + a.gamma - std::numbers::pi) < 1e-12);
  }
}

TEST_CASE("property: trilinear ratios are similarity invariant") {
  Rng rng(104);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const Point2 p = random_interior_point(rng, t);
    const Similarity g = random_similarity(rng, true);
    const Trilinears before = cartesian_to_trilinear(t, p);
    const Trilinears after = cartesian_to_trilinear(g(t), g(p));
    CHECK(rel_err(after.tau_b / after.tau_a, before.tau_b / before.tau_a) < 1e-10);
    CHECK(rel_err(after.tau_c / after.tau_a, before.tau_c / before.tau_a) < 1e-10);
  }
}

TEST_CASE("classical centers") {
  const Triangle t = triangle_from_sides(4, 5, 6);
  const Point2 h = orthocenter(t);
  // AH is perpendicular to BC, BH to CA.
  CHECK(std::abs(dot(h - t.a(), t.c() - t.b())) < 1e-12);
  CHECK(std::abs(dot(h - t.b(), t.a() - t.c())) < 1e-12);
  const Point2 i = incenter(t);
  const Trilinears d = cartesian_to_trilinear(t, i);
  CHECK(d.tau_a == doctest::Approx(d.tau_b).epsilon(1e-13));
  CHECK(distance_to_boundary(t, i) == doctest::Approx(inradius(t)).epsilon(1e-13));
}
