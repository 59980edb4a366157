#include "capgeo/gallery.hpp"
#include "capgeo/geometry.hpp"
#include "capgeo/raster.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace capgeo;

namespace {
const Tolerance tol{};
}

TEST_CASE("validate accepts the canonical arc disk") {
  const auto diag = validate(make_disk(1.0), tol);
  CHECK(diag.pass);
}

TEST_CASE("validate flags clockwise orientation") {
  Domain d;
  d.start = Vec2(0, 0);
  for (const Vec2 p : {Vec2(0, 1), Vec2(1, 1), Vec2(1, 0), Vec2(0, 0)}) {
    Segment s;
    s.kind = Segment::Kind::Line;
    s.end = p;
    d.segments.push_back(s);
  }
  const auto diag = validate(d, tol);
  CHECK_FALSE(diag.pass);
  CHECK(diag.violation.find("orientation") != std::string::npos);
}

TEST_CASE("validate flags the figure-eight crossing") {
  Domain d;
  d.start = Vec2(0, 0);
  for (const Vec2 p : {Vec2(1, 1), Vec2(1, 0), Vec2(0, 1), Vec2(0, 0)}) {
    Segment s;
    s.kind = Segment::Kind::Line;
    s.end = p;
    d.segments.push_back(s);
  }
  const auto diag = validate(d, tol);
  CHECK_FALSE(diag.pass);
  CHECK(diag.violation.find("simplicity") != std::string::npos);
  CHECK((diag.where - Vec2(0.5, 0.5)).norm() < 1e-9);
}

TEST_CASE("exact measures of the reference shapes") {
  CHECK(area(make_disk(1.0)) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(perimeter(make_disk(1.0)) == doctest::Approx(kTau).epsilon(1e-12));
  CHECK(area(make_square(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(perimeter(make_square(1.0)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(area(make_stadium(1.0, 2.0)) == doctest::Approx(kPi + 4.0).epsilon(1e-12));
  CHECK(perimeter(make_stadium(1.0, 2.0)) ==
        doctest::Approx(kTau + 4.0).epsilon(1e-12));
}

TEST_CASE("signed distance conventions") {
  const Domain disk = make_disk(1.0);
  CHECK(signed_distance(disk, Vec2(0, 0)) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(signed_distance(disk, Vec2(2, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  const Domain sq = make_square(1.0);
  CHECK(signed_distance(sq, Vec2(0.5, 0.5)) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("quotient of reference shapes") {
  CHECK(quotient(make_disk(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  // frozen value from the independent closed-form oracle (circular segments
  // plus fillet tangency geometry)
  const Domain tb = two_balls({1.0, 0.6, 1.55, 0.05});
  CHECK(quotient(tb) == doctest::Approx(2.102847279306881).epsilon(1e-12));
  // the asymptote 2(R+r)/(R^2+r^2) is approached once the junction angle and
  // the fillet shrink together
  const double R = 1.0, r = 0.6;
  const double th = 0.02;
  const Domain small_overlap =
      two_balls({R, r, two_ball_distance_for_angle(R, r, th), 0.1 * r * th * th});
  const double limit = 2.0 * (R + r) / (R * R + r * r);
  CHECK(std::abs(quotient(small_overlap) - limit) / limit < 0.01);
}

TEST_CASE("pinocchio quotient is 1/r0 for every tube length") {
  const double th = solve_pinocchio_angle(tol);
  const double q0 = 1.0 / std::sin(th);
  for (const double T : {0.0, 1.0}) {
    const Domain p = pinocchio({th, T});
    CHECK(quotient(p) == doctest::Approx(q0).epsilon(1e-9));
  }
}

TEST_CASE("shoelace area agrees with the raster oracle on random domains") {
  oracles::CorpusGenerator gen(20240811);
  for (int i = 0; i < 40; ++i) {
    const Domain d = gen.any_shape();
    REQUIRE(validate(d, tol).pass);
    const auto g = raster::rasterize(d, 512);
    const double n_pix = double(g.nx) * g.ny;
    const double rel = std::abs(area(d) - raster::area(g)) / area(d);
    CHECK(rel <= 2.0 / std::sqrt(n_pix));
  }
}

TEST_CASE("isoperimetric inequality on the corpus") {
  oracles::CorpusGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    const Domain d = gen.any_shape();
    CHECK(quotient(d) >= 2.0 * std::sqrt(kPi / area(d)) - 1e-9);
  }
  CHECK(quotient(make_disk(0.7)) ==
        doctest::Approx(2.0 * std::sqrt(kPi / area(make_disk(0.7)))).epsilon(1e-6));
}

TEST_CASE("signed distance is 1-Lipschitz along boundary chords") {
  oracles::CorpusGenerator gen(99);
  for (int i = 0; i < 50; ++i) {
    const Domain d = gen.any_shape();
    const auto pts = sample_boundary(edges_of(d), 64);
    for (size_t k = 0; k + 1 < pts.size(); k += 2) {
      const Vec2 a = pts[k] + Vec2(gen.uniform(-0.2, 0.2), gen.uniform(-0.2, 0.2));
      const Vec2 b = pts[k + 1];
      const double lhs = std::abs(signed_distance(d, a) - signed_distance(d, b));
      CHECK(lhs <= (a - b).norm() + 1e-9);
    }
  }
}

TEST_CASE("measures are rigid-motion invariant") {
  oracles::CorpusGenerator gen(4242);
  for (int i = 0; i < 60; ++i) {
    const Domain d = gen.any_shape();
    const Domain m = rotated(translated(d, Vec2(gen.uniform(-3, 3), gen.uniform(-3, 3))),
                             gen.uniform(0.0, kTau));
    CHECK(area(m) == doctest::Approx(area(d)).epsilon(1e-12));
    CHECK(perimeter(m) == doctest::Approx(perimeter(d)).epsilon(1e-12));
    CHECK(quotient(m) == doctest::Approx(quotient(d)).epsilon(1e-12));
  }
}

TEST_CASE("edge intersection basics") {
  const auto disk_edges = edges_of(make_disk(1.0));
  Edge chord;
  chord.kind = Segment::Kind::Line;
  chord.a = Vec2(-2.0, 0.5);
  chord.b = Vec2(2.0, 0.5);
  int hits = 0;
  for (const Edge& e : disk_edges) hits += int(intersect(e, chord).size());
  CHECK(hits == 2);
}
