#include "capgeo/convex.hpp"
#include "capgeo/gallery.hpp"
#include "capgeo/reach.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace capgeo;

namespace {
const Tolerance tol{};
}

TEST_CASE("rolling ball on the disk, including the critical radius") {
  const Domain disk = make_disk(1.0);
  CHECK(rolling_ball(disk, 1.0, tol));  // the disk rolls in itself
  CHECK_FALSE(rolling_ball(disk, 1.01, tol));
  CHECK(rolling_ball(disk, 0.25, tol));
  CHECK_THROWS_AS(rolling_ball(disk, 0.0, tol), std::invalid_argument);
}

TEST_CASE("rolling ball fails on corners") {
  CHECK_FALSE(rolling_ball(make_square(1.0), 0.1, tol));
}

TEST_CASE("strict rolling ball on the disk") {
  const Domain disk = make_disk(1.0);
  CHECK(strict_rolling_ball(disk, 0.5, tol));
  // at r = 1 every rolling position is the center with antipodal contacts
  const ReachReport rep = reach_report(disk, 1.0, tol);
  CHECK(rep.rolling);
  CHECK_FALSE(rep.strict);
  CHECK(rep.worst_antipodal_defect < tol.eps_geom);
}

TEST_CASE("tube set: weak holds, strict fails across the nose") {
  const double th = solve_pinocchio_angle(tol);
  const double r0 = std::sin(th);
  const Domain p1 = pinocchio({th, 1.0});
  const ReachReport rep = reach_report(p1, r0, tol);
  CHECK(rep.rolling);
  CHECK_FALSE(rep.strict);
  CHECK(rep.centers_checked > 100);
}

TEST_CASE("strict implies weak and weak is monotone in r") {
  oracles::CorpusGenerator gen(515);
  for (int i = 0; i < 25; ++i) {
    const Domain d = gen.any_shape();
    const double inr = inradius(d, tol);
    const double r1 = gen.uniform(0.1, 0.5) * inr;
    const double r2 = r1 + gen.uniform(0.05, 0.4) * inr;
    const ReachReport rep = reach_report(d, r2, tol);
    if (rep.strict && rep.rolling) CHECK(rolling_ball(d, r2, tol));
    if (rolling_ball(d, r2, tol)) CHECK(rolling_ball(d, r1, tol));
  }
}

TEST_CASE("rolling ball implies no neck") {
  oracles::CorpusGenerator gen(616);
  for (int i = 0; i < 25; ++i) {
    const Domain d = gen.any_shape();
    const double r = gen.uniform(0.1, 0.9) * inradius(d, tol);
    if (rolling_ball(d, r, tol)) CHECK(has_no_neck(d, r, tol));
  }
}

TEST_CASE("smooth convex domains roll up to the curvature radius") {
  oracles::CorpusGenerator gen(717);
  int checked = 0;
  for (int i = 0; i < 15; ++i) {
    const double rho = gen.uniform(0.1, 0.5);
    const Domain d = gen.rounded_convex(rho);
    REQUIRE(validate(d, tol).pass);
    const auto cp = curvature_profile(support_function(d, 2048));
    if (!cp.bounded()) continue;
    CHECK(cp.kappa_bar == doctest::Approx(1.0 / rho).epsilon(1e-3));
    const double r_max = 1.0 / cp.kappa_bar;
    for (const double frac : {0.3, 0.7, 0.95})
      CHECK(rolling_ball(d, frac * r_max, tol));
    ++checked;
  }
  CHECK(checked > 5);
}
