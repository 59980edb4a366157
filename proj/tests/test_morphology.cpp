#include "capgeo/gallery.hpp"
#include "capgeo/morphology.hpp"
#include "capgeo/raster.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace capgeo;

namespace {
const Tolerance tol{};
}

TEST_CASE("erode: disk, square, dumbbell") {
  const Region rd = erode(make_disk(1.0), 0.3, tol);
  REQUIRE(rd.components.size() == 1);
  CHECK(area(rd) == doctest::Approx(0.49 * kPi).epsilon(1e-10));

  const Region rs = erode(make_square(1.0), 0.25, tol);
  REQUIRE(rs.components.size() == 1);
  CHECK(area(rs) == doctest::Approx(0.25).epsilon(1e-10));

  const Region rb = erode(make_dumbbell(1.0, 4.0, 0.1), 0.15, tol);
  CHECK(rb.components.size() == 2);
}

TEST_CASE("erode edge cases") {
  const Domain d = make_disk(1.0);
  CHECK(erode(d, 0.0, tol).components.size() == 1);
  CHECK(erode(d, 1.5, tol).empty());
  CHECK_THROWS_AS(erode(d, -0.1, tol), std::invalid_argument);
  // radii near machine scale stay well behaved
  oracles::CorpusGenerator gen(917);
  for (int i = 0; i < 15; ++i) {
    const Domain s = gen.any_shape();
    for (const double r : {1e-9, 1e-6, 1e-4}) {
      const Region reg = erode(s, r, tol);
      CHECK(std::abs(area(reg) - area(s)) < perimeter(s) * r + 100.0 * tol.eps_area);
    }
  }
}

TEST_CASE("dilate: disks, rounded square, disjoint union") {
  const Region one = dilate(Region{{make_disk(0.5)}}, 0.5, tol);
  REQUIRE(one.components.size() == 1);
  CHECK(area(one) == doctest::Approx(kPi).epsilon(1e-10));

  const Region sq = dilate(Region{{make_square(0.5)}}, 0.25, tol);
  REQUIRE(sq.components.size() == 1);
  const double steiner = 0.25 + 4.0 * (0.5 * 0.25) + kPi * 0.25 * 0.25;
  CHECK(area(sq) == doctest::Approx(steiner).epsilon(1e-10));

  // gap 0.6 > 2 * 0.2: the dilations stay apart
  Region two{{make_disk(0.2), translated(make_disk(0.2), Vec2(1.0, 0.0))}};
  CHECK(dilate(two, 0.2, tol).components.size() == 2);
  // overlapping dilations merge
  Region close{{make_disk(0.3), translated(make_disk(0.3), Vec2(0.9, 0.0))}};
  CHECK(dilate(close, 0.2, tol).components.size() == 1);
}

TEST_CASE("opening: disk unchanged, square fillets, tube set fixed point") {
  const Region od = opening(make_disk(1.0), 0.5, tol);
  REQUIRE(od.components.size() == 1);
  CHECK(area(od) == doctest::Approx(kPi).epsilon(1e-10));

  const Region os = opening(make_square(1.0), 0.2, tol);
  REQUIRE(os.components.size() == 1);
  CHECK(area(os) == doctest::Approx(1.0 - (4.0 - kPi) * 0.04).epsilon(1e-9));

  const double th = solve_pinocchio_angle(tol);
  const Domain p1 = pinocchio({th, 1.0});
  const double r0 = std::sin(th);
  const Region op = opening(p1, r0, tol);
  CHECK(std::abs(area(op) - area(p1)) < tol.eps_area);
  const auto g = raster::rasterize(p1, 1024);
  CHECK(std::abs(area(op) - raster::area(g)) <=
        oracles::raster_area_tol(g, tol.eps_area));
}

TEST_CASE("has_no_neck on the reference shapes") {
  CHECK(has_no_neck(make_disk(1.0), 0.5, tol));
  CHECK(has_no_neck(make_disk(1.0), 0.99, tol));
  CHECK_FALSE(has_no_neck(make_dumbbell(1.0, 4.0, 0.1), 0.15, tol));
  CHECK(has_no_neck(make_stadium(1.0, 2.0), 0.69, tol));
}

TEST_CASE("inradius of reference shapes") {
  CHECK(inradius(make_disk(1.0), tol) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(inradius(make_square(1.0), tol) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(inradius(make_stadium(1.0, 2.0), tol) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("erosion area is monotone in the radius") {
  oracles::CorpusGenerator gen(101);
  for (int i = 0; i < 50; ++i) {
    const Domain d = gen.any_shape();
    const double inr = inradius(d, tol);
    double prev = area(d);
    for (int k = 1; k <= 4; ++k) {
      const double a = area(erode(d, inr * 0.22 * k, tol));
      CHECK(a <= prev + tol.eps_area);
      prev = a;
    }
  }
}

TEST_CASE("opening is anti-extensive and idempotent") {
  oracles::CorpusGenerator gen(202);
  int idempotence_checked = 0;
  for (int i = 0; i < 50; ++i) {
    const Domain d = gen.any_shape();
    const double r = gen.uniform(0.05, 0.6) * inradius(d, tol);
    const Region open = opening(d, r, tol);
    // anti-extensive: the opening never grows the set
    CHECK(area(open) <= area(d) + tol.eps_area);
    // raster containment probe: no opening pixel may fall outside d
    if (!open.empty()) {
      for (const Domain& comp : open.components)
        for (const Vec2& q : sample_boundary(edges_of(comp), 64))
          CHECK(signed_distance(d, q) <= 10.0 * tol.eps_geom);
    }
    if (open.components.size() == 1) {
      const Region re = opening(open.components.front(), r, tol);
      CHECK(std::abs(area(re) - area(open)) < 10.0 * tol.eps_area);
      ++idempotence_checked;
    }
  }
  CHECK(idempotence_checked > 10);
}

TEST_CASE("erosion semigroup on convex domains") {
  oracles::CorpusGenerator gen(303);
  for (int i = 0; i < 40; ++i) {
    const Domain d = gen.convex_blob();
    REQUIRE(validate(d, tol).pass);
    const double inr = inradius(d, tol);
    const double a = gen.uniform(0.1, 0.4) * inr;
    const double b = gen.uniform(0.1, 0.4) * inr;
    const Region two_step_outer = erode(d, a, tol);
    if (two_step_outer.components.size() != 1) continue;
    const Region two_step = erode(two_step_outer.components.front(), b, tol);
    const Region one_step = erode(d, a + b, tol);
    CHECK(std::abs(area(two_step) - area(one_step)) < 10.0 * tol.eps_area);
  }
}

TEST_CASE("vector erosion area matches the raster distance transform") {
  oracles::CorpusGenerator gen(404);
  for (int i = 0; i < 40; ++i) {
    const Domain d = gen.any_shape();
    const auto g = raster::rasterize(d, 512);
    const double inr = inradius(d, tol);
    for (const double frac : {0.2, 0.5, 0.8}) {
      const double r = frac * inr;
      const double vec_area = area(erode(d, r, tol));
      const double ras_area = raster::eroded_area(g, r);
      CHECK(std::abs(vec_area - ras_area) <= oracles::raster_area_tol(g, tol.eps_area));
    }
  }
}

TEST_CASE("erosion and opening components are valid domains") {
  oracles::CorpusGenerator gen(505);
  for (int i = 0; i < 60; ++i) {
    const Domain d = gen.any_shape();
    const double inr = inradius(d, tol);
    const double r = gen.uniform(0.05, 0.95) * inr;
    for (const Region& reg : {erode(d, r, tol), opening(d, r, tol)}) {
      for (const Domain& comp : reg.components) {
        const auto diag = validate(comp, tol);
        CHECK_MESSAGE(diag.pass, diag.violation);
      }
    }
  }
}

TEST_CASE("component counts match the raster oracle on necked shapes") {
  const Domain db = make_dumbbell(1.0, 4.0, 0.1);
  const auto g = raster::rasterize(db, 768);
  for (const double r : {0.05, 0.15, 0.5}) {
    const Region reg = erode(db, r, tol);
    CHECK(int(reg.components.size()) == raster::eroded_components(g, r));
  }
}
