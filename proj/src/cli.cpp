#include "capgeo/cli.hpp"

#include "capgeo/cheeger.hpp"
#include "capgeo/convex.hpp"
#include "capgeo/gallery.hpp"
#include "capgeo/io.hpp"
#include "capgeo/raster.hpp"
#include "capgeo/reach.hpp"
#include "capgeo/svg.hpp"
#include "capgeo/verdict.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace capgeo::cli {

namespace {

using io::json;
using io::round12;

json num_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

struct CommonOpts {
  std::string input;
  double gamma = 0.0;
  double eps_geom = 1e-7;
  double eps_area = 1e-8;
  double eps_root = 1e-9;
  int grid = 1024;
  int samples = 4096;
  std::string svg_path;

  Tolerance tol() const {
    Tolerance t;
    t.eps_geom = eps_geom;
    t.eps_area = eps_area;
    t.eps_root = eps_root;
    t.n_samples = samples;
    return t;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_gamma) {
  cmd->add_option("input", o.input, "Domain JSON file, or - for stdin")->required();
  if (with_gamma)
    cmd->add_option("--gamma", o.gamma, "contact angle in [0, pi/2]")
        ->check(CLI::Range(0.0, 0.5 * kPi));
  cmd->add_option("--eps-geom", o.eps_geom, "point-coincidence tolerance");
  cmd->add_option("--eps-area", o.eps_area, "area tolerance for set equality");
  cmd->add_option("--eps-root", o.eps_root, "root-finding tolerance");
  cmd->add_option("--grid", o.grid, "raster cross-check resolution")
      ->check(CLI::Range(32, 16384));
  cmd->add_option("--samples", o.samples, "boundary sampling density")
      ->check(CLI::Range(64, 1 << 20));
  cmd->add_option("--svg", o.svg_path, "write an SVG figure to this path");
}

Domain load_domain(const CommonOpts& o) {
  const std::string text = io::read_input(o.input);
  const auto j = json::parse(text);
  Domain d = io::parse_domain(j);
  require_valid(d, o.tol());
  return d;
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

json verdict_json(const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  json path = json::array();
  for (const Criterion c : v.criterion_path) path.push_back(to_string(c));
  j["criterion_path"] = std::move(path);
  j["gamma"] = round12(v.gamma);
  j["r_phys"] = round12(v.r_phys);
  if (v.witness) {
    json w;
    w["quotient_subset"] = round12(v.witness->quotient_subset);
    w["quotient_domain"] = round12(v.witness->quotient_domain);
    w["rho"] = round12(v.witness->rho);
    w["subset"] = io::domain_json(v.witness->subset);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = v.notes;
  return j;
}

// A representative interior point for the rolling-disk overlay.
Vec2 deep_point(const Domain& d, double r, const Tolerance& tol) {
  const Region reg = erode(d, r, tol);
  const std::vector<Edge> es =
      reg.empty() ? edges_of(d) : edges_of(reg.components.front());
  Vec2 acc(0.0, 0.0);
  const auto pts = sample_boundary(es, 256);
  if (pts.empty()) return d.start;
  for (const Vec2& p : pts) acc += p;
  return acc / double(pts.size());
}

int cmd_analyze(const CommonOpts& o) {
  const Domain d = load_domain(o);
  const Tolerance tol = o.tol();
  const Verdict v = decide(d, o.gamma, tol);
  print(verdict_json(v));
  if (!o.svg_path.empty()) {
    svg::Scene scene;
    scene.domain = &d;
    const double rr = std::min(v.r_phys, 0.95 * inradius(d, tol));
    const auto center = deep_point(d, rr, tol);
    scene.rolling_disk = {{center, v.r_phys}};
    if (v.witness) scene.witness = &v.witness->subset;
    svg::write_file(o.svg_path, scene);
  }
  switch (v.status) {
    case Status::Exists: return 0;
    case Status::Nonexistence: return 10;
    case Status::Unresolved: return 20;
  }
  return 20;
}

int cmd_cheeger(const CommonOpts& o) {
  const Domain d = load_domain(o);
  const Tolerance tol = o.tol();
  const CheegerResult res = classify(d, tol);
  json j;
  j["r_star"] = round12(res.r_star);
  j["h"] = round12(res.h);
  j["r_phys"] = round12(res.r_phys);
  j["no_neck_valid"] = res.no_neck_valid;
  j["self_cheeger"] = res.self_cheeger;
  j["minimal"] = res.minimal;
  j["cheeger_set"] = io::region_json(res.cheeger_set);
  j["notes"] = res.notes;
  print(j);
  if (!o.svg_path.empty()) {
    svg::Scene scene;
    scene.domain = &d;
    scene.cheeger = &res.cheeger_set;
    svg::write_file(o.svg_path, scene);
  }
  return 0;
}

int cmd_reach(const CommonOpts& o, double radius) {
  const Domain d = load_domain(o);
  const ReachReport rep = reach_report(d, radius, o.tol());
  json j;
  j["rolling"] = rep.rolling;
  j["strict"] = rep.rolling && rep.strict;
  j["worst_antipodal_defect"] = num_or_null(rep.worst_antipodal_defect);
  j["centers_checked"] = rep.centers_checked;
  print(j);
  return 0;
}

int cmd_erode(const CommonOpts& o, double radius) {
  const Domain d = load_domain(o);
  const Tolerance tol = o.tol();
  const Region reg = erode(d, radius, tol);
  const auto grid = raster::rasterize(d, o.grid);
  const double raster_area = raster::eroded_area(grid, radius);
  std::cerr << "raster check: vector_area=" << area(reg)
            << " raster_area=" << raster_area
            << " components(vector)=" << reg.components.size()
            << " components(raster)=" << raster::eroded_components(grid, radius)
            << "\n";
  print(io::region_json(reg));
  if (!o.svg_path.empty()) {
    svg::Scene scene;
    scene.domain = &d;
    scene.eroded = &reg;
    svg::write_file(o.svg_path, scene);
  }
  return 0;
}

int cmd_convex(const CommonOpts& o) {
  const Domain d = load_domain(o);
  const Tolerance tol = o.tol();
  const bool conv = is_convex(d, tol);
  json j;
  j["convex"] = conv;
  if (conv) {
    const auto cp = curvature_profile(support_function(d, tol.n_samples));
    j["kappa_bar"] = num_or_null(cp.kappa_bar);
    j["quotient"] = round12(quotient(d));
    j["giusti"] = giusti_criterion(d, tol);
  } else {
    j["kappa_bar"] = nullptr;
    j["quotient"] = round12(quotient(d));
    j["giusti"] = nullptr;
  }
  print(j);
  return 0;
}

struct GalleryOpts {
  std::string family;
  std::string out;
  double R = 1.0, r = 0.5, d = 1.4, fillet = 0.0;
  double a = 0.0, b = 1.0;  // a = 0: per-family default (square 1, ellipse 2)
  double L = 2.0, w = 0.1, dist = 4.0;
  double theta = 0.0, T = 0.0;
  int n = 256;
};

json gallery_defaults() {
  json j;
  j["families"] = json::array({
      json{{"name", "disk"}, {"params", {{"R", 1.0}}}},
      json{{"name", "square"}, {"params", {{"a", 1.0}}}},
      json{{"name", "stadium"}, {"params", {{"R", 1.0}, {"L", 2.0}}}},
      json{{"name", "ellipse"}, {"params", {{"a", 2.0}, {"b", 1.0}, {"n", 256}}}},
      json{{"name", "dumbbell"}, {"params", {{"R", 1.0}, {"dist", 4.0}, {"w", 0.1}}}},
      json{{"name", "two_balls"},
           {"params", {{"R", 1.0}, {"r", 0.5}, {"d", 1.4}, {"fillet", 0.025}}}},
      json{{"name", "pinocchio"}, {"params", {{"theta", 0.0}, {"T", 1.0}}}},
  });
  j["notes"] = json::array(
      {"pinocchio theta 0 means the self-balanced angle",
       "two_balls fillet 0 means the default 0.05*r"});
  return j;
}

int cmd_gallery(const GalleryOpts& g) {
  if (g.family == "list") {
    print(gallery_defaults());
    return 0;
  }
  Domain d;
  if (g.family == "disk") {
    d = make_disk(g.R);
  } else if (g.family == "square") {
    d = make_square(g.a > 0.0 ? g.a : 1.0);
  } else if (g.family == "stadium") {
    d = make_stadium(g.R, g.L);
  } else if (g.family == "ellipse") {
    d = make_ellipse(g.a > 0.0 ? g.a : 2.0, g.b, g.n);
  } else if (g.family == "dumbbell") {
    d = make_dumbbell(g.R, g.dist, g.w);
  } else if (g.family == "two_balls") {
    d = two_balls({g.R, g.r, g.d, g.fillet});
  } else if (g.family == "pinocchio") {
    PinocchioParams p;
    p.theta = g.theta > 0.0 ? g.theta : solve_pinocchio_angle(Tolerance{});
    p.T = g.T;
    d = pinocchio(p);
  } else {
    throw std::invalid_argument("unknown gallery family: " + g.family);
  }
  const json j = io::domain_json(d);
  if (g.out.empty()) {
    print(j);
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write: " + g.out);
    f << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"capgeo: existence of capillary surfaces in cylindrical tubes "
               "from the geometry of the cross-section"};
  app.require_subcommand(1);

  CommonOpts an, ch, re, er, co;
  double reach_radius = 0.0, erode_radius = 0.0;
  GalleryOpts gal;

  auto* analyze = app.add_subcommand("analyze", "decide existence at a contact angle");
  add_common(analyze, an, true);

  auto* cheeger = app.add_subcommand("cheeger", "inner Cheeger radius, constant, set");
  add_common(cheeger, ch, false);

  auto* reach = app.add_subcommand("reach", "interior rolling ball tests");
  add_common(reach, re, false);
  reach->add_option("--radius", reach_radius, "rolling radius")->required();

  auto* erode_cmd = app.add_subcommand("erode", "inner parallel set at a distance");
  add_common(erode_cmd, er, false);
  erode_cmd->add_option("--radius", erode_radius, "erosion distance")->required();

  auto* convex = app.add_subcommand("convex", "support function and curvature bound");
  add_common(convex, co, false);

  auto* gallery = app.add_subcommand("gallery", "generate example cross-sections");
  gallery->add_option("family", gal.family,
                      "disk|square|stadium|ellipse|dumbbell|two_balls|pinocchio|list")
      ->required();
  gallery->add_option("--out", gal.out, "output file (default: stdout)");
  gallery->add_option("--R", gal.R, "radius / large radius");
  gallery->add_option("--r", gal.r, "small radius");
  gallery->add_option("--d", gal.d, "center distance (two_balls)");
  gallery->add_option("--fillet", gal.fillet, "junction fillet radius");
  gallery->add_option("--a", gal.a, "side or semi-axis a");
  gallery->add_option("--b", gal.b, "semi-axis b");
  gallery->add_option("--n", gal.n, "polyline vertex count");
  gallery->add_option("--L", gal.L, "stadium straight length");
  gallery->add_option("--w", gal.w, "dumbbell corridor half-width");
  gallery->add_option("--dist", gal.dist, "dumbbell center distance");
  gallery->add_option("--theta", gal.theta, "tube half-angle (0 = balanced)");
  gallery->add_option("--T", gal.T, "tube length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = std::string("argument error: ") + e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*cheeger) return cmd_cheeger(ch);
    if (*reach) return cmd_reach(re, reach_radius);
    if (*erode_cmd) return cmd_erode(er, erode_radius);
    if (*convex) return cmd_convex(co);
    if (*gallery) return cmd_gallery(gal);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace capgeo::cli
