#include "capgeo/svg.hpp"

#include "capgeo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace capgeo::svg {

namespace {

std::string num(double x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << io::round12(x);
  return ss.str();
}

// SVG path in mathematical coordinates; the enclosing group applies the
// y-flip, under which sweep-flag 1 is the counterclockwise direction here.
std::string path_of(const Domain& d) {
  std::ostringstream ss;
  ss << "M " << num(d.start.x()) << " " << num(d.start.y());
  for (const Edge& e : edges_of(d)) {
    if (e.kind == Segment::Kind::Line) {
      ss << " L " << num(e.b.x()) << " " << num(e.b.y());
    } else {
      const bool large = std::abs(e.sweep) > kPi;
      ss << " A " << num(e.r) << " " << num(e.r) << " 0 " << (large ? 1 : 0) << " "
         << (e.sweep >= 0.0 ? 1 : 0) << " " << num(e.b.x()) << " " << num(e.b.y());
    }
  }
  ss << " Z";
  return ss.str();
}

void emit_region(std::ostringstream& out, const char* id, const Region& reg,
                 const char* style) {
  out << "  <g id=\"" << id << "\">\n";
  for (const Domain& d : reg.components)
    out << "    <path d=\"" << path_of(d) << "\" style=\"" << style << "\"/>\n";
  out << "  </g>\n";
}

}  // namespace

std::string render(const Scene& scene) {
  Box box{Vec2(0, 0), Vec2(1, 1)};
  bool seeded = false;
  auto grow_domain = [&](const Domain& d) {
    const Box b = bounding_box(d);
    if (!seeded) {
      box = b;
      seeded = true;
    } else {
      box.grow(b);
    }
  };
  if (scene.domain) grow_domain(*scene.domain);
  if (scene.eroded)
    for (const Domain& d : scene.eroded->components) grow_domain(d);
  if (scene.cheeger)
    for (const Domain& d : scene.cheeger->components) grow_domain(d);
  if (scene.witness) grow_domain(*scene.witness);
  if (scene.rolling_disk) {
    box.grow(scene.rolling_disk->first + Vec2(scene.rolling_disk->second,
                                              scene.rolling_disk->second));
    box.grow(scene.rolling_disk->first - Vec2(scene.rolling_disk->second,
                                              scene.rolling_disk->second));
  }
  const double m = 0.05 * std::max(box.size().x(), box.size().y()) + 1e-6;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.lo.x() - m)
      << " " << num(-(box.hi.y() + m)) << " " << num(box.size().x() + 2 * m) << " "
      << num(box.size().y() + 2 * m) << "\">\n";
  out << " <g transform=\"scale(1,-1)\" stroke-width=\""
      << num(0.004 * (box.size().norm() + 1e-9)) << "\">\n";
  if (scene.domain) {
    out << "  <g id=\"domain\">\n    <path d=\"" << path_of(*scene.domain)
        << "\" style=\"fill:#f2f2f2;stroke:#222222\"/>\n  </g>\n";
  }
  if (scene.eroded)
    emit_region(out, "eroded", *scene.eroded, "fill:#c9e4ff;stroke:#3377bb");
  if (scene.cheeger)
    emit_region(out, "cheeger", *scene.cheeger,
                "fill:#ffe0b3;fill-opacity:0.7;stroke:#cc7a00");
  if (scene.witness) {
    out << "  <g id=\"witness\">\n    <path d=\"" << path_of(*scene.witness)
        << "\" style=\"fill:none;stroke:#bb2222;stroke-dasharray:0.05\"/>\n  </g>\n";
  }
  if (scene.rolling_disk) {
    out << "  <g id=\"rolling-disk\">\n    <circle cx=\""
        << num(scene.rolling_disk->first.x()) << "\" cy=\""
        << num(scene.rolling_disk->first.y()) << "\" r=\""
        << num(scene.rolling_disk->second)
        << "\" style=\"fill:none;stroke:#22aa55\"/>\n  </g>\n";
  }
  out << " </g>\n</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const Scene& scene) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write SVG file: " + path);
  out << render(scene);
}

}  // namespace capgeo::svg
