#include "capgeo/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace capgeo::io {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  const double y = std::strtod(buf, nullptr);
  return y == 0.0 ? 0.0 : y;  // normalizes -0
}

static json point_json(const Vec2& p) {
  return json::array({round12(p.x()), round12(p.y())});
}

static Vec2 parse_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(what) + ": expected [x, y]");
  Vec2 p(j[0].get<double>(), j[1].get<double>());
  if (!p.allFinite())
    throw std::invalid_argument(std::string(what) + ": coordinates must be finite");
  return p;
}

json domain_json(const Domain& d) {
  json j;
  j["start"] = point_json(d.start);
  json segs = json::array();
  for (const Segment& s : d.segments) {
    json e;
    if (s.kind == Segment::Kind::Line) {
      e["kind"] = "line";
      e["end"] = point_json(s.end);
    } else {
      e["kind"] = "arc";
      e["end"] = point_json(s.end);
      e["center"] = point_json(s.center);
      e["orientation"] = s.ccw ? "ccw" : "cw";
    }
    segs.push_back(std::move(e));
  }
  j["segments"] = std::move(segs);
  return j;
}

json region_json(const Region& reg) {
  json j;
  json comps = json::array();
  for (const Domain& d : reg.components) comps.push_back(domain_json(d));
  j["components"] = std::move(comps);
  return j;
}

Domain parse_domain(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("domain: expected an object");
  if (!j.contains("start") || !j.contains("segments"))
    throw std::invalid_argument("domain: missing 'start' or 'segments'");
  Domain d;
  d.start = parse_point(j.at("start"), "start");
  const json& segs = j.at("segments");
  if (!segs.is_array() || segs.empty())
    throw std::invalid_argument("domain: 'segments' must be a non-empty array");
  for (const json& e : segs) {
    if (!e.is_object() || !e.contains("kind") || !e.contains("end"))
      throw std::invalid_argument("segment: missing 'kind' or 'end'");
    Segment s;
    const std::string kind = e.at("kind").get<std::string>();
    s.end = parse_point(e.at("end"), "end");
    if (kind == "line") {
      s.kind = Segment::Kind::Line;
    } else if (kind == "arc") {
      s.kind = Segment::Kind::Arc;
      if (!e.contains("center") || !e.contains("orientation"))
        throw std::invalid_argument("arc segment: missing 'center' or 'orientation'");
      s.center = parse_point(e.at("center"), "center");
      const std::string ori = e.at("orientation").get<std::string>();
      if (ori == "ccw")
        s.ccw = true;
      else if (ori == "cw")
        s.ccw = false;
      else
        throw std::invalid_argument("arc segment: orientation must be 'ccw' or 'cw'");
    } else {
      throw std::invalid_argument("segment: kind must be 'line' or 'arc'");
    }
    d.segments.push_back(s);
  }
  return d;
}

Region parse_region(const json& j) {
  if (!j.is_object() || !j.contains("components"))
    throw std::invalid_argument("region: missing 'components'");
  Region reg;
  for (const json& c : j.at("components")) reg.components.push_back(parse_domain(c));
  return reg;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace capgeo::io
