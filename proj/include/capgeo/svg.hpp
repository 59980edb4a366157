#pragma once

#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"

#include <optional>
#include <string>

namespace capgeo::svg {

/// Figure layers. Every group is emitted with a fixed id so downstream
/// tooling can address them: domain, eroded, cheeger, witness, rolling-disk.
struct Scene {
  const Domain* domain = nullptr;
  const Region* eroded = nullptr;
  const Region* cheeger = nullptr;
  const Domain* witness = nullptr;
  std::optional<std::pair<Vec2, double>> rolling_disk;  // center, radius
};

std::string render(const Scene& scene);
void write_file(const std::string& path, const Scene& scene);

}  // namespace capgeo::svg
