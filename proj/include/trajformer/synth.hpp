#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajformer/dataset.hpp"

namespace trajformer {

enum class Scenario { linear, turn, stop_go, obstacle, crossing };

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view to_string(Scenario s);
/// "linear, turn, stop_go, obstacle, crossing"
std::string scenario_names();

/// Axis-aligned rectangle in meters.
struct Region {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool contains(Point2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

struct SynthConfig {
  Scenario scenario = Scenario::linear;
  std::size_t pedestrians = 1;  // per scene
  std::size_t scenes = 1;
  std::uint64_t seed = 0;
  std::size_t steps = 100;  // samples per pedestrian track
  double rate_hz = 10.0;
  double meters_per_pixel = 0.1;
  std::size_t width_px = 640;
  std::size_t height_px = 480;

  void validate() const;
};

struct SynthScene {
  SceneMeta meta;
  SceneMap map;
  TrackSet tracks;
  std::vector<Region> parked;  // parked_vehicle blocks, meters
};

/// Scenes on the exact grid t = k/rate_hz with pixel = meters / meters_per_pixel.
std::vector<SynthScene> synthesize(const SynthConfig& cfg);

/// Writes <scene>.scene, <scene>.pgm and <scene>.csv per scene into `root`.
void write_synth_dataset(const std::filesystem::path& root, const std::vector<SynthScene>& scenes);

}  // namespace trajformer
