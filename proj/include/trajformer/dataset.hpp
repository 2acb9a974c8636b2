#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trajformer {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class AgentType : std::uint8_t { pedestrian = 0, vehicle = 1, cyclist = 2 };
inline constexpr std::size_t kNumAgentTypes = 3;

std::string_view to_string(AgentType type);
/// Accepts the canonical names plus common dataset aliases ("car", "bicycle", ...).
std::optional<AgentType> parse_agent_type(std::string_view token);

struct TrackSample {
  double t = 0.0;
  double x_m = 0.0;
  double y_m = 0.0;
  double x_px = 0.0;
  double y_px = 0.0;

  Point2 meters() const { return {x_m, y_m}; }
  Point2 pixels() const { return {x_px, y_px}; }
  friend bool operator==(const TrackSample&, const TrackSample&) = default;
};

struct AgentTrack {
  std::string agent_id;
  AgentType agent_type = AgentType::pedestrian;
  std::vector<TrackSample> samples;
};

/// All tracks recorded in one scene.
struct TrackSet {
  std::string scene_id;
  std::vector<AgentTrack> tracks;
};

enum class Adapter { canonical, dut, ind };
std::optional<Adapter> parse_adapter(std::string_view name);
std::string_view to_string(Adapter adapter);

struct AdapterOptions {
  /// Used to derive pixel coordinates when the source only carries meters.
  double meters_per_pixel = 0.0;
  /// Frame rate of frame-indexed sources (dut: 23.98, ind: 25).
  std::optional<double> fps;
  /// Overrides the scene id for sources that do not carry one.
  std::string scene_id;
};

/// Reads a trajectory file into one AgentTrack per agent, samples sorted by time.
/// Throws DataError on schema violations, naming the offending row.
TrackSet load_tracks(const std::filesystem::path& path, Adapter adapter, const AdapterOptions& options = {});

/// Writes the canonical CSV (scene_id,agent_id,agent_type,t,x_m,y_m,x_px,y_px).
void write_tracks(const std::filesystem::path& path, const TrackSet& tracks);

/// Linear interpolation onto the grid origin + k/rate_hz covering the track's span.
/// The origin defaults to the first timestamp; pass a scene-wide origin to align agents.
AgentTrack resample(const AgentTrack& track, double rate_hz, std::optional<double> grid_origin = std::nullopt);

struct WindowConfig {
  std::size_t delta = 30;  // observed steps
  std::size_t kappa = 50;  // predicted steps
  std::size_t stride = 1;
  double rate_hz = 10.0;

  void validate() const;
  std::size_t length() const { return delta + kappa; }
};

struct TrajectoryWindow {
  std::string scene_id;
  std::string ego_id;
  std::size_t start = 0;  // index of the first observed sample in the resampled track
  double t_start = 0.0;
  double meters_per_pixel = 0.0;
  std::vector<TrackSample> observed;  // delta samples
  std::vector<TrackSample> future;    // kappa samples
  std::vector<std::string> neighbor_refs;

  std::vector<Point2> observed_meters() const;
  std::vector<Point2> future_meters() const;
};

/// Slides a delta+kappa window over a resampled pedestrian track.
/// Non-pedestrian tracks and tracks shorter than delta+kappa yield no windows.
std::vector<TrajectoryWindow> extract_windows(const AgentTrack& track, const WindowConfig& cfg);

/// Fills scene_id and the ids of agents with at least one sample inside the observed interval.
void attach_neighbors(TrajectoryWindow& window, std::string_view scene_id, const std::vector<AgentTrack>& scene_tracks);

enum class SemanticLabel : std::uint8_t { none = 0, road, sidewalk, zebra_crossing, vegetation, parked_vehicle };
inline constexpr std::size_t kNumLabels = 6;
std::string_view to_string(SemanticLabel label);

struct SceneMap {
  std::string scene_id;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<SemanticLabel> labels;  // row-major, height rows of width pixels
  double meters_per_pixel = 1.0;

  SemanticLabel at(std::size_t col, std::size_t row) const { return labels[row * width + col]; }
};

/// Reads an 8-bit single-channel PNG or PGM whose pixel values are label ordinals 0..5.
SceneMap load_scene_map(const std::filesystem::path& label_image, double meters_per_pixel, std::string scene_id = {});
void write_scene_map_pgm(const std::filesystem::path& path, const SceneMap& map);

/// Contents of a `<scene>.scene` key=value file.
struct SceneMeta {
  std::string scene_id;
  double meters_per_pixel = 0.0;
  std::filesystem::path label_map;  // relative paths resolve against the metadata file
  std::filesystem::path tracks;     // defaults to <scene_id>.csv next to the metadata file
};

SceneMeta load_scene_meta(const std::filesystem::path& path);
void write_scene_meta(const std::filesystem::path& path, const SceneMeta& meta);

struct DatasetRoot {
  std::string name;
  std::filesystem::path root;
  Adapter adapter = Adapter::canonical;
};

struct Scene {
  SceneMeta meta;
  SceneMap map;
  std::vector<AgentTrack> tracks;  // resampled onto one shared grid
};

/// Loads every `*.scene` under a dataset root, sorted by scene id, with tracks resampled to
/// `rate_hz` on a scene-wide grid.
std::vector<Scene> load_dataset(const DatasetRoot& root, double rate_hz);

/// Every ordered (train, test) pair with train != test.
std::vector<std::pair<DatasetRoot, DatasetRoot>> cross_dataset_split(const std::vector<DatasetRoot>& datasets);

}  // namespace trajformer
