#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "trajformer/dataset.hpp"
#include "trajformer/tensor.hpp"

namespace trajformer {

struct PolarGridConfig {
  double th = 64.0;  // pixels, inclusive outer radius
  std::size_t radial_bins = 4;
  std::size_t angular_bins = 8;
  std::size_t type_channels = 3;  // 3: one per agent type, 1: all types summed

  void validate() const;
  std::size_t cells() const { return radial_bins * angular_bins * type_channels; }
  /// Flat index of cell (radial, angular, channel).
  std::size_t index(std::size_t r, std::size_t a, std::size_t c) const {
    return (r * angular_bins + a) * type_channels + c;
  }
};

struct SemanticConfig {
  std::size_t k = 16;
  double d_max = 32.0;  // pixels

  void validate() const;
};

struct ContextConfig {
  PolarGridConfig grid;
  SemanticConfig semantic;
  /// false reproduces the positional-only (Vanilla-TF) input.
  bool enabled = true;

  std::size_t feature_dim() const { return enabled ? 2 + grid.cells() + kNumLabels : 2; }
};

/// Per observed step: offset (2) ⊕ grid counts ⊕ semantic histogram (6), one row per step.
struct ContextFeatureSequence {
  Tensor values;  // (delta-1) × feature_dim
  std::size_t grid_cells = 0;

  std::size_t steps() const { return values.rows(); }
  std::size_t feature_dim() const { return values.cols(); }
  /// The leading two offset columns only.
  ContextFeatureSequence offsets_only() const;
};

struct Neighbor {
  Point2 px;
  AgentType type = AgentType::pedestrian;
};

/// out[i] = positions[i+1] - positions[i]
std::vector<Point2> compute_offsets(std::span<const Point2> positions);

/// Polar occupancy counts around `ego`; neighbours with distance <= th are binned by
/// radius and by angle against the scene x-axis.
std::vector<double> polar_occupancy(Point2 ego, std::span<const Neighbor> neighbors, const PolarGridConfig& cfg);

/// Normalized label histogram of the k pixels nearest to `pos` within d_max.
/// Pixel (col,row) sits at coordinates (col,row); ties break by row-major index.
std::array<double, kNumLabels> semantic_histogram(Point2 pos, const SceneMap& scene, const SemanticConfig& cfg);

/// Fused features for one window. Grid and semantics are evaluated at the later endpoint
/// of every offset interval. Throws ConfigError when `scene` is null and context is enabled.
ContextFeatureSequence build_features(const TrajectoryWindow& window, const SceneMap* scene,
                                      const std::vector<AgentTrack>& tracks, const ContextConfig& cfg);

/// Per-dimension standardization statistics (population std, floored at 1e-8).
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;

  static constexpr double kStdFloor = 1e-8;

  /// Fits over all rows of all matrices (every matrix must share the column count).
  static FeatureStats fit(std::span<const Tensor> rows_of);
  std::size_t dim() const { return mean.size(); }
  Tensor apply(const Tensor& x) const;
  Tensor invert(const Tensor& z) const;
  FeatureStats prefix(std::size_t n) const;
};

}  // namespace trajformer
