#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "trajformer/context.hpp"
#include "trajformer/dataset.hpp"
#include "trajformer/model.hpp"
#include "trajformer/training.hpp"

namespace trajformer {

struct WindowRecord {
  TrajectoryWindow window;
  Tensor features;  // raw, full context width
};

/// Preprocessed windows of one dataset.
///
/// File layout (little-endian):
///   "TRJFFEAT" | u32 version | string settings | u64 n_records | records
/// record = string scene_id, string ego_id, u64 start, f64 t_start, f64 meters_per_pixel,
///          tensor observed (δ×5: t,x_m,y_m,x_px,y_px), tensor future (κ×5),
///          u64 n_neighbors + strings, tensor features ((δ-1)×F)
/// Records are sorted by (scene_id, ego_id, start).
struct FeatureCache {
  std::string dataset;
  WindowConfig window;
  ContextConfig context;
  std::vector<WindowRecord> records;
};

inline constexpr std::uint32_t kFeatureCacheVersion = 1;

std::string serialize_feature_cache(const FeatureCache& cache);
FeatureCache deserialize_feature_cache(std::string_view bytes, const std::string& origin = "feature cache");
void save_feature_cache(const std::filesystem::path& path, const FeatureCache& cache);
FeatureCache load_feature_cache(const std::filesystem::path& path);

/// Windows and context features for every pedestrian in `scenes`. Features always carry the
/// full context width; `context.enabled` is ignored here. Window counts per scene go to `per_scene`.
FeatureCache build_feature_cache(std::string dataset, const std::vector<Scene>& scenes, const WindowConfig& window,
                                 ContextConfig context,
                                 std::vector<std::pair<std::string, std::size_t>>* per_scene = nullptr);

/// Model input for one record: the full features, or only the offset columns.
Tensor model_input(const WindowRecord& record, bool context_enabled);

/// Future displacement steps: future[0]-observed.back(), then future[i]-future[i-1].
Tensor future_offsets(const TrajectoryWindow& window);

struct PreparedData {
  std::vector<TrainingSample> train;
  std::vector<TrainingSample> val;
  ModelStats stats;  // fitted on `train` only
};

/// Splits the cache deterministically (seeded permutation; val gets floor(n·val_fraction)
/// windows, at most n-1), fits standardization on the training part and standardizes both.
PreparedData prepare_training(const FeatureCache& cache, bool context_enabled, double val_fraction, std::uint64_t seed);

/// Standardized sample from raw tensors.
TrainingSample make_sample(const Tensor& raw_features, const Tensor& raw_offsets, const ModelStats& stats);

}  // namespace trajformer
