#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trajformer/context.hpp"
#include "trajformer/dataset.hpp"
#include "trajformer/evaluation.hpp"
#include "trajformer/model.hpp"
#include "trajformer/training.hpp"

namespace trajformer {

/// Everything a command needs, read from a flat key=value file.
///
///   data.<name>.root / data.<name>.adapter
///   window.{delta,kappa,stride,rate_hz}
///   grid.{th,radial_bins,angular_bins,type_channels}   semantic.{k,d_max}   context.enabled
///   model.{d_model,n_heads,n_layers,d_ff,dropout,norm_eps}
///   train.{epochs,learning_rate,beta1,beta2,epsilon,batch_size,grad_clip,warmup_steps,checkpoint_every,val_fraction}
///   eval.{horizons,horizon_mode,rmse_aggregation,kalman_accel_noise,kalman_meas_noise}
///   output.dir   seed
struct RunConfig {
  std::vector<DatasetRoot> datasets;  // sorted by name
  WindowConfig window;
  ContextConfig context;
  ModelConfig model;  // feature_dim follows `context`
  TrainConfig train;
  EvalOptions eval;
  CvKalmanConfig kalman;  // dt follows window.rate_hz
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;

  /// Checks every nested invariant; with `check_paths`, also that dataset roots exist.
  void validate(bool check_paths) const;
  const DatasetRoot& dataset(std::string_view name) const;
  /// Model config with feature_dim matching the context switch.
  ModelConfig model_for(bool context_enabled) const;
};

/// Applies one key. Throws ConfigError on unknown keys or malformed values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Defaults, then file settings in key order, then overrides. Relative dataset roots and
/// output.dir resolve against the config file's directory.
RunConfig load_run_config(const std::filesystem::path& path, const std::vector<std::pair<std::string, std::string>>& overrides = {});
RunConfig run_config_from(const std::map<std::string, std::string>& settings);

/// Inverse of apply_setting: every key with its current value, sorted.
std::map<std::string, std::string> to_settings(const RunConfig& cfg);
std::string format_settings(const std::map<std::string, std::string>& settings);

}  // namespace trajformer
