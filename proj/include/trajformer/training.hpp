#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "trajformer/model.hpp"
#include "trajformer/tensor.hpp"

namespace trajformer {

struct TrainConfig {
  std::size_t epochs = 250;
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double epsilon = 1e-9;
  std::size_t batch_size = 32;
  std::uint64_t seed = 0;
  std::optional<double> grad_clip;  // global L2 norm
  std::size_t warmup_steps = 0;
  std::size_t checkpoint_every = 0;  // epochs; 0 = only at the end
  double val_fraction = 0.1;

  void validate() const;
};

/// Mean over all entries of the squared difference.
double l2_loss(const Tensor& pred, const Tensor& target);

struct AdamState {
  std::vector<Tensor> m;
  std::vector<Tensor> v;
  std::uint64_t step = 0;

  static AdamState zeros_like(const std::vector<Tensor>& params);
};

/// One bias-corrected Adam update. Throws DivergenceError on non-finite gradients.
void adam_step(std::vector<Tensor>& params, const std::vector<Tensor>& grads, AdamState& state,
               const TrainConfig& cfg);

/// One teacher-forcing example; both tensors are already standardized.
struct TrainingSample {
  Tensor features;  // steps × feature_dim
  Tensor targets;   // κ × 2 offsets
};

struct EpochLog {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  double val_loss = 0.0;
  double wall_seconds = 0.0;
};

struct TrainState {
  ModelParams params;
  AdamState adam;
  std::vector<EpochLog> history;
};

/// Called after each epoch; return false to stop early.
using EpochCallback = std::function<bool(const TrainState&)>;

/// Teacher-forced L2 training with Adam. Deterministic for a fixed seed: the shuffle
/// order of epoch e depends only on (seed, e), so a resumed run splices seamlessly.
/// `state` may carry a previous run's history and optimizer state.
TrainState train(TrainState state, std::span<const TrainingSample> train_set, std::span<const TrainingSample> val_set,
                 const TrainConfig& cfg, const EpochCallback& on_epoch = {});

/// Sample order of one epoch.
std::vector<std::size_t> epoch_order(std::size_t n, std::uint64_t seed, std::size_t epoch);

/// Mean teacher-forced loss over a set, no gradients.
double evaluate_loss(const ModelParams& params, std::span<const TrainingSample> samples);

struct GradientCheckEntry {
  std::size_t param = 0;
  std::size_t element = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
};

struct GradientReport {
  std::vector<GradientCheckEntry> entries;
  GradientCheckEntry worst;
  double max_rel_error = 0.0;
};

/// Central differences at h=1e-6 on an O(1) loss carry ~1e-10 of rounding noise, so
/// gradients smaller than this are compared on an absolute scale.
inline constexpr double kGradientCheckFloor = 1e-5;

/// Compares analytic gradients of the batch loss with central differences at `n_samples`
/// randomly chosen parameter coordinates (relative error = |a-n| / max(|a|,|n|,floor)).
GradientReport verify_gradients(const ModelParams& params, std::span<const TrainingSample> batch,
                                std::size_t n_samples, std::uint64_t seed, double h = 1e-6,
                                double floor = kGradientCheckFloor);

}  // namespace trajformer
