#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin that defines its
// result; the parallel version must reproduce it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trajformer/context.hpp"
#include "trajformer/model.hpp"
#include "trajformer/training.hpp"

namespace trajformer {

/// Worker cap from TRAJFORMER_THREADS (0 or unset = OpenMP default).
int configured_threads();
void apply_thread_cap();

struct BatchGradient {
  double loss = 0.0;            // mean over samples
  std::vector<Tensor> grads;    // one per parameter tensor
};

/// Mean teacher-forced L2 loss over `batch` and its gradient. `loss_scale` multiplies the
/// objective. Dropout masks draw from a stream seeded by (dropout_seed, sample position).
BatchGradient batch_gradient_serial(const ModelParams& params, std::span<const TrainingSample* const> batch,
                                    double loss_scale = 1.0, std::uint64_t dropout_seed = 0);
BatchGradient batch_gradient_parallel(const ModelParams& params, std::span<const TrainingSample* const> batch,
                                      double loss_scale = 1.0, std::uint64_t dropout_seed = 0);

/// Per-sample teacher-forced loss without gradients.
std::vector<double> sample_losses_serial(const ModelParams& params, std::span<const TrainingSample> samples);
std::vector<double> sample_losses_parallel(const ModelParams& params, std::span<const TrainingSample> samples);

struct PredictionJob {
  const Tensor* features = nullptr;  // raw
  Point2 last_observed;
  std::size_t kappa = 0;
};

std::vector<Prediction> predict_serial(const ModelParams& params, const ModelStats& stats,
                                       std::span<const PredictionJob> jobs);
std::vector<Prediction> predict_parallel(const ModelParams& params, const ModelStats& stats,
                                         std::span<const PredictionJob> jobs);

struct FeatureJob {
  const TrajectoryWindow* window = nullptr;
  const SceneMap* scene = nullptr;
  const std::vector<AgentTrack>* tracks = nullptr;
};

std::vector<ContextFeatureSequence> build_features_serial(std::span<const FeatureJob> jobs, const ContextConfig& cfg);
std::vector<ContextFeatureSequence> build_features_parallel(std::span<const FeatureJob> jobs, const ContextConfig& cfg);

/// Stream seed for one sample of one batch.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace trajformer
