// Serial kernels against their OpenMP twins. Thread count follows TRAJFORMER_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "trajformer/parallel.hpp"
#include "trajformer/pipeline.hpp"
#include "trajformer/synth.hpp"

using namespace trajformer;

namespace {

Tensor random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Tensor t({r, c});
  for (auto& v : t.storage()) v = u(rng);
  return t;
}

ModelConfig bench_model() {
  ModelConfig m;
  m.d_model = 32;
  m.n_heads = 4;
  m.n_layers = 2;
  m.d_ff = 64;
  m.feature_dim = 8;
  return m;
}

struct Batch {
  std::vector<TrainingSample> samples;
  std::vector<const TrainingSample*> ptrs;
  explicit Batch(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) samples.push_back({random_matrix(9, 8, i), random_matrix(20, 2, 1000 + i)});
    for (const auto& s : samples) ptrs.push_back(&s);
  }
};

template <bool Parallel>
void BM_BatchGradient(benchmark::State& state) {
  const ModelParams params = ModelParams::initialize(bench_model(), 1);
  const Batch batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto g = Parallel ? batch_gradient_parallel(params, batch.ptrs) : batch_gradient_serial(params, batch.ptrs);
    benchmark::DoNotOptimize(g.loss);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Predict(benchmark::State& state) {
  const ModelParams params = ModelParams::initialize(bench_model(), 2);
  ModelStats stats;
  stats.features = {std::vector<double>(8, 0.0), std::vector<double>(8, 1.0)};
  stats.offsets = {std::vector<double>(2, 0.0), std::vector<double>(2, 1.0)};
  std::vector<Tensor> inputs;
  for (std::int64_t i = 0; i < state.range(0); ++i) inputs.push_back(random_matrix(9, 8, static_cast<std::uint64_t>(i)));
  std::vector<PredictionJob> jobs;
  for (const auto& t : inputs) jobs.push_back({&t, {0.0, 0.0}, 20});
  for (auto _ : state) {
    auto p = Parallel ? predict_parallel(params, stats, jobs) : predict_serial(params, stats, jobs);
    benchmark::DoNotOptimize(p.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct FeatureFixture {
  std::vector<Scene> scenes;
  std::vector<TrajectoryWindow> windows;
  std::vector<FeatureJob> jobs;
  ContextConfig cfg;
  FeatureFixture() {
    SynthConfig sc;
    sc.scenario = Scenario::crossing;
    sc.pedestrians = 12;
    sc.scenes = 2;
    sc.steps = 80;
    for (const auto& s : synthesize(sc)) scenes.push_back({s.meta, s.map, s.tracks.tracks});
    WindowConfig wc{10, 50, 5, 10.0};
    std::vector<std::size_t> owner;
    for (std::size_t s = 0; s < scenes.size(); ++s)
      for (const auto& t : scenes[s].tracks)
        for (auto& w : extract_windows(t, wc)) {
          attach_neighbors(w, scenes[s].meta.scene_id, scenes[s].tracks);
          windows.push_back(std::move(w));
          owner.push_back(s);
        }
    for (std::size_t i = 0; i < windows.size(); ++i)
      jobs.push_back({&windows[i], &scenes[owner[i]].map, &scenes[owner[i]].tracks});
    cfg.semantic.k = 256;
  }
};

template <bool Parallel>
void BM_BuildFeatures(benchmark::State& state) {
  static const FeatureFixture fx;
  for (auto _ : state) {
    auto f = Parallel ? build_features_parallel(fx.jobs, fx.cfg) : build_features_serial(fx.jobs, fx.cfg);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.jobs.size()));
}

template <bool Reference>
void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) {
    Tensor c = Reference ? kernels::matmul_reference(a, b) : kernels::matmul(a, b);
    benchmark::DoNotOptimize(c.data().data());
  }
}

}  // namespace

BENCHMARK(BM_BatchGradient<false>)->Name("batch_gradient/serial")->Arg(32);
BENCHMARK(BM_BatchGradient<true>)->Name("batch_gradient/parallel")->Arg(32)->UseRealTime();
BENCHMARK(BM_Predict<false>)->Name("predict/serial")->Arg(64);
BENCHMARK(BM_Predict<true>)->Name("predict/parallel")->Arg(64)->UseRealTime();
BENCHMARK(BM_BuildFeatures<false>)->Name("build_features/serial");
BENCHMARK(BM_BuildFeatures<true>)->Name("build_features/parallel")->UseRealTime();
BENCHMARK(BM_Matmul<true>)->Name("matmul/reference")->Arg(64)->Arg(256);
BENCHMARK(BM_Matmul<false>)->Name("matmul/blocked")->Arg(64)->Arg(256);

int main(int argc, char** argv) {
  apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
