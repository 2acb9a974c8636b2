#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "trajformer/autodiff.hpp"
#include "trajformer/context.hpp"
#include "trajformer/dataset.hpp"
#include "trajformer/tensor.hpp"

namespace trajformer {

struct ModelConfig {
  std::size_t d_model = 64;
  std::size_t n_heads = 4;
  std::size_t n_layers = 3;  // per stack (encoder and decoder each)
  std::size_t d_ff = 256;
  std::size_t feature_dim = 2;
  double dropout = 0.0;
  double norm_eps = 1e-5;

  static constexpr std::size_t kOutDim = 2;

  void validate() const;
  std::size_t d_k() const { return d_model / n_heads; }
  std::size_t d_v() const { return d_model / n_heads; }
};

struct AttentionSlots {
  // Keys carry no bias: it would shift every score in a row equally and softmax cancels it.
  std::size_t wq, bq, wk, wv, bv, wo, bo;
};
struct FeedForwardSlots {
  std::size_t w1, b1, w2, b2;
};
struct NormSlots {
  std::size_t gain, bias;
};
struct EncoderLayerSlots {
  AttentionSlots self;
  NormSlots norm1;
  FeedForwardSlots ff;
  NormSlots norm2;
};
struct DecoderLayerSlots {
  AttentionSlots self;
  NormSlots norm1;
  AttentionSlots cross;
  NormSlots norm2;
  FeedForwardSlots ff;
  NormSlots norm3;
};

/// Where each learnable tensor lives inside ModelParams.
struct ModelLayout {
  std::size_t src_w, src_b, tgt_w, tgt_b, start_token, out_w, out_b;
  std::vector<EncoderLayerSlots> encoder;
  std::vector<DecoderLayerSlots> decoder;
};

/// All learnable weights, stored as an ordered list of named tensors.
class ModelParams {
 public:
  ModelParams() = default;
  /// Zero-filled tensors with the shapes implied by `cfg`.
  explicit ModelParams(const ModelConfig& cfg);

  /// Glorot-uniform weights, zero biases, unit norm gains.
  static ModelParams initialize(const ModelConfig& cfg, std::uint64_t seed);

  const ModelConfig& config() const { return config_; }
  const ModelLayout& layout() const { return layout_; }
  std::size_t count() const { return tensors_.size(); }
  std::size_t scalar_count() const;
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  Tensor& operator[](std::size_t i) { return tensors_[i]; }
  const Tensor& operator[](std::size_t i) const { return tensors_[i]; }
  std::vector<Tensor>& tensors() { return tensors_; }
  const std::vector<Tensor>& tensors() const { return tensors_; }

  friend bool operator==(const ModelParams& a, const ModelParams& b) {
    return a.names_ == b.names_ && a.tensors_ == b.tensors_;
  }

 private:
  std::size_t add(std::string name, Shape shape);
  AttentionSlots add_attention(const std::string& prefix);
  NormSlots add_norm(const std::string& prefix);
  FeedForwardSlots add_ff(const std::string& prefix);

  ModelConfig config_;
  ModelLayout layout_{};
  std::vector<std::string> names_;
  std::vector<Tensor> tensors_;
};

/// Standardization applied to encoder features and to decoder offsets.
struct ModelStats {
  FeatureStats features;
  FeatureStats offsets;
};

/// Post-softmax attention weights captured during a forward pass.
struct AttentionRecord {
  std::string block;  // "encoder.self", "decoder.self", "decoder.cross"
  std::size_t layer = 0;
  std::size_t head = 0;
  Tensor weights;  // len_q × len_k
};

/// Binds ModelParams onto one tape; each tensor becomes a leaf on first use.
class Binding {
 public:
  /// `trainable=false` binds weights as gradient-free references (inference).
  Binding(ad::Tape& tape, const ModelParams& params, bool trainable);

  ad::Var operator()(std::size_t slot);
  ad::Tape& tape() { return tape_; }
  const ModelParams& params() const { return params_; }

  /// Per-parameter gradients; zeros for weights the pass never touched.
  std::vector<Tensor> gradients(const ad::Gradients& grads) const;

  // Optional hooks.
  std::vector<AttentionRecord>* probe = nullptr;
  std::mt19937_64* dropout_rng = nullptr;  // non-null enables dropout

 private:
  ad::Tape& tape_;
  const ModelParams& params_;
  bool trainable_;
  std::vector<std::optional<ad::Var>> bound_;
};

/// PE[p,2k] = sin(p/10000^(2k/d)), PE[p,2k+1] = cos(p/10000^(2k/d)).
Tensor positional_encoding(std::size_t seq_len, std::size_t d_model);

/// Lower-triangular mask (1 = may attend) for self-attention over `len` steps.
std::vector<std::uint8_t> causal_mask(std::size_t len);

/// affine(features) + PE rows 0..len-1. Features must already be standardized.
ad::Var embed_source(Binding& b, ad::Var features);
/// Same as embed_source for decoder offsets (PE restarts at 0).
ad::Var embed_target(Binding& b, ad::Var offsets);

ad::Var multi_head_attention(Binding& b, const AttentionSlots& slots, ad::Var queries, ad::Var keys, ad::Var values,
                             const std::vector<std::uint8_t>* mask, std::string_view block = "attention",
                             std::size_t layer = 0);

ad::Var encoder_forward(Binding& b, ad::Var embedded);
ad::Var decoder_forward(Binding& b, ad::Var target_embedded, ad::Var memory);
ad::Var project_output(Binding& b, ad::Var decoded);

/// [start_token; offsets[0..n-2]] as the decoder input for `offsets` (n×2, standardized).
ad::Var decoder_inputs(Binding& b, const Tensor& target_offsets);

/// Teacher-forced prediction of standardized offsets (κ×2) for standardized features.
ad::Var teacher_forced(Binding& b, const Tensor& features, const Tensor& target_offsets);

struct Prediction {
  Tensor offsets;                // κ×2 meters
  std::vector<Point2> positions;  // κ absolute positions
};

/// Encodes once, then decodes κ offsets one at a time, feeding each back as input.
/// `features` are raw (unstandardized); throws DivergenceError on non-finite values.
Prediction predict_autoregressive(const ModelParams& params, const ModelStats& stats, const Tensor& features,
                                  Point2 last_observed, std::size_t kappa,
                                  std::vector<AttentionRecord>* probe = nullptr);

}  // namespace trajformer
