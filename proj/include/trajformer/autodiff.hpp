#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <vector>

#include "trajformer/tensor.hpp"

namespace trajformer::ad {

class Tape;

/// Handle to a node recorded on a Tape. Cheap to copy; valid while its tape lives.
struct Var {
  Tape* tape = nullptr;
  std::size_t id = 0;

  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
};

/// Receives the node's output gradient and accumulates into input gradients.
/// `inputs[k]` is null when input k does not require a gradient.
using BackwardFn = std::function<void(const Tensor& grad_out, std::span<Tensor* const> inputs)>;

class Gradients {
 public:
  explicit Gradients(std::vector<Tensor> grads) : grads_(std::move(grads)) {}

  /// Gradient w.r.t. `v`, or nullptr when nothing flowed into it.
  const Tensor* find(Var v) const;
  /// Gradient w.r.t. `v`; zeros when nothing flowed into it.
  Tensor at(Var v) const;

 private:
  friend class Tape;
  std::vector<Tensor> grads_;
};

/// Reverse-mode tape for one forward pass. Not thread-safe; use one tape per thread.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);
  /// Owned leaf that participates in differentiation.
  Var variable(Tensor value);
  /// Borrowed leaf; `value` must outlive the tape.
  Var parameter(const Tensor& value);
  /// Borrowed leaf that never receives a gradient.
  Var reference(const Tensor& value);

  const Tensor& value(Var v) const;
  bool requires_grad(Var v) const { return nodes_[v.id].requires_grad; }
  std::size_t size() const { return nodes_.size(); }

  /// Records an op. The backward closure is dropped when no input requires a gradient.
  Var record(Tensor value, std::initializer_list<Var> inputs, BackwardFn backward);
  Var record(Tensor value, const std::vector<Var>& inputs, BackwardFn backward);

  /// d(seed)/d(node) for every recorded node. `seed` must hold exactly one element.
  Gradients backward(Var seed) const;

 private:
  struct Node {
    Tensor owned;
    const Tensor* borrowed = nullptr;
    std::vector<std::size_t> inputs;
    BackwardFn backward;
    bool requires_grad = false;
  };

  Var push(Node node);

  std::deque<Node> nodes_;  // deque keeps node references stable while recording
};

// Differentiable ops. All operands must live on the same tape.

Var matmul(Var a, Var b);
/// a · bᵀ
Var matmul_nt(Var a, Var b);
Var transpose(Var a);
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double s);
/// x[m×n] + b[n] broadcast over rows.
Var add_row(Var x, Var b);
/// x·w + b; shapes x[m×d_in], w[d_in×d_out], b[d_out].
Var affine(Var x, Var w, Var b);
Var relu(Var x);
Var softmax(Var x, std::size_t axis);
/// Sets entries where `mask` is zero to `fill`; those entries receive no gradient.
Var mask_fill(Var x, const std::vector<std::uint8_t>& mask, double fill);
Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);
/// Columns [begin, end) of a matrix.
Var slice_cols(Var x, std::size_t begin, std::size_t end);
Var concat_cols(const std::vector<Var>& parts);
/// Stacks matrices with equal column counts vertically.
Var concat_rows(const std::vector<Var>& parts);
/// Multiplies by a fixed 0/scale mask (inverted dropout).
Var apply_mask(Var x, std::vector<double> mask);
Var sum(Var x);
Var mean(Var x);
/// Mean squared difference over all entries.
Var mse(Var a, Var b);

}  // namespace trajformer::ad
