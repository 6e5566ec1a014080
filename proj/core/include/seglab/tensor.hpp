#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "seglab/errors.hpp"

namespace seglab {

/// Axis sizes of a dense 4-D tensor, ordered (batch, channels, height, width).
struct Shape4 {
  int n = 1;
  int c = 1;
  int h = 1;
  int w = 1;

  std::int64_t numel() const {
    return std::int64_t(n) * c * std::int64_t(h) * w;
  }
  bool operator==(const Shape4&) const = default;

  /// Renders as "NxCxHxW", used by error messages.
  std::string str() const;
};

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

/// Dense row-major (N,C,H,W) tensor of doubles with an optional gradient
/// slot. Operations that consume tensors record a backward step on their
/// output so reverse-mode differentiation can replay the computation.
///
/// Doubles are used for all arithmetic; model parameters are additionally
/// kept at float32 resolution by the initializer and the optimizer so that
/// the float32 checkpoint format round-trips without loss.
class Tensor : public std::enable_shared_from_this<Tensor> {
 public:
  Shape4 shape{};
  std::vector<double> value;
  std::vector<double> grad;  // empty until backward() reaches this node
  bool requires_grad = false;

  // Reverse-mode record. `parents` are the inputs of the op that produced
  // this tensor; `backward_step` pulls this->grad into the parents' grads.
  std::vector<TensorPtr> parents;
  std::function<void(Tensor&)> backward_step;

  static TensorPtr zeros(Shape4 s, bool requires_grad = false);
  static TensorPtr full(Shape4 s, double v, bool requires_grad = false);
  static TensorPtr from_vector(Shape4 s, std::vector<double> v,
                               bool requires_grad = false);

  std::int64_t numel() const { return shape.numel(); }

  std::int64_t index(int in, int ic, int ih, int iw) const {
    return ((std::int64_t(in) * shape.c + ic) * shape.h + ih) * shape.w + iw;
  }
  double& at(int in, int ic, int ih, int iw) {
    return value[index(in, ic, ih, iw)];
  }
  double at(int in, int ic, int ih, int iw) const {
    return value[index(in, ic, ih, iw)];
  }

  /// True when this tensor was produced by a recorded operation.
  bool from_op() const { return static_cast<bool>(backward_step); }

  /// Allocates a zero gradient of matching size if not present.
  void ensure_grad();
  void zero_grad();

 private:
  Tensor() = default;
};

/// Seeds `output->grad` and runs the recorded computation backwards,
/// populating the grad slot of every tensor reachable through `parents`.
/// Gradients are overwritten, not accumulated across calls.
///
/// Throws StateError if `output` carries no recorded forward pass and
/// DimensionError if the seed size does not match the output.
void backward(const TensorPtr& output, const std::vector<double>& seed);

/// backward() with an all-ones seed (the common scalar-loss case).
void backward(const TensorPtr& output);

/// True while operations should record backward steps (thread-local).
bool grad_enabled();

/// RAII guard disabling graph recording, e.g. for validation forwards.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

}  // namespace seglab
