#include "seglab/tensor.hpp"

#include <unordered_set>

namespace seglab {

std::string Shape4::str() const {
  return std::to_string(n) + "x" + std::to_string(c) + "x" +
         std::to_string(h) + "x" + std::to_string(w);
}

namespace {

void check_shape(const Shape4& s) {
  if (s.n < 1 || s.c < 1 || s.h < 1 || s.w < 1) {
    throw DimensionError("tensor shape " + s.str() +
                         " has an axis smaller than 1");
  }
}

struct TensorAccess : Tensor {};  // grants make_shared access to the ctor

TensorPtr make_tensor() { return std::make_shared<TensorAccess>(); }

thread_local bool g_grad_enabled = true;

}  // namespace

TensorPtr Tensor::zeros(Shape4 s, bool requires_grad) {
  check_shape(s);
  auto t = make_tensor();
  t->shape = s;
  t->value.assign(static_cast<std::size_t>(s.numel()), 0.0);
  t->requires_grad = requires_grad;
  return t;
}

TensorPtr Tensor::full(Shape4 s, double v, bool requires_grad) {
  auto t = zeros(s, requires_grad);
  for (auto& x : t->value) x = v;
  return t;
}

TensorPtr Tensor::from_vector(Shape4 s, std::vector<double> v,
                              bool requires_grad) {
  check_shape(s);
  if (static_cast<std::int64_t>(v.size()) != s.numel()) {
    throw DimensionError("tensor data of length " + std::to_string(v.size()) +
                         " does not fill shape " + s.str());
  }
  auto t = make_tensor();
  t->shape = s;
  t->value = std::move(v);
  t->requires_grad = requires_grad;
  return t;
}

void Tensor::ensure_grad() {
  if (grad.size() != value.size()) grad.assign(value.size(), 0.0);
}

void Tensor::zero_grad() { grad.assign(value.size(), 0.0); }

void backward(const TensorPtr& output, const std::vector<double>& seed) {
  if (!output) throw ArgumentError("backward: null output tensor");
  if (!output->from_op()) {
    throw StateError(
        "backward: output carries no recorded forward computation");
  }
  if (static_cast<std::int64_t>(seed.size()) != output->numel()) {
    throw DimensionError("backward: seed of length " +
                         std::to_string(seed.size()) +
                         " does not match output shape " +
                         output->shape.str());
  }

  // Reverse postorder over the DAG: every node appears after all of its
  // consumers when iterated back to front.
  std::vector<Tensor*> postorder;
  std::unordered_set<Tensor*> seen;
  struct Frame {
    Tensor* t;
    std::size_t next_parent;
  };
  std::vector<Frame> stack{{output.get(), 0}};
  seen.insert(output.get());
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_parent < f.t->parents.size()) {
      Tensor* p = f.t->parents[f.next_parent++].get();
      if (seen.insert(p).second) stack.push_back({p, 0});
    } else {
      postorder.push_back(f.t);
      stack.pop_back();
    }
  }

  for (Tensor* t : postorder) t->zero_grad();
  output->grad = seed;
  for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
    Tensor* t = *it;
    if (t->backward_step) t->backward_step(*t);
  }
}

void backward(const TensorPtr& output) {
  if (!output) throw ArgumentError("backward: null output tensor");
  backward(output, std::vector<double>(
                       static_cast<std::size_t>(output->numel()), 1.0));
}

bool grad_enabled() { return g_grad_enabled; }

NoGradGuard::NoGradGuard() : previous_(g_grad_enabled) {
  g_grad_enabled = false;
}

NoGradGuard::~NoGradGuard() { g_grad_enabled = previous_; }

}  // namespace seglab
