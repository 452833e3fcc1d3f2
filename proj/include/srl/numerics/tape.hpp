#pragma once

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "srl/numerics/tensor.hpp"

namespace srl {

template <typename Scalar>
class TapeT;

// Handle to a node on a tape. Cheap to copy; valid for the tape's lifetime.
template <typename Scalar>
struct VarT {
  TapeT<Scalar>* tape = nullptr;
  int id = -1;

  bool valid() const { return tape != nullptr && id >= 0; }
};

// Reverse-mode tape. Forward ops (see ops.hpp) append nodes; backward() runs
// the recorded adjoint steps in reverse and accumulates leaf gradients into
// the owning tensors' grad slots. A tape is single-threaded and single-shot.
template <typename Scalar>
class TapeT {
 public:
  using Mat = MatrixX<Scalar>;
  using Var = VarT<Scalar>;
  // Adjoint step: given the tape and the node's own id, push grad to inputs.
  using Backprop = std::function<void(TapeT&, int self)>;

  // Constant leaf; no gradient flows out of it.
  Var input(Mat value) {
    nodes_.push_back(Node{std::move(value), Mat(), nullptr, nullptr});
    return Var{this, static_cast<int>(nodes_.size()) - 1};
  }

  // Differentiable leaf bound to a parameter tensor. Repeated calls with the
  // same tensor return the same node.
  Var param(TensorT<Scalar>& t) {
    auto it = param_nodes_.find(&t);
    if (it != param_nodes_.end()) return Var{this, it->second};
    nodes_.push_back(Node{t.value, Mat(), nullptr, &t});
    int id = static_cast<int>(nodes_.size()) - 1;
    param_nodes_.emplace(&t, id);
    return Var{this, id};
  }

  Var emplace(Mat value, Backprop backprop) {
    nodes_.push_back(Node{std::move(value), Mat(), std::move(backprop), nullptr});
    return Var{this, static_cast<int>(nodes_.size()) - 1};
  }

  const Mat& value(Var v) const { return nodes_.at(v.id).value; }
  const Mat& value(int id) const { return nodes_.at(id).value; }

  Mat& grad(int id) {
    Node& n = nodes_[id];
    if (n.grad.size() == 0) n.grad = Mat::Zero(n.value.rows(), n.value.cols());
    return n.grad;
  }

  bool grad_reached(int id) const { return nodes_[id].grad.size() > 0; }

  // Seeds d(loss)/d(loss) = 1 and sweeps the tape in reverse; `loss` must be
  // a 1x1 node. Running a tape twice is an error.
  void backward(Var loss) {
    if (loss.tape != this) throw std::invalid_argument("backward: var from another tape");
    if (backward_done_) throw std::logic_error("backward: tape already swept; build a new tape");
    const Node& l = nodes_.at(loss.id);
    if (l.value.rows() != 1 || l.value.cols() != 1)
      throw std::invalid_argument("backward: loss must be a 1x1 scalar");
    backward_done_ = true;
    grad(loss.id)(0, 0) = Scalar(1);
    for (int id = static_cast<int>(nodes_.size()) - 1; id >= 0; --id) {
      // Skip nodes the loss never reached.
      if (nodes_[id].grad.size() == 0) continue;
      if (nodes_[id].backprop) nodes_[id].backprop(*this, id);
      Node& n = nodes_[id];
      if (n.sink != nullptr) {
        if (!n.sink->has_grad()) n.sink->zero_grad();
        n.sink->grad += n.grad;
      }
    }
  }

  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    Mat value;
    Mat grad;
    Backprop backprop;               // null for leaves
    TensorT<Scalar>* sink = nullptr; // parameter leaf target
  };

  std::vector<Node> nodes_;
  std::unordered_map<const TensorT<Scalar>*, int> param_nodes_;
  bool backward_done_ = false;
};

using Tape = TapeT<double>;
using Var = VarT<double>;

}  // namespace srl
