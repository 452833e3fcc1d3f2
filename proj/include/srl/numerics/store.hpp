#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "srl/numerics/tensor.hpp"

namespace srl {

// Named parameters plus their Adadelta running averages. Slots keep insertion
// order so that iteration (updates, serialization, seeding) is deterministic.
template <typename Scalar>
class ParameterStoreT {
 public:
  struct Slot {
    std::string name;
    TensorT<Scalar> tensor;
    MatrixX<Scalar> sq_grad_avg;    // E[g^2]
    MatrixX<Scalar> sq_update_avg;  // E[dx^2]
  };

  TensorT<Scalar>& add(const std::string& name, Eigen::Index rows, Eigen::Index cols) {
    if (index_.count(name)) throw std::invalid_argument("ParameterStore: duplicate name " + name);
    auto slot = std::make_unique<Slot>();
    slot->name = name;
    slot->tensor = TensorT<Scalar>(rows, cols);
    slot->sq_grad_avg = MatrixX<Scalar>::Zero(rows, cols);
    slot->sq_update_avg = MatrixX<Scalar>::Zero(rows, cols);
    index_.emplace(name, static_cast<int>(slots_.size()));
    slots_.push_back(std::move(slot));
    return slots_.back()->tensor;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  TensorT<Scalar>& get(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("ParameterStore: unknown name " + name);
    return slots_[it->second]->tensor;
  }
  const TensorT<Scalar>& get(const std::string& name) const {
    return const_cast<ParameterStoreT*>(this)->get(name);
  }

  int size() const { return static_cast<int>(slots_.size()); }
  Slot& slot(int i) { return *slots_[i]; }
  const Slot& slot(int i) const { return *slots_[i]; }

  void zero_grads() {
    for (auto& s : slots_) s->tensor.zero_grad();
  }

  void scale_grads(Scalar c) {
    for (auto& s : slots_)
      if (s->tensor.has_grad()) s->tensor.grad *= c;
  }

  // Deep copy of the parameter values, e.g. for keeping the dev-best model.
  std::vector<MatrixX<Scalar>> snapshot_values() const {
    std::vector<MatrixX<Scalar>> vals;
    vals.reserve(slots_.size());
    for (const auto& s : slots_) vals.push_back(s->tensor.value);
    return vals;
  }

  void restore_values(const std::vector<MatrixX<Scalar>>& vals) {
    if (vals.size() != slots_.size())
      throw std::invalid_argument("ParameterStore: snapshot size mismatch");
    for (size_t i = 0; i < vals.size(); ++i) slots_[i]->tensor.value = vals[i];
  }

 private:
  std::vector<std::unique_ptr<Slot>> slots_;
  std::unordered_map<std::string, int> index_;
};

using ParameterStore = ParameterStoreT<double>;

}  // namespace srl
