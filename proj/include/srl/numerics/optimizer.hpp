#pragma once

#include <cmath>
#include <stdexcept>

#include "srl/numerics/store.hpp"

namespace srl {

// One Adadelta update over every parameter in the store. Accumulators decay
// with rho; the first step on fresh accumulators moves each coordinate by
// -sqrt(eps / ((1-rho) g^2 + eps)) * g.
template <typename Scalar>
void adadelta_step(ParameterStoreT<Scalar>& store, Scalar rho = Scalar(0.95),
                   Scalar eps = Scalar(1e-6)) {
  for (int i = 0; i < store.size(); ++i) {
    auto& s = store.slot(i);
    if (!s.tensor.has_grad())
      throw std::logic_error("adadelta_step: parameter " + s.name + " has no gradient");
    const auto& g = s.tensor.grad;
    s.sq_grad_avg = rho * s.sq_grad_avg + (Scalar(1) - rho) * g.cwiseProduct(g);
    MatrixX<Scalar> update =
        -((s.sq_update_avg.array() + eps) / (s.sq_grad_avg.array() + eps)).sqrt().matrix()
             .cwiseProduct(g);
    s.sq_update_avg = rho * s.sq_update_avg + (Scalar(1) - rho) * update.cwiseProduct(update);
    s.tensor.value += update;
  }
}

// Rescales all gradients so the global L2 norm is at most max_norm; returns
// the applied factor (1 when no clipping happened).
template <typename Scalar>
Scalar clip_global_norm(ParameterStoreT<Scalar>& store, Scalar max_norm = Scalar(1)) {
  Scalar sq = 0;
  for (int i = 0; i < store.size(); ++i) {
    const auto& t = store.slot(i).tensor;
    if (t.has_grad()) sq += t.grad.squaredNorm();
  }
  const Scalar norm = std::sqrt(sq);
  if (norm <= max_norm || norm == Scalar(0)) return Scalar(1);
  const Scalar factor = max_norm / norm;
  store.scale_grads(factor);
  return factor;
}

}  // namespace srl
