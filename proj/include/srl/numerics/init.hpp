#pragma once

#include <cmath>
#include <random>

#include "srl/numerics/tensor.hpp"

namespace srl {

using Rng = std::mt19937_64;

// Embedding tables: uniform in [-0.01, 0.01] unless told otherwise.
template <typename Scalar>
void init_uniform(TensorT<Scalar>& t, Rng& rng, Scalar lo = Scalar(-0.01),
                  Scalar hi = Scalar(0.01)) {
  std::uniform_real_distribution<Scalar> dist(lo, hi);
  for (Eigen::Index i = 0; i < t.value.rows(); ++i)
    for (Eigen::Index j = 0; j < t.value.cols(); ++j) t.value(i, j) = dist(rng);
}

// Weight matrices: Gaussian scaled by 1/sqrt(fan_in).
template <typename Scalar>
void init_scaled_gaussian(TensorT<Scalar>& t, Rng& rng) {
  std::normal_distribution<Scalar> dist(Scalar(0), Scalar(1));
  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(t.value.cols()));
  for (Eigen::Index i = 0; i < t.value.rows(); ++i)
    for (Eigen::Index j = 0; j < t.value.cols(); ++j) t.value(i, j) = dist(rng) * scale;
}

template <typename Scalar>
void init_constant(TensorT<Scalar>& t, Scalar c) {
  t.value.setConstant(c);
}

}  // namespace srl
