#pragma once

#include <Eigen/Core>

namespace srl {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// A dense value with an optional gradient slot of the same shape. Vectors are
// stored as n x 1 matrices.
template <typename Scalar>
struct TensorT {
  MatrixX<Scalar> value;
  MatrixX<Scalar> grad;  // 0x0 until allocated

  TensorT() = default;
  TensorT(Eigen::Index rows, Eigen::Index cols) : value(MatrixX<Scalar>::Zero(rows, cols)) {}
  explicit TensorT(MatrixX<Scalar> v) : value(std::move(v)) {}

  Eigen::Index rows() const { return value.rows(); }
  Eigen::Index cols() const { return value.cols(); }
  bool has_grad() const { return grad.size() == value.size() && grad.size() > 0; }

  void zero_grad() { grad = MatrixX<Scalar>::Zero(value.rows(), value.cols()); }
  void drop_grad() { grad.resize(0, 0); }
};

using Tensor = TensorT<double>;
using MatX = MatrixX<double>;

}  // namespace srl
