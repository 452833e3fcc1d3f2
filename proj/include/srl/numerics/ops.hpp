#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "srl/numerics/tape.hpp"

namespace srl {

namespace detail {

template <typename Scalar>
void require_same_tape(const char* op, VarT<Scalar> a, VarT<Scalar> b) {
  if (a.tape != b.tape) throw std::invalid_argument(std::string(op) + ": vars from different tapes");
}

template <typename Scalar>
[[noreturn]] void shape_error(const char* op, const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  throw std::invalid_argument(std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()) + ") vs (" + std::to_string(b.rows()) +
                              "x" + std::to_string(b.cols()) + ")");
}

}  // namespace detail

template <typename Scalar>
VarT<Scalar> matmul(VarT<Scalar> a, VarT<Scalar> b) {
  detail::require_same_tape("matmul", a, b);
  auto& t = *a.tape;
  const auto& A = t.value(a);
  const auto& B = t.value(b);
  if (A.cols() != B.rows()) detail::shape_error<Scalar>("matmul", A, B);
  return t.emplace(A * B, [ia = a.id, ib = b.id](TapeT<Scalar>& t, int self) {
    const MatrixX<Scalar> g = t.grad(self);
    t.grad(ia).noalias() += g * t.value(ib).transpose();
    t.grad(ib).noalias() += t.value(ia).transpose() * g;
  });
}

template <typename Scalar>
VarT<Scalar> add(VarT<Scalar> a, VarT<Scalar> b) {
  detail::require_same_tape("add", a, b);
  auto& t = *a.tape;
  const auto& A = t.value(a);
  const auto& B = t.value(b);
  if (A.rows() != B.rows() || A.cols() != B.cols()) detail::shape_error<Scalar>("add", A, B);
  return t.emplace(A + B, [ia = a.id, ib = b.id](TapeT<Scalar>& t, int self) {
    const MatrixX<Scalar> g = t.grad(self);
    t.grad(ia) += g;
    t.grad(ib) += g;
  });
}

template <typename Scalar>
VarT<Scalar> hadamard(VarT<Scalar> a, VarT<Scalar> b) {
  detail::require_same_tape("hadamard", a, b);
  auto& t = *a.tape;
  const auto& A = t.value(a);
  const auto& B = t.value(b);
  if (A.rows() != B.rows() || A.cols() != B.cols()) detail::shape_error<Scalar>("hadamard", A, B);
  return t.emplace(A.cwiseProduct(B), [ia = a.id, ib = b.id](TapeT<Scalar>& t, int self) {
    const MatrixX<Scalar> g = t.grad(self);
    t.grad(ia) += g.cwiseProduct(t.value(ib));
    t.grad(ib) += g.cwiseProduct(t.value(ia));
  });
}

template <typename Scalar>
VarT<Scalar> scale(VarT<Scalar> a, Scalar c) {
  auto& t = *a.tape;
  return t.emplace(t.value(a) * c, [ia = a.id, c](TapeT<Scalar>& t, int self) {
    t.grad(ia) += t.grad(self) * c;
  });
}

// 1 - x, elementwise; the gate complement in highway combinations.
template <typename Scalar>
VarT<Scalar> one_minus(VarT<Scalar> a) {
  auto& t = *a.tape;
  MatrixX<Scalar> v = MatrixX<Scalar>::Ones(t.value(a).rows(), t.value(a).cols()) - t.value(a);
  return t.emplace(std::move(v), [ia = a.id](TapeT<Scalar>& t, int self) {
    t.grad(ia) -= t.grad(self);
  });
}

// Vertical stack of column vectors.
template <typename Scalar>
VarT<Scalar> concat(const std::vector<VarT<Scalar>>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat: no inputs");
  auto& t = *parts[0].tape;
  Eigen::Index rows = 0;
  std::vector<int> ids;
  for (auto p : parts) {
    detail::require_same_tape("concat", parts[0], p);
    if (t.value(p).cols() != 1)
      throw std::invalid_argument("concat: inputs must be column vectors");
    rows += t.value(p).rows();
    ids.push_back(p.id);
  }
  MatrixX<Scalar> v(rows, 1);
  Eigen::Index at = 0;
  for (auto p : parts) {
    v.block(at, 0, t.value(p).rows(), 1) = t.value(p);
    at += t.value(p).rows();
  }
  return t.emplace(std::move(v), [ids](TapeT<Scalar>& t, int self) {
    const MatrixX<Scalar> g = t.grad(self);
    Eigen::Index at = 0;
    for (int id : ids) {
      const Eigen::Index r = t.value(id).rows();
      t.grad(id) += g.block(at, 0, r, 1);
      at += r;
    }
  });
}

template <typename Scalar>
VarT<Scalar> sigmoid(VarT<Scalar> a) {
  auto& t = *a.tape;
  MatrixX<Scalar> y =
      t.value(a).unaryExpr([](Scalar x) { return Scalar(1) / (Scalar(1) + std::exp(-x)); });
  return t.emplace(std::move(y), [ia = a.id](TapeT<Scalar>& t, int self) {
    const auto& y = t.value(self);
    t.grad(ia) +=
        t.grad(self).cwiseProduct(y.cwiseProduct(MatrixX<Scalar>::Ones(y.rows(), y.cols()) - y));
  });
}

template <typename Scalar>
VarT<Scalar> tanh(VarT<Scalar> a) {
  auto& t = *a.tape;
  MatrixX<Scalar> y = t.value(a).array().tanh().matrix();
  return t.emplace(std::move(y), [ia = a.id](TapeT<Scalar>& t, int self) {
    const auto& y = t.value(self);
    t.grad(ia) += t.grad(self).cwiseProduct(
        (MatrixX<Scalar>::Ones(y.rows(), y.cols()) - y.cwiseProduct(y)));
  });
}

// Row `row` of an embedding table, returned as a column vector.
template <typename Scalar>
VarT<Scalar> embedding_lookup(VarT<Scalar> table, Eigen::Index row) {
  auto& t = *table.tape;
  const auto& T = t.value(table);
  if (row < 0 || row >= T.rows())
    throw std::invalid_argument("embedding_lookup: row " + std::to_string(row) +
                                " out of range for " + std::to_string(T.rows()) + " rows");
  return t.emplace(T.row(row).transpose(), [it = table.id, row](TapeT<Scalar>& t, int self) {
    t.grad(it).row(row) += t.grad(self).transpose();
  });
}

// Elementwise max; ties route the gradient to the first argument.
template <typename Scalar>
VarT<Scalar> elementwise_max(VarT<Scalar> a, VarT<Scalar> b) {
  detail::require_same_tape("elementwise_max", a, b);
  auto& t = *a.tape;
  const auto& A = t.value(a);
  const auto& B = t.value(b);
  if (A.rows() != B.rows() || A.cols() != B.cols())
    detail::shape_error<Scalar>("elementwise_max", A, B);
  return t.emplace(A.cwiseMax(B), [ia = a.id, ib = b.id](TapeT<Scalar>& t, int self) {
    const MatrixX<Scalar> g = t.grad(self);
    const auto& A = t.value(ia);
    const auto& B = t.value(ib);
    MatrixX<Scalar> take_a = (A.array() >= B.array()).template cast<Scalar>().matrix();
    t.grad(ia) += g.cwiseProduct(take_a);
    t.grad(ib) += g.cwiseProduct(MatrixX<Scalar>::Ones(A.rows(), A.cols()) - take_a);
  });
}

// Log-softmax of a column vector; result sums to one in probability space.
template <typename Scalar>
VarT<Scalar> log_softmax(VarT<Scalar> a) {
  auto& t = *a.tape;
  const auto& x = t.value(a);
  if (x.cols() != 1) throw std::invalid_argument("log_softmax: input must be a column vector");
  const Scalar m = x.maxCoeff();
  const Scalar lse = m + std::log((x.array() - m).exp().sum());
  MatrixX<Scalar> y = x.array() - lse;
  return t.emplace(std::move(y), [ia = a.id](TapeT<Scalar>& t, int self) {
    const auto& y = t.value(self);
    const MatrixX<Scalar> g = t.grad(self);
    t.grad(ia) += g - (y.array().exp() * g.sum()).matrix();
  });
}

// One coordinate of a column vector as a 1x1 scalar.
template <typename Scalar>
VarT<Scalar> pick(VarT<Scalar> a, Eigen::Index i) {
  auto& t = *a.tape;
  const auto& x = t.value(a);
  if (x.cols() != 1 || i < 0 || i >= x.rows())
    throw std::invalid_argument("pick: index " + std::to_string(i) + " out of range");
  MatrixX<Scalar> y(1, 1);
  y(0, 0) = x(i, 0);
  return t.emplace(std::move(y), [ia = a.id, i](TapeT<Scalar>& t, int self) {
    t.grad(ia)(i, 0) += t.grad(self)(0, 0);
  });
}

// Sum of 1x1 scalars, accumulated left to right.
template <typename Scalar>
VarT<Scalar> sum_scalars(const std::vector<VarT<Scalar>>& xs) {
  if (xs.empty()) throw std::invalid_argument("sum_scalars: no inputs");
  auto& t = *xs[0].tape;
  Scalar total = 0;
  std::vector<int> ids;
  for (auto x : xs) {
    detail::require_same_tape("sum_scalars", xs[0], x);
    const auto& v = t.value(x);
    if (v.rows() != 1 || v.cols() != 1)
      throw std::invalid_argument("sum_scalars: inputs must be 1x1");
    total += v(0, 0);
    ids.push_back(x.id);
  }
  MatrixX<Scalar> y(1, 1);
  y(0, 0) = total;
  return t.emplace(std::move(y), [ids](TapeT<Scalar>& t, int self) {
    const Scalar g = t.grad(self)(0, 0);
    for (int id : ids) t.grad(id)(0, 0) += g;
  });
}

// Sum of all entries as a 1x1 scalar.
template <typename Scalar>
VarT<Scalar> sum_all(VarT<Scalar> a) {
  auto& t = *a.tape;
  MatrixX<Scalar> y(1, 1);
  y(0, 0) = t.value(a).sum();
  return t.emplace(std::move(y), [ia = a.id](TapeT<Scalar>& t, int self) {
    const auto& v = t.value(ia);
    t.grad(ia) += MatrixX<Scalar>::Constant(v.rows(), v.cols(), t.grad(self)(0, 0));
  });
}

// W*x + b, the everyday affine step.
template <typename Scalar>
VarT<Scalar> affine(VarT<Scalar> W, VarT<Scalar> x, VarT<Scalar> b) {
  return add(matmul(W, x), b);
}

}  // namespace srl
