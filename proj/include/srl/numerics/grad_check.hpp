#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "srl/numerics/ops.hpp"
#include "srl/numerics/store.hpp"

namespace srl {

struct GradCheckEntry {
  std::string name;
  double max_rel_error = 0;
};

struct GradCheckReport {
  double max_rel_error = 0;
  std::string worst_param;
  std::vector<GradCheckEntry> per_param;

  bool ok(double tol) const { return max_rel_error < tol; }
};

// Compares tape gradients of a deterministic scalar function against central
// finite differences. `f` must build the loss on the given tape from the
// current store values. Relative error uses max(|analytic|, |numeric|, 1e-3)
// as denominator so near-zero gradients are judged on an absolute scale.
template <typename Scalar>
GradCheckReport grad_check(const std::function<VarT<Scalar>(TapeT<Scalar>&)>& f,
                           ParameterStoreT<Scalar>& params, double h = 1e-5) {
  params.zero_grads();
  {
    TapeT<Scalar> tape;
    auto loss = f(tape);
    tape.backward(loss);
  }
  auto eval = [&]() -> double {
    TapeT<Scalar> tape;
    auto loss = f(tape);
    return tape.value(loss)(0, 0);
  };

  GradCheckReport report;
  for (int s = 0; s < params.size(); ++s) {
    auto& slot = params.slot(s);
    GradCheckEntry entry{slot.name, 0};
    auto& v = slot.tensor.value;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const Scalar saved = v(i, j);
        v(i, j) = saved + h;
        const double up = eval();
        v(i, j) = saved - h;
        const double down = eval();
        v(i, j) = saved;
        const double numeric = (up - down) / (2 * h);
        const double analytic = slot.tensor.grad(i, j);
        const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-3});
        entry.max_rel_error = std::max(entry.max_rel_error, std::abs(analytic - numeric) / denom);
      }
    }
    if (entry.max_rel_error > report.max_rel_error) {
      report.max_rel_error = entry.max_rel_error;
      report.worst_param = entry.name;
    }
    report.per_param.push_back(std::move(entry));
  }
  return report;
}

}  // namespace srl
