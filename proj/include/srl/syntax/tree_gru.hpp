#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "srl/numerics/init.hpp"
#include "srl/numerics/ops.hpp"
#include "srl/numerics/store.hpp"
#include "srl/syntax/label_embeddings.hpp"
#include "srl/treebank/tree_ops.hpp"

namespace srl {

// Bi-directional tree GRU over the dependency tree. The bottom-up pass gates
// separate sums of left-side and right-side child states; the top-down pass is
// the same cell with the single parent state in place of the two child sums.
// Node input is the relation-label embedding l_i.

struct TreeGruGate {
  Tensor *W = nullptr, *U = nullptr, *V = nullptr, *b = nullptr;  // V unused top-down
};

struct TreeGruParams {
  int hidden = 0;
  // bottom-up: reset left/right, update left/right/candidate, candidate
  TreeGruGate up_rL, up_rR, up_zL, up_zR, up_z, up_cand;
  // top-down: reset parent, update parent/candidate, candidate
  TreeGruGate down_rP, down_zP, down_z, down_cand;
};

namespace detail {

inline TreeGruGate make_gate(ParameterStore& store, const std::string& prefix, int label_dim,
                             int hidden, bool two_slots, Rng& rng) {
  TreeGruGate g;
  g.W = &store.add(prefix + ".W", hidden, label_dim);
  g.U = &store.add(prefix + ".U", hidden, hidden);
  if (two_slots) g.V = &store.add(prefix + ".V", hidden, hidden);
  g.b = &store.add(prefix + ".b", hidden, 1);
  init_scaled_gaussian(*g.W, rng);
  init_scaled_gaussian(*g.U, rng);
  if (two_slots) init_scaled_gaussian(*g.V, rng);
  return g;
}

// sigma(W l + U hL + V hR + b); the top-down variant passes hR = {nullptr}.
inline Var gate_preact(Tape& tape, const TreeGruGate& g, Var l, Var hL, const Var* hR) {
  Var x = add(matmul(tape.param(*g.W), l), matmul(tape.param(*g.U), hL));
  if (hR != nullptr && g.V != nullptr) x = add(x, matmul(tape.param(*g.V), *hR));
  return add(x, tape.param(*g.b));
}

}  // namespace detail

inline TreeGruParams make_tree_gru_params(ParameterStore& store, const std::string& prefix,
                                          int label_dim, int hidden, Rng& rng) {
  TreeGruParams p;
  p.hidden = hidden;
  p.up_rL = detail::make_gate(store, prefix + ".up.rL", label_dim, hidden, true, rng);
  p.up_rR = detail::make_gate(store, prefix + ".up.rR", label_dim, hidden, true, rng);
  p.up_zL = detail::make_gate(store, prefix + ".up.zL", label_dim, hidden, true, rng);
  p.up_zR = detail::make_gate(store, prefix + ".up.zR", label_dim, hidden, true, rng);
  p.up_z = detail::make_gate(store, prefix + ".up.z", label_dim, hidden, true, rng);
  p.up_cand = detail::make_gate(store, prefix + ".up.cand", label_dim, hidden, true, rng);
  p.down_rP = detail::make_gate(store, prefix + ".down.rP", label_dim, hidden, false, rng);
  p.down_zP = detail::make_gate(store, prefix + ".down.zP", label_dim, hidden, false, rng);
  p.down_z = detail::make_gate(store, prefix + ".down.z", label_dim, hidden, false, rng);
  p.down_cand = detail::make_gate(store, prefix + ".down.cand", label_dim, hidden, false, rng);
  return p;
}

// Children-before-parent pass; node states gate the summed left/right child
// states. Left/right child sums accumulate in ascending token order so the
// result does not depend on the processing order of independent nodes.
inline std::vector<Var> tree_gru_bottom_up(Tape& tape, const DependencyTree& tree,
                                           const std::vector<Var>& label_vecs,
                                           const TreeGruParams& p) {
  const int n = tree.size();
  auto children = children_lists(tree);
  std::vector<Var> state(n);

  // Nodes sorted by decreasing depth are a valid children-first order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> depth(n);
  for (int i = 0; i < n; ++i) depth[i] = tree_depth(tree, i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });

  Var zero = tape.input(MatX::Zero(p.hidden, 1));
  for (int i : order) {
    Var sum_left = zero, sum_right = zero;
    for (int c : children[i]) {
      if (c < i)
        sum_left = add(sum_left, state[c]);
      else
        sum_right = add(sum_right, state[c]);
    }
    Var l = label_vecs[i];
    Var r_left = sigmoid(detail::gate_preact(tape, p.up_rL, l, sum_left, &sum_right));
    Var r_right = sigmoid(detail::gate_preact(tape, p.up_rR, l, sum_left, &sum_right));
    Var z_left = sigmoid(detail::gate_preact(tape, p.up_zL, l, sum_left, &sum_right));
    Var z_right = sigmoid(detail::gate_preact(tape, p.up_zR, l, sum_left, &sum_right));
    Var z_cand = sigmoid(detail::gate_preact(tape, p.up_z, l, sum_left, &sum_right));
    Var gated_left = hadamard(r_left, sum_left);
    Var gated_right = hadamard(r_right, sum_right);
    Var cand = tanh(detail::gate_preact(tape, p.up_cand, l, gated_left, &gated_right));
    state[i] = add(add(hadamard(z_left, sum_left), hadamard(z_right, sum_right)),
                   hadamard(z_cand, cand));
  }
  return state;
}

// Parent-before-children pass; the root sees a zero parent state.
inline std::vector<Var> tree_gru_top_down(Tape& tape, const DependencyTree& tree,
                                          const std::vector<Var>& label_vecs,
                                          const TreeGruParams& p) {
  const int n = tree.size();
  std::vector<Var> state(n);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> depth(n);
  for (int i = 0; i < n; ++i) depth[i] = tree_depth(tree, i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] < depth[b]; });

  Var zero = tape.input(MatX::Zero(p.hidden, 1));
  for (int i : order) {
    Var parent_state = tree.heads[i] < 0 ? zero : state[tree.heads[i]];
    Var l = label_vecs[i];
    Var r = sigmoid(detail::gate_preact(tape, p.down_rP, l, parent_state, nullptr));
    Var z_parent = sigmoid(detail::gate_preact(tape, p.down_zP, l, parent_state, nullptr));
    Var z_cand = sigmoid(detail::gate_preact(tape, p.down_z, l, parent_state, nullptr));
    Var cand = tanh(detail::gate_preact(tape, p.down_cand, l, hadamard(r, parent_state), nullptr));
    state[i] = add(hadamard(z_parent, parent_state), hadamard(z_cand, cand));
  }
  return state;
}

// Per-token representation h_up ++ h_down, dimension 2 * hidden. Predicate
// independent: the same vectors serve every predicate of the sentence.
inline std::vector<Var> tree_gru_encode(Tape& tape, const DependencyTree& tree,
                                        const std::vector<Var>& label_vecs,
                                        const TreeGruParams& p) {
  auto up = tree_gru_bottom_up(tape, tree, label_vecs, p);
  auto down = tree_gru_top_down(tape, tree, label_vecs, p);
  std::vector<Var> out;
  out.reserve(tree.size());
  for (int i = 0; i < tree.size(); ++i) out.push_back(concat<double>({up[i], down[i]}));
  return out;
}

}  // namespace srl
