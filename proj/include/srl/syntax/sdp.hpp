#pragma once

#include <utility>
#include <vector>

#include "srl/numerics/ops.hpp"
#include "srl/syntax/label_embeddings.hpp"
#include "srl/treebank/tree_ops.hpp"

namespace srl {

// Shortest dependency path between the focused word and the predicate, split
// at their lowest common ancestor. Both halves include their endpoints, so
// each is non-empty and the max-pool below is total.

struct SdpPaths {
  int ancestor = 0;
  std::vector<int> from_word;       // i .. ancestor
  std::vector<int> from_predicate;  // p .. ancestor
};

inline SdpPaths sdp_paths(const DependencyTree& tree, int word, int predicate) {
  SdpPaths paths;
  paths.ancestor = lca(tree, word, predicate);
  paths.from_word = path_to_ancestor(tree, word, paths.ancestor);
  paths.from_predicate = path_to_ancestor(tree, predicate, paths.ancestor);
  return paths;
}

// Coordinate-wise max over a set of label embeddings, folded left to right.
inline Var max_pool_labels(Tape& tape, const std::vector<Var>& label_vecs,
                           const std::vector<int>& nodes) {
  Var pooled = label_vecs[nodes[0]];
  for (size_t k = 1; k < nodes.size(); ++k)
    pooled = elementwise_max(pooled, label_vecs[nodes[k]]);
  return pooled;
}

// Max-pool of the word-side path labels concatenated with the max-pool of the
// predicate-side path labels; dimension 2 * label_dim.
inline Var sdp_encode(Tape& tape, const DependencyTree& tree, const std::vector<Var>& label_vecs,
                      int word, int predicate) {
  auto paths = sdp_paths(tree, word, predicate);
  Var word_side = max_pool_labels(tape, label_vecs, paths.from_word);
  Var pred_side = max_pool_labels(tape, label_vecs, paths.from_predicate);
  return concat<double>({word_side, pred_side});
}

}  // namespace srl
