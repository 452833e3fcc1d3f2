#pragma once

#include <algorithm>
#include <utility>

#include "srl/numerics/init.hpp"
#include "srl/numerics/ops.hpp"
#include "srl/numerics/store.hpp"
#include "srl/treebank/tree_ops.hpp"

namespace srl {

// Tree-based position feature: the pair of edge distances from the predicate
// and from the focused word to their lowest common ancestor, both clipped so
// the embedding table stays finite.

struct TpfPair {
  int from_predicate = 0;
  int from_word = 0;

  bool operator==(const TpfPair&) const = default;
};

inline TpfPair tpf_extract(const DependencyTree& tree, int word, int predicate, int clip = 7) {
  const int a = lca(tree, word, predicate);
  TpfPair pair;
  pair.from_predicate = std::min(edge_distance_to_ancestor(tree, predicate, a), clip);
  pair.from_word = std::min(edge_distance_to_ancestor(tree, word, a), clip);
  return pair;
}

// One embedding row per clipped pair: (clip+1)^2 rows.
struct TpfTable {
  Tensor* table = nullptr;
  int clip = 7;

  int dim() const { return static_cast<int>(table->cols()); }
  int row_of(TpfPair p) const {
    return std::min(p.from_predicate, clip) * (clip + 1) + std::min(p.from_word, clip);
  }
};

inline TpfTable make_tpf_table(ParameterStore& store, const std::string& prefix, int dim, int clip,
                               Rng& rng) {
  TpfTable t;
  t.clip = clip;
  t.table = &store.add(prefix + ".table", (clip + 1) * (clip + 1), dim);
  init_uniform(*t.table, rng);
  return t;
}

inline Var tpf_encode(Tape& tape, TpfPair pair, const TpfTable& table) {
  return embedding_lookup(tape.param(*table.table), table.row_of(pair));
}

}  // namespace srl
