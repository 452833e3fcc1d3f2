#pragma once

#include <vector>

#include "srl/numerics/ops.hpp"
#include "srl/treebank/types.hpp"
#include "srl/treebank/vocab.hpp"

namespace srl {

// View over the relation-label embedding table. The vocabulary carries the
// unknown marker at id 0, so unseen labels fall back to a trained row. One
// table is shared by every syntax encoder.
struct LabelEmbeddings {
  Tensor* table = nullptr;       // |labels| x dim
  const Vocabulary* labels = nullptr;

  int dim() const { return static_cast<int>(table->cols()); }
  int row_of(const std::string& label) const { return labels->lookup(label); }
};

// l_i for every token: the embedding of the relation between token i and its
// head (the root keeps its own root-relation label).
inline std::vector<Var> lookup_labels(Tape& tape, const DependencyTree& tree,
                                      const LabelEmbeddings& embs) {
  Var table = tape.param(*embs.table);
  std::vector<Var> out;
  out.reserve(tree.size());
  for (int i = 0; i < tree.size(); ++i)
    out.push_back(embedding_lookup(table, embs.row_of(tree.labels[i])));
  return out;
}

}  // namespace srl
