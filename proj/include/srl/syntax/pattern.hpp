#pragma once

#include <array>
#include <string>

#include "srl/numerics/init.hpp"
#include "srl/numerics/ops.hpp"
#include "srl/numerics/store.hpp"
#include "srl/syntax/label_embeddings.hpp"
#include "srl/treebank/tree_ops.hpp"

namespace srl {

// Structural relation classes between the focused word and the predicate,
// decided by the pair of edge distances (word->lca, predicate->lca). The
// classification is total: every pair of nodes lands in exactly one class.
enum class Pattern {
  Self,
  Child,
  Parent,
  Grandchild,
  Grandparent,
  Sibling,
  Descendant,
  Ancestor,
  Other,
};

constexpr int kNumPatterns = 9;

inline const std::array<std::string, kNumPatterns>& pattern_names() {
  static const std::array<std::string, kNumPatterns> names = {
      "self",        "child",     "parent",  "grandchild", "grandparent",
      "sibling",     "descendant", "ancestor", "other"};
  return names;
}

inline const std::string& pattern_name(Pattern p) { return pattern_names()[static_cast<int>(p)]; }

inline Pattern classify_pattern(int dist_word, int dist_predicate) {
  if (dist_word == 0 && dist_predicate == 0) return Pattern::Self;
  if (dist_word == 1 && dist_predicate == 0) return Pattern::Child;
  if (dist_word == 0 && dist_predicate == 1) return Pattern::Parent;
  if (dist_word == 2 && dist_predicate == 0) return Pattern::Grandchild;
  if (dist_word == 0 && dist_predicate == 2) return Pattern::Grandparent;
  if (dist_word == 1 && dist_predicate == 1) return Pattern::Sibling;
  if (dist_predicate == 0) return Pattern::Descendant;  // dist_word > 2
  if (dist_word == 0) return Pattern::Ancestor;         // dist_predicate > 2
  return Pattern::Other;
}

inline Pattern pattern_extract(const DependencyTree& tree, int word, int predicate) {
  const int a = lca(tree, word, predicate);
  return classify_pattern(edge_distance_to_ancestor(tree, word, a),
                          edge_distance_to_ancestor(tree, predicate, a));
}

struct PatternInventory {
  Tensor* table = nullptr;  // kNumPatterns x dim

  int dim() const { return static_cast<int>(table->cols()); }
};

inline PatternInventory make_pattern_inventory(ParameterStore& store, const std::string& prefix,
                                               int dim, Rng& rng) {
  PatternInventory inv;
  inv.table = &store.add(prefix + ".table", kNumPatterns, dim);
  init_uniform(*inv.table, rng);
  return inv;
}

// Pattern embedding plus the three relation labels that situate the pair in
// the tree: the word's own label, the lowest common ancestor's label, and the
// predicate's label. Dimension pattern_dim + 3 * label_dim.
inline Var pe_encode(Tape& tape, const DependencyTree& tree, const std::vector<Var>& label_vecs,
                     const PatternInventory& inventory, int word, int predicate) {
  const int a = lca(tree, word, predicate);
  Pattern pt = pattern_extract(tree, word, predicate);
  Var pattern = embedding_lookup(tape.param(*inventory.table), static_cast<int>(pt));
  return concat<double>({pattern, label_vecs[word], label_vecs[a], label_vecs[predicate]});
}

}  // namespace srl
