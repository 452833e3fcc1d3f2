#pragma once

#include <stdexcept>
#include <vector>

#include "srl/treebank/types.hpp"

namespace srl {

inline int tree_depth(const DependencyTree& t, int i) {
  int d = 0;
  for (int v = i; t.heads[v] >= 0; v = t.heads[v]) ++d;
  return d;
}

// children[h] lists the dependents of h in ascending token order.
inline std::vector<std::vector<int>> children_lists(const DependencyTree& t) {
  std::vector<std::vector<int>> children(t.size());
  for (int i = 0; i < t.size(); ++i)
    if (t.heads[i] >= 0) children[t.heads[i]].push_back(i);
  return children;
}

// Lowest common ancestor of i and j (a node is its own ancestor).
inline int lca(const DependencyTree& t, int i, int j) {
  const int n = t.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("lca: index out of range");
  std::vector<char> on_path(n, 0);
  for (int v = i;; v = t.heads[v]) {
    on_path[v] = 1;
    if (t.heads[v] < 0) break;
  }
  for (int v = j;; v = t.heads[v]) {
    if (on_path[v]) return v;
    if (t.heads[v] < 0) break;
  }
  throw std::invalid_argument("lca: nodes are not in the same tree");
}

// The node sequence [i, parent(i), ..., a], endpoint-inclusive on both sides,
// so path(i, i) == [i]. `a` must be an ancestor-or-self of i.
inline std::vector<int> path_to_ancestor(const DependencyTree& t, int i, int a) {
  const int n = t.size();
  if (i < 0 || i >= n || a < 0 || a >= n)
    throw std::invalid_argument("path_to_ancestor: index out of range");
  std::vector<int> path;
  for (int v = i;; v = t.heads[v]) {
    path.push_back(v);
    if (v == a) return path;
    if (t.heads[v] < 0) break;
  }
  throw std::invalid_argument("path_to_ancestor: node " + std::to_string(a + 1) +
                              " is not an ancestor of " + std::to_string(i + 1));
}

// Number of tree edges between i and an ancestor-or-self a.
inline int edge_distance_to_ancestor(const DependencyTree& t, int i, int a) {
  return static_cast<int>(path_to_ancestor(t, i, a).size()) - 1;
}

}  // namespace srl
