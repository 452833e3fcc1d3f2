#pragma once

// Shared fixtures and independent oracles for the test suites: the worked
// example tree, random tree/frame generators, and BFS/enumeration references
// that deliberately avoid the library's own tree walks.

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "srl/treebank/types.hpp"

namespace srltest {

using srl::DependencyTree;
using srl::LabeledSpan;
using srl::PredicateFrame;
using srl::Sentence;

// "Ms. Haag plays Elianti ." with heads [2,3,0,3,3] (1-based file convention)
// and labels [nn, nsubj, root, dobj, punct].
inline Sentence fig_sentence() { return Sentence{{"Ms.", "Haag", "plays", "Elianti", "."}}; }

inline DependencyTree fig_tree() {
  DependencyTree t;
  t.heads = {1, 2, -1, 2, 2};
  t.labels = {"nn", "nsubj", "root", "dobj", "punct"};
  return t;
}

// Predicate "plays" (index 2), A0 spanning tokens 0-1, A1 on token 3.
inline PredicateFrame fig_frame() {
  PredicateFrame f;
  f.predicate = 2;
  f.lemma = "play";
  f.spans = {{"A0", 0, 1}, {"A1", 3, 3}};
  return f;
}

inline const char* fig_conllx() {
  return
      "1\tMs.\t_\t_\t_\t_\t2\tnn\n"
      "2\tHaag\t_\t_\t_\t_\t3\tnsubj\n"
      "3\tplays\t_\t_\t_\t_\t0\troot\n"
      "4\tElianti\t_\t_\t_\t_\t3\tdobj\n"
      "5\t.\t_\t_\t_\t_\t3\tpunct\n";
}

using Rng = std::mt19937_64;

// Random rooted tree on n nodes: nodes are attached, in a random order, to a
// random already-placed node, so the result is always acyclic with one root.
inline DependencyTree random_tree(Rng& rng, int n,
                                  const std::vector<std::string>& labels = {"a", "b", "c", "d"}) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  DependencyTree t;
  t.heads.assign(n, -1);
  t.labels.assign(n, "root");
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    t.heads[order[k]] = order[pick(rng)];
    t.labels[order[k]] = labels[std::uniform_int_distribution<int>(
        0, static_cast<int>(labels.size()) - 1)(rng)];
  }
  return t;
}

// Random frame over n tokens: disjoint spans with the predicate outside all of
// them, so spans_to_bio / props round-trips are exact.
inline PredicateFrame random_frame(Rng& rng, int n,
                                   const std::vector<std::string>& roles = {"A0", "A1", "A2",
                                                                            "AM-TMP"}) {
  std::vector<int> cut;
  for (int i = 0; i < n; ++i)
    if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.4) cut.push_back(i);

  PredicateFrame f;
  f.lemma = "w" + std::to_string(std::uniform_int_distribution<int>(0, 99)(rng));
  std::vector<std::pair<int, int>> segments;
  int start = 0;
  for (int c : cut) {
    if (start <= c) segments.emplace_back(start, c);
    start = c + 1;
  }
  if (start < n) segments.emplace_back(start, n - 1);

  std::shuffle(segments.begin(), segments.end(), rng);
  f.predicate = segments.back().first;  // a segment kept span-free
  segments.pop_back();
  for (const auto& [s, e] : segments) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.6) {
      f.spans.push_back({roles[std::uniform_int_distribution<int>(
                             0, static_cast<int>(roles.size()) - 1)(rng)],
                         s, e});
    }
  }
  srl::sort_spans(f.spans);
  return f;
}

// Edge distance by breadth-first search over the undirected tree; independent
// of the depth/path arithmetic in the library.
inline int bfs_distance(const DependencyTree& t, int from, int to) {
  const int n = t.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (t.heads[i] >= 0) {
      adj[i].push_back(t.heads[i]);
      adj[t.heads[i]].push_back(i);
    }
  }
  std::vector<int> dist(n, -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) return dist[v];
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

// LCA by comparing the two root paths from the root downward.
inline int lca_oracle(const DependencyTree& t, int i, int j) {
  auto root_path = [&](int v) {
    std::vector<int> path;
    for (int u = v;; u = t.heads[u]) {
      path.push_back(u);
      if (t.heads[u] < 0) break;
    }
    std::reverse(path.begin(), path.end());  // root first
    return path;
  };
  auto pi = root_path(i);
  auto pj = root_path(j);
  int ans = pi[0];
  for (size_t k = 1; k < std::min(pi.size(), pj.size()); ++k) {
    if (pi[k] != pj[k]) break;
    ans = pi[k];
  }
  return ans;
}

// Ancestor list of v, self first, root last.
inline std::vector<int> ancestors_of(const DependencyTree& t, int v) {
  std::vector<int> out;
  for (int u = v;; u = t.heads[u]) {
    out.push_back(u);
    if (t.heads[u] < 0) break;
  }
  return out;
}

}  // namespace srltest
