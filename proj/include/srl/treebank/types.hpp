#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "srl/errors.hpp"

namespace srl {

// Token indices are 0-based everywhere inside the library; the CoNLL readers
// and writers convert from/to the 1-based external convention.

struct Sentence {
  std::vector<std::string> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
};

inline void validate_sentence(const Sentence& s) {
  if (s.tokens.empty()) throw DataError("sentence: empty");
  for (const auto& t : s.tokens) {
    if (t.empty() || t.find_first_of(" \t\n\r") != std::string::npos)
      throw DataError("sentence: token '" + t + "' is empty or has whitespace");
  }
}

// One dependency tree: heads[i] is the 0-based parent of token i, -1 for the
// root. labels[i] is the relation between token i and its head (the root
// carries the root relation label).
struct DependencyTree {
  std::vector<int> heads;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(heads.size()); }
  int parent(int i) const { return heads[i]; }
  int root() const {
    for (int i = 0; i < size(); ++i)
      if (heads[i] < 0) return i;
    return -1;
  }
};

// Checks the structural invariants: sizes agree, exactly one root, no
// self-loops, every node reaches the root.
inline void validate_tree(const DependencyTree& t) {
  const int n = t.size();
  if (n == 0) throw DataError("tree: empty");
  if (static_cast<int>(t.labels.size()) != n)
    throw DataError("tree: heads/labels size mismatch");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (t.heads[i] == i) throw DataError("tree: node " + std::to_string(i + 1) + " is its own head");
    if (t.heads[i] < -1 || t.heads[i] >= n)
      throw DataError("tree: node " + std::to_string(i + 1) + " has out-of-range head");
    if (t.heads[i] < 0) ++roots;
  }
  if (roots != 1)
    throw DataError("tree: expected exactly one root, found " + std::to_string(roots));
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    for (int v = i; v >= 0; v = t.heads[v]) {
      if (++steps > n) throw DataError("tree: cycle reachable from node " + std::to_string(i + 1));
    }
  }
}

// A labeled argument span, inclusive on both ends.
struct LabeledSpan {
  std::string role;
  int start = 0;
  int end = 0;

  bool operator==(const LabeledSpan&) const = default;
};

inline bool spans_overlap(const LabeledSpan& a, const LabeledSpan& b) {
  return a.start <= b.end && b.start <= a.end;
}

// One predicate and its labeled argument spans. The verb span itself is not
// stored as an argument; `predicate` carries its position. `lemma` is the
// target-column string from the props file (the token itself for predictions).
struct PredicateFrame {
  int predicate = 0;
  std::string lemma;
  std::vector<LabeledSpan> spans;

  bool operator==(const PredicateFrame&) const = default;
};

inline void sort_spans(std::vector<LabeledSpan>& spans) {
  std::sort(spans.begin(), spans.end(), [](const LabeledSpan& a, const LabeledSpan& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
}

inline void validate_frame(const PredicateFrame& f, int n_tokens) {
  if (f.predicate < 0 || f.predicate >= n_tokens)
    throw DataError("frame: predicate index out of range");
  auto spans = f.spans;
  sort_spans(spans);
  for (size_t k = 0; k < spans.size(); ++k) {
    const auto& s = spans[k];
    if (s.start < 0 || s.end >= n_tokens || s.start > s.end)
      throw DataError("frame: span [" + std::to_string(s.start + 1) + "," +
                      std::to_string(s.end + 1) + "] out of range");
    if (k > 0 && spans[k - 1].end >= s.start)
      throw DataError("frame: overlapping spans " + spans[k - 1].role + " and " + s.role);
  }
}

// Per-token BIO tags over {B,I} x roles plus O.
using TagSequence = std::vector<std::string>;

}  // namespace srl
