#pragma once

#include <string>
#include <vector>

#include "srl/treebank/types.hpp"

namespace srl {

// Tags a frame as a BIO sequence: span [j,k] with role X becomes B-X at j and
// I-X on j+1..k; the predicate token gets B-V when no argument span covers it;
// everything else is O.
inline TagSequence spans_to_bio(const PredicateFrame& frame, int n_tokens) {
  validate_frame(frame, n_tokens);
  TagSequence tags(n_tokens, "O");
  for (const auto& s : frame.spans) {
    tags[s.start] = "B-" + s.role;
    for (int i = s.start + 1; i <= s.end; ++i) tags[i] = "I-" + s.role;
  }
  if (tags[frame.predicate] == "O") tags[frame.predicate] = "B-V";
  return tags;
}

inline bool tags_legal(const TagSequence& tags) {
  for (size_t i = 0; i < tags.size(); ++i) {
    const std::string& t = tags[i];
    if (t == "O") continue;
    if (t.size() < 3 || (t[0] != 'B' && t[0] != 'I') || t[1] != '-') return false;
    if (t[0] == 'I') {
      if (i == 0) return false;
      const std::string& prev = tags[i - 1];
      if (prev == "O" || prev.substr(2) != t.substr(2)) return false;
    }
  }
  return true;
}

// Maximal B-X (I-X)* runs as spans, with verb (V) runs dropped. Throws on
// illegal sequences.
inline std::vector<LabeledSpan> bio_to_spans(const TagSequence& tags) {
  if (!tags_legal(tags)) throw DataError("bio_to_spans: illegal tag sequence");
  std::vector<LabeledSpan> spans;
  for (int i = 0; i < static_cast<int>(tags.size());) {
    if (tags[i][0] != 'B') {
      ++i;
      continue;
    }
    const std::string role = tags[i].substr(2);
    int j = i + 1;
    while (j < static_cast<int>(tags.size()) && tags[j] == "I-" + role) ++j;
    if (role != "V") spans.push_back({role, i, j - 1});
    i = j;
  }
  return spans;
}

// Rebuilds a frame from tags; requires exactly one V run, whose start is the
// predicate position.
inline PredicateFrame bio_to_frame(const TagSequence& tags) {
  if (!tags_legal(tags)) throw DataError("bio_to_frame: illegal tag sequence");
  int predicate = -1;
  for (int i = 0; i < static_cast<int>(tags.size()); ++i) {
    if (tags[i] == "B-V") {
      if (predicate >= 0) throw DataError("bio_to_frame: multiple V spans");
      predicate = i;
    }
  }
  if (predicate < 0) throw DataError("bio_to_frame: no V span");
  PredicateFrame f;
  f.predicate = predicate;
  f.spans = bio_to_spans(tags);
  return f;
}

}  // namespace srl
