#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "srl/errors.hpp"
#include "srl/treebank/conllx.hpp"
#include "srl/treebank/props.hpp"
#include "srl/treebank/types.hpp"
#include "srl/treebank/vocab.hpp"

namespace srl {

struct CorpusEntry {
  Sentence sentence;
  DependencyTree tree;
  std::vector<PredicateFrame> frames;
};

using Corpus = std::vector<CorpusEntry>;

inline Corpus zip_corpus(std::vector<std::pair<Sentence, DependencyTree>> parses,
                         std::vector<std::vector<PredicateFrame>> frames) {
  if (parses.size() != frames.size())
    throw DataError("corpus: " + std::to_string(parses.size()) + " parsed sentences but " +
                    std::to_string(frames.size()) + " props blocks");
  Corpus corpus;
  corpus.reserve(parses.size());
  for (size_t s = 0; s < parses.size(); ++s) {
    CorpusEntry entry{std::move(parses[s].first), std::move(parses[s].second),
                      std::move(frames[s])};
    for (const auto& f : entry.frames) validate_frame(f, entry.sentence.size());
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

inline Corpus load_corpus(const std::string& deps_path, const std::string& props_path) {
  return zip_corpus(parse_conllx(read_file(deps_path)), parse_props(read_file(props_path)));
}

struct CorpusVocabularies {
  Vocabulary words{"<unk>"};
  Vocabulary labels{"<unk>"};
  std::vector<std::string> roles;  // sorted; always contains V
};

// Open vocabularies from the training data. Roles are sorted so that the tag
// layout is reproducible regardless of corpus order.
inline CorpusVocabularies build_vocabularies(const Corpus& corpus) {
  CorpusVocabularies v;
  for (const auto& entry : corpus) {
    for (const auto& tok : entry.sentence.tokens) v.words.add(tok);
    for (const auto& label : entry.tree.labels) v.labels.add(label);
    for (const auto& frame : entry.frames)
      for (const auto& span : frame.spans)
        if (std::find(v.roles.begin(), v.roles.end(), span.role) == v.roles.end())
          v.roles.push_back(span.role);
  }
  if (std::find(v.roles.begin(), v.roles.end(), "V") == v.roles.end()) v.roles.push_back("V");
  std::sort(v.roles.begin(), v.roles.end());
  return v;
}

inline std::vector<std::vector<PredicateFrame>> gold_frames(const Corpus& corpus) {
  std::vector<std::vector<PredicateFrame>> out;
  out.reserve(corpus.size());
  for (const auto& entry : corpus) out.push_back(entry.frames);
  return out;
}

inline std::vector<int> token_counts(const Corpus& corpus) {
  std::vector<int> out;
  out.reserve(corpus.size());
  for (const auto& entry : corpus) out.push_back(entry.sentence.size());
  return out;
}

}  // namespace srl
