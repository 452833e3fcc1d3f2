#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "srl/decode/decode.hpp"
#include "srl/model/config.hpp"
#include "srl/model/encoder.hpp"
#include "srl/model/external.hpp"
#include "srl/numerics/checkpoint.hpp"
#include "srl/syntax/pattern.hpp"
#include "srl/syntax/sdp.hpp"
#include "srl/syntax/tpf.hpp"
#include "srl/syntax/tree_gru.hpp"
#include "srl/treebank/bio.hpp"

namespace srl {

// The tagger: predicate-indicator input layer, alternating-direction highway
// LSTM stack, per-token softmax over the BIO tag set, and constrained Viterbi
// on top. Construction is deterministic for a fixed (config, vocabs, seed).
class SrlModel {
 public:
  SrlModel(ModelConfig config, Vocabulary words, Vocabulary labels,
           std::vector<std::string> roles, std::uint64_t seed)
      : config_(config),
        words_(std::move(words)),
        labels_(std::move(labels)),
        layout_(std::move(roles)),
        mask_(build_transition_mask(layout_)) {
    config_.validate();
    Rng rng(seed);
    word_table_ = &store_.add("input.word", words_.size(), config_.word_dim);
    init_uniform(*word_table_, rng);
    pred_table_ = &store_.add("input.predicate", 2, config_.pred_dim);
    init_uniform(*pred_table_, rng);
    if (needs_labels()) {
      label_table_ = &store_.add("syntax.label", labels_.size(), config_.label_dim);
      init_uniform(*label_table_, rng);
    }
    switch (config_.syntax) {
      case SyntaxMode::TreeGru:
        tree_gru_ = make_tree_gru_params(store_, "syntax.tree_gru", config_.label_dim,
                                         config_.tree_gru_hidden, rng);
        break;
      case SyntaxMode::Tpf:
        tpf_ = make_tpf_table(store_, "syntax.tpf", config_.tpf_dim, config_.tpf_clip, rng);
        break;
      case SyntaxMode::Pe:
        patterns_ = make_pattern_inventory(store_, "syntax.pattern", config_.pattern_dim, rng);
        break;
      default:
        break;
    }
    encoder_ = make_encoder_params(store_, "encoder", config_.input_dim(), config_.hidden_dim,
                                   config_.num_layers, rng);
    classifier_W_ = &store_.add("classifier.W", layout_.num_tags(), config_.hidden_dim);
    classifier_b_ = &store_.add("classifier.b", layout_.num_tags(), 1);
    init_scaled_gaussian(*classifier_W_, rng);
  }

  const ModelConfig& config() const { return config_; }
  const Vocabulary& words() const { return words_; }
  const Vocabulary& labels() const { return labels_; }
  const TagLayout& tag_layout() const { return layout_; }
  const TransitionMask& transition_mask() const { return mask_; }
  ParameterStore& store() { return store_; }
  const ParameterStore& store() const { return store_; }

  // x_i = word embedding ++ predicate indicator ++ (syntax vector) ++
  // (external vector). Vectors, when given, must supply one entry per token.
  std::vector<Var> build_input(Tape& tape, const Sentence& sentence, int predicate,
                               const std::vector<Var>* syntax_vecs,
                               const MatX* external_vecs) const {
    const int n = sentence.size();
    if (predicate < 0 || predicate >= n)
      throw std::invalid_argument("build_input: predicate index out of range");
    if (syntax_vecs && static_cast<int>(syntax_vecs->size()) != n)
      throw std::invalid_argument("build_input: syntax vector count != token count");
    if (config_.external_dim > 0) {
      if (!external_vecs)
        throw std::invalid_argument("build_input: external vectors required by config");
      if (external_vecs->rows() != n || external_vecs->cols() != config_.external_dim)
        throw std::invalid_argument("build_input: external vector shape mismatch");
    }
    Var word_table = tape.param(*word_table_);
    Var pred_table = tape.param(*pred_table_);
    std::vector<Var> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Var> parts;
      parts.push_back(embedding_lookup(word_table, words_.lookup(sentence.tokens[i])));
      parts.push_back(embedding_lookup(pred_table, i == predicate ? 1 : 0));
      if (syntax_vecs) parts.push_back((*syntax_vecs)[i]);
      if (config_.external_dim > 0)
        parts.push_back(tape.input(external_vecs->row(i).transpose()));
      xs.push_back(concat<double>(parts));
    }
    return xs;
  }

  // Per-token syntax vectors for the configured mode; empty optional for the
  // baseline.
  std::optional<std::vector<Var>> syntax_vectors(Tape& tape, const DependencyTree& tree,
                                                 int predicate) const {
    if (config_.syntax == SyntaxMode::None) return std::nullopt;
    std::vector<Var> label_vecs;
    if (needs_labels())
      label_vecs = lookup_labels(tape, tree, LabelEmbeddings{label_table_, &labels_});
    std::vector<Var> out;
    out.reserve(tree.size());
    switch (config_.syntax) {
      case SyntaxMode::TreeGru:
        out = tree_gru_encode(tape, tree, label_vecs, tree_gru_);
        break;
      case SyntaxMode::Sdp:
        for (int i = 0; i < tree.size(); ++i)
          out.push_back(sdp_encode(tape, tree, label_vecs, i, predicate));
        break;
      case SyntaxMode::Tpf:
        for (int i = 0; i < tree.size(); ++i)
          out.push_back(tpf_encode(tape, tpf_extract(tree, i, predicate, config_.tpf_clip), tpf_));
        break;
      case SyntaxMode::Pe:
        for (int i = 0; i < tree.size(); ++i)
          out.push_back(pe_encode(tape, tree, label_vecs, patterns_, i, predicate));
        break;
      default:
        break;
    }
    return out;
  }

  // Per-token log tag distributions.
  std::vector<Var> forward(Tape& tape, const Sentence& sentence, const DependencyTree& tree,
                           int predicate, const MatX* external_vecs = nullptr) const {
    auto syn = syntax_vectors(tape, tree, predicate);
    auto xs = build_input(tape, sentence, predicate, syn ? &*syn : nullptr, external_vecs);
    auto hs = encode(tape, xs, encoder_);
    std::vector<Var> dists;
    dists.reserve(hs.size());
    Var W = tape.param(*classifier_W_);
    Var b = tape.param(*classifier_b_);
    for (Var h : hs) dists.push_back(log_softmax(affine(W, h, b)));
    return dists;
  }

  // Mean per-token negative log-likelihood of the gold tags.
  Var loss(Tape& tape, const Sentence& sentence, const DependencyTree& tree, int predicate,
           const std::vector<int>& gold_tags, const MatX* external_vecs = nullptr) const {
    auto dists = forward(tape, sentence, tree, predicate, external_vecs);
    if (gold_tags.size() != dists.size())
      throw std::invalid_argument("loss: gold tag count != token count");
    std::vector<Var> nlls;
    nlls.reserve(dists.size());
    for (size_t i = 0; i < dists.size(); ++i)
      nlls.push_back(scale(pick(dists[i], gold_tags[i]), -1.0));
    return scale(sum_scalars(nlls), 1.0 / static_cast<double>(dists.size()));
  }

  // Sum of per-position log-probabilities of a tag sequence under the given
  // per-token distributions, accumulated left to right like the decoders.
  static double sequence_score(const MatX& log_dists, const std::vector<int>& tags) {
    if (static_cast<int>(tags.size()) != log_dists.rows())
      throw std::invalid_argument("sequence_score: tag count != position count");
    double score = 0;
    for (int i = 0; i < log_dists.rows(); ++i) score += log_dists(i, tags[i]);
    return score;
  }

  // The n x T lattice of log tag probabilities (no gradients recorded).
  MatX lattice(const Sentence& sentence, const DependencyTree& tree, int predicate,
               const MatX* external_vecs = nullptr) const {
    Tape tape;
    auto dists = forward(tape, sentence, tree, predicate, external_vecs);
    MatX m(sentence.size(), layout_.num_tags());
    for (int i = 0; i < sentence.size(); ++i) m.row(i) = tape.value(dists[i]).transpose();
    return m;
  }

  PredicateFrame predict(const Sentence& sentence, const DependencyTree& tree, int predicate,
                         const MatX* external_vecs = nullptr) const {
    return frame_from_lattice(lattice(sentence, tree, predicate, external_vecs), sentence,
                              predicate);
  }

  // Averages the member models' log distributions, then decodes once. The
  // members must share one tag set.
  static PredicateFrame ensemble_predict(const std::vector<const SrlModel*>& models,
                                         const Sentence& sentence, const DependencyTree& tree,
                                         int predicate, const MatX* external_vecs = nullptr) {
    if (models.empty()) throw std::invalid_argument("ensemble_predict: no models");
    for (const SrlModel* m : models)
      if (m->layout_.roles() != models[0]->layout_.roles())
        throw std::invalid_argument("ensemble_predict: models disagree on the tag set");
    MatX sum = MatX::Zero(sentence.size(), models[0]->layout_.num_tags());
    for (const SrlModel* m : models) sum += m->lattice(sentence, tree, predicate, external_vecs);
    sum /= static_cast<double>(models.size());
    return models[0]->frame_from_lattice(sum, sentence, predicate);
  }

  PredicateFrame frame_from_lattice(const MatX& log_dists, const Sentence& sentence,
                                    int predicate) const {
    DecodeResult decoded = viterbi(log_dists, mask_);
    TagSequence tags;
    tags.reserve(decoded.tags.size());
    for (int t : decoded.tags) tags.push_back(layout_.tag_name(t));
    PredicateFrame frame;
    frame.predicate = predicate;
    frame.lemma = sentence.tokens[predicate];
    // Split any argument span that covers the predicate position so the frame
    // stays representable in the props format (the V span may not overlap).
    for (const auto& s : bio_to_spans(tags)) {
      if (s.start <= predicate && predicate <= s.end) {
        if (s.start < predicate) frame.spans.push_back({s.role, s.start, predicate - 1});
        if (predicate < s.end) frame.spans.push_back({s.role, predicate + 1, s.end});
      } else {
        frame.spans.push_back(s);
      }
    }
    return frame;
  }

  // Gold tag ids for one frame, or an error when a role never seen at
  // construction shows up.
  std::vector<int> gold_tag_ids(const PredicateFrame& frame, int n_tokens) const {
    std::vector<int> ids;
    for (const auto& name : spans_to_bio(frame, n_tokens)) ids.push_back(layout_.tag_id(name));
    return ids;
  }

  void save(const std::string& path) const {
    nlohmann::json meta;
    meta["format"] = "srl-model";
    meta["config"] = {{"word_dim", config_.word_dim},
                      {"pred_dim", config_.pred_dim},
                      {"label_dim", config_.label_dim},
                      {"pattern_dim", config_.pattern_dim},
                      {"tpf_dim", config_.tpf_dim},
                      {"tpf_clip", config_.tpf_clip},
                      {"tree_gru_hidden", config_.tree_gru_hidden},
                      {"hidden_dim", config_.hidden_dim},
                      {"num_layers", config_.num_layers},
                      {"syntax", syntax_mode_name(config_.syntax)},
                      {"external_dim", config_.external_dim}};
    meta["words"] = words_.items();
    meta["labels"] = labels_.items();
    meta["roles"] = layout_.roles();
    save_checkpoint(path, store_, meta.dump());
  }

  static SrlModel load(const std::string& path) {
    CheckpointData data = load_checkpoint(path);
    nlohmann::json meta;
    try {
      meta = nlohmann::json::parse(data.metadata);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("checkpoint: bad metadata in " + path + ": " + e.what());
    }
    if (!meta.contains("format") || meta["format"] != "srl-model")
      throw DataError("checkpoint: not a model file: " + path);
    ModelConfig config;
    const auto& c = meta["config"];
    config.word_dim = c["word_dim"].get<int>();
    config.pred_dim = c["pred_dim"].get<int>();
    config.label_dim = c["label_dim"].get<int>();
    config.pattern_dim = c["pattern_dim"].get<int>();
    config.tpf_dim = c["tpf_dim"].get<int>();
    config.tpf_clip = c["tpf_clip"].get<int>();
    config.tree_gru_hidden = c["tree_gru_hidden"].get<int>();
    config.hidden_dim = c["hidden_dim"].get<int>();
    config.num_layers = c["num_layers"].get<int>();
    config.syntax = syntax_mode_from_name(c["syntax"].get<std::string>());
    config.external_dim = c["external_dim"].get<int>();
    Vocabulary words = vocab_from_items(meta["words"].get<std::vector<std::string>>());
    Vocabulary labels = vocab_from_items(meta["labels"].get<std::vector<std::string>>());
    SrlModel model(config, std::move(words), std::move(labels),
                   meta["roles"].get<std::vector<std::string>>(), /*seed=*/0);
    restore_from_checkpoint(model.store_, data);
    return model;
  }

 private:
  bool needs_labels() const {
    return config_.syntax == SyntaxMode::TreeGru || config_.syntax == SyntaxMode::Sdp ||
           config_.syntax == SyntaxMode::Pe;
  }

  static Vocabulary vocab_from_items(const std::vector<std::string>& items) {
    if (items.empty()) throw DataError("checkpoint: empty vocabulary");
    Vocabulary v(items[0]);
    for (size_t i = 1; i < items.size(); ++i) v.add(items[i]);
    return v;
  }

  ModelConfig config_;
  Vocabulary words_;
  Vocabulary labels_;
  TagLayout layout_;
  TransitionMask mask_;
  ParameterStore store_;

  Tensor* word_table_ = nullptr;
  Tensor* pred_table_ = nullptr;
  Tensor* label_table_ = nullptr;
  TreeGruParams tree_gru_;
  TpfTable tpf_;
  PatternInventory patterns_;
  EncoderParams encoder_;
  Tensor* classifier_W_ = nullptr;
  Tensor* classifier_b_ = nullptr;
};

}  // namespace srl
