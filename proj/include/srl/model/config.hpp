#pragma once

#include <string>

#include "srl/errors.hpp"

namespace srl {

// Which syntax-aware representation is concatenated to the basic input.
enum class SyntaxMode { None, TreeGru, Sdp, Tpf, Pe };

inline std::string syntax_mode_name(SyntaxMode m) {
  switch (m) {
    case SyntaxMode::None: return "none";
    case SyntaxMode::TreeGru: return "tree-gru";
    case SyntaxMode::Sdp: return "sdp";
    case SyntaxMode::Tpf: return "tpf";
    case SyntaxMode::Pe: return "pe";
  }
  return "none";
}

inline SyntaxMode syntax_mode_from_name(const std::string& name) {
  if (name == "none") return SyntaxMode::None;
  if (name == "tree-gru" || name == "treegru") return SyntaxMode::TreeGru;
  if (name == "sdp") return SyntaxMode::Sdp;
  if (name == "tpf") return SyntaxMode::Tpf;
  if (name == "pe") return SyntaxMode::Pe;
  throw ConfigError("unknown syntax mode '" + name + "'");
}

struct ModelConfig {
  int word_dim = 100;
  int pred_dim = 100;
  int label_dim = 100;
  int pattern_dim = 100;
  int tpf_dim = 100;
  int tpf_clip = 7;
  int tree_gru_hidden = 100;
  int hidden_dim = 300;
  int num_layers = 4;
  SyntaxMode syntax = SyntaxMode::None;
  int external_dim = 0;

  int syntax_dim() const {
    switch (syntax) {
      case SyntaxMode::None: return 0;
      case SyntaxMode::TreeGru: return 2 * tree_gru_hidden;
      case SyntaxMode::Sdp: return 2 * label_dim;
      case SyntaxMode::Tpf: return tpf_dim;
      case SyntaxMode::Pe: return pattern_dim + 3 * label_dim;
    }
    return 0;
  }

  int input_dim() const { return word_dim + pred_dim + syntax_dim() + external_dim; }

  void validate() const {
    if (word_dim <= 0 || pred_dim <= 0) throw ConfigError("config: embedding dims must be positive");
    if (hidden_dim <= 0 || num_layers <= 0) throw ConfigError("config: encoder dims must be positive");
    if (external_dim < 0) throw ConfigError("config: external_dim must be >= 0");
    if (syntax != SyntaxMode::None &&
        (label_dim <= 0 || pattern_dim <= 0 || tpf_dim <= 0 || tree_gru_hidden <= 0 || tpf_clip < 0))
      throw ConfigError("config: syntax dims must be positive");
  }
};

}  // namespace srl
