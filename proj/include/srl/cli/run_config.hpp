#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "json.hpp"
#include "srl/errors.hpp"
#include "srl/model/config.hpp"
#include "srl/model/train.hpp"

namespace srl {

// One run = data paths + model dimensions + optimizer settings + seed, loaded
// from a JSON file; command-line flags override individual fields.
struct RunConfig {
  std::string train_deps, train_props;
  std::string dev_deps, dev_props;
  std::string external_vectors;      // optional JSON-lines sidecar
  std::string dev_external_vectors;  // optional
  std::string checkpoint_dir = ".";

  ModelConfig model;
  TrainConfig optimizer;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

inline RunConfig parse_run_config(const nlohmann::json& j) {
  RunConfig rc;
  auto str = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = j.at(key).get<std::string>();
  };
  auto num = [&](const char* key, int& out) {
    if (j.contains(key)) out = j.at(key).get<int>();
  };
  auto real = [&](const char* key, double& out) {
    if (j.contains(key)) out = j.at(key).get<double>();
  };
  try {
    str("train_deps", rc.train_deps);
    str("train_props", rc.train_props);
    str("dev_deps", rc.dev_deps);
    str("dev_props", rc.dev_props);
    str("external_vectors", rc.external_vectors);
    str("dev_external_vectors", rc.dev_external_vectors);
    str("checkpoint_dir", rc.checkpoint_dir);
    num("word_dim", rc.model.word_dim);
    num("pred_dim", rc.model.pred_dim);
    num("label_dim", rc.model.label_dim);
    num("pattern_dim", rc.model.pattern_dim);
    num("tpf_dim", rc.model.tpf_dim);
    num("tpf_clip", rc.model.tpf_clip);
    num("tree_gru_hidden", rc.model.tree_gru_hidden);
    num("hidden_dim", rc.model.hidden_dim);
    num("num_layers", rc.model.num_layers);
    num("external_dim", rc.model.external_dim);
    if (j.contains("syntax"))
      rc.model.syntax = syntax_mode_from_name(j.at("syntax").get<std::string>());
    real("rho", rc.optimizer.rho);
    real("eps", rc.optimizer.eps);
    real("clip_norm", rc.optimizer.clip_norm);
    num("batch_size", rc.optimizer.batch_size);
    num("epochs", rc.optimizer.epochs);
    if (j.contains("seed")) {
      rc.seed = j.at("seed").get<std::uint64_t>();
      rc.seed_set = true;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return rc;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return parse_run_config(j);
}

inline nlohmann::json run_config_to_json(const RunConfig& rc) {
  return nlohmann::json{{"train_deps", rc.train_deps},
                        {"train_props", rc.train_props},
                        {"dev_deps", rc.dev_deps},
                        {"dev_props", rc.dev_props},
                        {"external_vectors", rc.external_vectors},
                        {"dev_external_vectors", rc.dev_external_vectors},
                        {"checkpoint_dir", rc.checkpoint_dir},
                        {"word_dim", rc.model.word_dim},
                        {"pred_dim", rc.model.pred_dim},
                        {"label_dim", rc.model.label_dim},
                        {"pattern_dim", rc.model.pattern_dim},
                        {"tpf_dim", rc.model.tpf_dim},
                        {"tpf_clip", rc.model.tpf_clip},
                        {"tree_gru_hidden", rc.model.tree_gru_hidden},
                        {"hidden_dim", rc.model.hidden_dim},
                        {"num_layers", rc.model.num_layers},
                        {"external_dim", rc.model.external_dim},
                        {"syntax", syntax_mode_name(rc.model.syntax)},
                        {"rho", rc.optimizer.rho},
                        {"eps", rc.optimizer.eps},
                        {"clip_norm", rc.optimizer.clip_norm},
                        {"batch_size", rc.optimizer.batch_size},
                        {"epochs", rc.optimizer.epochs},
                        {"seed", rc.seed}};
}

}  // namespace srl
