#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "srl/errors.hpp"
#include "srl/numerics/tensor.hpp"

namespace srl {

// Pre-computed per-token word representations (e.g. from an external language
// model), keyed by sentence index. One JSON record per line:
//   {"sentence_id": 3, "vectors": [[...], [...], ...]}
struct ExternalVectors {
  std::unordered_map<int, MatX> by_sentence;  // n_tokens x dim each
  int dim = 0;

  const MatX* find(int sentence_id) const {
    auto it = by_sentence.find(sentence_id);
    return it == by_sentence.end() ? nullptr : &it->second;
  }
};

inline ExternalVectors load_external_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("external vectors: cannot open " + path);
  ExternalVectors ext;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("external vectors: line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!rec.contains("sentence_id") || !rec.contains("vectors"))
      throw DataError("external vectors: line " + std::to_string(line_no) +
                      ": missing sentence_id or vectors");
    const int sid = rec["sentence_id"].get<int>();
    const auto& rows = rec["vectors"];
    if (!rows.is_array() || rows.empty())
      throw DataError("external vectors: line " + std::to_string(line_no) + ": empty vectors");
    MatX m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw DataError("external vectors: line " + std::to_string(line_no) + ": ragged vectors");
      for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j].get<double>();
    }
    if (ext.dim == 0) ext.dim = static_cast<int>(m.cols());
    if (ext.dim != m.cols())
      throw DataError("external vectors: line " + std::to_string(line_no) +
                      ": dimension mismatch across records");
    if (!ext.by_sentence.emplace(sid, std::move(m)).second)
      throw DataError("external vectors: duplicate sentence_id " + std::to_string(sid));
  }
  return ext;
}

inline void save_external_vectors(const std::string& path, const ExternalVectors& ext) {
  std::ofstream out(path);
  if (!out) throw DataError("external vectors: cannot write " + path);
  std::vector<int> ids;
  for (const auto& [id, _] : ext.by_sentence) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) {
    const MatX& m = ext.by_sentence.at(id);
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"sentence_id", id}, {"vectors", rows}} << '\n';
  }
}

}  // namespace srl
