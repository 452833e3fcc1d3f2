#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "srl/errors.hpp"
#include "srl/treebank/types.hpp"

namespace srl {

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

}  // namespace detail

// Reads blank-line separated CoNLL-X style blocks. Only columns 1 (token id),
// 2 (form), 7 (head, 0 = artificial root) and 8 (relation label) are used.
// Errors carry the 1-based line number of the offending row.
inline std::vector<std::pair<Sentence, DependencyTree>> parse_conllx(const std::string& text) {
  std::vector<std::pair<Sentence, DependencyTree>> out;
  Sentence sent;
  DependencyTree tree;
  int block_first_line = 0;

  auto flush = [&](int line_no) {
    if (sent.tokens.empty()) return;
    const int n = sent.size();
    for (int i = 0; i < n; ++i) {
      if (tree.heads[i] < -1 || tree.heads[i] >= n)
        throw DataError("conllx: head out of range in block at line " +
                        std::to_string(block_first_line));
    }
    try {
      validate_sentence(sent);
      validate_tree(tree);
    } catch (const DataError& e) {
      throw DataError("conllx: block at line " + std::to_string(block_first_line) + ": " +
                      e.what());
    }
    (void)line_no;
    out.emplace_back(std::move(sent), std::move(tree));
    sent = Sentence{};
    tree = DependencyTree{};
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush(line_no);
      continue;
    }
    auto fields = line.find('\t') != std::string::npos ? detail::split_fields(line, '\t')
                                                       : detail::split_ws(line);
    if (fields.size() < 8)
      throw DataError("conllx: line " + std::to_string(line_no) + ": expected >= 8 columns, got " +
                      std::to_string(fields.size()));
    if (sent.tokens.empty()) block_first_line = line_no;
    int id = 0, head = 0;
    try {
      id = std::stoi(fields[0]);
      head = std::stoi(fields[6]);
    } catch (const std::exception&) {
      throw DataError("conllx: line " + std::to_string(line_no) + ": non-numeric id or head");
    }
    if (id != sent.size() + 1)
      throw DataError("conllx: line " + std::to_string(line_no) + ": token id " +
                      std::to_string(id) + " out of sequence");
    sent.tokens.push_back(fields[1]);
    tree.heads.push_back(head - 1);  // 1-based file -> 0-based; root 0 -> -1
    tree.labels.push_back(fields[7]);
  }
  flush(line_no + 1);
  return out;
}

inline std::string write_conllx(const std::vector<std::pair<Sentence, DependencyTree>>& blocks) {
  std::ostringstream out;
  for (const auto& [sent, tree] : blocks) {
    for (int i = 0; i < sent.size(); ++i) {
      out << (i + 1) << '\t' << sent.tokens[i] << "\t_\t_\t_\t_\t" << (tree.heads[i] + 1) << '\t'
          << tree.labels[i] << '\n';
    }
    out << '\n';
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << content;
}

}  // namespace srl
