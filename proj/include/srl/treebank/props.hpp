#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "srl/errors.hpp"
#include "srl/treebank/conllx.hpp"
#include "srl/treebank/types.hpp"

namespace srl {

// CoNLL-2005 props blocks. Column 1 carries the predicate lemma ("-" on
// non-predicate rows); every predicate adds one bracket column in which spans
// are written "(A0*" ... "*)" with "(A0*)" for single-token spans. The k-th
// bracket column belongs to the k-th predicate row and must hold exactly one
// (V*...*) span covering that row; the V span marks the predicate and is not
// kept as an argument.

namespace detail {

struct BracketField {
  std::string open_role;  // empty when the field does not open a span
  bool opens = false;
  bool closes = false;
};

inline BracketField parse_bracket_field(const std::string& f, int line_no) {
  BracketField b;
  std::string rest = f;
  if (!rest.empty() && rest.front() == '(') {
    auto star = rest.find('*');
    if (star == std::string::npos || star < 2)
      throw DataError("props: line " + std::to_string(line_no) + ": bad bracket field '" + f + "'");
    b.opens = true;
    b.open_role = rest.substr(1, star - 1);
    rest = rest.substr(star);
  }
  if (rest.empty() || rest.front() != '*')
    throw DataError("props: line " + std::to_string(line_no) + ": bad bracket field '" + f + "'");
  rest = rest.substr(1);
  if (rest == ")") {
    b.closes = true;
  } else if (!rest.empty()) {
    throw DataError("props: line " + std::to_string(line_no) + ": bad bracket field '" + f + "'");
  }
  return b;
}

}  // namespace detail

// Parses a whole props file; one frame list per sentence block.
inline std::vector<std::vector<PredicateFrame>> parse_props(const std::string& text) {
  std::vector<std::vector<PredicateFrame>> out;

  std::vector<std::vector<std::string>> rows;  // fields per row of current block
  std::vector<int> row_lines;
  int block_first_line = 0;

  auto flush = [&]() {
    if (rows.empty()) return;
    const int n = static_cast<int>(rows.size());
    const size_t width = rows[0].size();
    for (int i = 0; i < n; ++i)
      if (rows[i].size() != width)
        throw DataError("props: line " + std::to_string(row_lines[i]) +
                        ": ragged block (expected " + std::to_string(width) + " fields)");
    std::vector<int> predicate_rows;
    for (int i = 0; i < n; ++i)
      if (rows[i][0] != "-") predicate_rows.push_back(i);
    const int num_cols = static_cast<int>(width) - 1;
    if (static_cast<int>(predicate_rows.size()) != num_cols)
      throw DataError("props: block at line " + std::to_string(block_first_line) + ": " +
                      std::to_string(predicate_rows.size()) + " predicate rows but " +
                      std::to_string(num_cols) + " bracket columns");

    std::vector<PredicateFrame> frames;
    for (int c = 0; c < num_cols; ++c) {
      PredicateFrame frame;
      frame.lemma = rows[predicate_rows[c]][0];
      int v_start = -1, v_end = -1;
      std::string open_role;
      int open_start = -1;
      for (int i = 0; i < n; ++i) {
        auto b = detail::parse_bracket_field(rows[i][c + 1], row_lines[i]);
        if (b.opens) {
          if (open_start >= 0)
            throw DataError("props: line " + std::to_string(row_lines[i]) +
                            ": span opened inside an open span");
          open_role = b.open_role;
          open_start = i;
        }
        if (b.closes) {
          if (open_start < 0)
            throw DataError("props: line " + std::to_string(row_lines[i]) +
                            ": unmatched span close");
          if (open_role == "V") {
            if (v_start >= 0)
              throw DataError("props: block at line " + std::to_string(block_first_line) +
                              ": multiple V spans in one column");
            v_start = open_start;
            v_end = i;
          } else {
            frame.spans.push_back({open_role, open_start, i});
          }
          open_start = -1;
          open_role.clear();
        }
      }
      if (open_start >= 0)
        throw DataError("props: block at line " + std::to_string(block_first_line) +
                        ": unbalanced span (column " + std::to_string(c + 1) + ")");
      if (v_start < 0)
        throw DataError("props: block at line " + std::to_string(block_first_line) +
                        ": column " + std::to_string(c + 1) + " has no V span");
      if (predicate_rows[c] < v_start || predicate_rows[c] > v_end)
        throw DataError("props: block at line " + std::to_string(block_first_line) +
                        ": predicate row does not fall inside its V span");
      frame.predicate = v_start;
      validate_frame(frame, n);  // rejects overlaps
      frames.push_back(std::move(frame));
    }
    out.push_back(std::move(frames));
    rows.clear();
    row_lines.clear();
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (rows.empty()) block_first_line = line_no;
    rows.push_back(detail::split_ws(line));
    row_lines.push_back(line_no);
  }
  flush();
  return out;
}

// Serializes one sentence block. Frames are written in predicate order; spans
// must not overlap. Output is the canonical alignment: lemma column
// left-aligned, bracket columns right-aligned, two spaces between columns.
inline std::string write_props_block(const std::vector<PredicateFrame>& frames, int n_tokens) {
  auto ordered = frames;
  std::sort(ordered.begin(), ordered.end(),
            [](const PredicateFrame& a, const PredicateFrame& b) {
              return a.predicate < b.predicate;
            });
  for (size_t k = 0; k + 1 < ordered.size(); ++k)
    if (ordered[k].predicate == ordered[k + 1].predicate)
      throw DataError("props: duplicate predicate index " +
                      std::to_string(ordered[k].predicate + 1));

  std::vector<std::vector<std::string>> grid(n_tokens);
  for (auto& row : grid) row.assign(1 + ordered.size(), "");
  for (int i = 0; i < n_tokens; ++i) grid[i][0] = "-";

  for (size_t c = 0; c < ordered.size(); ++c) {
    const auto& f = ordered[c];
    validate_frame(f, n_tokens);
    grid[f.predicate][0] = f.lemma.empty() || f.lemma == "-" ? "_" : f.lemma;
    for (int i = 0; i < n_tokens; ++i) grid[i][c + 1] = "*";
    auto spans = f.spans;
    spans.push_back({"V", f.predicate, f.predicate});
    sort_spans(spans);
    for (size_t k = 0; k + 1 < spans.size(); ++k)
      if (spans[k].end >= spans[k + 1].start)
        throw DataError("props: V span overlaps an argument span");
    for (const auto& s : spans) {
      grid[s.start][c + 1] = "(" + s.role + "*";
      if (s.end == s.start) {
        grid[s.start][c + 1] += ")";
      } else {
        grid[s.end][c + 1] = "*)";
      }
    }
  }

  std::vector<size_t> widths(1 + ordered.size(), 0);
  for (const auto& row : grid)
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line = row[0];
    line.append(widths[0] - row[0].size(), ' ');
    for (size_t c = 1; c < row.size(); ++c) {
      line += "  ";
      line.append(widths[c] - row[c].size(), ' ');
      line += row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

inline std::string write_props(const std::vector<std::vector<PredicateFrame>>& sentences,
                               const std::vector<int>& token_counts) {
  if (sentences.size() != token_counts.size())
    throw std::invalid_argument("write_props: sentence/token-count size mismatch");
  std::ostringstream out;
  for (size_t s = 0; s < sentences.size(); ++s)
    out << write_props_block(sentences[s], token_counts[s]) << '\n';
  return out.str();
}

}  // namespace srl
