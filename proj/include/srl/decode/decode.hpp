#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "srl/decode/tags.hpp"

namespace srl {

// BIO legality as a start vector plus a prev-to-next transition matrix:
// I-X may only follow B-X or I-X and may not start a sequence.
struct TransitionMask {
  int num_tags = 0;
  std::vector<char> start_ok;
  std::vector<char> allowed;  // row-major [prev * num_tags + next]

  bool start(int tag) const { return start_ok[tag] != 0; }
  bool step(int prev, int next) const { return allowed[prev * num_tags + next] != 0; }
};

inline TransitionMask build_transition_mask(const TagLayout& layout) {
  const int T = layout.num_tags();
  TransitionMask mask;
  mask.num_tags = T;
  mask.start_ok.assign(T, 1);
  mask.allowed.assign(T * T, 1);
  for (int next = 0; next < T; ++next) {
    if (!layout.is_i(next)) continue;
    mask.start_ok[next] = 0;
    for (int prev = 0; prev < T; ++prev) {
      const bool continues = (layout.is_b(prev) || layout.is_i(prev)) &&
                             layout.role_of(prev) == layout.role_of(next);
      if (!continues) mask.allowed[prev * T + next] = 0;
    }
  }
  return mask;
}

inline TransitionMask build_transition_mask(const std::vector<std::string>& roles) {
  return build_transition_mask(TagLayout(roles));
}

struct DecodeResult {
  std::vector<int> tags;
  double score = 0;
};

// Highest-scoring legal tag sequence for an n x T lattice of per-position
// log-probabilities. Ties are broken toward the lowest tag index at each DP
// cell, which selects the optimal sequence that is smallest when read
// right-to-left; brute_force_decode applies the identical rule.
inline DecodeResult viterbi(const Eigen::MatrixXd& log_dists, const TransitionMask& mask) {
  const int n = static_cast<int>(log_dists.rows());
  const int T = static_cast<int>(log_dists.cols());
  if (n < 1) throw std::invalid_argument("viterbi: empty lattice");
  if (T != mask.num_tags) throw std::invalid_argument("viterbi: lattice/mask tag count mismatch");

  constexpr double kImpossible = -std::numeric_limits<double>::infinity();
  Eigen::MatrixXd delta(n, T);
  Eigen::MatrixXi back(n, T);
  for (int j = 0; j < T; ++j) {
    delta(0, j) = mask.start(j) ? log_dists(0, j) : kImpossible;
    back(0, j) = -1;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < T; ++j) {
      double best = kImpossible;
      int arg = -1;
      for (int k = 0; k < T; ++k) {
        if (!mask.step(k, j) || delta(i - 1, k) == kImpossible) continue;
        const double cand = delta(i - 1, k) + log_dists(i, j);
        if (cand > best) {
          best = cand;
          arg = k;
        }
      }
      delta(i, j) = best;
      back(i, j) = arg;
    }
  }

  int last = -1;
  double best = kImpossible;
  for (int j = 0; j < T; ++j) {
    if (delta(n - 1, j) > best) {
      best = delta(n - 1, j);
      last = j;
    }
  }
  if (last < 0) throw std::runtime_error("viterbi: no legal sequence");

  DecodeResult result;
  result.score = best;
  result.tags.assign(n, 0);
  result.tags[n - 1] = last;
  for (int i = n - 1; i > 0; --i) result.tags[i - 1] = back(i, result.tags[i]);
  return result;
}

// Exact argmax by enumerating every legal sequence; the testing oracle for
// viterbi. Guarded against lattices too large to enumerate.
inline DecodeResult brute_force_decode(const Eigen::MatrixXd& log_dists,
                                       const TransitionMask& mask) {
  const int n = static_cast<int>(log_dists.rows());
  const int T = static_cast<int>(log_dists.cols());
  if (n < 1) throw std::invalid_argument("brute_force_decode: empty lattice");
  if (T != mask.num_tags)
    throw std::invalid_argument("brute_force_decode: lattice/mask tag count mismatch");
  if (n * std::log(static_cast<double>(T)) > std::log(5e7))
    throw std::invalid_argument("brute_force_decode: lattice too large to enumerate");

  // Later-position-first comparison, matching the DP tie rule.
  auto reversed_less = [n](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = n - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };

  DecodeResult best;
  best.score = -std::numeric_limits<double>::infinity();
  std::vector<int> seq(n, 0);
  std::vector<double> prefix(n, 0);

  // Depth-first over legal sequences; prefix[i] accumulates left to right so
  // path scores are bit-identical to the DP's additions.
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      const double score = prefix[n - 1];
      if (score > best.score ||
          (score == best.score && (best.tags.empty() || reversed_less(seq, best.tags)))) {
        best.score = score;
        best.tags = seq;
      }
      return;
    }
    for (int j = 0; j < T; ++j) {
      const bool legal = i == 0 ? mask.start(j) : mask.step(seq[i - 1], j);
      if (!legal) continue;
      seq[i] = j;
      prefix[i] = (i == 0 ? 0.0 : prefix[i - 1]) + log_dists(i, j);
      walk(i + 1);
    }
  };
  walk(0);
  if (best.tags.empty()) throw std::runtime_error("brute_force_decode: no legal sequence");
  return best;
}

}  // namespace srl
