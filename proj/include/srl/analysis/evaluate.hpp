#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "srl/errors.hpp"
#include "srl/treebank/types.hpp"

namespace srl {

struct LabelCounts {
  long gold = 0;
  long predicted = 0;
  long correct = 0;
};

// Span-level scores in the CoNLL-2005 style: a predicted span is correct iff
// its label and both boundaries match a gold span of the same predicate.
// P, R and F1 are percentages; comp is the fraction of predicates whose whole
// argument set is exactly right.
struct EvalReport {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double comp = 0;
  long gold_total = 0;
  long predicted_total = 0;
  long correct_total = 0;
  long predicates = 0;
  long complete_predicates = 0;
  std::map<std::string, LabelCounts> per_label;
};

namespace detail {

inline double ratio_pct(long num, long den) { return den == 0 ? 0.0 : 100.0 * num / den; }

inline double f1_from_pr(double p, double r) { return p + r == 0.0 ? 0.0 : 2 * p * r / (p + r); }

// Exact matches between two span sets; each gold span matches at most once.
inline long count_matches(const std::vector<LabeledSpan>& gold,
                          const std::vector<LabeledSpan>& pred) {
  std::vector<char> used(gold.size(), 0);
  long matches = 0;
  for (const auto& p : pred) {
    for (size_t g = 0; g < gold.size(); ++g) {
      if (!used[g] && gold[g] == p) {
        used[g] = 1;
        ++matches;
        break;
      }
    }
  }
  return matches;
}

inline void finish_report(EvalReport& r) {
  r.precision = ratio_pct(r.correct_total, r.predicted_total);
  r.recall = ratio_pct(r.correct_total, r.gold_total);
  r.f1 = f1_from_pr(r.precision, r.recall);
  r.comp = r.predicates == 0 ? 0.0
                             : static_cast<double>(r.complete_predicates) / r.predicates;
}

}  // namespace detail

using FrameCorpus = std::vector<std::vector<PredicateFrame>>;

// Aligned per-sentence frame lists; every sentence must carry the same
// predicates in gold and prediction. V spans never appear in frames and so are
// never scored.
inline EvalReport evaluate(const FrameCorpus& gold, const FrameCorpus& pred) {
  if (gold.size() != pred.size())
    throw DataError("evaluate: sentence count mismatch (" + std::to_string(gold.size()) + " vs " +
                    std::to_string(pred.size()) + ")");
  EvalReport report;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw DataError("evaluate: predicate count mismatch in sentence " + std::to_string(s + 1));
    for (size_t k = 0; k < gold[s].size(); ++k) {
      const auto& g = gold[s][k];
      const auto& p = pred[s][k];
      if (g.predicate != p.predicate)
        throw DataError("evaluate: predicate mismatch in sentence " + std::to_string(s + 1));
      ++report.predicates;
      auto gold_spans = g.spans;
      auto pred_spans = p.spans;
      sort_spans(gold_spans);
      sort_spans(pred_spans);
      const long matches = detail::count_matches(gold_spans, pred_spans);
      report.gold_total += static_cast<long>(gold_spans.size());
      report.predicted_total += static_cast<long>(pred_spans.size());
      report.correct_total += matches;
      if (gold_spans == pred_spans) ++report.complete_predicates;
      for (const auto& span : gold_spans) ++report.per_label[span.role].gold;
      for (const auto& span : pred_spans) ++report.per_label[span.role].predicted;
      {
        std::vector<char> used(gold_spans.size(), 0);
        for (const auto& span : pred_spans) {
          for (size_t gi = 0; gi < gold_spans.size(); ++gi) {
            if (!used[gi] && gold_spans[gi] == span) {
              used[gi] = 1;
              ++report.per_label[span.role].correct;
              break;
            }
          }
        }
      }
    }
  }
  detail::finish_report(report);
  return report;
}

// Surface distance of a span from its predicate: the smaller of the two
// boundary offsets, 0 when a boundary sits on the predicate itself.
inline int span_distance(const LabeledSpan& span, int predicate) {
  return std::min(std::abs(span.start - predicate), std::abs(span.end - predicate));
}

struct DistanceBin {
  std::string name;
  int lo;
  int hi;  // inclusive; INT_MAX-ish for the open bin
};

inline std::vector<DistanceBin> default_distance_bins() {
  return {{"0", 0, 0}, {"1-2", 1, 2}, {"3-6", 3, 6}, {"7+", 7, 1 << 30}};
}

// Per-bin span scores; every gold and predicted span lands in exactly one bin
// by its distance from the predicate.
inline std::vector<std::pair<std::string, EvalReport>> f1_by_distance(
    const FrameCorpus& gold, const FrameCorpus& pred,
    const std::vector<DistanceBin>& bins = default_distance_bins()) {
  if (gold.size() != pred.size()) throw DataError("f1_by_distance: sentence count mismatch");
  std::vector<EvalReport> reports(bins.size());
  auto bin_of = [&](const LabeledSpan& span, int predicate) {
    const int d = span_distance(span, predicate);
    for (size_t b = 0; b < bins.size(); ++b)
      if (d >= bins[b].lo && d <= bins[b].hi) return b;
    return bins.size() - 1;
  };
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw DataError("f1_by_distance: predicate count mismatch in sentence " +
                      std::to_string(s + 1));
    for (size_t k = 0; k < gold[s].size(); ++k) {
      const auto& g = gold[s][k];
      const auto& p = pred[s][k];
      std::vector<char> used(g.spans.size(), 0);
      for (const auto& span : p.spans) {
        const size_t b = bin_of(span, p.predicate);
        ++reports[b].predicted_total;
        for (size_t gi = 0; gi < g.spans.size(); ++gi) {
          if (!used[gi] && g.spans[gi] == span) {
            used[gi] = 1;
            ++reports[b].correct_total;
            break;
          }
        }
      }
      for (const auto& span : g.spans) ++reports[bin_of(span, g.predicate)].gold_total;
    }
  }
  std::vector<std::pair<std::string, EvalReport>> out;
  for (size_t b = 0; b < bins.size(); ++b) {
    detail::finish_report(reports[b]);
    out.emplace_back(bins[b].name, reports[b]);
  }
  return out;
}

}  // namespace srl
