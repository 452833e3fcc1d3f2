#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "srl/analysis/evaluate.hpp"
#include "srl/treebank/types.hpp"

namespace srl {

// Gold-informed edits applied to system output, one error type at a time and
// cumulatively in this order. Every stage keeps the frame valid (spans stay
// disjoint) and never reduces the number of exactly-correct spans.
enum class OracleKind {
  FixLabels,        // exact-boundary match, wrong label -> take the gold label
  MoveCoreArg,      // core-labeled span with wrong boundaries -> move to the
                    //   same-label gold span (nearest start when ambiguous)
  MergeSpans,       // two spans whose union including the gap is a gold span
  SplitSpans,       // one span that is the exact concatenation of >= 2 gold spans
  FixSpanBoundary,  // label matches an overlapping gold span -> snap to it
  DropArg,          // span overlaps no gold span -> delete
  AddArg,           // gold span overlaps no predicted span -> insert
};

constexpr std::array<OracleKind, 7> kOracleOrder = {
    OracleKind::FixLabels,   OracleKind::MoveCoreArg,     OracleKind::MergeSpans,
    OracleKind::SplitSpans,  OracleKind::FixSpanBoundary, OracleKind::DropArg,
    OracleKind::AddArg,
};

inline const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::FixLabels: return "FixLabels";
    case OracleKind::MoveCoreArg: return "MoveCoreArg";
    case OracleKind::MergeSpans: return "MergeSpans";
    case OracleKind::SplitSpans: return "SplitSpans";
    case OracleKind::FixSpanBoundary: return "FixSpanBoundary";
    case OracleKind::DropArg: return "DropArg";
    case OracleKind::AddArg: return "AddArg";
  }
  return "?";
}

namespace detail {

inline bool is_core_role(const std::string& role) {
  return role.size() == 2 && role[0] == 'A' && role[1] >= '0' && role[1] <= '5';
}

inline bool exact_match_exists(const std::vector<LabeledSpan>& spans, const LabeledSpan& s) {
  return std::find(spans.begin(), spans.end(), s) != spans.end();
}

inline bool overlaps_any_other(const std::vector<LabeledSpan>& spans, size_t self,
                               const LabeledSpan& candidate) {
  for (size_t k = 0; k < spans.size(); ++k)
    if (k != self && spans_overlap(spans[k], candidate)) return true;
  return false;
}

inline int overlap_length(const LabeledSpan& a, const LabeledSpan& b) {
  return std::max(0, std::min(a.end, b.end) - std::max(a.start, b.start) + 1);
}

}  // namespace detail

// Applies one transformation to a single predicted frame given its gold frame.
inline PredicateFrame oracle_transform_frame(const PredicateFrame& pred,
                                             const PredicateFrame& gold, OracleKind kind) {
  PredicateFrame out = pred;
  auto& spans = out.spans;
  auto gold_spans = gold.spans;
  sort_spans(gold_spans);

  switch (kind) {
    case OracleKind::FixLabels: {
      for (auto& s : spans) {
        for (const auto& g : gold_spans) {
          if (g.start == s.start && g.end == s.end) {
            s.role = g.role;
            break;
          }
        }
      }
      break;
    }

    case OracleKind::MoveCoreArg: {
      for (size_t i = 0; i < spans.size(); ++i) {
        LabeledSpan& s = spans[i];
        if (!detail::is_core_role(s.role)) continue;
        if (detail::exact_match_exists(gold_spans, s)) continue;
        // Same-label gold spans not already claimed exactly by another span.
        std::optional<LabeledSpan> target;
        for (const auto& g : gold_spans) {
          if (g.role != s.role) continue;
          if (detail::exact_match_exists(spans, g)) continue;
          if (!target || std::abs(g.start - s.start) < std::abs(target->start - s.start))
            target = g;
        }
        if (target && !detail::overlaps_any_other(spans, i, *target)) s = *target;
      }
      break;
    }

    case OracleKind::MergeSpans: {
      bool merged = true;
      while (merged) {
        merged = false;
        sort_spans(spans);
        for (size_t i = 0; i + 1 < spans.size() && !merged; ++i) {
          for (size_t j = i + 1; j < spans.size() && !merged; ++j) {
            for (const auto& g : gold_spans) {
              if (g.start != spans[i].start || g.end != spans[j].end) continue;
              LabeledSpan candidate = g;
              bool blocked = false;
              for (size_t k = 0; k < spans.size(); ++k) {
                if (k == i || k == j) continue;
                if (spans_overlap(spans[k], candidate)) blocked = true;
              }
              if (blocked) continue;
              spans.erase(spans.begin() + j);
              spans.erase(spans.begin() + i);
              spans.push_back(candidate);
              merged = true;
              break;
            }
          }
        }
      }
      break;
    }

    case OracleKind::SplitSpans: {
      std::vector<LabeledSpan> result;
      for (const auto& s : spans) {
        // Gold spans that tile [s.start, s.end] exactly, no gaps.
        std::vector<LabeledSpan> pieces;
        int at = s.start;
        for (const auto& g : gold_spans) {
          if (g.start == at && g.end <= s.end) {
            pieces.push_back(g);
            at = g.end + 1;
          }
        }
        if (pieces.size() >= 2 && at == s.end + 1) {
          result.insert(result.end(), pieces.begin(), pieces.end());
        } else {
          result.push_back(s);
        }
      }
      spans = std::move(result);
      break;
    }

    case OracleKind::FixSpanBoundary: {
      for (size_t i = 0; i < spans.size(); ++i) {
        LabeledSpan& s = spans[i];
        if (detail::exact_match_exists(gold_spans, s)) continue;
        // Largest overlap wins; gold spans are sorted, so ties keep the
        // earliest start.
        std::optional<LabeledSpan> target;
        int best_overlap = 0;
        for (const auto& g : gold_spans) {
          if (g.role != s.role) continue;
          if (detail::exact_match_exists(spans, g)) continue;
          const int ov = detail::overlap_length(g, s);
          if (ov > best_overlap) {
            best_overlap = ov;
            target = g;
          }
        }
        if (target && !detail::overlaps_any_other(spans, i, *target)) s = *target;
      }
      break;
    }

    case OracleKind::DropArg: {
      spans.erase(std::remove_if(spans.begin(), spans.end(),
                                 [&](const LabeledSpan& s) {
                                   for (const auto& g : gold_spans)
                                     if (spans_overlap(s, g)) return false;
                                   return true;
                                 }),
                  spans.end());
      break;
    }

    case OracleKind::AddArg: {
      for (const auto& g : gold_spans) {
        bool overlapped = false;
        for (const auto& s : spans)
          if (spans_overlap(s, g)) overlapped = true;
        if (!overlapped) spans.push_back(g);
      }
      break;
    }
  }
  sort_spans(out.spans);
  return out;
}

inline FrameCorpus oracle_transform(const FrameCorpus& pred, const FrameCorpus& gold,
                                    OracleKind kind) {
  if (pred.size() != gold.size()) throw DataError("oracle_transform: sentence count mismatch");
  FrameCorpus out(pred.size());
  for (size_t s = 0; s < pred.size(); ++s) {
    if (pred[s].size() != gold[s].size())
      throw DataError("oracle_transform: predicate count mismatch in sentence " +
                      std::to_string(s + 1));
    for (size_t k = 0; k < pred[s].size(); ++k)
      out[s].push_back(oracle_transform_frame(pred[s][k], gold[s][k], kind));
  }
  return out;
}

// F1 after each cumulative stage, starting from the untouched output.
inline std::vector<std::pair<std::string, double>> oracle_curve(const FrameCorpus& pred,
                                                                const FrameCorpus& gold) {
  std::vector<std::pair<std::string, double>> curve;
  FrameCorpus current = pred;
  curve.emplace_back("Orig", evaluate(gold, current).f1);
  for (OracleKind kind : kOracleOrder) {
    current = oracle_transform(current, gold, kind);
    curve.emplace_back(oracle_kind_name(kind), evaluate(gold, current).f1);
  }
  return curve;
}

}  // namespace srl
