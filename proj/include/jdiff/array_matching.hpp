#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "jdiff/context.hpp"
#include "jdiff/hungarian.hpp"
#include "jdiff/sequence.hpp"

namespace jdiff {

namespace detail {

struct ElementLevel {
  JsonPath left_path;
  JsonPath right_path;
  Level level;

  ElementLevel(const Level& parent, std::size_t i, std::size_t j)
      : left_path(parent.left_path.child(i)),
        right_path(parent.right_path.child(j)),
        level{parent.left.as_array()[i], parent.right.as_array()[j], left_path, right_path} {}

  ElementLevel(const ElementLevel&) = delete;
  ElementLevel& operator=(const ElementLevel&) = delete;
};

inline double element_similarity(const Level& parent, std::size_t i, std::size_t j, DiffContext& ctx) {
  ElementLevel element(parent, i, j);
  return similarity(element.level, ctx);
}

}  // namespace detail

// Element-by-element similarity of two arrays, evaluated while drilling.
inline Matrix similarity_matrix(const Level& level, DiffContext& ctx) {
  const auto& left = level.left.as_array();
  const auto& right = level.right.as_array();
  auto drill = ctx.drill();
  Matrix out(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) out(i, j) = detail::element_similarity(level, i, j, ctx);
  return out;
}

inline DpTable lcs_table(const Level& level, DiffContext& ctx) { return lcs_table(similarity_matrix(level, ctx)); }

inline std::vector<IndexPair> backtrack_lcs(const Level& level, const DpTable& table, DiffContext& ctx) {
  return backtrack_lcs(similarity_matrix(level, ctx), table);
}

inline DpTable edit_alignment_table(const Level& level, DiffContext& ctx) {
  return edit_alignment_table(similarity_matrix(level, ctx));
}

inline std::vector<IndexPair> backtrack_edit_alignment(const Level& level, const DpTable& table,
                                                       DiffContext& ctx) {
  return backtrack_edit_alignment(similarity_matrix(level, ctx), table);
}

inline std::vector<IndexPair> brute_force_matching(const Level& level, DiffContext& ctx) {
  auto drill = ctx.drill();
  return brute_force_matching(level.left.as_array().size(), level.right.as_array().size(),
                              [&](std::size_t i, std::size_t j) { return detail::element_similarity(level, i, j, ctx); });
}

// Maximum-total-similarity assignment: Hungarian on the negated similarity
// matrix. Scores below the acceptance threshold are zeroed before solving and
// the resulting zero-score assignments dropped.
inline std::vector<IndexPair> unordered_fuzzy_matching(const Level& level, DiffContext& ctx) {
  const Matrix gated = gate_scores(similarity_matrix(level, ctx), ctx.pair_threshold());
  Matrix cost(gated.rows(), gated.cols());
  for (std::size_t i = 0; i < gated.rows(); ++i)
    for (std::size_t j = 0; j < gated.cols(); ++j) cost(i, j) = -gated(i, j);
  std::vector<IndexPair> pairs;
  for (const auto& assignment : hungarian(cost)) {
    const double score = gated(assignment.left_index, assignment.right_index);
    if (score > 0.0) pairs.push_back({assignment.left_index, assignment.right_index, score});
  }
  return pairs;
}

// Pairs for one array comparison, chosen by mode. All similarity evaluations
// happen while drilling.
inline std::vector<IndexPair> match_arrays(const Level& level, MatchMode mode, DiffContext& ctx) {
  if (!mode.ordered && !mode.fuzzy) return brute_force_matching(level, ctx);
  if (!mode.ordered) return unordered_fuzzy_matching(level, ctx);
  const Matrix scores = similarity_matrix(level, ctx);
  if (!mode.fuzzy) return backtrack_lcs(scores, lcs_table(scores));
  const Matrix gated = gate_scores(scores, ctx.pair_threshold());
  return backtrack_edit_alignment(gated, edit_alignment_table(gated));
}

inline double array_similarity(const Level& level, MatchMode mode, DiffContext& ctx) {
  return array_similarity_helper(level, match_arrays(level, mode, ctx), ctx);
}

// Dice-style normalization: 2 * sum(pair scores) / (|left| + |right|), so a
// perfect pairing of equal-length arrays scores 1. Two empty arrays score 1.
inline double array_similarity_helper(const Level& level, const std::vector<IndexPair>& pairs, DiffContext& ctx) {
  const std::size_t total_size = level.left.as_array().size() + level.right.as_array().size();
  if (!ctx.drilling()) record_array_outcome(level, pairs, ctx);
  if (total_size == 0) return 1.0;
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) scores.push_back(p.score);
  return 2.0 * detail::canonical_sum(std::move(scores)) / static_cast<double>(total_size);
}

// Records the pairs and the unpaired elements of a final (non-drill) array
// comparison, then descends into every pair so nested changes and operator
// events are reported.
inline void record_array_outcome(const Level& level, const std::vector<IndexPair>& pairs, DiffContext& ctx) {
  if (ctx.drilling()) return;
  const auto& left = level.left.as_array();
  const auto& right = level.right.as_array();
  std::vector<char> left_paired(left.size(), 0);
  std::vector<char> right_paired(right.size(), 0);

  for (const auto& p : pairs) {
    left_paired[p.left_index] = 1;
    right_paired[p.right_index] = 1;
    detail::ElementLevel element(level, p.left_index, p.right_index);
    ctx.record_pair(element.level, p.score);
    similarity(element.level, ctx);
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left_paired[i]) continue;
    const JsonPath path = level.left_path.child(i);
    ctx.report(category::kArrayRemove, Level{left[i], JsonValue::none(), path, path});
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (right_paired[j]) continue;
    const JsonPath path = level.right_path.child(j);
    ctx.report(category::kArrayAdd, Level{JsonValue::none(), right[j], path, path});
  }
}

}  // namespace jdiff

#include "jdiff/similarity.hpp"
