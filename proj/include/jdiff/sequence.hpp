#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <vector>

#include "jdiff/matrix.hpp"

// Matchers over a precomputed element-similarity matrix: rows index the left
// array, columns the right array, entries are similarity scores in [0, 1].

namespace jdiff {

// LCS lengths of every prefix pair, where two elements are "common" when their
// similarity is exactly 1. The result is (rows+1) x (cols+1); cell (n, m) is
// the LCS length of the full arrays.
inline DpTable lcs_table(const Matrix& similarity) {
  const std::size_t n = similarity.rows();
  const std::size_t m = similarity.cols();
  DpTable dp(n + 1, m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (similarity(i - 1, j - 1) == 1.0) {
        dp(i, j) = dp(i - 1, j - 1) + 1;
      } else {
        dp(i, j) = std::max(dp(i - 1, j), dp(i, j - 1));
      }
    }
  }
  return dp;
}

// Walks an lcs_table from the bottom-right corner. On a tie between skipping
// the left or the right element, the left index is decremented first.
// Pairs come out strictly increasing in both indices.
inline std::vector<IndexPair> backtrack_lcs(const Matrix& similarity, const DpTable& table) {
  std::vector<IndexPair> pairs;
  std::size_t i = similarity.rows();
  std::size_t j = similarity.cols();
  while (i > 0 && j > 0) {
    if (similarity(i - 1, j - 1) == 1.0) {
      pairs.push_back({i - 1, j - 1, 1.0});
      --i;
      --j;
    } else if (table(i - 1, j) >= table(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return pairs;
}

// Order-preserving alignment maximizing the summed similarity of aligned
// pairs, filled back to front. Cell (x, y) is the best total for the suffixes
// starting at x and y, so cell (0, 0) is the global optimum. The last row and
// column stay zero.
inline DpTable edit_alignment_table(const Matrix& similarity) {
  const std::size_t rows = similarity.rows() + 1;
  const std::size_t cols = similarity.cols() + 1;
  DpTable dp(rows, cols);
  for (std::size_t x = rows - 1; x-- > 0;) {
    for (std::size_t y = cols - 1; y-- > 0;) {
      dp(x, y) = std::max({dp(x + 1, y), dp(x, y + 1), similarity(x, y) + dp(x + 1, y + 1)});
    }
  }
  return dp;
}

// Walks an edit_alignment_table from (0, 0): skip the left element when that
// keeps the optimum, else skip the right one, else align both. Aligned pairs
// with zero similarity are a removal plus an addition and are not returned.
inline std::vector<IndexPair> backtrack_edit_alignment(const Matrix& similarity, const DpTable& table) {
  std::vector<IndexPair> pairs;
  const std::size_t rows = table.rows();
  const std::size_t cols = table.cols();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i + 1 < rows || j + 1 < cols) {
    const double current = table(i, j);
    if (i + 1 < rows && current == table(i + 1, j)) {
      ++i;
      continue;
    }
    if (j + 1 < cols && current == table(i, j + 1)) {
      ++j;
      continue;
    }
    if (similarity(i, j) > 0.0) pairs.push_back({i, j, similarity(i, j)});
    ++i;
    ++j;
  }
  return pairs;
}

// Greedy set matching: each left element takes the first still-unclaimed right
// element whose score is exactly 1. score(i, j) is evaluated lazily and never
// for a right element that is already claimed.
template <std::invocable<std::size_t, std::size_t> ScoreFn>
std::vector<IndexPair> brute_force_matching(std::size_t left_size, std::size_t right_size, ScoreFn&& score) {
  std::vector<IndexPair> pairs;
  std::vector<char> claimed(right_size, 0);
  for (std::size_t i = 0; i < left_size; ++i) {
    for (std::size_t j = 0; j < right_size; ++j) {
      if (claimed[j]) continue;
      if (score(i, j) == 1.0) {
        claimed[j] = 1;
        pairs.push_back({i, j, 1.0});
        break;
      }
    }
  }
  return pairs;
}

// Scores below the acceptance threshold, and zero scores, become 0 so the
// optimizers never trade a kept pair for one that will be discarded.
inline Matrix gate_scores(Matrix similarity, double threshold) {
  for (std::size_t r = 0; r < similarity.rows(); ++r) {
    for (std::size_t c = 0; c < similarity.cols(); ++c) {
      double& s = similarity(r, c);
      if (s <= 0.0 || s < threshold) s = 0.0;
    }
  }
  return similarity;
}

}  // namespace jdiff
