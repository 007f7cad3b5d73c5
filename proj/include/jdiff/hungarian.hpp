#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "jdiff/matrix.hpp"

namespace jdiff {

// Minimum-cost assignment (Kuhn-Munkres with row/column potentials, O(r^2 c)).
//
// For an m x n matrix exactly min(m, n) pairs are returned, sorted by left
// index; each pair's score field carries its cost entry. Rectangular input is
// solved directly, which yields the same optimum as padding the short side
// with zero-cost dummies and dropping assignments that touch them. Ties
// resolve toward the lowest column index in each augmenting search, so the
// result is a fixed function of the input.
inline std::vector<IndexPair> hungarian(const Matrix& cost) {
  if (cost.rows() == 0 || cost.cols() == 0) return {};
  if (cost.rows() > cost.cols()) {
    auto pairs = hungarian(cost.transposed());
    for (auto& p : pairs) std::swap(p.left_index, p.right_index);
    std::sort(pairs.begin(), pairs.end(),
              [](const IndexPair& a, const IndexPair& b) { return a.left_index < b.left_index; });
    return pairs;
  }

  const std::size_t n = cost.rows();
  const std::size_t m = cost.cols();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based; column 0 and row 0 are the virtual start of each augmentation.
  std::vector<double> row_potential(n + 1, 0.0);
  std::vector<double> col_potential(m + 1, 0.0);
  std::vector<std::size_t> row_of_col(m + 1, 0);
  std::vector<std::size_t> prev_col(m + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> min_slack(m + 1, kInf);
    std::vector<char> visited(m + 1, 0);
    do {
      visited[col0] = 1;
      const std::size_t row0 = row_of_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= m; ++col) {
        if (visited[col]) continue;
        const double reduced = cost(row0 - 1, col - 1) - row_potential[row0] - col_potential[col];
        if (reduced < min_slack[col]) {
          min_slack[col] = reduced;
          prev_col[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= m; ++col) {
        if (visited[col]) {
          row_potential[row_of_col[col]] += delta;
          col_potential[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const std::size_t col1 = prev_col[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<IndexPair> pairs;
  pairs.reserve(n);
  for (std::size_t col = 1; col <= m; ++col) {
    if (row_of_col[col] != 0) {
      pairs.push_back({row_of_col[col] - 1, col - 1, cost(row_of_col[col] - 1, col - 1)});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const IndexPair& a, const IndexPair& b) { return a.left_index < b.left_index; });
  return pairs;
}

inline double assignment_cost(const std::vector<IndexPair>& pairs) {
  double total = 0.0;
  for (const auto& p : pairs) total += p.score;
  return total;
}

}  // namespace jdiff
