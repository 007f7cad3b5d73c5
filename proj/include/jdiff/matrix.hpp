#pragma once

#include <cstddef>
#include <vector>

namespace jdiff {

// Dense row-major grid of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return cells_.empty(); }

  double& operator()(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

// Dynamic-programming table produced by the sequence matchers.
using DpTable = Matrix;

// One matched element pair. Within a matching, left indices are pairwise
// distinct and so are right indices.
struct IndexPair {
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  double score = 0.0;

  bool operator==(const IndexPair&) const = default;
};

}  // namespace jdiff
