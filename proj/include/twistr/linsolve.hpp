#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "twistr/rational.hpp"

namespace twistr {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental reduced row echelon form over Q with sparse rows.
/// Rows are fed one at a time; dependent rows are discarded.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

  /// Returns true if the row was independent of the rows already present.
  bool add_row(SparseRow row);
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int nullity() const { return cols_ - rank(); }
  /// Basis of the solution space of the homogeneous system.
  [[nodiscard]] std::vector<Vector> null_space() const;

 private:
  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_col_;  // per row
  std::vector<int> pivot_row_;  // per column, -1 if free
};

SparseRow axpy(const SparseRow& x, const Rational& a, const SparseRow& y);  // x + a*y

std::vector<Vector> null_space(const Matrix& m);
long rank(const Matrix& m);
/// Exact inverse; throws ContractViolation if singular.
Matrix inverse(const Matrix& m);

}  // namespace twistr
