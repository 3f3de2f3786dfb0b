#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace kinkxxz {

/// Compressed-row real matrix. Columns are sorted within each row and the
/// diagonal entry is always present (possibly zero).
struct CsrMatrix {
  std::uint64_t rows = 0;
  std::vector<std::int64_t> row_ptr{0};
  std::vector<std::int32_t> cols;
  std::vector<double> values;

  std::uint64_t nnz() const { return values.size(); }
  /// Stored value or 0; binary search within the row.
  double entry(std::uint64_t i, std::uint64_t j) const;
  double diagonal(std::uint64_t i) const { return entry(i, i); }
  /// max_i sum_j |a_ij|
  double inf_norm() const;
  bool is_diagonal() const;
  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;
};

}  // namespace kinkxxz
