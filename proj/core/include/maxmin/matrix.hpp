#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "maxmin/scalar.hpp"

namespace maxmin {

/// Sorted, duplicate-free list of 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and deduplicates.
  IndexSet(std::initializer_list<std::size_t> items);
  explicit IndexSet(std::vector<std::size_t> items);

  /// {0, ..., n-1}
  static IndexSet range(std::size_t n);
  /// Builds from 1-based indices; throws ContractError on 0.
  static IndexSet from_one_based(std::span<const std::size_t> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(std::size_t i) const;
  /// Position of i within the set; i must be a member.
  std::size_t position(std::size_t i) const;
  std::size_t operator[](std::size_t k) const { return items_[k]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::size_t>& items() const { return items_; }

  /// Throws ContractError if any member is >= n.
  void check_within(std::size_t n, const char* what) const;

  friend IndexSet set_union(const IndexSet& a, const IndexSet& b);
  friend IndexSet set_difference(const IndexSet& a, const IndexSet& b);
  /// Complement within {0, ..., n-1}.
  friend IndexSet complement(const IndexSet& a, std::size_t n);

  std::vector<std::size_t> to_one_based() const;
  /// "{1,3}" with 1-based members.
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> items_;
};

/// Dense row-major matrix over the max-min semiring. Column vectors are
/// n x 1 matrices; either dimension may be zero.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols filled with `fill`.
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::zero());
  /// Throws ShapeError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix column_vector(std::vector<Scalar> entries);
  static Matrix column_vector(std::initializer_list<Scalar> entries);
  /// Matrix whose columns are the given (equal-length) column vectors.
  static Matrix from_columns(std::span<const Matrix> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_vector() const { return cols_ == 1; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  /// Linear access; for a column vector this is the i-th component.
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  Scalar& operator[](std::size_t i) { return data_[i]; }

  std::span<const Scalar> entries() const { return data_; }

  Matrix column(std::size_t j) const;
  std::vector<Matrix> columns() const;
  Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  Matrix transpose() const;

  /// Largest entry of row i (0 for an empty row).
  Scalar row_max(std::size_t i) const;
  /// Largest entry of column j (0 for an empty column).
  Scalar col_max(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using Vector = Matrix;

/// Constant column vector c * 1.
Vector constant_vector(std::size_t n, Scalar c);

/// (A ⊗ B)_ij = max_k min(a_ik, b_kj). Throws ShapeError if A.cols != B.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Entrywise max. Throws ShapeError on unequal shapes.
Matrix mat_oplus(const Matrix& a, const Matrix& b);
/// Entrywise min with a scalar: (c ⊗ A)_ij = min(c, a_ij).
Matrix scale(Scalar c, const Matrix& a);
/// A^k with A^0 = I. Throws ShapeError on non-square A.
Matrix mat_power(const Matrix& a, unsigned k);
/// Entrywise a <= b. Throws ShapeError on unequal shapes.
bool leq(const Matrix& a, const Matrix& b);

/// Selection of columns of the Λ matrix: n x |columns|, entry 1 when the row
/// index is the selected column's index and `lambda` otherwise.
Matrix lambda_matrix(Scalar lambda, std::size_t n, const IndexSet& columns);

/// Square matrix with unit diagonal and off-diagonal row i equal to z_i.
Matrix lambda_w_matrix(const Vector& z);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace maxmin
