#include "maxmin/matrix.hpp"

#include <algorithm>

#include "maxmin/errors.hpp"

namespace maxmin {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::initializer_list<std::size_t> items)
    : IndexSet(std::vector<std::size_t>(items)) {}

IndexSet::IndexSet(std::vector<std::size_t> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return IndexSet(std::move(v));
}

IndexSet IndexSet::from_one_based(std::span<const std::size_t> items) {
  std::vector<std::size_t> v;
  v.reserve(items.size());
  for (auto i : items) {
    if (i == 0) throw ContractError("index 0 is not a valid 1-based index");
    v.push_back(i - 1);
  }
  return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(items_.begin(), items_.end(), i);
}

std::size_t IndexSet::position(std::size_t i) const {
  const auto it = std::lower_bound(items_.begin(), items_.end(), i);
  if (it == items_.end() || *it != i) {
    throw ContractError("index " + std::to_string(i + 1) + " not in " + to_string());
  }
  return static_cast<std::size_t>(it - items_.begin());
}

void IndexSet::check_within(std::size_t n, const char* what) const {
  if (!items_.empty() && items_.back() >= n) {
    throw ContractError(std::string(what) + ": index " + std::to_string(items_.back() + 1) +
                        " exceeds dimension " + std::to_string(n));
  }
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  IndexSet r;
  r.items_ = std::move(out);
  return r;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  IndexSet r;
  r.items_ = std::move(out);
  return r;
}

IndexSet complement(const IndexSet& a, std::size_t n) { return set_difference(IndexSet::range(n), a); }

std::vector<std::size_t> IndexSet::to_one_based() const {
  std::vector<std::size_t> v(items_);
  for (auto& i : v) ++i;
  return v;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(items_[k] + 1);
  }
  return s + "}";
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = m.rows_ ? rows.front().size() : 0;
  m.data_.reserve(m.rows_ * m.cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw ShapeError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(m.cols_));
    }
    m.data_.insert(m.data_.end(), rows[i].begin(), rows[i].end());
  }
  return m;
}

Matrix Matrix::column_vector(std::vector<Scalar> entries) {
  Matrix m;
  m.rows_ = entries.size();
  m.cols_ = 1;
  m.data_ = std::move(entries);
  return m;
}

Matrix Matrix::column_vector(std::initializer_list<Scalar> entries) {
  return column_vector(std::vector<Scalar>(entries));
}

Matrix Matrix::from_columns(std::span<const Matrix> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rows() != rows || columns[j].cols() != 1) {
      throw ShapeError("column " + std::to_string(j + 1) + " is not a length-" +
                       std::to_string(rows) + " vector");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Matrix> Matrix::columns() const {
  std::vector<Matrix> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  rows.check_within(rows_, "submatrix rows");
  cols.check_within(cols_, "submatrix columns");
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = (*this)(rows[a], cols[b]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar Matrix::row_max(std::size_t i) const {
  Scalar m;
  for (std::size_t j = 0; j < cols_; ++j) m = oplus(m, (*this)(i, j));
  return m;
}

Scalar Matrix::col_max(std::size_t j) const {
  Scalar m;
  for (std::size_t i = 0; i < rows_; ++i) m = oplus(m, (*this)(i, j));
  return m;
}

// -------------------------------------------------------------- operations

Vector constant_vector(std::size_t n, Scalar c) { return Matrix(n, 1, c); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix mat_oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("mat_oplus: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c[i] = oplus(a[i], b[i]);
  return c;
}

Matrix scale(Scalar c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) r[i] = otimes(c, a[i]);
  return r;
}

Matrix mat_power(const Matrix& a, unsigned k) {
  if (!a.is_square()) throw ShapeError("mat_power: matrix is not square");
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = mat_mul(r, a);
  return r;
}

bool leq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("leq: shape mismatch");
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

Matrix lambda_matrix(Scalar lambda, std::size_t n, const IndexSet& columns) {
  columns.check_within(n, "lambda_matrix");
  Matrix m(n, columns.size(), lambda);
  for (std::size_t c = 0; c < columns.size(); ++c) m(columns[c], c) = Scalar::one();
  return m;
}

Matrix lambda_w_matrix(const Vector& z) {
  const std::size_t n = z.rows();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? Scalar::one() : z[i];
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace maxmin
