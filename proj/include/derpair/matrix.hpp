#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "derpair/scalar.hpp"

namespace derpair {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// a·b. Throws ShapeError when a.cols() != b.rows().
Matrix compose(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Vec apply(const Matrix& m, const Vec& v);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);
std::size_t kernel_dim(const Matrix& m);

/// Reduced row echelon form; pivot columns are appended to `pivots` when given.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the null space, one vector per free column, read off the RREF.
std::vector<Vec> kernel_basis(const Matrix& m);

using SparseVec = std::map<std::size_t, Scalar>;

SparseVec to_sparse(const Vec& v);

/// Incremental row echelon form over sparse vectors. Tracks the rank of
/// everything inserted without holding a dense matrix.
class Echelon {
 public:
  /// Reduces v against the basis; true when it was independent and got added.
  bool insert(SparseVec v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVec> rows_;  // pivot index → row with unit pivot
};

}  // namespace derpair
