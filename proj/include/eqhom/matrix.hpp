#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "eqhom/ring.hpp"

namespace eqhom {

/// Dense row-major matrix of exact scalars. Shapes with zero rows or columns
/// are legal and common (maps into or out of the zero module).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& m);

  bool operator==(const Matrix& other) const = default;

  /// Compact single-line rendering, e.g. "[[1,0],[0,1]]".
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Ring-aware arithmetic. Results are canonical for the ring.
Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& ring, const Rational& c, const Matrix& a);
Matrix canonical(const Ring& ring, const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Permutation matrix sending basis vector j to basis vector perm[j].
Matrix permutation_matrix(const std::vector<int>& perm);

}  // namespace eqhom
