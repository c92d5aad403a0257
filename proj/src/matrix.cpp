#include "eqhom/matrix.hpp"

#include <stdexcept>

namespace eqhom {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& m) {
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row + i, col + j) = m(i, j);
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return canonical(ring, c);
}

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Ring& ring, const Rational& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.mul(s, a(i, j));
  return c;
}

Matrix canonical(const Ring& ring, const Matrix& a) {
  if (ring.kind() == Ring::Kind::Integers) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ring.canonical(a(i, j));
    return a;
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.canonical(a(i, j));
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  Matrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  Matrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Matrix permutation_matrix(const std::vector<int>& perm) {
  Matrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(static_cast<std::size_t>(perm[j]), j) = 1;
  return m;
}

}  // namespace eqhom
