#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

using Vector = std::vector<Scalar>;

/// Dense row-major max-plus matrix. A default-filled matrix is the zero matrix (all -inf).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  /// The max-plus identity E: 0 on the diagonal, -inf elsewhere.
  static Matrix identity(std::size_t n);
  /// The max-plus zero matrix of the given shape.
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Matrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& b);

  Vector column_at(std::size_t j) const;

  bool has_pos_inf() const;
  /// No +inf entry: the matrix lives in R_max.
  bool is_rmax() const { return !has_pos_inf(); }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix oplus(const Matrix& a, const Matrix& b);
Matrix otimes(const Matrix& a, const Matrix& b);
Vector otimes(const Matrix& a, const Vector& x);
Vector oplus(const Vector& a, const Vector& b);

/// Entrywise a <= b.
bool leq(const Matrix& a, const Matrix& b);
bool leq(const Vector& a, const Vector& b);

bool is_real(const Vector& v);

/// Throws InvalidInput when m carries +inf; `name` is used in the message.
void require_rmax(const Matrix& m, const std::string& name);

std::string to_string(const Matrix& m);
std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace maxplus
