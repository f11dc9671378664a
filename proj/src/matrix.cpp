#include "maxplus/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::unit();
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.entries_.begin());
  return m;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) {
    throw DimensionMismatch("block out of range of " + shape(*this) + " matrix");
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row + i, col + j);
  }
  return out;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& b) {
  if (row + b.rows() > rows_ || col + b.cols() > cols_) {
    throw DimensionMismatch("block " + shape(b) + " does not fit into " + shape(*this));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row + i, col + j) = b(i, j);
  }
}

Vector Matrix::column_at(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::has_pos_inf() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_pos_inf(); });
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("oplus of " + shape(a) + " and " + shape(b));
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  }
  return out;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("otimes of " + shape(a) + " and " + shape(b));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Scalar term = otimes(aik, b(k, j));
        if (out(i, j) < term) out(i, j) = std::move(term);
      }
    }
  }
  return out;
}

Vector otimes(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("otimes of " + shape(a) + " matrix and vector of length " +
                            std::to_string(x.size()));
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar term = otimes(a(i, k), x[k]);
      if (out[i] < term) out[i] = std::move(term);
    }
  }
  return out;
}

Vector oplus(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("oplus of vectors of different length");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = oplus(a[i], b[i]);
  return out;
}

bool leq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("comparison of " + shape(a) + " and " + shape(b));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j) < a(i, j)) return false;
    }
  }
  return true;
}

bool leq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("comparison of vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

bool is_real(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_finite(); });
}

void require_rmax(const Matrix& m, const std::string& name) {
  if (m.has_pos_inf()) throw InvalidInput("matrix " + name + " contains +inf");
}

std::string to_string(const Matrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      os << (j == 0 ? "" : " ") << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_string(m); }

}  // namespace maxplus
