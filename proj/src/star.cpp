#include "maxplus/star.hpp"

#include <string>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw NotSquare(std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
}

// Longest-path closure over paths of length >= 1 (A+ when no positive circuit exists).
Matrix floyd_warshall(const Matrix& a) {
  Matrix d = a;
  const std::size_t n = d.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar dik = d(i, k);
      if (dik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d(k, j).is_neg_inf()) continue;
        Scalar via = otimes(dik, d(k, j));
        if (d(i, j) < via) d(i, j) = std::move(via);
      }
    }
  }
  return d;
}

}  // namespace

Matrix kleene_star(const Matrix& a) {
  require_square(a, "kleene_star");
  const std::size_t n = a.rows();
  Matrix d = floyd_warshall(a);

  std::vector<std::size_t> positive;
  for (std::size_t k = 0; k < n; ++k) {
    if (Scalar::unit() < d(k, k)) positive.push_back(k);
    d(k, k) = oplus(d(k, k), Scalar::unit());
  }
  if (positive.empty()) return d;

  // reach(j -> k) and reach(k -> i) through a positive node k makes (i, j) unbounded.
  Matrix out = d;
  for (std::size_t k : positive) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d(k, j).is_neg_inf()) out(i, j) = Scalar::pos_inf();
      }
    }
  }
  return out;
}

bool has_positive_circuit(const Matrix& a) {
  require_square(a, "has_positive_circuit");
  const Matrix d = floyd_warshall(a);
  for (std::size_t k = 0; k < d.rows(); ++k) {
    if (Scalar::unit() < d(k, k)) return true;
  }
  return false;
}

bool is_star_matrix(const Matrix& a) {
  require_square(a, "is_star_matrix");
  return kleene_star(a) == a;
}

bool image_member(const Matrix& star, const Vector& x) {
  if (!is_star_matrix(star)) throw NotStarMatrix("image_member needs a star matrix");
  if (x.size() != star.cols()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " against " +
                            std::to_string(star.rows()) + "x" + std::to_string(star.cols()) + " matrix");
  }
  return otimes(star, x) == x;
}

bool image_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("image_equal of differently sized matrices");
  }
  return kleene_star(a) == kleene_star(b);
}

}  // namespace maxplus
