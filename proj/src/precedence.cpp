#include "maxplus/precedence.hpp"

#include <sstream>
#include <stdexcept>

#include "maxplus/errors.hpp"
#include "maxplus/star.hpp"

namespace maxplus {

PrecedenceSystem::PrecedenceSystem(Matrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw NotSquare("precedence matrix must be square");
  require_rmax(a_, "A");
}

std::optional<Vector> solve_precedence(const PrecedenceSystem& system) {
  const Matrix star = kleene_star(system.matrix());
  if (star.has_pos_inf()) return std::nullopt;
  Vector x = otimes(star, Vector(system.size(), Scalar::unit()));
  return x;
}

BlockMatrixSpec::BlockMatrixSpec(Matrix c, Matrix l, Matrix r)
    : c_(std::move(c)), l_(std::move(l)), r_(std::move(r)) {
  const std::size_t n = c_.rows();
  for (const Matrix* m : {&c_, &l_, &r_}) {
    if (m->rows() != n || m->cols() != n) {
      throw BlockDimensionMismatch("blocks C, L, R must all be " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
  require_rmax(c_, "C");
  require_rmax(l_, "L");
  require_rmax(r_, "R");
}

Matrix build_block_matrix(const BlockMatrixSpec& spec, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("block matrix horizon must be at least 1");
  const std::size_t n = spec.size();
  Matrix m(horizon * n, horizon * n);
  for (std::size_t b = 0; b < horizon; ++b) {
    m.set_block(b * n, b * n, spec.c());
    if (b + 1 < horizon) {
      m.set_block(b * n, (b + 1) * n, spec.l());
      m.set_block((b + 1) * n, b * n, spec.r());
    }
  }
  return m;
}

bool finite_weak_feasibility(const BlockMatrixSpec& spec, std::size_t horizon) {
  return !has_positive_circuit(build_block_matrix(spec, horizon));
}

std::string export_dot(const BlockMatrixSpec& spec, std::size_t horizon) {
  const Matrix m = build_block_matrix(spec, horizon);
  const std::size_t n = spec.size();
  auto node = [n](std::size_t index) { return "n" + std::to_string(index / n + 1) + "_" + std::to_string(index % n + 1); };

  std::ostringstream os;
  os << "digraph precedence {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t idx = 0; idx < m.rows(); ++idx) {
    os << "  " << node(idx) << " [label=\"x_" << idx % n + 1 << "(" << idx / n + 1 << ")\"];\n";
  }
  // Arc j -> i for every non -inf entry M_ij; sources in block-major order.
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_neg_inf()) continue;
      os << "  " << node(j) << " -> " << node(i) << " [label=\"" << m(i, j).to_string() << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxplus
