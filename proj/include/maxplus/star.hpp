#pragma once

#include "maxplus/matrix.hpp"

namespace maxplus {

/**
 * Kleene star A* = E + A + A^2 + ... over the completed semiring.
 *
 * Entry (i, j) is the supremal weight of a path from j to i in the
 * precedence graph of A, 0 for the empty path on the diagonal. Pairs that
 * are connected through a node lying on a positive-weight circuit get
 * +inf. Inputs with +inf entries are accepted and treated as arcs of
 * unbounded weight.
 *
 * Runs a (max, +) Floyd-Warshall sweep followed by a saturation pass, O(n^3).
 * Throws NotSquare.
 */
Matrix kleene_star(const Matrix& a);

/// True iff the precedence graph of `a` has a circuit of strictly positive weight.
bool has_positive_circuit(const Matrix& a);

/// A* == A.
bool is_star_matrix(const Matrix& a);

/// x lies in Im S, i.e. x == S x. Throws NotStarMatrix when S* != S.
bool image_member(const Matrix& star, const Vector& x);

/// Im A* == Im B*, decided through A* == B*.
bool image_equal(const Matrix& a, const Matrix& b);

}  // namespace maxplus
