#pragma once

#include <vector>

#include "fo/rational.hpp"

namespace fo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major, rectangular

/// Result of an exact linear solve A x = b.
struct LinSolveResult {
    bool consistent = false;
    QVec solution;              // one exact solution when consistent
    std::vector<QVec> nullspace; // basis of ker A (empty when A injective)
    int rank = 0;
};

/// Exact Gauss-Jordan elimination with rational pivoting.
LinSolveResult solve_linear(const QMat& a, const QVec& rhs);

int rank(const QMat& a);

/// Basis of the null space (RREF free-variable basis; deterministic).
std::vector<QVec> null_space(const QMat& a);

/// Reduced row echelon form with zero rows dropped; rows form a canonical
/// basis of the row span.
QMat row_space_basis(const QMat& a);

Rational det(const QMat& a);

/// Basis of span(rows a) ∩ span(rows b).
QMat intersect_row_spans(const QMat& a, const QMat& b);

QVec mat_vec(const QMat& a, const QVec& x);

} // namespace fo
