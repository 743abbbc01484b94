#pragma once

#include <vector>

#include "quadric/field/linalg.hpp"

namespace quadric {

struct SymEigen {
  std::vector<double> values;  ///< ascending
  Matrix<double> vectors;      ///< orthonormal columns, vectors.column(k) ↔ values[k]
  int sweeps = 0;
};

struct JacobiOptions {
  double off_diagonal_tol = 1e-13;  ///< relative to the Frobenius norm of the input
  int max_sweeps = 50;
};

/// Cyclic Jacobi eigensolver for small symmetric matrices.
/// Throws PreconditionError on non-symmetric input and ConvergenceError when
/// the off-diagonal mass does not drop below tolerance in max_sweeps sweeps.
SymEigen sym_eigen(const Matrix<double>& m, JacobiOptions opts = {});

/// Orthonormalizes `vs` in order (modified Gram-Schmidt, two passes).
/// Each output vector is oriented so its first non-negligible component is
/// positive. Throws RankDeficient when a pivot norm falls below 1e-10.
std::vector<Vec<double>> gram_schmidt(const std::vector<Vec<double>>& vs);

/// Max |<vi, vj> − δij| over the family.
double orthonormality_defect(const std::vector<Vec<double>>& vs);

}  // namespace quadric
