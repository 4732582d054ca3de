#pragma once

#include <cstddef>
#include <vector>

#include "rankpool/tensor.hpp"

namespace rankpool {

/// Within-class and between-class scatter of a labeled feature set.
struct ScatterPair {
  Matrix within;   // d x d
  Matrix between;  // d x d, rank <= c - 1
};

/// Eigenpairs sorted by descending eigenvalue; vectors are the columns.
struct EigenResult {
  std::vector<double> values;
  Matrix vectors;  // d x k
};

/// Ridge factor applied to the within-class scatter before it is inverted,
/// relative to the mean of its diagonal.
inline constexpr double kWithinRidge = 1e-6;

/// S_w = sum_j sum_{x in C_j} (x - mu_j)(x - mu_j)^T and
/// S_b = sum_j (mu_j - mu)(mu_j - mu)^T with mu the mean over all rows.
/// Class sizes do not weight S_b. Both outputs are symmetrized.
/// Throws DegenerateLabelsError when fewer than two classes are present or a
/// class in [0, c) has no rows.
ScatterPair compute_scatters(const LabeledMatrix& data);

/// S_w + kWithinRidge * mean(diag(S_w)) * I. When S_w has a zero diagonal the
/// ridge falls back to kWithinRidge * max(mean(diag(S_b)), 1) so the result
/// stays invertible.
Matrix regularized_within(const ScatterPair& pair);

/// Lower-triangular L with m = L L^T. Throws NumericError if m is not
/// numerically positive definite.
Matrix cholesky_lower(const Matrix& m);

/// All eigenpairs of a symmetric matrix by cyclic Jacobi rotation.
/// Values descending; each vector has unit norm and its largest-magnitude
/// entry positive.
EigenResult symmetric_eigen(const Matrix& m);

/// Top-k pairs of S_b a = lambda S_w' a, where S_w' = regularized_within(pair).
/// Solved by Cholesky reduction to a standard symmetric problem followed by
/// Jacobi. Vectors are scaled to unit Euclidean norm with the same sign rule
/// as symmetric_eigen.
EigenResult generalized_eigen(const ScatterPair& pair, std::size_t k);

}  // namespace rankpool
