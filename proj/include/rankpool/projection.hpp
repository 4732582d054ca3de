#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rankpool/linalg.hpp"
#include "rankpool/tensor.hpp"

namespace rankpool {

// The projection A is stored d x c so that projected = X * A. With this layout
// the quotient-of-trace objective reads
//
//   Q(A) = tr(A^T S_w A) / tr(A^T S_b A) + lambda * ||I_c - A^T A||_F
//
// and its gradient is
//
//   2 S_w A / tb - 2 tw S_b A / tb^2 - 2 lambda A (I - A^T A) / ||I - A^T A||_F
//
// with tw, tb the two traces. The regularizer gradient is zero where the
// orthogonality residual is exactly zero.

struct FitConfig {
  double lambda_reg = 1.0;
  double learning_rate = 1e-3;
  std::size_t max_iters = 500;
  double grad_tol = 1e-6;
  /// Compare the analytic gradient against central differences at A(0) and
  /// throw NumericError if they disagree.
  bool fd_check = false;
};

struct FitMeta {
  std::size_t iterations = 0;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  double initial_orthogonality = 0.0;
  double final_orthogonality = 0.0;
  double final_gradient_norm = 0.0;
  /// Objective after every accepted step, starting with A(0).
  std::vector<double> objective_trace;
  /// Largest finite-difference disagreement when fd_check was requested.
  double fd_max_rel_error = 0.0;
  std::vector<std::string> warnings;
};

struct Projection {
  Matrix a;  // d x c
  double lambda_reg = 1.0;
  FitMeta fit_meta;

  std::size_t input_dim() const noexcept { return a.rows(); }
  std::size_t output_dim() const noexcept { return a.cols(); }
};

/// Below this between-class trace the projection is rejected.
inline constexpr double kMinBetweenTrace = 1e-12;

/// ||I_c - A^T A||_F
double orthogonality_residual(const Matrix& a);

double objective(const Matrix& a, const ScatterPair& pair, double lambda_reg);
Matrix gradient(const Matrix& a, const ScatterPair& pair, double lambda_reg);

/// Gradient of the lambda * ||I - A^T A||_F term alone.
Matrix regularizer_gradient(const Matrix& a, double lambda_reg);

/// Eigen initializer followed by gradient descent with step halving.
Projection fit_projection(const LabeledMatrix& data, const FitConfig& config = {});

/// Same, from precomputed scatters and a class count.
Projection fit_projection(const ScatterPair& pair, std::size_t classes,
                          const FitConfig& config = {});

Matrix project(const Matrix& data, const Projection& proj);

}  // namespace rankpool
