#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "rankpool/tensor.hpp"

namespace rankpool {

/// Central-difference comparison of an analytic gradient.
struct GradientCheck {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  std::size_t worst_index = 0;
  std::size_t checked = 0;
};

/// Denominator floor for relative errors: entries whose analytic and numeric
/// magnitudes are both below it are compared absolutely.
inline constexpr double kRelErrorFloor = 1e-7;

double relative_error(double analytic, double numeric, double floor = kRelErrorFloor);

/// Perturbs params[i] by +/- step for every i in `indices` (all entries when
/// empty), evaluating `loss` each time, and restores the original value.
GradientCheck check_gradient(std::span<double> params, const std::function<double()>& loss,
                             std::span<const double> analytic, double step,
                             std::span<const std::size_t> indices = {});

/// Matrix form: `loss` is evaluated on perturbed copies of `point`.
GradientCheck check_gradient(const Matrix& point, const std::function<double(const Matrix&)>& loss,
                             const Matrix& analytic, double step);

}  // namespace rankpool
