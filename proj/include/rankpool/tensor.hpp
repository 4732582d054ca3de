#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankpool/errors.hpp"

namespace rankpool {

using Label = std::int32_t;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return values_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {values_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {values_.data() + r * cols_, cols_};
  }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double* data() noexcept { return values_.data(); }
  const double* data() const noexcept { return values_.data(); }

  bool all_finite() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Extents of an n x h x w x d activation stack.
struct StackShape {
  std::size_t n = 0;  // frames
  std::size_t h = 0;
  std::size_t w = 0;
  std::size_t d = 0;  // channels

  std::size_t size() const noexcept { return n * h * w * d; }
  std::size_t pixels() const noexcept { return n * h * w; }
  std::size_t index(std::size_t f, std::size_t y, std::size_t x, std::size_t c) const noexcept {
    return ((f * h + y) * w + x) * d + c;
  }
  friend bool operator==(const StackShape&, const StackShape&) = default;
};

/// Frames of h x w pixels with d channels, stored frame-major, then row-major
/// spatial, with the channel index fastest (NHWC).
class ActivationStack {
 public:
  ActivationStack() = default;
  explicit ActivationStack(StackShape shape, double fill = 0.0);
  ActivationStack(StackShape shape, std::vector<double> values);

  const StackShape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& at(std::size_t f, std::size_t y, std::size_t x, std::size_t c) noexcept {
    return values_[shape_.index(f, y, x, c)];
  }
  double at(std::size_t f, std::size_t y, std::size_t x, std::size_t c) const noexcept {
    return values_[shape_.index(f, y, x, c)];
  }

  /// The d channel values at one pixel.
  std::span<const double> pixel(std::size_t f, std::size_t y, std::size_t x) const noexcept {
    return {values_.data() + shape_.index(f, y, x, 0), shape_.d};
  }
  /// All h*w*d values of one frame.
  std::span<const double> frame(std::size_t f) const noexcept {
    const std::size_t len = shape_.h * shape_.w * shape_.d;
    return {values_.data() + f * len, len};
  }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double* data() noexcept { return values_.data(); }
  const double* data() const noexcept { return values_.data(); }

  bool all_finite() const noexcept;

  friend bool operator==(const ActivationStack&, const ActivationStack&) = default;

 private:
  StackShape shape_{};
  std::vector<double> values_;
};

/// Instance-by-feature matrix with one class label per row.
struct LabeledMatrix {
  Matrix matrix;
  std::vector<Label> labels;

  /// max label + 1; throws DimensionError if labels and rows disagree.
  std::size_t class_count() const;
};

/// Per-frame h x w criterion values.
using ScoreMap = Matrix;

/// Rows ordered frame-major then row-major spatial: row (f*h + y)*w + x holds
/// the d channels of pixel (y, x) in frame f.
Matrix flatten_stack(const ActivationStack& stack);

/// Inverse of the flatten_stack row order: one h x w map per frame.
std::vector<ScoreMap> unflatten_scores(std::span<const double> scores, std::size_t n,
                                       std::size_t h, std::size_t w);

Matrix matmul(const Matrix& lhs, const Matrix& rhs);
Matrix transpose(const Matrix& m);
double trace(const Matrix& m);
double frobenius_norm(const Matrix& m);
Matrix identity(std::size_t n);

}  // namespace rankpool
