#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankpool/projection.hpp"
#include "rankpool/tensor.hpp"

namespace rankpool {

inline constexpr std::size_t kDefaultBins = 64;
inline constexpr double kDensitySmoothing = 1e-8;

/// Smoothed histogram over [lo, hi] with B equal-width bins. Bins are
/// right-closed, (lo + b*w, lo + (b+1)*w], except the first which also holds lo.
/// Values outside the range land in the boundary bins.
struct HistogramDensity {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> mass;

  std::size_t bins() const noexcept { return mass.size(); }
  std::size_t bin_of(double value) const noexcept;
  bool same_binning(const HistogramDensity& other) const noexcept {
    return lo == other.lo && hi == other.hi && bins() == other.bins();
  }
};

/// mass_b = (count_b / N + smoothing) / (1 + B * smoothing)
HistogramDensity estimate_density(std::span<const double> values, double lo, double hi,
                                  std::size_t bins, double smoothing = kDensitySmoothing);

/// sum_b p_b log(p_b / q_b)
double kl_divergence(const HistogramDensity& p, const HistogramDensity& q);

/// One-versus-rest densities of one projected column.
struct ColumnModel {
  HistogramDensity foreground;  // values of rows labeled with this column's class
  HistogramDensity background;  // values of every other row
  double kl = 0.0;              // kl_divergence(foreground, background)
  /// foreground_b * log(foreground_b / background_b) per bin.
  std::vector<double> integrand;
};

/// Frozen class-conditional densities for scoring projected rows. Fitted on
/// training data only; scoring never needs labels.
struct RankingModel {
  std::vector<ColumnModel> columns;

  std::size_t classes() const noexcept { return columns.size(); }
  double total_kl() const noexcept;
};

using ScoreVector = std::vector<double>;

/// Column i compares class i against the pooled remaining classes over the
/// column's full [min, max] range. A column with zero range collapses to a
/// single bin and contributes nothing.
RankingModel fit_ranking(const Matrix& projected, std::span<const Label> labels,
                         std::size_t bins = kDefaultBins);

/// Per row: sum over columns of the KL integrand at the row's bin.
ScoreVector score_instances(const Matrix& projected, const RankingModel& model);

/// project() followed by score_instances().
ScoreVector rank_instances(const Matrix& data, const Projection& proj, const RankingModel& model);
ScoreVector rank_instances(const LabeledMatrix& data, const Projection& proj,
                           const RankingModel& model);

}  // namespace rankpool
