#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rankpool/projection.hpp"
#include "rankpool/ranking.hpp"
#include "rankpool/tensor.hpp"

namespace rankpool {

enum class PoolStrategy { max, average, stochastic, multipartite };

std::string_view to_string(PoolStrategy s) noexcept;
/// Throws Error on an unknown name.
PoolStrategy parse_pool_strategy(std::string_view name);

struct PoolSpec {
  std::size_t window_h = 2;
  std::size_t window_w = 2;
  std::size_t stride_h = 2;
  std::size_t stride_w = 2;
  PoolStrategy strategy = PoolStrategy::max;

  /// Output extents for an input of the given shape. Throws DimensionError
  /// unless the windows tile the input exactly.
  StackShape output_shape(const StackShape& in) const;
};

/// Forward result plus what the backward pass needs.
///
/// switches:
///   max, stochastic (train): flat input index per output element
///   multipartite:            flat pixel index f*h*w + y*w + x per window,
///                            shared by all channels
///   average, stochastic (test): empty
/// window_weights (stochastic test mode only): d output / d input for every
/// output element and window offset, laid out [output element][dy*pw + dx].
struct PoolForward {
  ActivationStack output;
  PoolSpec spec;
  StackShape input_shape;
  bool train_mode = true;
  std::vector<std::int64_t> switches;
  std::vector<double> window_weights;
};

/// Per channel and window: the maximum, first row-major occurrence on ties.
PoolForward pool_max(const ActivationStack& stack, const PoolSpec& spec);

/// Per channel and window: the arithmetic mean.
PoolForward pool_average(const ActivationStack& stack, const PoolSpec& spec);

/// Train mode samples one location per channel and window with probability
/// proportional to max(a, 0) (uniform when the window sums to zero). Test mode
/// outputs the probability-weighted average sum p_i a_i.
/// Sampling takes one uniform [0, 1) draw from mt19937_64(seed) per output
/// element in NHWC order and picks the first row-major window offset whose
/// running probability sum exceeds it.
PoolForward pool_stochastic(const ActivationStack& stack, const PoolSpec& spec,
                            std::uint64_t seed, bool train_mode);

/// flatten_stack -> rank_instances -> unflatten_scores: one h x w map per
/// frame, shared by all channels.
std::vector<ScoreMap> compute_score_maps(const ActivationStack& stack, const Projection& proj,
                                         const RankingModel& model);

/// Per window, the pixel with the highest score (row-major first on ties);
/// the output copies all d channels of that pixel.
PoolForward pool_multipartite(const ActivationStack& stack, const PoolSpec& spec,
                              const std::vector<ScoreMap>& maps);

/// Gradient with respect to the pooled input. Selecting strategies route each
/// output gradient to its switch; average spreads it uniformly; stochastic in
/// test mode applies the exact derivative of the weighted average.
ActivationStack pool_backward(const PoolForward& forward, const ActivationStack& grad_out);

}  // namespace rankpool
