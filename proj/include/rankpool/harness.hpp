#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankpool/data.hpp"
#include "rankpool/errors.hpp"
#include "rankpool/nn.hpp"

namespace rankpool {

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataLoadError : public Error {
 public:
  using Error::Error;
};

// Config files are flat `key = value` lines; `#` starts a comment. Keys:
//
//   dataset          mnist | cifar10 | synthetic
//   data_dir         dataset root; defaults to $RANKPOOL_DATA_DIR/<dataset>
//   per_class        training images kept per class (0 = all)
//   test_per_class   test images kept per class (0 = all)
//   subset_seed      seed of the stratified subsets
//   mean_subtract    true | false
//   synthetic_train, synthetic_test, synthetic_size, synthetic_classes
//   layers           preset | comma-separated layer list (see parse_layers)
//   strategies       comma-separated: max, average, stochastic, multipartite
//   epochs, batch_size, learning_rate, momentum, weight_decay, lr_decay_at,
//   lr_decay_factor, seed, init_std
//   init             gaussian | he
//   pool_refresh     per-epoch | once | every-k-batches
//   refresh_every    k for every-k-batches
//   score_sample_cap, refresh_images, bins
//   lambda_reg, fit_learning_rate, fit_max_iters, fit_grad_tol
//   rank_layer       pool layer whose input rank-demo scores (0-based among pools)
//   rank_images      images rank-demo runs forward
//   out_dir
struct ExperimentConfig {
  std::string dataset = "mnist";
  std::filesystem::path data_dir;
  std::size_t per_class = 0;
  std::size_t test_per_class = 0;
  std::uint64_t subset_seed = 0;
  bool mean_subtract = false;
  std::size_t synthetic_train = 512;
  std::size_t synthetic_test = 128;
  std::size_t synthetic_size = 12;
  std::size_t synthetic_classes = 4;
  std::string layers = "preset";
  std::vector<PoolStrategy> strategies{PoolStrategy::max, PoolStrategy::multipartite};
  TrainConfig train;
  double init_std = 0.01;
  InitScheme init = InitScheme::gaussian;
  std::size_t rank_layer = 0;
  std::size_t rank_images = 500;
  std::filesystem::path out_dir = "runs/latest";
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Train and test sets after subsetting and optional mean subtraction.
/// Throws DataLoadError when files are missing or malformed.
std::pair<Dataset, Dataset> load_experiment_data(const ExperimentConfig& config);

std::vector<LayerSpec> experiment_layers(const ExperimentConfig& config, std::size_t classes,
                                         PoolStrategy strategy);

// Binary artifacts. All integers are little-endian u64 unless noted, doubles
// are IEEE-754 binary64 stored little-endian.
//
// Scorer (.rkps):
//   "RKPS" u32 version=1
//   d c lambda_reg(f64) A[d*c] row-major (f64)
//   nominal bins, then per column: lo hi kl (f64), bins, fg mass[bins],
//   bg mass[bins] (f64). A zero-range column stores a single bin.
//
// Checkpoint (.rkpn):
//   "RKPN" u32 version=1
//   layer text (u64 length + bytes), h w d classes, parameter count,
//   per parameter: name (u64 length + bytes), size, values (f64)
void save_scorer(const std::filesystem::path& path, const PoolScorer& scorer);
PoolScorer load_scorer(const std::filesystem::path& path);
void save_checkpoint(const std::filesystem::path& path, Network& net);
/// Loads parameters into a network built with the same layers and shapes.
void load_checkpoint(const std::filesystem::path& path, Network& net);

/// Locale-free shortest round-trip formatting.
std::string format_double(double v);

struct StrategyResult {
  PoolStrategy strategy = PoolStrategy::max;
  TrainReport report;
  double seconds = 0.0;
};

struct ExperimentResult {
  std::vector<StrategyResult> strategies;
  bool diverged = false;
};

/// Trains one network per strategy and writes metrics.csv, summary.csv,
/// timing.csv, a checkpoint per strategy and a scorer per multipartite layer.
/// Progress goes to `log` when given.
ExperimentResult run_experiment(const ExperimentConfig& config, const Dataset& train_set,
                                const Dataset& test_set, bool parallel,
                                std::ostream* log = nullptr);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int config = 2;
inline constexpr int dataset = 3;
inline constexpr int divergence = 4;
}  // namespace exit_code

struct TrainOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  bool parallel = false;
};
int cmd_train(const TrainOptions& options, std::ostream& out, std::ostream& err);

struct GradcheckOptions {
  std::uint64_t seed = 7;
  std::size_t instances = 50;
  double tolerance = 1e-3;
  /// Test fixture: flips the sign of the regularizer term in the projection
  /// gradient so the check must fail.
  bool flip_regularizer_sign = false;
};
int cmd_gradcheck(const GradcheckOptions& options, std::ostream& out);

struct RankDemoOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  bool permute_labels = false;
};
int cmd_rank_demo(const RankDemoOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rankpool
