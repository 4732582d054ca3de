#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankpool/data.hpp"
#include "rankpool/gradcheck.hpp"
#include "rankpool/pooling.hpp"
#include "rankpool/projection.hpp"
#include "rankpool/ranking.hpp"
#include "rankpool/tensor.hpp"

namespace rankpool {

enum class LayerKind { conv, relu, pool, fc, softmax_loss };

struct LayerSpec {
  LayerKind kind = LayerKind::relu;
  std::size_t kernel_h = 0;  // conv
  std::size_t kernel_w = 0;
  std::size_t out_channels = 0;
  PoolSpec pool;              // pool
  std::size_t out_units = 0;  // fc

  static LayerSpec conv(std::size_t kh, std::size_t kw, std::size_t out);
  static LayerSpec relu();
  static LayerSpec pool_layer(PoolSpec spec);
  static LayerSpec fc(std::size_t units);
  static LayerSpec softmax_loss();
};

/// Comma-separated layer list, e.g.
///   "conv:5x5x20, relu, pool:2x2, fc:500, relu, fc:10, softmax"
/// Pool entries take the strategy given here; `pool:2x2/2` sets the stride.
std::vector<LayerSpec> parse_layers(std::string_view text,
                                    PoolStrategy strategy = PoolStrategy::max);
std::string format_layers(const std::vector<LayerSpec>& layers);

/// conv 5x5x20, relu, pool 2x2, conv 5x5x50, relu, pool 2x2, fc 500, relu,
/// fc classes, softmax.
std::vector<LayerSpec> preset_small_net(std::size_t classes, PoolStrategy strategy);

enum class Mode { train, test };

/// gaussian: N(0, init_std^2). he: N(0, 2 / fan_in), init_std ignored.
enum class InitScheme { gaussian, he };

struct Parameter {
  std::string name;
  std::vector<double> value;
  std::vector<double> grad;
  std::vector<double> velocity;
  bool decays = true;  // weights decay, biases do not
};

/// Frozen artifacts a multipartite pool layer scores with.
struct PoolScorer {
  Projection projection;
  RankingModel ranking;
};

class Layer;

/// Sequential network ending in a softmax cross-entropy loss. Owns all
/// mutable training state; not safe for concurrent use.
class Network {
 public:
  /// `input` gives h, w, d of one image (n is ignored).
  Network(std::vector<LayerSpec> specs, StackShape input, std::size_t classes,
          std::uint64_t seed, double init_std = 0.01, InitScheme scheme = InitScheme::gaussian);
  ~Network();
  Network(Network&&) noexcept;
  Network& operator=(Network&&) noexcept;

  struct Output {
    double loss = 0.0;
    std::size_t errors = 0;
    std::vector<Label> predictions;
  };

  /// Runs every layer, caching what backward() needs. Multipartite pool layers
  /// score with their current scorer in both modes.
  Output forward(const ActivationStack& batch, std::span<const Label> labels, Mode mode,
                 std::uint64_t stochastic_seed = 0);

  /// The input seen by layer `layer_index` (test mode unless stated).
  ActivationStack forward_to(const ActivationStack& batch, std::size_t layer_index,
                             Mode mode = Mode::test, std::uint64_t stochastic_seed = 0);

  /// Accumulates parameter gradients of the last forward's mean loss, then adds
  /// weight_decay * w to every decaying parameter. Gradients are zeroed first.
  void backward(double weight_decay = 0.0);

  /// Same with an explicit gradient of the loss with respect to the logits.
  void backward_from(const ActivationStack& grad_logits, double weight_decay = 0.0);

  /// velocity = momentum * velocity - lr * grad; value += velocity.
  void sgd_step(double learning_rate, double momentum);

  std::vector<Parameter*> parameters();
  const std::vector<LayerSpec>& specs() const noexcept { return specs_; }
  std::size_t classes() const noexcept { return classes_; }
  StackShape input_shape() const noexcept { return input_; }
  /// Input shape of each layer for a single image.
  const std::vector<StackShape>& layer_inputs() const noexcept { return shapes_; }

  std::vector<std::size_t> multipartite_layers() const;
  void set_scorer(std::size_t layer_index, std::shared_ptr<const PoolScorer> scorer);
  std::shared_ptr<const PoolScorer> scorer(std::size_t layer_index) const;

 private:
  std::vector<LayerSpec> specs_;
  StackShape input_;
  std::size_t classes_;
  std::vector<StackShape> shapes_;
  std::vector<std::unique_ptr<Layer>> layers_;
  std::vector<ActivationStack> cache_;  // inputs of each layer from the last forward
  ActivationStack grad_logits_;
};

struct RefitConfig {
  std::size_t sample_cap = 100000;
  std::size_t bins = kDefaultBins;
  std::size_t batch_size = 100;
  std::uint64_t seed = 0;
  FitConfig fit;
};

struct RefitResult {
  std::vector<std::size_t> refitted;
  std::vector<std::string> warnings;
};

/// Refits every multipartite layer in network order: runs the sample forward to
/// the layer input, labels each pixel row with its image's label, caps the rows
/// by seeded uniform subsampling, fits the projection and then the ranking
/// model, and swaps the new scorer in. A layer whose sample lacks a class, or
/// whose fit fails, keeps its previous scorer and a warning is recorded.
RefitResult refit_pool_scorers(Network& net, const ActivationStack& images,
                               std::span<const Label> labels, const RefitConfig& config);

enum class RefreshPolicy { per_epoch, every_k_batches, once };

struct TrainConfig {
  std::size_t epochs = 5;
  std::size_t batch_size = 50;
  double learning_rate = 0.01;
  double momentum = 0.9;
  double weight_decay = 5e-4;
  /// Learning rate is multiplied by lr_decay_factor from epoch
  /// ceil(epochs * lr_decay_at) onward.
  double lr_decay_at = 2.0 / 3.0;
  double lr_decay_factor = 0.1;
  std::uint64_t seed = 1;
  RefreshPolicy pool_refresh = RefreshPolicy::per_epoch;
  std::size_t refresh_every = 0;  // batches, for every_k_batches
  std::size_t score_sample_cap = 100000;
  std::size_t refresh_images = 2000;
  std::size_t bins = kDefaultBins;
  FitConfig projection_fit;
};

struct EpochMetrics {
  std::size_t epoch = 0;
  /// Whole training set, test mode, after the epoch's updates.
  double train_loss = 0.0;
  double train_err_pct = 0.0;
  /// Averages over the epoch's minibatches as they were trained.
  double running_train_loss = 0.0;
  double running_train_err_pct = 0.0;
  double test_loss = 0.0;
  double test_err_pct = 0.0;
  double seconds = 0.0;
  std::size_t refreshes = 0;
};

struct TrainReport {
  std::vector<EpochMetrics> epochs;
  bool diverged = false;
  std::vector<std::string> warnings;
  /// Final scorer per multipartite layer index.
  std::vector<std::pair<std::size_t, std::shared_ptr<const PoolScorer>>> scorers;
};

struct Evaluation {
  double loss = 0.0;
  double err_pct = 0.0;
};

/// Test-mode pass over a dataset with frozen scorers.
Evaluation evaluate(Network& net, const Dataset& data, std::size_t batch_size);

/// Minibatch SGD with momentum. Scorers are refreshed per the policy before the
/// affected epoch/batch. Stops early and sets `diverged` on a non-finite loss.
TrainReport train(Network& net, const Dataset& train_set, const Dataset& test_set,
                  const TrainConfig& config,
                  const std::function<void(const EpochMetrics&)>& on_epoch = {});

/// Central differences of the test-mode mean loss against backward() for every
/// parameter entry. Scorers stay frozen, so multipartite selection is held to
/// whatever the perturbed activations pick.
GradientCheck check_network_gradients(Network& net, const ActivationStack& batch,
                                      std::span<const Label> labels, double step = 1e-5);

/// splitmix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace rankpool
