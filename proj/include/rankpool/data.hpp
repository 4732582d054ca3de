#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rankpool/tensor.hpp"

namespace rankpool {

/// Labeled images, n x h x w x channels with pixels in [0, 1].
struct Dataset {
  ActivationStack images;
  std::vector<Label> labels;
  std::size_t class_count = 0;
  std::string name;

  std::size_t size() const noexcept { return labels.size(); }
  /// Images at the given positions, in that order.
  Dataset take(const std::vector<std::size_t>& indices) const;
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
inline constexpr std::size_t kCifarRecordBytes = 3073;

/// MNIST IDX pair. Throws FormatError on a missing file, wrong magic, a
/// truncated payload, or image/label counts that disagree.
Dataset load_mnist(const std::filesystem::path& images_path,
                   const std::filesystem::path& labels_path);

/// CIFAR-10 binary batches, concatenated in the given order.
Dataset load_cifar10(const std::vector<std::filesystem::path>& batch_paths);

/// Class k = a seeded binary base pattern k (pixels 0.1 or 0.9, bright with
/// probability 0.2 + 0.6 k / (c - 1)) plus uniform noise in [-0.1, 0.1]; label
/// of image i is i % c. Linearly separable.
Dataset synthetic_blobs(std::size_t n, std::size_t h, std::size_t w, std::size_t c,
                        std::uint64_t seed, std::size_t channels = 1);

/// Seeded stratified sample with exactly per_class images of each class (all of
/// a class when it has fewer). Original relative order is kept.
Dataset subset(const Dataset& dataset, std::size_t per_class, std::uint64_t seed);

/// Subtracts the per-channel mean of `reference` from every pixel of `target`.
void subtract_channel_mean(const Dataset& reference, Dataset& target);

}  // namespace rankpool
