#pragma once

// Data-parallel inner loops shared by the tensor, projection and network code.
//
// Every kernel has a scalar reference version and, on x86-64 builds, an AVX2+FMA
// version. The active table is chosen once at first use from the CPU's feature
// bits; RANKPOOL_KERNELS=scalar forces the reference path. Within one table the
// reduction order is fixed, so results are bitwise reproducible run to run.
// Scalar and AVX2 results agree to rounding (FMA and lane-wise accumulation),
// except max_update which is exact.

#include <cstddef>
#include <cstdint>

namespace rankpool::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// C[m x n] = A[m x k] * B[k x n]  (or += when accumulate), row-major with
  /// leading dimensions.
  void (*gemm_nn)(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
                  const double* b, std::size_t ldb, double* c, std::size_t ldc, bool accumulate);

  /// C[k x n] += A[m x k]^T * B[m x n].
  void (*gemm_tn)(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
                  const double* b, std::size_t ldb, double* c, std::size_t ldc);

  double (*dot)(const double* x, const double* y, std::size_t n);

  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  /// Lane-wise running argmax: where x[i] > best[i], best[i] = x[i] and
  /// arg[i] = candidate + i * arg_stride. Strict comparison keeps the first
  /// occurrence on ties.
  void (*max_update)(const double* x, double* best, std::int64_t* arg, std::int64_t candidate,
                     std::int64_t arg_stride, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr unless the build includes AVX2 code and the CPU supports AVX2+FMA.
const KernelTable* avx2_kernels() noexcept;

/// The table used by the library.
const KernelTable& active_kernels() noexcept;

}  // namespace rankpool::simd
