#pragma once

#include <cstdint>

namespace seglab::detail {

// Small row-major matrix kernels backing the convolution ops. All accumulate
// into C, so callers zero-fill when they want a plain product. Loop orders
// keep the innermost stride contiguous; on one desktop core this runs the
// whole training budget comfortably, so no BLAS dependency is pulled in.

// C (MxN) += A (MxK) * B (KxN)
inline void gemm_accum(std::int64_t m, std::int64_t n, std::int64_t k,
                       const double* a, const double* b, double* c) {
  for (std::int64_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    const double* ai = a + i * k;
    for (std::int64_t l = 0; l < k; ++l) {
      const double av = ai[l];
      const double* bl = b + l * n;
      for (std::int64_t j = 0; j < n; ++j) ci[j] += av * bl[j];
    }
  }
}

// C (MxN) += A(KxM)^T * B (KxN)
inline void gemm_accum_at_b(std::int64_t m, std::int64_t n, std::int64_t k,
                            const double* a, const double* b, double* c) {
  for (std::int64_t l = 0; l < k; ++l) {
    const double* al = a + l * m;
    const double* bl = b + l * n;
    for (std::int64_t i = 0; i < m; ++i) {
      const double av = al[i];
      double* ci = c + i * n;
      for (std::int64_t j = 0; j < n; ++j) ci[j] += av * bl[j];
    }
  }
}

// C (MxN) += A (MxK) * B(NxK)^T
inline void gemm_accum_a_bt(std::int64_t m, std::int64_t n, std::int64_t k,
                            const double* a, const double* b, double* c) {
  for (std::int64_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::int64_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::int64_t l = 0; l < k; ++l) acc += ai[l] * bj[l];
      ci[j] += acc;
    }
  }
}

}  // namespace seglab::detail
