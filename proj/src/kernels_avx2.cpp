// AVX2 variants of the componentwise kernels.  Compiled with -mavx2 and only
// called after a runtime CPU check.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "zsm/kernels.hpp"

namespace zsm::kernels {

bool leq_all_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i gt = _mm256_cmpgt_epi32(va, vb);
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::ptrdiff_t first_leq_row_avx2(const Exp* rows, std::size_t nrows,
                                  const Exp* c, std::size_t n) {
  for (std::size_t r = 0; r < nrows; ++r) {
    if (leq_all_avx2(rows + r * n, c, n)) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

bool disjoint_support_avx2(const Exp* a, const Exp* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i both = _mm256_cmpgt_epi32(_mm256_min_epi32(va, vb), zero);
    if (!_mm256_testz_si256(both, both)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace zsm::kernels

#endif
