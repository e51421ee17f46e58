// NEON variants of the componentwise kernels (aarch64 baseline).

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

#include "zsm/kernels.hpp"

namespace zsm::kernels {

bool leq_all_neon(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t va = vld1q_s32(a + i);
    int32x4_t vb = vld1q_s32(b + i);
    uint32x4_t gt = vcgtq_s32(va, vb);
    if (vmaxvq_u32(gt) != 0) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::ptrdiff_t first_leq_row_neon(const Exp* rows, std::size_t nrows,
                                  const Exp* c, std::size_t n) {
  for (std::size_t r = 0; r < nrows; ++r) {
    if (leq_all_neon(rows + r * n, c, n)) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

bool disjoint_support_neon(const Exp* a, const Exp* b, std::size_t n) {
  const int32x4_t zero = vdupq_n_s32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t va = vld1q_s32(a + i);
    int32x4_t vb = vld1q_s32(b + i);
    uint32x4_t both = vcgtq_s32(vminq_s32(va, vb), zero);
    if (vmaxvq_u32(both) != 0) return false;
  }
  for (; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace zsm::kernels

#endif
