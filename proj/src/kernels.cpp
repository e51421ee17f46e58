#include "zsm/kernels.hpp"

#include <stdexcept>

namespace zsm::kernels {

bool leq_all_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::ptrdiff_t first_leq_row_scalar(const Exp* rows, std::size_t nrows,
                                    const Exp* c, std::size_t n) {
  for (std::size_t r = 0; r < nrows; ++r) {
    if (leq_all_scalar(rows + r * n, c, n)) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

bool disjoint_support_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

#if defined(__x86_64__) || defined(__i386__)
bool leq_all_avx2(const Exp* a, const Exp* b, std::size_t n);
std::ptrdiff_t first_leq_row_avx2(const Exp* rows, std::size_t nrows,
                                  const Exp* c, std::size_t n);
bool disjoint_support_avx2(const Exp* a, const Exp* b, std::size_t n);
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
bool leq_all_neon(const Exp* a, const Exp* b, std::size_t n);
std::ptrdiff_t first_leq_row_neon(const Exp* rows, std::size_t nrows,
                                  const Exp* c, std::size_t n);
bool disjoint_support_neon(const Exp* a, const Exp* b, std::size_t n);
#endif

namespace {

using LeqFn = bool (*)(const Exp*, const Exp*, std::size_t);
using RowFn = std::ptrdiff_t (*)(const Exp*, std::size_t, const Exp*, std::size_t);
using DisjFn = bool (*)(const Exp*, const Exp*, std::size_t);

struct Dispatch {
  Backend backend = Backend::scalar;
  LeqFn leq = &leq_all_scalar;
  RowFn row = &first_leq_row_scalar;
  DisjFn disj = &disjoint_support_scalar;
};

Dispatch make_dispatch(Backend b) {
  Dispatch d;
  d.backend = b;
  switch (b) {
    case Backend::scalar:
      break;
#if defined(__x86_64__) || defined(__i386__)
    case Backend::avx2:
      d.leq = &leq_all_avx2;
      d.row = &first_leq_row_avx2;
      d.disj = &disjoint_support_avx2;
      break;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    case Backend::neon:
      d.leq = &leq_all_neon;
      d.row = &first_leq_row_neon;
      d.disj = &disjoint_support_neon;
      break;
#endif
    default:
      throw std::invalid_argument("kernel backend not available on this build");
  }
  return d;
}

Backend detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Dispatch& dispatch() {
  static Dispatch d = make_dispatch(detect());
  return d;
}

}  // namespace

Backend active() { return dispatch().backend; }

bool available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

void force(Backend b) {
  if (!available(b)) throw std::invalid_argument("kernel backend not available");
  dispatch() = make_dispatch(b);
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool leq_all(const Exp* a, const Exp* b, std::size_t n) {
  return dispatch().leq(a, b, n);
}

std::ptrdiff_t first_leq_row(const Exp* rows, std::size_t nrows, const Exp* c,
                             std::size_t n) {
  return dispatch().row(rows, nrows, c, n);
}

bool disjoint_support(const Exp* a, const Exp* b, std::size_t n) {
  return dispatch().disj(a, b, n);
}

}  // namespace zsm::kernels
