#pragma once

#include <cstddef>
#include <string>

#include "zsm/ints.hpp"

// Componentwise integer kernels used by the enumeration cores (completion,
// factorization DFS, divisor search in rewriting, Betti graphs).  Each kernel
// has a scalar reference implementation plus SIMD variants; the active variant
// is picked once at startup from the CPU and can be forced for testing.

namespace zsm::kernels {

enum class Backend { scalar, avx2, neon };

Backend active();
bool available(Backend b);
void force(Backend b);  // throws std::invalid_argument if b is unavailable here
std::string backend_name(Backend b);

// a[i] <= b[i] for all i.
bool leq_all(const Exp* a, const Exp* b, std::size_t n);

// Index of the first row r (row-major, row length n) with rows[r] <= c
// componentwise, or -1 if no row qualifies.
std::ptrdiff_t first_leq_row(const Exp* rows, std::size_t nrows, const Exp* c,
                             std::size_t n);

// min(a[i], b[i]) == 0 for all i; entries are assumed non-negative.
bool disjoint_support(const Exp* a, const Exp* b, std::size_t n);

inline bool leq_all(const ExpVec& a, const ExpVec& b) {
  return leq_all(a.data(), b.data(), a.size());
}
inline bool disjoint_support(const ExpVec& a, const ExpVec& b) {
  return disjoint_support(a.data(), b.data(), a.size());
}

// Reference implementations (always available; the SIMD variants are tested
// against these).
bool leq_all_scalar(const Exp* a, const Exp* b, std::size_t n);
std::ptrdiff_t first_leq_row_scalar(const Exp* rows, std::size_t nrows,
                                    const Exp* c, std::size_t n);
bool disjoint_support_scalar(const Exp* a, const Exp* b, std::size_t n);

}  // namespace zsm::kernels
