#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsm {

// Exponent vectors live in N0^k and stay small (bounded by element orders and
// degree caps); group coordinates and degrees use 64 bits.
using Exp = std::int32_t;
using ExpVec = std::vector<Exp>;
using Int = std::int64_t;

[[noreturn]] inline void overflow_abort(const char* where) {
  throw std::overflow_error(std::string("integer overflow in ") + where);
}

inline Int checked_add(Int a, Int b, const char* where) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow_abort(where);
  return r;
}

inline Int checked_mul(Int a, Int b, const char* where) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow_abort(where);
  return r;
}

inline Exp narrow_exp(Int v, const char* where) {
  if (v < 0 || v > INT32_MAX) overflow_abort(where);
  return static_cast<Exp>(v);
}

inline Int total(const ExpVec& a) {
  Int s = 0;
  for (Exp x : a) s += x;
  return s;
}

inline Int weighted_total(const ExpVec& a, const std::vector<Int>& w) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked_add(s, checked_mul(a[i], w[i], "weighted_total"), "weighted_total");
  return s;
}

inline bool vec_is_zero(const ExpVec& a) {
  for (Exp x : a)
    if (x != 0) return false;
  return true;
}

inline ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = narrow_exp(static_cast<Int>(a[i]) + b[i], "vec_add");
  return r;
}

// b must divide a componentwise.
inline ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec vec_min(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

// -1, 0, +1 comparing a and b lexicographically.
inline int lex_compare(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct VecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Exp x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::string vec_to_string(const ExpVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace zsm
