#pragma once

#include <cstdint>

#include "twobridge/error.hpp"

namespace twobridge::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// a*b + c*d without intermediate wrap.
inline Int dot(Int a, Int b, Int c, Int d) { return add(mul(a, b), mul(c, d)); }

/// Floor division for d > 0.
inline Int floor_div(Int n, Int d) {
  Int q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

/// Non-negative residue for m > 0.
inline Int mod(Int n, Int m) {
  Int r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace twobridge::checked
