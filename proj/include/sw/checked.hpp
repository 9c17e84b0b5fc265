#pragma once

#include <cstdint>
#include <string>

#include "sw/error.hpp"

namespace sw {

using Int = std::int64_t;

// Overflow is reported as Errc::overflow, never wrapped.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_pow(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Representative in [0, m) for m > 0.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace sw
