#pragma once

#include <cstdint>
#include <stdexcept>

namespace hp0 {

// Exact integer coefficients live in int64; growth is polynomial at the
// scales we run, but overflow is checked rather than assumed.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact coefficient arithmetic");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact coefficient arithmetic");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact coefficient arithmetic");
  return r;
}

}  // namespace hp0
