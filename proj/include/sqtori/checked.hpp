#pragma once

#include <cstdint>
#include <numeric>

#include "sqtori/errors.hpp"

// Overflow-checked integer helpers. Every operation either returns the exact
// result or throws ArithmeticError; nothing wraps.
namespace sqtori::checked {

template <typename T>
constexpr T mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
  return r;
}

template <typename T>
constexpr T add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

template <typename T>
constexpr T sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
  return r;
}

constexpr std::int64_t neg(std::int64_t a) { return sub<std::int64_t>(0, a); }

constexpr std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// gcd(a, 0) = |a|, gcd(0, 0) = 0.
constexpr std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(abs(a), abs(b));
}

} // namespace sqtori::checked
