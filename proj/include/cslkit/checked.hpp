#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cslkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a fixed-width intermediate result would not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("int64 overflow in negation");
  return -a;
}

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

/// a*b + c*d
inline std::int64_t mul_add(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return add(mul(a, b), mul(c, d));
}

/// Non-negative gcd; gcd(0, 0) = 0.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return abs(mul(a / gcd(a, b), b));
}

/// Floor division for b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error("division by zero");
  if (b == -1) return neg(a);
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Result in [0, |b|).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t m = a % b;
  if (m < 0) m += (b < 0 ? -b : b);
  return m;
}

/// Largest s with s*s <= n, for n >= 0.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error("isqrt of a negative number");
  auto s = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (s > 0 && (__int128)s * s > n) --s;
  while ((__int128)(s + 1) * (s + 1) <= n) ++s;
  return s;
}

inline bool is_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t s = isqrt(n);
  return s * s == n;
}

struct ExtGcd {
  std::int64_t g;  // >= 0
  std::int64_t x;
  std::int64_t y;  // x*a + y*b == g
};

inline ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = sub(old_r, mul(q, r));
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s));
    old_s = s;
    s = tmp;
    tmp = sub(old_t, mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

}  // namespace checked
}  // namespace cslkit
