#pragma once

// Internal int64 fraction kernel for the enumeration hot loops. Valid only
// when every set element is an integer with |x| <= kSmallIntBound: then any
// cross-ratio numerator/denominator is a product of two differences, which
// fits in int64 (2^31 * 2^31 = 2^62).

#include <cstdint>
#include <numeric>
#include <tuple>

namespace xratio::detail {

inline constexpr std::int64_t kSmallIntBound = std::int64_t(1) << 30;

struct Frac64 {
  std::int64_t num;
  std::int64_t den; // > 0

  friend bool operator==(const Frac64 &a, const Frac64 &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Frac64 &a, const Frac64 &b) {
    return std::tie(a.num, a.den) < std::tie(b.num, b.den);
  }
};

inline Frac64 reduce64(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

// X(a,b,c,d) for distinct inputs; denominator is nonzero by distinctness.
inline Frac64 cross_ratio64(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t d) {
  return reduce64((a - b) * (c - d), (b - c) * (a - d));
}

struct Frac64Pair {
  Frac64 first;
  Frac64 second;

  friend bool operator==(const Frac64Pair &a, const Frac64Pair &b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator<(const Frac64Pair &a, const Frac64Pair &b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  }
};

} // namespace xratio::detail
