#pragma once

#include <cstdint>
#include <numeric>

namespace dict2d::modmath {

// Inverse of a modulo m, gcd(a, m) == 1, m >= 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = a % m, r = m;
  std::int64_t old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

// Intersects x = a (mod m) with x = b (mod p); false if the classes are
// disjoint, else (a, m) becomes the intersection, m' = lcm(m, p). Values
// stay well inside int64 as long as lcm(m, p) does.
inline bool crt_merge(std::int64_t& a, std::int64_t& m, std::int64_t b,
                      std::int64_t p) {
  const std::int64_t g = std::gcd(m, p);
  std::int64_t diff = (b - a) % p;
  if (diff < 0) diff += p;
  if (diff % g != 0) return false;
  const std::int64_t pg = p / g;
  const std::int64_t t =
      (diff / g) % pg * mod_inverse((m / g) % pg, pg) % pg;
  const std::int64_t merged = m * pg;
  a = a + m * t;
  m = merged;
  a %= m;
  return true;
}

}  // namespace dict2d::modmath
