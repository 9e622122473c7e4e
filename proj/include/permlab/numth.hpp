#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw ArgumentError(std::to_string(p) + " is not prime");
  }
}

// Prime factorization by trial division, adequate for the 64-bit inputs the
// library ever sees (group orders and q^n - 1 with q <= 9, n <= 12).
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    while (n % (d + 2) == 0) {
      ++out[d + 2];
      n /= d + 2;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Largest power of p dividing n (n >= 1).
inline std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    r *= p;
    n /= p;
  }
  return r;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline std::int64_t extended_gcd(std::int64_t a, std::int64_t b,
                                 std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1 = 0, y1 = 0;
  std::int64_t g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a not divisible by p
  return pow_mod(a % p, p - 2, p);
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw ArgumentError("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

} // namespace permlab
