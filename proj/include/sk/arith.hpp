#pragma once

// Integer primitives shared by every module: gcd/divisor enumeration,
// factorization, the Kronecker symbol and fundamental discriminants.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sk/rational.hpp"

namespace sk {

// gcd(0, 0) = 0; the result is never negative.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t gcd(std::int64_t a, std::int64_t b, std::int64_t c) { return std::gcd(std::gcd(a, b), c); }

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Floor of the square root of n >= 0.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  std::int64_t r = 0;
  std::int64_t bit = std::int64_t{1} << 31;
  while (bit > 0) {
    std::int64_t t = r + bit;
    if (t * t <= n) r = t;
    bit >>= 1;
  }
  return r;
}

inline bool is_square(std::int64_t n) {
  if (n < 0) return false;
  auto r = isqrt(n);
  return r * r == n;
}

// Python-style modulus, result in [0, |m|).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m == 0) throw std::domain_error("modulus zero");
  if (m < 0) m = -m;
  auto r = a % m;
  return r < 0 ? r + m : r;
}

// Ascending and complete.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors of a non-positive number");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// All d | n with gcd(d, N) = 1, ascending.
inline std::vector<std::int64_t> divisors_coprime_to(std::int64_t n, std::int64_t N) {
  if (N < 1) throw std::domain_error("divisors_coprime_to: N must be positive");
  std::vector<std::int64_t> out;
  for (auto d : divisors(n))
    if (gcd(d, N) == 1) out.push_back(d);
  return out;
}

// Prime factorization as (p, e) pairs with p ascending; |n| is factored.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= bound; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// sigma_k(n) = sum of d^k over d | n.
inline Integer divisor_sigma(unsigned long k, std::int64_t n) {
  Integer s = 0;
  for (auto d : divisors(n)) s += ipow(d, k);
  return s;
}

// Kronecker symbol (D/n), completely multiplicative in n.
inline int kronecker_symbol(std::int64_t D, std::int64_t n) {
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (D < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (D % 2 == 0) return 0;
    auto r8 = mod(D, 8);
    if ((v & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (D/n) for odd n > 0.
  std::int64_t a = mod(D, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      auto r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool is_squarefree(std::int64_t n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// D = 1, or D = 1 mod 4 squarefree, or D = 4d with d = 2,3 mod 4 squarefree.
inline bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1) return true;
  if (D == 0) return false;
  auto r = mod(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  auto d = D / 4;
  auto s = mod(d, 4);
  return (s == 2 || s == 3) && is_squarefree(d);
}

// Writes s = D f^2 with D a fundamental discriminant, f >= 1. Requires s = 0,1 mod 4, s != 0.
inline std::pair<std::int64_t, std::int64_t> fundamental_decomposition(std::int64_t s) {
  if (s == 0 || (mod(s, 4) != 0 && mod(s, 4) != 1))
    throw std::domain_error("fundamental_decomposition: not a discriminant");
  std::int64_t core = s < 0 ? -1 : 1;
  std::int64_t f = 1;
  for (auto [p, e] : factorize(s)) {
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) core *= p;
  }
  if (mod(core, 4) == 1) return {core, f};
  // core = 2,3 mod 4: f carries the factor 2 that moves into D.
  return {4 * core, f / 2};
}

}  // namespace sk
