#include "primelab/primality.hpp"

#include <cmath>
#include <limits>

namespace primelab {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// r^k, or nullopt-like sentinel (max) when it exceeds 2^64 - 1.
std::uint64_t checked_pow(std::uint64_t r, unsigned k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && acc > kMax / r) return kMax;
    acc *= r;
  }
  return acc;
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  if (k == 0) return 0;
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  while (r > 0 && (checked_pow(r, k) == kMax || checked_pow(r, k) > n)) --r;
  while (true) {
    const std::uint64_t next = checked_pow(r + 1, k);
    if (next == kMax || next > n) break;
    ++r;
  }
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace primelab
