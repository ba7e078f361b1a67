#include "primelab/arith.hpp"

#include <algorithm>
#include <cmath>

#include "primelab/error.hpp"
#include "primelab/primality.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize(0) is undefined");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  for (std::uint64_t p : sieve::base_primes()) {
    if (p * p > n) break;
    strip(p);
  }
  if (n > 1 && !is_prime(n)) {
    // Past the cached primes; only reachable above 2^40.
    std::uint64_t d = sieve::base_primes().back() + 2;
    for (; d <= n / d; d += 2) strip(d);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius requires n >= 1");
  int sign = 1;
  for (const auto& pe : factorize(n)) {
    if (pe.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi requires n >= 1");
  std::uint64_t result = n;
  for (const auto& pe : factorize(n)) result = result / pe.prime * (pe.prime - 1);
  return result;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw DomainError("von_mangoldt requires n >= 1");
  if (n == 1) return 0.0;
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().prime)) : 0.0;
}

double von_mangoldt_k(std::uint64_t n, unsigned k) {
  if (n == 0) throw DomainError("von_mangoldt_k requires n >= 1");
  if (k < 1 || k > 3) throw DomainError("von_mangoldt_k supports k in 1..3");
  const auto f = factorize(n);
  if (f.size() > k) return 0.0;
  // Only squarefree divisors contribute: enumerate subsets of prime factors.
  const double logn = std::log(static_cast<double>(n));
  double total = 0.0;
  const std::size_t m = f.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    double logd = 0.0;
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        logd += std::log(static_cast<double>(f[i].prime));
        sign = -sign;
      }
    }
    total += sign * std::pow(logn - logd, static_cast<double>(k));
  }
  return total;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw DomainError("legendre_valuation requires a prime base");
  std::uint64_t total = 0;
  for (std::uint64_t m = n / p; m > 0; m /= p) total += m;
  return total;
}

std::uint64_t binomial_valuation(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  if (!is_prime(p)) throw DomainError("binomial_valuation requires a prime base");
  if (k > n) throw DomainError("binomial_valuation requires k <= n");
  std::uint64_t a = k;
  std::uint64_t b = n - k;
  std::uint64_t carry = 0;
  std::uint64_t carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  std::uint64_t s = 0;
  for (; n > 0; n /= base) s += n % base;
  return s;
}

}  // namespace primelab
