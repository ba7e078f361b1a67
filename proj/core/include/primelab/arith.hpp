#pragma once

#include <cstdint>
#include <vector>

namespace primelab {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division by the cached base primes, continuing with odd candidates
/// past 2^20; practical below 2^40. Ascending primes. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
double von_mangoldt(std::uint64_t n);

/// Generalized von Mangoldt function sum_{d|n} mu(d) log(n/d)^k, for k in 1..3.
double von_mangoldt_k(std::uint64_t n, unsigned k);

/// ord_p(n!) by Legendre's formula. Throws DomainError unless p is prime.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

/// ord_p(C(n, k)) as the number of carries when adding k and n-k in base p.
std::uint64_t binomial_valuation(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

}  // namespace primelab
