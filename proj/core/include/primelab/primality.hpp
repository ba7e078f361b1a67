#pragma once

#include <cstdint>

namespace primelab {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for every 64-bit input (bases are the
/// first twelve primes). Independent of the sieve.
bool is_prime(std::uint64_t n);

/// floor(n^(1/k)) for k >= 1, exact: the floating estimate is corrected by
/// testing (r+1)^k and r^k with overflow-checked integer powers.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace primelab
