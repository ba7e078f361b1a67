#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "primelab/characters.hpp"
#include "primelab/lfunc.hpp"
#include "primelab/report.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

struct APCountSnapshot {
  std::uint64_t x = 0;
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  std::uint64_t pi_ap = 0;
  double theta_ap = 0.0;
  double psi_ap = 0.0;  // sum of Lambda(n) over n <= x, n = a (mod q)
};

struct TwistValue {
  std::uint64_t x = 0;
  CharacterId chi_id;
  std::complex<double> theta_twist;  // sum_{p <= x} chi(p) log p
  std::complex<double> psi_twist;    // sum_{n <= x} chi(n) Lambda(n)
};

/// Throws DomainError unless gcd(a, q) = 1.
APCountSnapshot count_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         const SieveConfig& config = {});

TwistValue twist(std::uint64_t x, const Character& chi, const SieveConfig& config = {});

/// |theta(x; q, a) - phi(q)^{-1} sum_chi conj(chi(a)) theta(x, chi)|, with
/// both sides computed independently.
double decompose_check(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                       const SieveConfig& config = {});

struct VerifyOptions {
  SieveConfig sieve{};
  std::uint64_t exemption_threshold = kDefaultExemption;
  std::uint64_t seed = kDefaultSeed;
  bool keep_rows = true;
};

/// For every sample x, every q <= floor((log x)^A) and every a coprime to
/// q, looks for a prime p = a (mod q) in [x, 2x]. Row margin is
/// (first such prime - x) / x; extremal is the largest margin.
VerificationReport verify_ap_bertrand(std::span<const std::uint64_t> x_samples, double A,
                                      const VerifyOptions& options = {});

}  // namespace primelab
