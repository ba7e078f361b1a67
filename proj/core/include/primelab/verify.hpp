#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primelab/characters.hpp"
#include "primelab/progressions.hpp"
#include "primelab/report.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

inline constexpr double kMertensConstant = 0.26149721284764278375;

// Sample generators for the randomized scans. Output is sorted and unique, so
// a (range, count, seed) triple always names the same sample set.
std::vector<std::uint64_t> sample_log_uniform(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                              std::uint64_t seed);
std::vector<std::uint64_t> sample_uniform(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                          std::uint64_t seed);
/// lo, lo + 1, ..., hi.
std::vector<std::uint64_t> dense_range(std::uint64_t lo, std::uint64_t hi);

/// Every integer x in [1, limit] must have a prime in [x, 2x]. Margin is
/// (first prime >= x - x) / x; extremal is the largest margin at or above
/// the exemption threshold. Only failures are kept, never per-x rows.
VerificationReport verify_bertrand(std::uint64_t limit, const VerifyOptions& options = {});

/// y = ceil(sqrt(x) (log x)^epsilon); checks [x, x + y] for primes. Margin is
/// the number of primes found; extremal is the smallest count.
VerificationReport verify_theorem1(std::span<const std::uint64_t> x_samples, double epsilon,
                                   const VerifyOptions& options = {});

/// y = floor(x / (log x)^{1 - epsilon}); same checks and margin as above.
VerificationReport verify_theorem48(std::span<const std::uint64_t> x_samples, double epsilon,
                                    const VerifyOptions& options = {});

struct Lemma55Margins {
  double sum_log = 0.0;  // sum of log p over x < p <= x + y
  double lower = 0.0;    // S - y (1 - c0 loglog x / log x), c0 = 1
  double upper = 0.0;    // y (1 + 2 loglog x / log x) - S
};

Lemma55Margins lemma55_check(std::uint64_t x, std::uint64_t y, const SieveConfig& config = {});

/// Random x in [x_lo, x_hi) with y = floor(sqrt(x) log x). Row margin is the
/// upper margin; lower-margin extremes go to metrics. Signs are data, so rows
/// always pass.
VerificationReport lemma55_scan(std::uint64_t x_lo, std::uint64_t x_hi, std::size_t count,
                                const VerifyOptions& options = {});

struct MertensEstimate {
  std::uint64_t x = 0;
  double sum = 0.0;         // sum of 1/p, p <= x
  double b_estimate = 0.0;  // sum - log log x
};

MertensEstimate mertens_estimate(std::uint64_t x, const SieveConfig& config = {});

enum class IdentityMode {
  exact,       // step-function integrals as finite sums of antiderivative differences
  quadrature,  // adaptive Gauss-Kronrod over each constant piece
};

struct IdentityOptions {
  IdentityMode mode = IdentityMode::exact;
  double tolerance = 1e-12;  // quadrature mode only
  SieveConfig sieve{};
};

struct IdentityRow {
  std::string label;  // "i", "ii", ... ; "ii-printed" carries the printed variant
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|)
};

/// Partial-summation identities for pi, theta, psi and sum 1/p:
///   i    pi(x) = theta(x)/log x + int_2^x theta(t) / (t log^2 t) dt
///   ii   theta(x) = pi(x) log x - int_2^x pi(t) / t dt
///   iii  sum_{n<=x} Lambda(n)/log n = psi(x)/log x + int_2^x psi(t) / (t log^2 t) dt
///   iv   sum_{p<=x} 1/p = pi(x)/x + int_2^x pi(t) / t^2 dt
///   v    sum_{n<=x} Lambda(n) log n = psi(x) log x - int_2^x psi(t) / t dt
/// plus "ii-printed", the same with kernel 1/(t log^2 t) in place of 1/t,
/// which is not an identity and is reported for comparison only.
std::vector<IdentityRow> identity_check_thm43(std::uint64_t x, const IdentityOptions& options = {});

/// Progression and twist versions, q = chi.modulus():
///   i, ii, iv   as above over primes p = a (mod q)
///   iii         sum chi(p)/p = theta(x,chi)/(x log x)
///                 + int_2^x theta(t,chi) (1 + log t) / (t^2 log^2 t) dt
/// plus "ii-printed". Throws DomainError unless gcd(a, q) = 1.
std::vector<IdentityRow> identity_check_thm44(std::uint64_t x, const Character& chi,
                                              std::uint64_t a,
                                              const IdentityOptions& options = {});

/// For every integer 2 <= x <= limit (and the left limit at x) computes
///   psi:    |psi(x) - x| / (sqrt(x) log^2 x)
///   theta:  |theta(x) - x| / (sqrt(x) log^2 x)
///   pi-li:  |pi(x) - li(x)| / (sqrt(x) log x), principal-value li
/// against 1/(8 pi). A failure row covers a maximal run of consecutive
/// failing x with the same label: x is the run start, y its length and
/// margin the largest ratio in it. Extremal is the largest psi ratio above
/// the exemption threshold. Sign changes of psi(x) - x and the windows
/// [w, 2.02 w] that contain one are reported in metrics.
VerificationReport pnt_error_scan(std::uint64_t limit, const VerifyOptions& options = {});

}  // namespace primelab
