#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primelab/sieve.hpp"
#include "primelab/zeta.hpp"

namespace primelab {

// Ordinates t_k > 0 of critical-line zeros (real part 1/2), ascending.
// `height` is the level up to which the bank is complete: every zero with
// t <= height is present.
struct ZeroBank {
  std::vector<double> zeros;
  double height = 0.0;
  std::string source;
};

/// The first ten zeros, complete to t = 50.
ZeroBank builtin_zero_bank();

/// "builtin" or a path to a zero file.
ZeroBank load_zeros(std::string_view source);

/// One decimal per line; blank lines and '#' comments ignored, except a
/// "# height: <t>" comment that declares completeness. Without it the
/// height is the largest zero. Throws ParseError (with line number) on bad
/// numbers, non-positive values or non-ascending order.
ZeroBank parse_zero_bank(std::string_view text, std::string source);

ZeroBank bank_from_zeros(const std::vector<ZetaZero>& zeros, double height, std::string source);

/// Writes the height comment then one zero per line at 12 decimal places.
std::string export_zero_bank(const ZeroBank& bank);

/// x - sum_{t_k <= T} 2 Re(x^rho / rho) - log 2 pi - (1/2) log(1 - x^-2).
/// Throws DomainError for x < 2 and Error when T exceeds the bank height.
double psi_explicit(double x, const ZeroBank& bank, double T);

/// sum over |t| <= T of x^rho / rho, conjugate pairs folded (a real number).
double zero_sum(double x, const ZeroBank& bank, double T);

/// Same sum with each conjugate zero added separately, as a complex number.
std::complex<double> zero_sum_unfolded(double x, const ZeroBank& bank, double T);

/// True when x is an integer prime power (where the formula is not pointwise).
bool is_prime_power_point(double x);

struct ExplicitResult {
  double x = 0.0;
  double T = 0.0;
  double psi_estimate = 0.0;
  double sieve_psi = 0.0;
  double residual = 0.0;
  double bound = 0.0;  // x T^-1 (log Tx)^2 with implied constant 1
};

/// Integer grid points are shifted by +0.5.
std::vector<ExplicitResult> residual_scan(std::span<const double> x_grid, const ZeroBank& bank,
                                          double T, const SieveConfig& config = {},
                                          Parallelism par = {});

/// CSV with columns x,T,psi_explicit,psi_sieve,residual,bound.
std::string residual_csv(const std::vector<ExplicitResult>& results);

enum class LiVariant { offset_from_2, principal_value };

/// offset_from_2: integral of 1/log t over [2, x] by adaptive Gauss-Kronrod.
/// principal_value: gamma + log log x + sqrt(x) sum_n (-1)^{n-1} (log x)^n /
/// (n! 2^{n-1}) sum_{k <= (n-1)/2} 1/(2k+1).
double li(double x, LiVariant variant);

}  // namespace primelab
