#pragma once

#include <complex>

namespace primelab {

/// log Gamma(z) on the branch continuous in the right half-plane: Stirling
/// series with eight Bernoulli terms after shifting Re(z) past 10 via
/// Gamma(z+1) = z Gamma(z); reflection handles Re(z) < 1/2.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

}  // namespace primelab
