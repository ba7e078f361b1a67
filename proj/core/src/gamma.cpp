#include "primelab/gamma.hpp"

#include <cmath>
#include <numbers>

namespace primelab {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..8.
constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,   1.0 / 156.0,        -3617.0 / 122400.0,
};

constexpr double kShiftTarget = 10.0;

std::complex<double> stirling(std::complex<double> z) {
  using std::numbers::pi;
  std::complex<double> result = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi);
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> power = inv;
  for (double c : kStirling) {
    result += c * power;
    power *= inv2;
  }
  return result;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  std::complex<double> shift{0.0, 0.0};
  while (z.real() < kShiftTarget) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace primelab
