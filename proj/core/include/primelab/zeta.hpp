#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "primelab/parallel.hpp"

namespace primelab {

using Complex = std::complex<double>;

struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  ComplexPoint() = default;
  ComplexPoint(double r, double i = 0.0) : re(r), im(i) {}
  ComplexPoint(Complex z) : re(z.real()), im(z.imag()) {}
  Complex value() const { return {re, im}; }
};

struct ZetaZero {
  std::uint64_t index = 0;  // 1-based ordinal
  double t = 0.0;
  double half_width = 0.0;
};

/// (1 - 2^{1-s})^{-1} times the alternating series, accelerated by the Hasse
/// (binomial / Euler transform) weights. Valid for Re(s) > 0. Throws
/// PoleError at s = 1 and DomainError for Re(s) <= 0.
Complex zeta_alternating(ComplexPoint s);

/// Number of acceleration levels zeta_alternating uses at height t.
unsigned hasse_levels(double t);

/// True when |1 - 2^{1-s}| < 1e-6, where the alternating form loses accuracy.
bool near_eta_singularity(ComplexPoint s);

/// Euler-Maclaurin continuation with Bernoulli terms up to B_order. The
/// cutoff N is picked so the remainder estimate is below ~1e-15 relative.
/// Requires Re(s) > 1 - order; exact (zero remainder) at non-positive
/// integers s > -order. Other points with Re(s) < 0 are evaluated at 1 - s
/// and carried back by the functional equation.
Complex zeta_euler_maclaurin(ComplexPoint s, unsigned order = 12);

/// Riemann-Siegel angle via its Stirling expansion through t^-7. t >= 10.
double riemann_siegel_theta(double t);

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)). t >= 10.
double hardy_z(double t);

/// Full complex product e^{i theta(t)} zeta(1/2 + it), for inspecting how
/// real it is.
Complex hardy_z_complex(double t);

/// g_n with theta(g_n) = n pi, n >= 0.
double gram_point(std::int64_t n);

inline constexpr double kZeroScanMax = 500.0;

struct ZeroScanStats {
  std::size_t gram_intervals = 0;
  std::size_t bad_gram_points = 0;
  std::size_t refined_blocks = 0;
};

/// Every critical-line zero with 10 <= t <= t_max (t_max in [10, 500]),
/// located by sign changes of Z over Gram blocks and refined by bisection
/// to half_width <= tolerance. Throws Error if a block cannot be reconciled
/// with the expected zero count after three 10x refinement rounds.
std::vector<ZetaZero> find_zeros(double t_max, Parallelism par = {}, double tolerance = 1e-12,
                                 ZeroScanStats* stats = nullptr);

/// (T/2pi) log(T/2pi) - T/2pi, plus 7/8 when include_constant. T > 2 pi.
double zero_count_main_term(double T, bool include_constant = false);

/// sum_{n in Z} exp(-pi n^2 t), t > 0.
double jacobi_theta(double t);

/// One zero per line, 12 decimal places.
std::string export_zeros(const std::vector<ZetaZero>& zeros);

}  // namespace primelab
