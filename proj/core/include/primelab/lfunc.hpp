#pragma once

#include <complex>
#include <cstdint>

#include "primelab/characters.hpp"
#include "primelab/zeta.hpp"

namespace primelab {

struct CharacterId {
  std::uint64_t q = 1;
  std::uint64_t index = 0;
};

struct LValue {
  ComplexPoint s;
  CharacterId chi_id;
  Complex value;
  double est_error = 0.0;  // bound on truncation error plus a rounding allowance
};

/// L(s, chi) for Re(s) > 0.
///
/// Non-trivial chi: the Dirichlet series is summed directly up to n = Mq and
/// the remaining tail is split by residue class a mod q; each class tail
/// sum_{m >= M} (a + mq)^{-s} is closed with Euler-Maclaurin (ten Bernoulli
/// terms). Because the character sums to zero over a period, the divergent
/// integral terms cancel across classes, which is what makes Re(s) <= 1
/// reachable. est_error carries the Euler-Maclaurin remainder bound.
///
/// Trivial chi: zeta(s) prod_{p | q} (1 - p^{-s}).
///
/// Throws PoleError at (chi_0, s = 1), DomainError for Re(s) <= 0.
LValue l_value(ComplexPoint s, const Character& chi);

/// L(1 - n, chi) = -B_{n,chi} / n for primitive chi with n = delta (mod 2).
/// Throws DomainError on a parity mismatch or a non-primitive character.
Complex l_special_value(unsigned n, const Character& chi);

enum class PositiveValueForm {
  standard,    // (-1)^{1+(n-delta)/2} tau(chi) / (2 i^delta) (2 pi/q)^n B_{n, conj chi} / n!
  as_printed,  // -(2 pi i / q)^n tau(chi) B_{n, conj chi} / (2n)!
};

/// Closed form for L(n, chi), n >= 1, primitive chi with n = delta (mod 2).
Complex l_positive_value_closed_form(unsigned n, const Character& chi,
                                     PositiveValueForm form = PositiveValueForm::standard);

/// epsilon(chi) = i^{-delta} q^{-1/2} tau(chi).
Complex root_number(const Character& chi);

enum class CompletionForm {
  standard,    // Lambda(s) = (q/pi)^{(s+delta)/2} Gamma((s+delta)/2) L(s); Lambda(s) = eps Lambda(1-s, conj)
  as_printed,  // Lambda(s) = q^{(s+delta)/2} Gamma((s+delta)/2) L(s); Lambda(s) = eps q^{1/2-s} Lambda(1-s, conj)
};

/// Completed L-function Lambda(s, chi) in the requested normalisation.
Complex completed_l(ComplexPoint s, const Character& chi, CompletionForm form);

/// |Lambda(s, chi) - eps(chi) [q^{1/2-s}] Lambda(1 - s, conj chi)|.
/// Requires primitive chi, q >= 3, 0 < Re(s) < 1.
double functional_equation_residual(ComplexPoint s, const Character& chi,
                                    CompletionForm form = CompletionForm::standard);

}  // namespace primelab
