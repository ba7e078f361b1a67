#pragma once

#include <complex>
#include <cstddef>
#include <gmpxx.h>
#include <vector>

namespace primelab {

class Character;

// Reduced fraction with arbitrary-precision numerator and positive
// denominator; gmp keeps mpq_class canonical after every arithmetic op.
using ExactRational = mpq_class;

inline constexpr unsigned kDefaultBernoulliCap = 200;

/// B_n with B_1 = -1/2, from sum_{k=0}^{m} C(m+1, k) B_k = 0. Values are
/// cached process-wide. Throws DomainError for n > cap.
ExactRational bernoulli_number(unsigned n, unsigned cap = kDefaultBernoulliCap);

/// Exact binomial coefficient.
mpz_class binomial(unsigned n, unsigned k);

class BernoulliPolynomial {
 public:
  explicit BernoulliPolynomial(unsigned degree, unsigned cap = kDefaultBernoulliCap);

  unsigned degree() const { return degree_; }
  /// Ascending powers of x; coefficient(degree()) == 1.
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }

  ExactRational evaluate(const ExactRational& x) const;
  double evaluate(double x) const;
  /// Exact integral over [0, 1].
  ExactRational integral_unit() const;

 private:
  unsigned degree_;
  std::vector<ExactRational> coeffs_;
};

double bernoulli_poly_eval(unsigned n, double x, unsigned cap = kDefaultBernoulliCap);

/// Generalized Bernoulli number B_{n,chi} = q^{n-1} sum_{0<=t<q} chi(t) B_n(t/q).
/// The sum is grouped by root of unity so every coefficient is exact; only
/// the final combination is done in floating point.
std::complex<double> chi_bernoulli_number(unsigned n, const Character& chi);

}  // namespace primelab
