#include "primelab/bernoulli.hpp"

#include <map>
#include <mutex>
#include <numbers>

#include "primelab/characters.hpp"
#include "primelab/error.hpp"

namespace primelab {

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<ExactRational> values{ExactRational(1)};
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactRational bernoulli_number(unsigned n, unsigned cap) {
  if (n > cap) {
    throw DomainError("Bernoulli index " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  while (c.values.size() <= n) {
    const unsigned m = static_cast<unsigned>(c.values.size());
    ExactRational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += ExactRational(binomial(m + 1, k)) * c.values[k];
    ExactRational bm = -acc / (m + 1);
    bm.canonicalize();
    c.values.push_back(bm);
  }
  return c.values[n];
}

BernoulliPolynomial::BernoulliPolynomial(unsigned degree, unsigned cap)
    : degree_(degree), coeffs_(degree + 1) {
  // B_n(x) = sum_k C(n,k) B_k x^{n-k}: coefficient of x^j is C(n, n-j) B_{n-j}.
  for (unsigned j = 0; j <= degree; ++j) {
    coeffs_[j] = ExactRational(binomial(degree, degree - j)) * bernoulli_number(degree - j, cap);
  }
}

ExactRational BernoulliPolynomial::evaluate(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double BernoulliPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

ExactRational BernoulliPolynomial::integral_unit() const {
  ExactRational acc = 0;
  for (unsigned j = 0; j <= degree_; ++j) acc += coeffs_[j] / (j + 1);
  return acc;
}

double bernoulli_poly_eval(unsigned n, double x, unsigned cap) {
  return BernoulliPolynomial(n, cap).evaluate(x);
}

std::complex<double> chi_bernoulli_number(unsigned n, const Character& chi) {
  if (n < 1) throw DomainError("chi_bernoulli_number requires n >= 1");
  const std::uint64_t q = chi.modulus();
  const BernoulliPolynomial poly(n);
  // Exact coefficient per root of unity exp(2 pi i k / M).
  std::map<std::uint64_t, ExactRational> by_angle;
  for (std::uint64_t t = 0; t < q; ++t) {
    const RootOfUnity v = chi.value(t);
    if (v.zero) continue;
    const std::uint64_t k = v.numerator * (chi.group().exponent() / v.denominator);
    by_angle[k] += poly.evaluate(ExactRational(mpz_class(std::to_string(t)),
                                               mpz_class(std::to_string(q))));
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), q, n - 1);
  std::complex<double> total{0.0, 0.0};
  for (auto& [k, coeff] : by_angle) {
    coeff *= scale;
    const RootOfUnity w{false, k, chi.group().exponent()};
    total += coeff.get_d() * w.value();
  }
  return total;
}

}  // namespace primelab
