#include "primelab/lfunc.hpp"

#include <cmath>
#include <numbers>

#include "primelab/bernoulli.hpp"
#include "primelab/error.hpp"
#include "primelab/gamma.hpp"

namespace primelab {

namespace {

using std::numbers::pi;

constexpr unsigned kTailTerms = 10;  // Bernoulli terms B_2 .. B_20

const std::vector<double>& tail_coefficients() {
  // B_{2j} / (2j)!, j = 1..kTailTerms+1 (the last one is only used in bounds).
  static const std::vector<double> coef = [] {
    std::vector<double> c;
    mpz_class fact = 1;
    for (unsigned j = 1; j <= kTailTerms + 1; ++j) {
      fact *= (2 * j - 1) * (2 * j);
      c.push_back(mpq_class(bernoulli_number(2 * j) / fact).get_d());
    }
    return c;
  }();
  return coef;
}

Complex pow_real(double base, Complex exponent) {
  return std::exp(exponent * std::log(base));
}

// expm1(z) / z, stable near z = 0.
Complex expm1_over(Complex z) {
  if (std::abs(z) < 0.5) {
    Complex term{1.0, 0.0};
    Complex sum{1.0, 0.0};
    for (int k = 2; k < 30; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

double rising_abs(Complex s, unsigned len) {
  double r = 1.0;
  for (unsigned i = 0; i < len; ++i) r *= std::abs(s + static_cast<double>(i));
  return r;
}

// 2 zeta(2K) / (2 pi)^{2K} times the remaining integral for one residue
// class, with Y = a + Mq.
double tail_remainder_bound(Complex s, std::uint64_t q, double y) {
  const unsigned two_k = 2 * kTailTerms;
  const double sigma = s.real();
  const double lead = 2.0 * 1.0000009539620338 /* zeta(20) */ /
                      std::pow(2.0 * pi, static_cast<double>(two_k));
  const double qd = static_cast<double>(q);
  return lead * rising_abs(s, two_k) * std::pow(qd, two_k - 1.0) *
         std::pow(y, 1.0 - sigma - two_k) / (sigma + two_k - 1.0);
}

LValue l_value_nontrivial(Complex s, const Character& chi) {
  const std::uint64_t q = chi.modulus();
  const double qd = static_cast<double>(q);
  const auto& coef = tail_coefficients();

  // Smallest block count M whose total remainder bound is negligible.
  std::uint64_t blocks = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil((std::abs(s) + 10.0) / qd)));
  double bound = 0.0;
  for (;; blocks = blocks + blocks / 2 + 1) {
    bound = qd * tail_remainder_bound(s, q, static_cast<double>(blocks) * qd);
    if (bound < 1e-15 || blocks > (std::uint64_t{1} << 26) / q) break;
  }
  const std::uint64_t head_end = blocks * q;

  // Head: sum_{n <= Mq} chi(n) n^{-s}.
  Complex head{0.0, 0.0};
  double head_abs = 0.0;
  for (std::uint64_t n = 1; n <= head_end; ++n) {
    const RootOfUnity v = chi.value(n);
    if (v.zero) continue;
    const Complex term = v.value() * pow_real(static_cast<double>(n), -s);
    head += term;
    head_abs += std::abs(term);
  }

  // Tails per residue class.
  const double y0 = static_cast<double>(head_end);
  const Complex u = 1.0 - s;
  const Complex y0_pow = pow_real(y0, u);  // Y0^{1-s}
  Complex tail{0.0, 0.0};
  for (std::uint64_t a = 1; a <= q; ++a) {
    const RootOfUnity v = chi.value(a);
    if (v.zero) continue;
    const Complex c = v.value();
    const double y = static_cast<double>(a) + y0;
    // integral: (Y^{1-s} - Y0^{1-s}) / (q (s-1)), the Y0 part cancelling over a.
    const double log_ratio = std::log1p(static_cast<double>(a) / y0);
    Complex t = -y0_pow * log_ratio * expm1_over(u * log_ratio) / qd;
    const Complex y_pow = pow_real(y, -s);  // Y^{-s}
    t += 0.5 * y_pow;
    Complex ratio = s * qd * y_pow / y;  // (s)_1 q Y^{-s-1}
    for (unsigned j = 1; j <= kTailTerms; ++j) {
      t += coef[j - 1] * ratio;
      ratio *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j)) * qd * qd /
               (y * y);
    }
    tail += c * t;
  }
  LValue out;
  out.value = head + tail;
  out.est_error = bound + 4e-16 * (head_abs + 1.0) * std::sqrt(static_cast<double>(head_end));
  return out;
}

}  // namespace

LValue l_value(ComplexPoint sp, const Character& chi) {
  const Complex s = sp.value();
  if (s.real() <= 0.0) throw DomainError("l_value requires Re(s) > 0");
  LValue out;
  if (chi.is_trivial()) {
    if (s == Complex{1.0, 0.0}) throw PoleError("L(s, chi_0) has a pole at s = 1");
    Complex v = zeta_euler_maclaurin(sp, 12);
    for (auto p : chi.group().prime_divisors()) v *= 1.0 - pow_real(static_cast<double>(p), -s);
    out.value = v;
    out.est_error = 1e-13 * (std::abs(v) + 1.0);
  } else {
    out = l_value_nontrivial(s, chi);
  }
  out.s = sp;
  out.chi_id = {chi.modulus(), chi.index()};
  return out;
}

namespace {

void require_special_value_domain(unsigned n, const Character& chi) {
  if (n < 1) throw DomainError("special values need n >= 1");
  if (!chi.is_primitive()) throw DomainError("special values need a primitive character");
  if (static_cast<int>(n % 2) != chi.parity())
    throw DomainError("parity mismatch: n must be congruent to delta(chi) mod 2");
}

}  // namespace

Complex l_special_value(unsigned n, const Character& chi) {
  require_special_value_domain(n, chi);
  return -chi_bernoulli_number(n, chi) / static_cast<double>(n);
}

Complex l_positive_value_closed_form(unsigned n, const Character& chi, PositiveValueForm form) {
  require_special_value_domain(n, chi);
  const double q = static_cast<double>(chi.modulus());
  const Complex tau = gauss_sum(chi, 1);
  const Complex bern = chi_bernoulli_number(n, chi.conjugate());
  const Complex i{0.0, 1.0};
  if (form == PositiveValueForm::as_printed) {
    const double fact2n = std::tgamma(2.0 * n + 1.0);
    return -std::pow(2.0 * pi * i / q, static_cast<double>(n)) * tau * bern / fact2n;
  }
  const int delta = chi.parity();
  const int sign_exp = 1 + (static_cast<int>(n) - delta) / 2;
  const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
  const double factn = std::tgamma(n + 1.0);
  return sign * tau / (2.0 * std::pow(i, static_cast<double>(delta))) *
         std::pow(2.0 * pi / q, static_cast<double>(n)) * bern / factn;
}

Complex root_number(const Character& chi) {
  const Complex i_pow = chi.parity() == 0 ? Complex{1.0, 0.0} : Complex{0.0, -1.0};
  return i_pow * gauss_sum(chi, 1) / std::sqrt(static_cast<double>(chi.modulus()));
}

Complex completed_l(ComplexPoint sp, const Character& chi, CompletionForm form) {
  const Complex s = sp.value();
  const double delta = chi.parity();
  const double q = static_cast<double>(chi.modulus());
  const Complex half = (s + delta) / 2.0;
  const double base = form == CompletionForm::standard ? q / pi : q;
  return std::exp(half * std::log(base) + log_gamma(half)) * l_value(sp, chi).value;
}

double functional_equation_residual(ComplexPoint sp, const Character& chi, CompletionForm form) {
  const Complex s = sp.value();
  if (chi.modulus() < 3) throw DomainError("functional equation check needs q >= 3");
  if (!chi.is_primitive()) throw DomainError("functional equation check needs a primitive character");
  if (!(s.real() > 0.0 && s.real() < 1.0))
    throw DomainError("functional equation check needs 0 < Re(s) < 1");
  const Complex lhs = completed_l(sp, chi, form);
  Complex rhs = root_number(chi) * completed_l(ComplexPoint(1.0 - s), chi.conjugate(), form);
  if (form == CompletionForm::as_printed)
    rhs *= std::exp((0.5 - s) * std::log(static_cast<double>(chi.modulus())));
  return std::abs(lhs - rhs);
}

}  // namespace primelab
