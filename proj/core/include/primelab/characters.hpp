#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace primelab {

inline constexpr std::uint64_t kCharacterModulusCap = 1'000'000;

// Value of a Dirichlet character: zero, or exp(2 pi i numerator / denominator).
// Kept as an exact angle; converted to floating point only on request.
struct RootOfUnity {
  bool zero = true;
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  std::complex<double> value() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

// One cyclic factor of (Z/qZ)^*. Odd prime powers contribute one factor with
// a primitive root; 2^v with v >= 3 contributes the sign factor {-1, 1} and
// the factor generated by 5; 2^2 contributes only the sign factor.
struct CharacterComponent {
  enum class Kind { odd_prime_power, two_sign, two_five };
  Kind kind;
  std::uint64_t prime;
  std::uint64_t modulus;    // prime power the factor lives in
  std::uint64_t generator;  // residue mod `modulus`
  std::uint64_t order;
  std::vector<std::uint32_t> log_table;  // discrete log by residue; kNoLog for non-units

  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  std::uint64_t log(std::uint64_t n) const { return log_table[n % modulus]; }
};

class Character;

class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
 public:
  /// Throws DomainError for q == 0 or q > kCharacterModulusCap.
  static std::shared_ptr<const CharacterGroup> create(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t size() const { return order_; }  // phi(q)
  /// Least common multiple of the component orders; every value has this
  /// denominator.
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<CharacterComponent>& components() const { return components_; }
  const std::vector<std::uint64_t>& prime_divisors() const { return primes_; }

  bool is_unit(std::uint64_t n) const;

  /// Mixed-radix index over the component exponents; index 0 is trivial.
  Character character(std::uint64_t index) const;
  Character trivial() const;
  std::vector<Character> characters() const;

  /// Quadratic (Legendre-symbol) character; only for odd prime q.
  Character quadratic() const;

 private:
  CharacterGroup() = default;
  std::uint64_t q_ = 1;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<std::uint64_t> primes_;
  std::vector<CharacterComponent> components_;
};

class Character {
 public:
  Character(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> exponents);

  const CharacterGroup& group() const { return *group_; }
  std::shared_ptr<const CharacterGroup> group_ptr() const { return group_; }
  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  std::uint64_t index() const;

  RootOfUnity value(std::int64_t n) const;
  RootOfUnity value(std::uint64_t n) const;
  std::complex<double> operator()(std::int64_t n) const { return value(n).value(); }

  bool is_trivial() const;
  /// Order of the character as a group element.
  std::uint64_t order() const;
  Character conjugate() const;
  /// delta: 0 when chi(-1) = 1, 1 when chi(-1) = -1.
  int parity() const;
  bool is_real() const { return order() <= 2; }

  /// Smallest f | q through which the character factors.
  std::uint64_t conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }

  friend bool operator==(const Character& a, const Character& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::uint64_t> exponents_;
};

/// Fixed-q convenience: character group mod q.
std::shared_ptr<const CharacterGroup> character_group(std::uint64_t q);

RootOfUnity chi_eval(const Character& chi, std::int64_t n);

/// tau_a(chi) = sum_{n=1}^{q} chi(n) e(an/q), by direct summation.
std::complex<double> gauss_sum(const Character& chi, std::int64_t a = 1);

/// max over x <= q of |sum_{n<=x} chi(n)|.
double max_partial_character_sum(const Character& chi);

/// JSON table: q, phi, and per character index, parity, conductor, primitive
/// flag and (optionally) the values on [1, q] as [re, im] pairs.
std::string character_table_json(const CharacterGroup& group, bool include_values = true);

}  // namespace primelab
