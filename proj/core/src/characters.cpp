#include "primelab/characters.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "primelab/arith.hpp"
#include "primelab/error.hpp"
#include "primelab/primality.hpp"

namespace primelab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t smallest_primitive_root(std::uint64_t p, std::uint64_t modulus, std::uint64_t order) {
  const auto order_factors = factorize(order);
  for (std::uint64_t g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (const auto& pe : order_factors) {
      if (pow_mod(g, order / pe.prime, modulus) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DomainError("no primitive root modulo " + std::to_string(modulus));
}

// exp(2 pi i k / n) with the quarter-turn values produced exactly.
std::complex<double> unit_angle(std::uint64_t k, std::uint64_t n) {
  k %= n;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  // Centre the angle in (-pi, pi] before scaling.
  const double frac = (2 * k > n) ? -static_cast<double>(n - k) / static_cast<double>(n)
                                  : static_cast<double>(k) / static_cast<double>(n);
  const double angle = 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::complex<double> RootOfUnity::value() const {
  if (zero) return {0.0, 0.0};
  return unit_angle(numerator, denominator);
}

std::shared_ptr<const CharacterGroup> CharacterGroup::create(std::uint64_t q) {
  if (q == 0) throw DomainError("character modulus must be >= 1");
  if (q > kCharacterModulusCap) {
    throw DomainError("character modulus " + std::to_string(q) + " exceeds cap " +
                      std::to_string(kCharacterModulusCap));
  }
  std::shared_ptr<CharacterGroup> g(new CharacterGroup());
  g->q_ = q;
  for (const auto& [p, v] : factorize(q)) {
    g->primes_.push_back(p);
    const std::uint64_t pv = ipow(p, v);
    if (p != 2) {
      CharacterComponent c{CharacterComponent::Kind::odd_prime_power, p, pv, 0,
                           pv / p * (p - 1), {}};
      c.generator = smallest_primitive_root(p, pv, c.order);
      c.log_table.assign(pv, CharacterComponent::kNoLog);
      std::uint64_t power = 1;
      for (std::uint64_t k = 0; k < c.order; ++k) {
        c.log_table[power] = static_cast<std::uint32_t>(k);
        power = power * c.generator % pv;
      }
      g->components_.push_back(std::move(c));
      continue;
    }
    if (v == 1) continue;
    CharacterComponent sign{CharacterComponent::Kind::two_sign, 2, pv, pv - 1, 2, {}};
    sign.log_table.assign(pv, CharacterComponent::kNoLog);
    for (std::uint64_t n = 1; n < pv; n += 2) sign.log_table[n] = (n % 4 == 1) ? 0 : 1;
    g->components_.push_back(std::move(sign));
    if (v == 2) continue;
    CharacterComponent five{CharacterComponent::Kind::two_five, 2, pv, 5, pv / 4, {}};
    five.log_table.assign(pv, CharacterComponent::kNoLog);
    std::uint64_t power = 1;
    for (std::uint64_t k = 0; k < five.order; ++k) {
      five.log_table[power] = static_cast<std::uint32_t>(k);
      five.log_table[pv - power] = static_cast<std::uint32_t>(k);
      power = power * 5 % pv;
    }
    g->components_.push_back(std::move(five));
  }
  g->order_ = 1;
  g->exponent_ = 1;
  for (const auto& c : g->components_) {
    g->order_ *= c.order;
    g->exponent_ = std::lcm(g->exponent_, c.order);
  }
  return g;
}

bool CharacterGroup::is_unit(std::uint64_t n) const {
  for (auto p : primes_) {
    if (n % p == 0) return false;
  }
  return true;
}

Character CharacterGroup::trivial() const { return character(0); }

Character CharacterGroup::character(std::uint64_t index) const {
  if (index >= order_) {
    throw DomainError("character index " + std::to_string(index) + " out of range for q = " +
                      std::to_string(q_));
  }
  std::vector<std::uint64_t> exps;
  exps.reserve(components_.size());
  for (const auto& c : components_) {
    exps.push_back(index % c.order);
    index /= c.order;
  }
  return Character(shared_from_this(), std::move(exps));
}

std::vector<Character> CharacterGroup::characters() const {
  std::vector<Character> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(character(i));
  return out;
}

Character CharacterGroup::quadratic() const {
  if (q_ < 3 || q_ % 2 == 0 || !is_prime(q_)) {
    throw DomainError("quadratic character requested for non-odd-prime modulus");
  }
  return Character(shared_from_this(), {(q_ - 1) / 2});
}

Character::Character(std::shared_ptr<const CharacterGroup> group,
                     std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& comps = group_->components();
  if (exponents_.size() != comps.size())
    throw DomainError("character exponent vector does not match group structure");
  for (std::size_t j = 0; j < comps.size(); ++j) exponents_[j] %= comps[j].order;
}

std::uint64_t Character::index() const {
  std::uint64_t idx = 0;
  std::uint64_t radix = 1;
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    idx += exponents_[j] * radix;
    radix *= comps[j].order;
  }
  return idx;
}

RootOfUnity Character::value(std::int64_t n) const {
  const auto q = static_cast<std::int64_t>(modulus());
  std::int64_t r = n % q;
  if (r < 0) r += q;
  return value(static_cast<std::uint64_t>(r));
}

RootOfUnity Character::value(std::uint64_t n) const {
  const std::uint64_t q = modulus();
  n %= q;
  const std::uint64_t m = group_->exponent();
  if (!group_->is_unit(n) && q > 1) return {true, 0, m};
  const auto& comps = group_->components();
  std::uint64_t num = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (exponents_[j] == 0) continue;
    const std::uint64_t lg = comps[j].log(n);
    num = (num + (exponents_[j] * lg % comps[j].order) * (m / comps[j].order)) % m;
  }
  return {false, num, m};
}

bool Character::is_trivial() const {
  for (auto e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

std::uint64_t Character::order() const {
  std::uint64_t ord = 1;
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    ord = std::lcm(ord, comps[j].order / std::gcd(exponents_[j], comps[j].order));
  }
  return ord;
}

Character Character::conjugate() const {
  std::vector<std::uint64_t> exps(exponents_.size());
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j)
    exps[j] = (comps[j].order - exponents_[j]) % comps[j].order;
  return Character(group_, std::move(exps));
}

int Character::parity() const {
  if (modulus() <= 2) return 0;
  return value(static_cast<std::uint64_t>(modulus() - 1)).numerator == 0 ? 0 : 1;
}

std::uint64_t Character::conductor() const {
  const auto& comps = group_->components();
  std::uint64_t f = 1;
  std::uint64_t two_sign = 0;
  std::uint64_t two_five = 0;
  unsigned two_exp = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& c = comps[j];
    const std::uint64_t e = exponents_[j];
    switch (c.kind) {
      case CharacterComponent::Kind::odd_prime_power: {
        if (e == 0) break;
        // Units = 1 mod p^k form the subgroup generated by g^{phi(p^k)}.
        std::uint64_t pk = c.prime;
        while (pk < c.modulus && (e * (pk / c.prime * (c.prime - 1))) % c.order != 0) pk *= c.prime;
        f *= pk;
        break;
      }
      case CharacterComponent::Kind::two_sign:
        two_sign = e;
        two_exp = static_cast<unsigned>(std::countr_zero(c.modulus));
        break;
      case CharacterComponent::Kind::two_five:
        two_five = e;
        break;
    }
  }
  if (two_five != 0) {
    // Units = 1 mod 2^k (k >= 3) are generated by 5^{2^{k-2}}.
    const std::uint64_t ord5 = (std::uint64_t{1} << two_exp) / 4;
    unsigned k = 3;
    while (k < two_exp && (two_five << (k - 2)) % ord5 != 0) ++k;
    f *= std::uint64_t{1} << k;
  } else if (two_sign != 0) {
    f *= 4;
  }
  return f;
}

std::shared_ptr<const CharacterGroup> character_group(std::uint64_t q) {
  return CharacterGroup::create(q);
}

RootOfUnity chi_eval(const Character& chi, std::int64_t n) { return chi.value(n); }

std::complex<double> gauss_sum(const Character& chi, std::int64_t a) {
  const std::uint64_t q = chi.modulus();
  const std::uint64_t m = chi.group().exponent();
  std::int64_t ar = a % static_cast<std::int64_t>(q);
  if (ar < 0) ar += static_cast<std::int64_t>(q);
  const auto au = static_cast<std::uint64_t>(ar);
  std::complex<double> total{0.0, 0.0};
  for (std::uint64_t n = 1; n <= q; ++n) {
    const RootOfUnity v = chi.value(n);
    if (v.zero) continue;
    // chi(n) e(an/q) = exp(2 pi i (num q + (an mod q) M) / (M q)).
    const std::uint64_t den = m * q;
    const std::uint64_t num = (v.numerator * q + (au * n % q) * m) % den;
    total += unit_angle(num, den);
  }
  return total;
}

double max_partial_character_sum(const Character& chi) {
  std::complex<double> running{0.0, 0.0};
  double best = 0.0;
  for (std::uint64_t n = 1; n <= chi.modulus(); ++n) {
    running += chi.value(n).value();
    best = std::max(best, std::abs(running));
  }
  return best;
}

std::string character_table_json(const CharacterGroup& group, bool include_values) {
  nlohmann::json doc;
  doc["q"] = group.modulus();
  doc["phi"] = group.size();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& chi : group.characters()) {
    nlohmann::json row;
    row["index"] = chi.index();
    row["parity"] = chi.parity();
    row["conductor"] = chi.conductor();
    row["primitive"] = chi.is_primitive();
    row["order"] = chi.order();
    if (include_values) {
      nlohmann::json values = nlohmann::json::array();
      for (std::uint64_t n = 1; n <= group.modulus(); ++n) {
        const auto v = chi.value(n).value();
        values.push_back({v.real(), v.imag()});
      }
      row["values"] = std::move(values);
    }
    rows.push_back(std::move(row));
  }
  doc["characters"] = std::move(rows);
  return doc.dump();
}

}  // namespace primelab
