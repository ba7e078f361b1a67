#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "oracles.hpp"
#include "primelab/arith.hpp"
#include "primelab/characters.hpp"
#include "primelab/error.hpp"
#include "primelab/primality.hpp"

using namespace primelab;
using C = std::complex<double>;

TEST_CASE("group sizes and structure") {
  const auto g1 = character_group(1);
  REQUIRE(g1->size() == 1);
  for (std::int64_t n = -5; n < 20; ++n) CHECK(g1->trivial()(n) == C(1, 0));
  CHECK(character_group(4)->size() == 2);
  const auto g8 = character_group(8);
  REQUIRE(g8->size() == 4);
  REQUIRE(g8->components().size() == 2);
  CHECK(g8->components()[0].kind == CharacterComponent::Kind::two_sign);
  CHECK(g8->components()[1].kind == CharacterComponent::Kind::two_five);
  CHECK(g8->components()[1].generator == 5);
  for (std::uint64_t q = 1; q <= 500; ++q) {
    const auto g = character_group(q);
    std::uint64_t prod = 1;
    for (const auto& c : g->components()) {
      prod *= c.order;
      if (c.kind == CharacterComponent::Kind::odd_prime_power) {
        // verified primitive root: order exactly phi(p^v)
        for (auto [p, e] : factorize(c.order)) {
          (void)e;
          REQUIRE(pow_mod(c.generator, c.order / p, c.modulus) != 1);
        }
        REQUIRE(pow_mod(c.generator, c.order, c.modulus) == 1);
      }
    }
    REQUIRE(prod == euler_phi(q));
    REQUIRE(g->size() == euler_phi(q));
  }
  CHECK_THROWS_AS(character_group(0), DomainError);
  CHECK_THROWS_AS(character_group(1'000'001), DomainError);
}

TEST_CASE("named characters") {
  const auto chi4 = character_group(4)->character(1);
  CHECK(chi4(1) == C(1, 0));
  CHECK(chi4(3) == C(-1, 0));
  CHECK(chi4(2) == C(0, 0));
  CHECK(chi4.parity() == 1);
  CHECK(chi4.conductor() == 4);
  CHECK(chi4.is_primitive());
  const auto chi3 = character_group(3)->quadratic();
  CHECK(chi3(2) == C(-1, 0));
  CHECK(chi3(-1) == C(-1, 0));
  CHECK(chi3.parity() == 1);
  CHECK(character_group(7)->trivial().parity() == 0);
  CHECK(character_group(12)->trivial().conductor() == 1);
  // mod 8 lift of chi_4: agrees with chi_4 on odd n
  const auto g8 = character_group(8);
  int lifts = 0;
  for (const auto& chi : g8->characters()) {
    bool agrees = true;
    for (std::int64_t n = 1; n < 8; n += 2) agrees &= std::abs(chi(n) - chi4(n)) < 1e-15;
    if (agrees) {
      ++lifts;
      CHECK(chi.conductor() == 4);
      CHECK_FALSE(chi.is_primitive());
    }
  }
  CHECK(lifts == 1);
  // Legendre symbol
  for (std::uint64_t p : {5, 7, 11, 13, 101}) {
    const auto leg = character_group(p)->quadratic();
    for (std::uint64_t n = 1; n < p; ++n) {
      const std::uint64_t e = pow_mod(n, (p - 1) / 2, p);
      REQUIRE(leg(static_cast<std::int64_t>(n)) == C(e == 1 ? 1.0 : -1.0, 0));
    }
  }
}

TEST_CASE("values: zero exactly off units, periodic, multiplicative") {
  oracle::Gen g(7);
  for (std::uint64_t q : {1, 2, 9, 12, 16, 60, 64, 97, 120, 243, 1000, 65536, 999983}) {
    const auto grp = character_group(q);
    for (int k = 0; k < 5; ++k) {
      const auto chi = grp->character(g.uniform(0, grp->size() - 1));
      CHECK(chi.value(std::int64_t{1}) == RootOfUnity{false, 0, grp->exponent()});
      for (int pair = 0; pair < 2000; ++pair) {
        const std::uint64_t m = g.uniform(0, 10'000'000), n = g.uniform(0, 10'000'000);
        const auto vm = chi.value(m), vn = chi.value(n);
        REQUIRE(vm.zero == (oracle::naive_gcd(m, q) != 1));
        REQUIRE(chi.value(m + q) == vm);
        const auto vmn = chi.value(m * n);
        if (vm.zero || vn.zero) {
          REQUIRE(vmn.zero);
        } else {
          REQUIRE_FALSE(vmn.zero);
          REQUIRE(vmn.numerator == (vm.numerator + vn.numerator) % vm.denominator);
        }
      }
      // negative arguments reduce mod q
      CHECK(chi.value(std::int64_t{-1}) == chi.value(q - 1));
    }
  }
}

TEST_CASE("orthogonality, q <= 60") {
  for (std::uint64_t q = 1; q <= 60; ++q) {
    const auto grp = character_group(q);
    const auto chars = grp->characters();
    for (const auto& chi : chars) {
      C s = 0;
      for (std::uint64_t n = 1; n <= q; ++n) s += chi(static_cast<std::int64_t>(n));
      REQUIRE(std::abs(s - C(chi.is_trivial() ? double(grp->size()) : 0.0, 0)) < 1e-9);
    }
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (oracle::naive_gcd(a, q) != 1) continue;
      for (std::uint64_t n = 1; n <= q; ++n) {
        C s = 0;
        for (const auto& chi : chars)
          s += chi(static_cast<std::int64_t>(n)) * std::conj(chi(static_cast<std::int64_t>(a)));
        REQUIRE(std::abs(s - C(n == a ? double(grp->size()) : 0.0, 0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("conductor against brute force and primitive counts") {
  for (std::uint64_t q = 1; q <= 120; ++q) {
    const auto grp = character_group(q);
    std::uint64_t primitive = 0;
    for (const auto& chi : grp->characters()) {
      std::uint64_t f = q;
      for (std::uint64_t d : divisors(q)) {
        bool induced = true;
        for (std::uint64_t m = 1; m <= q && induced; ++m)
          for (std::uint64_t n = m + d; n <= q && induced; n += d)
            if (oracle::naive_gcd(m, q) == 1 && oracle::naive_gcd(n, q) == 1)
              induced = std::abs(chi(static_cast<std::int64_t>(m)) - chi(static_cast<std::int64_t>(n))) < 1e-12;
        if (induced) {
          f = d;
          break;
        }
      }
      REQUIRE(chi.conductor() == f);
      primitive += chi.is_primitive();
      // conjugate has the same conductor, product with conjugate is trivial
      REQUIRE(chi.conjugate().conductor() == f);
    }
    std::int64_t expected = 0;
    for (std::uint64_t d : divisors(q)) expected += mobius(q / d) * static_cast<std::int64_t>(euler_phi(d));
    REQUIRE(static_cast<std::int64_t>(primitive) == expected);
  }
}

TEST_CASE("Gauss sums") {
  const auto chi3 = character_group(3)->quadratic();
  CHECK(std::abs(gauss_sum(chi3) - C(0, std::sqrt(3.0))) < 1e-12);
  const auto chi4 = character_group(4)->character(1);
  CHECK(std::abs(gauss_sum(chi4) - C(0, 2)) < 1e-12);
  for (std::uint64_t q : {5, 8, 9, 12}) {
    for (const auto& chi : character_group(q)->characters())
      if (!chi.is_trivial()) CHECK(std::abs(gauss_sum(chi, 0)) < 1e-12);
  }
  // Quadratic Gauss sum sign: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 103}) {
    const C want = p % 4 == 1 ? C(std::sqrt(double(p)), 0) : C(0, std::sqrt(double(p)));
    CHECK(std::abs(gauss_sum(character_group(p)->quadratic()) - want) < 1e-10);
  }
  // Direct summation oracle
  for (std::uint64_t q : {7, 15, 16, 21}) {
    for (const auto& chi : character_group(q)->characters()) {
      for (std::int64_t a : {1, 2, 5}) {
        C s = 0;
        for (std::uint64_t n = 1; n <= q; ++n)
          s += chi(static_cast<std::int64_t>(n)) *
               std::polar(1.0, 2 * std::numbers::pi * double(a) * double(n) / double(q));
        CHECK(std::abs(gauss_sum(chi, a) - s) < 1e-11 * double(q));
      }
    }
  }
}

TEST_CASE("twisted Gauss sums: both readings of the twisting identity") {
  double worst_standard = 0, worst_printed = 0;
  for (std::uint64_t q = 3; q <= 60; ++q) {
    for (const auto& chi : character_group(q)->characters()) {
      if (!chi.is_primitive()) continue;
      const C tau = gauss_sum(chi);
      const C tau_conj = gauss_sum(chi.conjugate());
      for (std::int64_t a = 1; a <= static_cast<std::int64_t>(q); ++a) {
        if (oracle::naive_gcd(a, q) != 1) continue;
        const C ta = gauss_sum(chi, a);
        CHECK(std::abs(std::abs(ta) - std::abs(tau)) < 1e-9);
        worst_standard = std::max(worst_standard, std::abs(ta - std::conj(chi(a)) * tau));
        worst_printed = std::max(worst_printed, std::abs(ta - chi(a) * tau_conj));
      }
    }
  }
  CHECK(worst_standard < 1e-9);
  MESSAGE("tau_a(chi) = conj(chi(a)) tau(chi): max residual " << worst_standard
          << "; printed form chi(a) tau(conj chi): max residual " << worst_printed);
}

TEST_CASE("Polya-Vinogradov for primitive characters, small q") {
  for (std::uint64_t q = 3; q <= 60; ++q)
    for (const auto& chi : character_group(q)->characters())
      if (chi.is_primitive())
        REQUIRE(max_partial_character_sum(chi) < std::sqrt(double(q)) * std::log(double(q)));
}

TEST_CASE("JSON table export") {
  const auto doc = nlohmann::json::parse(character_table_json(*character_group(5)));
  CHECK(doc["q"] == 5);
  REQUIRE(doc["characters"].size() == 4);
  const auto& c1 = doc["characters"][1];
  CHECK(c1["index"] == 1);
  CHECK(c1["conductor"] == 5);
  CHECK(c1["parity"] == 1);
  CHECK(c1["values"].size() == 5);
}

TEST_CASE("index round trip and errors") {
  const auto g = character_group(40);
  for (std::uint64_t i = 0; i < g->size(); ++i) CHECK(g->character(i).index() == i);
  CHECK_THROWS_AS(g->character(g->size()), DomainError);
  CHECK_THROWS_AS(character_group(9)->quadratic(), DomainError);
}
