#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "frozen_values.hpp"
#include "primelab/error.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/sieve.hpp"
#include "primelab/zeta.hpp"

using namespace primelab;
using namespace primelab::sieve;
constexpr double pi = std::numbers::pi;

namespace {

const ZeroBank& bank500() {
  static const ZeroBank bank = bank_from_zeros(find_zeros(500.0), 500.0, "scan");
  return bank;
}

}  // namespace

TEST_CASE("builtin bank") {
  const auto b = load_zeros("builtin");
  REQUIRE(b.zeros.size() == 10);
  CHECK(b.zeros.front() == 14.1347251417346);
  CHECK(b.height == 50.0);
  for (std::size_t k = 0; k < b.zeros.size(); ++k)
    CHECK(std::abs(b.zeros[k] - oracle::kZetaZeros[k]) < 1e-9);
  for (std::size_t k = 1; k < b.zeros.size(); ++k) CHECK(b.zeros[k] > b.zeros[k - 1]);
}

TEST_CASE("parsing") {
  const auto b = parse_zero_bank("# zeros\n14.134725141735\n\n21.022039638772\n", "text");
  CHECK(b.zeros.size() == 2);
  CHECK(b.height == 21.022039638772);
  CHECK(parse_zero_bank("# height: 30\n14.13\n21.02\n25.01\n", "t").height == 30.0);
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_zero_bank(text, "t");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("14.13\n13.0\n") == 2);
  CHECK(line_of("14.13\nabc\n") == 2);
  CHECK(line_of("# c\n-1\n") == 2);
  CHECK(line_of("14.13\n14.13\n") == 2);
  CHECK(line_of("14.13\n21.02x\n") == 2);
  CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), Error);
}

TEST_CASE("export round trip") {
  const auto& b0 = bank500();
  REQUIRE(b0.zeros.size() == 269);
  const std::string text = export_zero_bank(b0);
  const auto b1 = parse_zero_bank(text, "round1");
  CHECK(b1.height == 500.0);
  REQUIRE(b1.zeros.size() == b0.zeros.size());
  for (std::size_t k = 0; k < b0.zeros.size(); ++k) REQUIRE(std::abs(b1.zeros[k] - b0.zeros[k]) <= 6e-13);
  const std::string text2 = export_zero_bank(b1);
  CHECK(text2 == text);
  const auto b2 = parse_zero_bank(text2, "round2");
  CHECK(std::memcmp(b1.zeros.data(), b2.zeros.data(), b1.zeros.size() * sizeof(double)) == 0);
}

TEST_CASE("psi_explicit") {
  const auto builtin = builtin_zero_bank();
  const double x = 100.5;
  CHECK(std::abs(psi_explicit(x, builtin, 0.0) -
                 (x - std::log(2 * pi) - 0.5 * std::log(1 - 1 / (x * x)))) < 1e-12);
  CHECK(std::abs(psi_explicit(100.5, bank500(), 500.0) - chebyshev_psi(100)) < 1.0);
  CHECK_THROWS_AS(psi_explicit(100.5, builtin, 60.0), Error);
  CHECK_THROWS_AS(psi_explicit(1.5, builtin, 10.0), DomainError);
  CHECK(is_prime_power_point(8.0));
  CHECK_FALSE(is_prime_power_point(8.5));
  CHECK_FALSE(is_prime_power_point(10.0));
}

TEST_CASE("triangle bound and folding") {
  const auto& bank = bank500();
  for (double T : {0.0, 50.0, 200.0, 500.0}) {
    double inv_abs = 0, inv_t = 0;
    for (double t : bank.zeros) {
      if (t > T) break;
      inv_abs += 2.0 / std::abs(std::complex<double>(0.5, t));
      inv_t += 1.0 / t;
    }
    for (double x = 2.0; x <= 10'000.0; x *= 1.07) {
      const double sx = std::sqrt(x);
      REQUIRE(std::abs(psi_explicit(x, bank, T) - x) <= inv_abs * sx + std::log(2 * pi) + 1);
      const double folded = zero_sum(x, bank, T);
      const auto unfolded = zero_sum_unfolded(x, bank, T);
      REQUIRE(std::abs(folded - unfolded.real()) <= 1e-12 * std::max(1.0, std::abs(folded)));
      REQUIRE(std::abs(unfolded.imag()) <= 1e-12 * std::max(1.0, std::abs(folded)));
      REQUIRE(std::abs(folded) <= 2 * sx * inv_t);
    }
  }
}

TEST_CASE("residual scan") {
  CHECK(residual_scan({}, bank500(), 500.0).empty());
  const std::vector<double> grid = {10.5, 100.5, 1000, 10000.5};
  const auto rows = residual_scan(grid, bank500(), 500.0);
  REQUIRE(rows.size() == 4);
  CHECK(rows[2].x == 1000.5);
  for (const auto& r : rows) {
    CHECK(r.residual == std::abs(r.psi_estimate - r.sieve_psi));
    CHECK(r.bound == doctest::Approx(r.x / r.T * std::pow(std::log(r.T * r.x), 2)));
    if (r.x > 100) CHECK(r.residual < r.bound);
    MESSAGE("x=" << r.x << " residual=" << r.residual << " bound=" << r.bound);
  }
  const auto csv = residual_csv(rows);
  CHECK(csv.rfind("x,T,psi_explicit,psi_sieve,residual,bound\n", 0) == 0);
}

TEST_CASE("li") {
  CHECK(li(2.0, LiVariant::offset_from_2) == 0.0);
  CHECK(std::abs(li(2.0, LiVariant::principal_value) - 1.0451637801174927) < 1e-12);
  for (const auto& p : oracle::kLiPrincipal)
    CHECK(std::abs(li(p.x, LiVariant::principal_value) - p.value) < 1e-10 * std::max(1.0, std::abs(p.value)));
  for (const auto& p : oracle::kLiOffset)
    CHECK(std::abs(li(p.x, LiVariant::offset_from_2) - p.value) < 1e-10 * std::max(1.0, std::abs(p.value)));
  for (double x : {10.0, 100.0, 1000.0}) {
    const double diff = li(x, LiVariant::principal_value) - li(x, LiVariant::offset_from_2);
    CHECK(std::abs(diff - 1.0451637801174927) < 1e-8);
    const double h = 1e-3;
    const double d = (li(x + h, LiVariant::offset_from_2) - li(x - h, LiVariant::offset_from_2)) / (2 * h);
    CHECK(std::abs(d - 1 / std::log(x)) < 1e-6);
  }
  CHECK_THROWS_AS(li(1.0, LiVariant::principal_value), DomainError);
  CHECK_THROWS_AS(li(1.5, LiVariant::offset_from_2), DomainError);
}
