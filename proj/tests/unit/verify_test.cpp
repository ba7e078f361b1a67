#include <doctest.h>

#include <cmath>
#include <numbers>

#include "primelab/error.hpp"
#include "primelab/sieve.hpp"
#include "primelab/verify.hpp"

using namespace primelab;
using namespace primelab::sieve;

namespace {

const IdentityRow& row(const std::vector<IdentityRow>& rows, std::string_view label) {
  for (const auto& r : rows)
    if (r.label == label) return r;
  FAIL("missing identity row " << label);
  return rows.front();
}

}  // namespace

TEST_CASE("samplers") {
  const auto a = sample_log_uniform(100, 1'000'000, 500, kDefaultSeed);
  CHECK(a == sample_log_uniform(100, 1'000'000, 500, kDefaultSeed));
  CHECK(a != sample_log_uniform(100, 1'000'000, 500, kDefaultSeed + 1));
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a.front() >= 100);
  CHECK(a.back() <= 1'000'000);
  const auto u = sample_uniform(10, 20, 1000, 1);
  CHECK(u.size() <= 11);
  CHECK(dense_range(5, 8) == std::vector<std::uint64_t>{5, 6, 7, 8});
}

TEST_CASE("Bertrand") {
  const auto r1 = verify_bertrand(1);
  CHECK(r1.passed());
  const auto r = verify_bertrand(1'000'000);
  CHECK(r.failures.empty());
  CHECK(r.rows.empty());
  REQUIRE(r.extremal.has_value());
  // worst margin sits at a record gap
  const auto gaps = max_gap_scan(1'000'000);
  bool at_record = false;
  for (const auto& g : gaps) at_record |= g.p + 1 == r.extremal->x;
  CHECK(at_record);
  CHECK(r.extremal->x == 114);
  CHECK(r.extremal->witness == 127);
}

TEST_CASE("short-interval scan") {
  const std::vector<std::uint64_t> one = {1'000'000};
  const auto r = verify_theorem1(one, 1.0);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].y == 13816);
  CHECK(r.rows[0].pass);
  CHECK(r.rows[0].margin > 0);
  CHECK(r.rows[0].margin == double(prime_pi(1'013'816) - prime_pi(999'999)));

  const std::vector<std::uint64_t> small = {4};
  const auto rs = verify_theorem1(small, 0.1);
  REQUIRE(rs.rows.size() == 1);
  CHECK(rs.rows[0].exempt);
  CHECK(rs.passed());

  const auto dense = dense_range(100'000, 110'000);
  const auto rd = verify_theorem1(dense, 0.5);
  CHECK(rd.rows.size() == dense.size());
  CHECK(rd.failures.empty());
  MESSAGE("dense theorem1 scan: smallest prime count " << rd.extremal->margin << " at x=" << rd.extremal->x);

  const auto samples = sample_log_uniform(1000, 10'000'000, 300, kDefaultSeed);
  const auto a = verify_theorem1(samples, 0.5);
  const auto b = verify_theorem1(samples, 0.5);
  CHECK(a.rows == b.rows);
  CHECK(a.failures == b.failures);
  CHECK(a.extremal == b.extremal);
  CHECK(a.seed == kDefaultSeed);
}

TEST_CASE("short-interval scan with y >= x agrees with Bertrand") {
  const auto samples = sample_log_uniform(1000, 100'000, 50, 3);
  const auto r = verify_theorem1(samples, 4.0);
  for (const auto& w : r.rows) {
    REQUIRE(w.y >= w.x);
    REQUIRE(w.pass);
    REQUIRE(w.witness <= 2 * w.x);
  }
  CHECK(verify_bertrand(100'000).passed());
}

TEST_CASE("long-interval scan") {
  const std::vector<std::uint64_t> x1 = {100'000};
  CHECK(verify_theorem48(x1, 0.5).passed());
  const std::vector<std::uint64_t> x2 = {100};
  const auto r = verify_theorem48(x2, 0.9);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].y == 85);
  CHECK(r.rows[0].pass);
  const auto x3 = dense_range(2, 5000);
  const auto e1 = verify_theorem48(x3, 1.0);
  for (const auto& w : e1.rows) REQUIRE(w.y == w.x);
  CHECK(e1.passed());
}

TEST_CASE("short-interval log-sum margins") {
  const auto zero = lemma55_check(1'000'000, 0);
  CHECK(zero.sum_log == 0.0);
  const auto m = lemma55_check(1'000'000, 10'000);
  CHECK(std::abs(m.sum_log - (chebyshev_theta(1'010'000) - chebyshev_theta(1'000'000))) < 1e-6);
  const double l = std::log(1e6), ll = std::log(l);
  CHECK(std::abs(m.lower - (m.sum_log - 1e4 * (1 - ll / l))) < 1e-6);
  CHECK(std::abs(m.upper - (1e4 * (1 + 2 * ll / l) - m.sum_log)) < 1e-6);
  const auto r = lemma55_scan(1'000'000, 2'000'000, 100);
  CHECK(r.rows.size() == 100);
  CHECK(r.passed());
  CHECK(r.metrics.at("c0") == 1.0);
  MESSAGE("lemma55: min lower margin " << r.metrics.at("min_lower_margin") << ", min upper margin "
                                       << r.metrics.at("min_upper_margin"));
  CHECK(lemma55_scan(1'000'000, 2'000'000, 100).rows == r.rows);
}

TEST_CASE("Mertens constant") {
  const auto e6 = mertens_estimate(1'000'000);
  CHECK(std::abs(e6.b_estimate - kMertensConstant) < 0.005);
  const auto e8 = mertens_estimate(100'000'000);
  CHECK(std::abs(e8.b_estimate - kMertensConstant) < 0.002);
  const auto e4 = mertens_estimate(10'000);
  const auto e7 = mertens_estimate(10'000'000);
  CHECK(std::abs(e7.b_estimate - kMertensConstant) <= 2 * std::abs(e4.b_estimate - kMertensConstant));
  double prev = 0;
  for (std::uint64_t x = 100; x <= 100'000; x += 997) {
    const double s = mertens_estimate(x).sum;
    REQUIRE(s >= prev);
    prev = s;
  }
  CHECK_THROWS_AS(mertens_estimate(10), DomainError);
}

TEST_CASE("partial summation identities for primes") {
  const auto small = identity_check_thm43(10);
  CHECK(std::abs(row(small, "i").lhs.real() - 4.0) < 1e-9);
  CHECK(std::abs(row(small, "i").rhs.real() - 4.0) < 1e-9);
  for (std::uint64_t x : {1000, 10'000, 100'000}) {
    const auto rows = identity_check_thm43(x);
    for (const auto& r : rows) {
      INFO("x=" << x << " row " << r.label);
      if (r.label == "ii-printed") {
        CHECK(r.residual > 1e-3);
        continue;
      }
      CHECK(r.residual < 1e-9);
    }
  }
  CHECK(row(identity_check_thm43(1000), "iv").residual < 1e-8);
}

TEST_CASE("quadrature mode converges as the tolerance shrinks") {
  IdentityOptions coarse{IdentityMode::quadrature, 1e-8, {}};
  IdentityOptions fine{IdentityMode::quadrature, 5e-9, {}};
  const auto a = identity_check_thm43(10'000, coarse);
  const auto b = identity_check_thm43(10'000, fine);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].label == "ii-printed") continue;
    INFO("row " << a[k].label);
    CHECK(a[k].residual < 1e-6);
    CHECK(b[k].residual <= a[k].residual + 1e-14);
  }
}

TEST_CASE("partial summation identities in progressions") {
  const auto chi4 = character_group(4)->character(1);
  const auto rows = identity_check_thm44(1000, chi4, 1);
  CHECK(row(rows, "i").residual < 1e-6);
  CHECK(row(rows, "iii").residual < 1e-6);
  for (const auto& r : rows)
    if (r.label != "ii-printed") CHECK(r.residual < 1e-9);

  for (std::uint64_t x : {1000, 10'000, 100'000}) {
    const auto trivial = identity_check_thm44(x, character_group(1)->trivial(), 0);
    const auto base = identity_check_thm43(x);
    for (std::string_view label : {"i", "ii", "iv"}) {
      INFO("x=" << x << " row " << label);
      CHECK(std::abs(row(trivial, label).lhs - row(base, label).lhs) < 1e-9 * std::abs(row(base, label).lhs));
      CHECK(std::abs(row(trivial, label).rhs - row(base, label).rhs) < 1e-9 * std::abs(row(base, label).rhs));
    }
  }
  for (std::uint64_t q : {3, 5, 7, 8, 12})
    for (const auto& chi : character_group(q)->characters())
      for (const auto& r : identity_check_thm44(20'000, chi, q - 1))
        if (r.label != "ii-printed") CHECK(r.residual < 1e-9);
  CHECK_THROWS_AS(identity_check_thm44(1000, chi4, 2), DomainError);
}

TEST_CASE("prime number theorem error scan") {
  const auto r = pnt_error_scan(1'000'000);
  const double target = 1 / (8 * std::numbers::pi);
  CHECK(r.metrics.at("max_ratio_psi") < target);
  CHECK(r.metrics.at("sign_changes") > 0);
  for (const auto& f : r.failures) {
    INFO("label " << f.label << " x=" << f.x);
    CHECK((f.exempt || f.label != "psi"));
    CHECK(f.margin > target);
  }
  MESSAGE("pnt-error: psi " << r.metrics.at("max_ratio_psi") << ", theta " << r.metrics.at("max_ratio_theta")
                            << ", pi-li " << r.metrics.at("max_ratio_pi_li") << ", windows with a sign change "
                            << r.metrics.at("windows_with_sign_change") << "/" << r.metrics.at("windows"));
  const auto tiny = pnt_error_scan(50);
  CHECK(tiny.passed());
}
