// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primelab/bernoulli.hpp"
#include "primelab/characters.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/lfunc.hpp"
#include "primelab/progressions.hpp"
#include "primelab/sieve.hpp"
#include "primelab/verify.hpp"
#include "primelab/zeta.hpp"

using namespace primelab;
using namespace primelab::sieve;
using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void zeros_table(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto zeros = find_zeros(50.0, Parallelism{1});
  const double elapsed = seconds_since(t0);
  const auto table = builtin_zero_bank().zeros;
  o.require(zeros.size() == 10, "expected 10 zeros, found " + std::to_string(zeros.size()));
  double worst = 0;
  for (std::size_t k = 0; k < std::min(zeros.size(), table.size()); ++k)
    worst = std::max(worst, std::abs(zeros[k].t - table[k]));
  o.require(worst < 1e-9, "table mismatch");
  o.require(elapsed < 60, "runtime");
  o.detail << "10 zeros, max deviation from table " << worst << ", " << elapsed << " s";
}

void special_values(Outcome& o) {
  auto rel = [](C got, double want) { return std::abs(got - want) / std::abs(want); };
  const double e2 = rel(zeta_euler_maclaurin(2.0), pi * pi / 6);
  const double e4 = rel(zeta_euler_maclaurin(4.0), std::pow(pi, 4) / 90);
  const double e0 = rel(zeta_euler_maclaurin(0.0), -0.5);
  const double em1 = rel(zeta_euler_maclaurin(-1.0), -1.0 / 12);
  double trivial = 0;
  for (int n = 1; n <= 5; ++n) trivial = std::max(trivial, std::abs(zeta_euler_maclaurin(-2.0 * n)));
  o.require(e2 < 1e-9 && e4 < 1e-9 && e0 < 1e-9 && em1 < 1e-9, "relative error");
  o.require(trivial < 1e-9, "trivial zeros");
  o.detail << "rel errors zeta(2) " << e2 << ", zeta(4) " << e4 << ", zeta(0) " << e0 << ", zeta(-1) " << em1
           << "; max |zeta(-2n)| " << trivial;
}

void bernoulli(Outcome& o) {
  const auto b2 = bernoulli_number(2), b12 = bernoulli_number(12), b20 = bernoulli_number(20);
  o.require(b2 == ExactRational(1, 6), "B_2");
  o.require(b12 == ExactRational(-691, 2730), "B_12");
  o.require(b20 == ExactRational(-174611, 330), "B_20");
  ExactRational printed(-17460, 330);
  printed.canonicalize();
  o.detail << "B_2 = " << b2.get_str() << ", B_12 = " << b12.get_str() << ", B_20 = -174611/330";
  if (b20 != printed)
    o.detail << "; FLAG: the published table prints B_20 as -17460/330 (= " << printed.get_str()
             << "), which disagrees with the recursion";
}

void explicit_formula(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto bank = bank_from_zeros(find_zeros(500.0), 500.0, "scan");
  const std::vector<double> grid = {100.5, 1000.5, 10000.5};
  const auto r100 = residual_scan(grid, bank, 100.0);
  const auto r500 = residual_scan(grid, bank, 500.0);
  std::size_t zeros100 = 0;
  for (double t : bank.zeros) zeros100 += t <= 100.0;
  o.require(zeros100 == 29, "bank to T=100 should hold 29 zeros");
  double worst_ratio = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double ratio = r100[k].residual / r100[k].bound;
    o.require(std::isfinite(ratio), "ratio not finite");
    worst_ratio = std::max(worst_ratio, ratio);
    o.require(r500[k].residual < r100[k].residual, "T=500 residual not below T=100 at x=" + std::to_string(grid[k]));
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 30, "runtime");
  o.detail << "max residual/bound at T=100: " << worst_ratio << "; residuals T=100 -> T=500:";
  for (std::size_t k = 0; k < grid.size(); ++k)
    o.detail << " x=" << grid[k] << " " << r100[k].residual << " -> " << r500[k].residual;
  o.detail << "; " << elapsed << " s";
}

void mertens(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = mertens_estimate(100'000'000);
  const double elapsed = seconds_since(t0);
  const double dev = std::abs(e.b_estimate - 0.2614972128);
  o.require(dev < 0.002, "B estimate");
  o.require(elapsed < 300, "runtime");
  o.detail.precision(10);
  o.detail << "B_est(1e8) = " << e.b_estimate << ", deviation " << dev << ", " << elapsed << " s";
}

void characters(Outcome& o) {
  double orth = 0, gauss = 0, pv_ratio = 0;
  for (std::uint64_t q = 1; q <= 200; ++q) {
    const auto grp = character_group(q);
    const auto chars = grp->characters();
    // value table: chars x residues
    std::vector<std::vector<C>> v(chars.size(), std::vector<C>(q + 1));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::uint64_t n = 1; n <= q; ++n) v[i][n] = chars[i](static_cast<std::int64_t>(n));
    for (std::size_t i = 0; i < chars.size(); ++i) {
      C s = 0;
      for (std::uint64_t n = 1; n <= q; ++n) s += v[i][n];
      orth = std::max(orth, std::abs(s - C(chars[i].is_trivial() ? double(grp->size()) : 0.0, 0)));
    }
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (oracle::naive_gcd(a, q) != 1) continue;
      for (std::uint64_t n = 1; n <= q; ++n) {
        C s = 0;
        for (std::size_t i = 0; i < chars.size(); ++i) s += v[i][n] * std::conj(v[i][a]);
        orth = std::max(orth, std::abs(s - C(n == a ? double(grp->size()) : 0.0, 0)));
      }
    }
    for (const auto& chi : chars) {
      if (!chi.is_primitive()) continue;
      gauss = std::max(gauss, std::abs(std::abs(gauss_sum(chi)) - std::sqrt(double(q))));
      if (q >= 3) pv_ratio = std::max(pv_ratio, max_partial_character_sum(chi) / (std::sqrt(double(q)) * std::log(double(q))));
    }
  }
  o.require(orth < 1e-9, "orthogonality");
  o.require(gauss < 1e-8, "Gauss sum modulus");
  o.require(pv_ratio < 1, "Polya-Vinogradov");
  o.detail << "orthogonality deviation " << orth << ", max ||tau| - sqrt q| " << gauss
           << ", max partial sum / (sqrt q log q) " << pv_ratio;
}

void lfunctions(Outcome& o) {
  const auto chi4 = character_group(4)->character(1);
  const C special = l_special_value(1, chi4);
  // polynomial extrapolation to s = 0 from s = 0.01 k, k = 1..6 (Neville)
  std::vector<double> s, y;
  for (int k = 1; k <= 6; ++k) {
    s.push_back(0.01 * k);
    y.push_back(l_value(s.back(), chi4).value.real());
  }
  for (std::size_t m = 1; m < s.size(); ++m)
    for (std::size_t i = 0; i + m < s.size(); ++i)
      y[i] = (s[i + m] * y[i] - s[i] * y[i + 1]) / (s[i + m] - s[i]);
  const double extrap = y[0];
  const double diff = std::abs(extrap - special.real());
  o.require(diff < 1e-4, "L(0, chi_4) extrapolation");
  double worst = 0;
  for (std::uint64_t q = 3; q <= 20; ++q)
    for (const auto& chi : character_group(q)->characters()) {
      if (!chi.is_primitive()) continue;
      worst = std::max(worst, functional_equation_residual({0.5, 0.0}, chi));
      worst = std::max(worst, functional_equation_residual({0.5, 3.0}, chi));
    }
  o.require(worst < 1e-7, "functional equation");
  o.detail << "L(0, chi_4) = " << special.real() << ", extrapolated " << extrap << " (diff " << diff
           << "); max functional-equation residual q <= 20: " << worst;
}

void short_intervals(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  reports.push_back(verify_bertrand(1'000'000));
  auto samples = sample_log_uniform(10'000, 1'000'000, 1000, kDefaultSeed);
  const auto dense = dense_range(100'000, 110'000);
  samples.insert(samples.end(), dense.begin(), dense.end());
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  reports.push_back(verify_theorem1(samples, 0.5));
  reports.push_back(verify_theorem1(samples, 1.0));
  reports.push_back(verify_theorem48(samples, 0.5));
  const std::vector<std::uint64_t> ap = {1000, 10'000, 100'000, 1'000'000};
  reports.push_back(verify_ap_bertrand(ap, 1.0));
  const double elapsed = seconds_since(t0);
  for (const auto& r : reports) {
    o.detail << r.theorem_id << ": " << r.counted_failures() << " failures";
    if (r.metrics.count("epsilon")) o.detail << " (epsilon " << r.metrics.at("epsilon") << ")";
    o.detail << "; ";
    for (const auto& f : r.failures)
      if (!f.exempt)
        o.detail << "FAILURE x=" << f.x << " q=" << f.q << " a=" << f.a << " y=" << f.y << "; ";
    o.require(r.passed(), r.theorem_id);
  }
  o.require(elapsed < 600, "runtime");
  o.detail << samples.size() << " sampled x, " << elapsed << " s";
}

void identities(Outcome& o) {
  double worst43 = 0, worst44 = 0;
  const auto chars = character_group(12)->characters();
  const auto chars5 = character_group(5)->characters();
  for (std::uint64_t x : {1000, 10'000, 100'000}) {
    for (const auto& r : identity_check_thm43(x))
      if (r.label != "ii-printed") worst43 = std::max(worst43, r.residual);
    for (const auto* list : {&chars, &chars5})
      for (const auto& chi : *list)
        for (const auto& r : identity_check_thm44(x, chi, 1))
          if (r.label != "ii-printed") worst44 = std::max(worst44, r.residual);
  }
  o.require(worst43 < 1e-6, "prime identities");
  o.require(worst44 < 1e-6, "progression identities");
  const auto printed = identity_check_thm43(10'000);
  double printed_res = 0;
  for (const auto& r : printed)
    if (r.label == "ii-printed") printed_res = r.residual;
  o.detail << "max residual, prime identities (i)-(v) " << worst43 << ", progression identities (i)-(iv) "
           << worst44 << "; printed kernel for (ii) at 1e4 misses by " << printed_res << " (reported only)";
}

void oracle_equivalence(Outcome& o) {
  constexpr std::uint64_t N = 100'000;
  const auto primes = sieve_range(1, N + 1).primes;
  o.require(primes == oracle::trial_primes(1, N + 1), "prime list");
  std::size_t checked = 0;
  double worst = 0;
  std::uint64_t pi_count = 0;
  long double theta = 0, psi = 0;
  for (std::uint64_t x = 1; x <= N; ++x) {
    if (const std::uint64_t p = oracle::prime_power_base(x)) {
      const long double lp = std::log(static_cast<long double>(p));
      psi += lp;
      if (p == x) {
        ++pi_count;
        theta += lp;
      }
    }
    if (x <= 1000 || x % 97 == 0 || x == N) {
      const auto snap = snapshot(x);
      o.require(snap.pi == pi_count, "pi(" + std::to_string(x) + ")");
      worst = std::max({worst, std::abs(snap.theta - double(theta)), std::abs(snap.psi - double(psi))});
      ++checked;
    }
  }
  o.require(worst < 1e-9 * double(N), "log sums");
  for (std::uint64_t n : {1ull, 2ull, 100ull, 9592ull})
    o.require(nth_prime(n) == primes[n - 1], "nth_prime");
  for (std::uint64_t q : {3ull, 10ull, 12ull}) {
    for (std::uint64_t a = 1; a < q; ++a) {
      if (oracle::naive_gcd(a, q) != 1) continue;
      std::uint64_t c = 0;
      for (std::uint64_t p : primes) c += p % q == a;
      o.require(count_ap(N, q, a).pi_ap == c, "count_ap");
    }
  }

  SieveConfig one, eight;
  one.parallelism.threads = 1;
  eight.parallelism.threads = 8;
  eight.segment_size = one.segment_size = 1 << 16;
  const std::uint64_t big = 20'000'000;
  const auto s1 = snapshot(big, one), s8 = snapshot(big, eight);
  o.require(s1.pi == s8.pi && s1.theta == s8.theta && s1.psi == s8.psi, "thread snapshot");
  o.require(sieve_range(big - 1'000'000, big, one).primes == sieve_range(big - 1'000'000, big, eight).primes,
            "thread sieve_range");
  const auto g1 = max_gap_scan(big, one), g8 = max_gap_scan(big, eight);
  o.require(g1 == g8, "thread gap scan");
  o.require(prime_reciprocal_sum(big, one) == prime_reciprocal_sum(big, eight), "thread reciprocal sum");
  o.detail << checked << " checkpoints on [1, 1e5] match (max log-sum deviation " << worst
           << "); threads 1 and 8 identical to 2e7";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"zeros table reproduction", zeros_table},
      {"zeta special values", special_values},
      {"Bernoulli exactness", bernoulli},
      {"explicit formula residuals", explicit_formula},
      {"Mertens constant", mertens},
      {"character algebra", characters},
      {"L-function cross-check", lfunctions},
      {"short intervals", short_intervals},
      {"partial-summation identities", identities},
      {"oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %zu %s: %s (%.2f s) %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
