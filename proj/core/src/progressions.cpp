#include "primelab/progressions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "primelab/arith.hpp"
#include "primelab/error.hpp"
#include "primelab/primality.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

struct APPartial {
  std::uint64_t count = 0;
  CompensatedSum theta;
};

struct TwistPartial {
  CompensatedComplexSum theta;
};

// Proper prime powers p^k <= x (k >= 2), visited in ascending p.
template <typename Fn>
void for_each_proper_power(std::uint64_t x, const SieveConfig& config, Fn&& fn) {
  const std::uint64_t root = integer_root(x, 2);
  if (root < 2) return;
  SieveConfig small = config;
  small.parallelism = {};
  const auto table = sieve::sieve_range(2, root + 1, small);
  for (std::uint64_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    std::uint64_t pk = p * p;
    for (;;) {
      fn(pk, p, lp);
      if (pk > x / p) break;
      pk *= p;
      if (pk > x) break;
    }
  }
}

}  // namespace

APCountSnapshot count_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                         const SieveConfig& config) {
  if (q == 0) throw DomainError("modulus must be at least 1");
  a %= q;
  if (gcd(a, q) != 1) throw DomainError("residue is not coprime to the modulus");
  sieve::check_cap(x + 1, config);

  const auto parts = sieve::map_segments<APPartial>(
      2, x + 1, config, [&](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> primes) {
        APPartial part;
        for (std::uint64_t p : primes) {
          if (p % q != a) continue;
          ++part.count;
          part.theta.add(std::log(static_cast<double>(p)));
        }
        return part;
      });

  APCountSnapshot snap;
  snap.x = x;
  snap.q = q;
  snap.a = a;
  CompensatedSum theta;
  for (const auto& part : parts) {
    snap.pi_ap += part.count;
    theta.merge(part.theta);
  }
  CompensatedSum psi = theta;
  for_each_proper_power(x, config, [&](std::uint64_t pk, std::uint64_t, double lp) {
    if (pk % q == a) psi.add(lp);
  });
  snap.theta_ap = theta.value();
  snap.psi_ap = psi.value();
  return snap;
}

TwistValue twist(std::uint64_t x, const Character& chi, const SieveConfig& config) {
  sieve::check_cap(x + 1, config);
  const auto parts = sieve::map_segments<TwistPartial>(
      2, x + 1, config, [&](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> primes) {
        TwistPartial part;
        for (std::uint64_t p : primes) {
          const RootOfUnity v = chi.value(p);
          if (v.zero) continue;
          part.theta.add(v.value() * std::log(static_cast<double>(p)));
        }
        return part;
      });

  TwistValue out;
  out.x = x;
  out.chi_id = {chi.modulus(), chi.index()};
  CompensatedComplexSum theta;
  for (const auto& part : parts) theta.merge(part.theta);
  CompensatedComplexSum psi = theta;
  for_each_proper_power(x, config, [&](std::uint64_t pk, std::uint64_t, double lp) {
    const RootOfUnity v = chi.value(pk);
    if (!v.zero) psi.add(v.value() * lp);
  });
  out.theta_twist = theta.value();
  out.psi_twist = psi.value();
  return out;
}

double decompose_check(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                       const SieveConfig& config) {
  const APCountSnapshot snap = count_ap(x, q, a, config);
  const auto group = character_group(q);
  CompensatedComplexSum sum;
  for (const Character& chi : group->characters()) {
    const TwistValue tw = twist(x, chi, config);
    sum.add(std::conj(chi(static_cast<std::int64_t>(a % q))) * tw.theta_twist);
  }
  const std::complex<double> rhs = sum.value() / static_cast<double>(group->size());
  return std::abs(snap.theta_ap - rhs);
}

VerificationReport verify_ap_bertrand(std::span<const std::uint64_t> x_samples, double A,
                                      const VerifyOptions& options) {
  if (!(A > 0.0)) throw DomainError("A must be positive");
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t x : x_samples) sieve::check_cap(2 * x + 1, options.sieve);

  std::vector<std::vector<Witness>> per_sample(x_samples.size());
  SieveConfig inner = options.sieve;
  inner.parallelism = {};
  parallel_for(x_samples.size(), options.sieve.parallelism, [&](std::size_t i) {
    const std::uint64_t x = x_samples[i];
    const double lx = x > 1 ? std::log(static_cast<double>(x)) : 0.0;
    const auto q_max = static_cast<std::uint64_t>(std::floor(std::pow(lx, A) + 1e-12));
    if (q_max == 0) return;
    const auto table = sieve::sieve_range(x, 2 * x + 1, inner);
    auto& rows = per_sample[i];
    for (std::uint64_t q = 1; q <= q_max; ++q) {
      std::vector<std::uint64_t> first(q, 0);
      std::uint64_t pending = euler_phi(q);
      for (std::uint64_t p : table.primes) {
        if (pending == 0) break;
        auto& slot = first[p % q];
        if (slot == 0 && gcd(p % q, q) == 1) {
          slot = p;
          --pending;
        }
      }
      for (std::uint64_t a = 0; a < q; ++a) {
        if (gcd(a, q) != 1) continue;
        Witness w;
        w.x = x;
        w.q = q;
        w.a = a;
        w.y = x;
        w.exempt = x < options.exemption_threshold;
        w.witness = first[a];
        w.pass = first[a] != 0;
        w.margin = w.pass ? static_cast<double>(first[a] - x) / static_cast<double>(x) : -1.0;
        rows.push_back(w);
      }
    }
  });

  VerificationReport report;
  report.theorem_id = "ap-bertrand";
  report.exemption_threshold = options.exemption_threshold;
  report.seed = options.seed;
  report.metrics["A"] = A;
  if (!x_samples.empty()) {
    report.lo = *std::min_element(x_samples.begin(), x_samples.end());
    report.hi = *std::max_element(x_samples.begin(), x_samples.end());
  }
  for (auto& rows : per_sample) {
    for (auto& w : rows) {
      ++report.samples;
      if (!w.pass) report.failures.push_back(w);
      if (!w.exempt) {
        const bool worse = !report.extremal ||
                           (report.extremal->pass && (!w.pass || w.margin > report.extremal->margin));
        if (worse) report.extremal = w;
      }
      if (options.keep_rows) report.rows.push_back(std::move(w));
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace primelab
