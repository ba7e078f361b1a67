#include "primelab/sieve.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "primelab/error.hpp"
#include "primelab/primality.hpp"

namespace primelab {

SieveConfig SieveConfig::from_environment() {
  SieveConfig config;
  if (const char* raw = std::getenv("PRIMELAB_SIEVE_CAP"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0)
      config.cap = std::min<std::uint64_t>(v, kDefaultSieveCap);
  }
  return config;
}

namespace sieve {

namespace {

constexpr std::uint64_t kBaseLimit = std::uint64_t{1} << 20;

std::vector<std::uint64_t> build_base_primes() {
  std::vector<std::uint8_t> composite(kBaseLimit + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= kBaseLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= kBaseLimit; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace

std::span<const std::uint64_t> base_primes() {
  static const std::vector<std::uint64_t> primes = build_base_primes();
  return primes;
}

void check_cap(std::uint64_t hi, const SieveConfig& config) {
  if (hi > config.cap) {
    throw RangeTooLarge("sieve bound " + std::to_string(hi) + " exceeds cap " +
                        std::to_string(config.cap));
  }
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& scratch,
                   std::vector<std::uint64_t>& out) {
  out.clear();
  if (hi <= lo) return;
  const std::uint64_t len = hi - lo;
  scratch.assign(len, 1);
  for (std::uint64_t v = lo; v < std::min<std::uint64_t>(hi, 2); ++v) scratch[v - lo] = 0;
  for (std::uint64_t p : base_primes()) {
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t m = start; m < hi; m += p) scratch[m - lo] = 0;
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (scratch[i]) out.push_back(lo + i);
  }
}

void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const SegmentVisitor& visit) {
  check_cap(hi, config);
  const std::uint64_t seg = config.segment_size == 0 ? kDefaultSegmentSize : config.segment_size;
  std::vector<std::uint8_t> scratch;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t a = lo; a < hi;) {
    const std::uint64_t b = (hi - a > seg) ? a + seg : hi;
    sieve_segment(a, b, scratch, primes);
    visit(a, b, primes);
    a = b;
  }
}

PrimeTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
  if (lo > hi) throw DomainError("sieve_range requires lo <= hi");
  PrimeTable table{lo, hi, {}};
  auto parts = map_segments<std::vector<std::uint64_t>>(
      lo, hi, config, [](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> p) {
        return std::vector<std::uint64_t>(p.begin(), p.end());
      });
  for (auto& part : parts) table.primes.insert(table.primes.end(), part.begin(), part.end());
  return table;
}

std::uint64_t prime_pi(std::uint64_t x, const SieveConfig& config) {
  auto counts = map_segments<std::uint64_t>(
      0, x + 1, config,
      [](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> p) { return p.size(); });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

double chebyshev_theta(std::uint64_t x, const SieveConfig& config) {
  auto parts = map_segments<CompensatedSum>(
      0, x + 1, config, [](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> p) {
        CompensatedSum s;
        for (auto v : p) s.add(std::log(static_cast<double>(v)));
        return s;
      });
  CompensatedSum total;
  for (const auto& part : parts) total.merge(part);
  return total.value();
}

double chebyshev_psi(std::uint64_t x, const SieveConfig& config) {
  CompensatedSum total(chebyshev_theta(x, config));
  for (unsigned k = 2;; ++k) {
    const std::uint64_t root = integer_root(x, k);
    if (root < 2) break;
    total.add(chebyshev_theta(root, config));
  }
  return total.value();
}

ChebyshevSnapshot snapshot(std::uint64_t x, const SieveConfig& config) {
  return {x, prime_pi(x, config), chebyshev_theta(x, config), chebyshev_psi(x, config)};
}

std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& config) {
  if (n == 0) throw DomainError("nth_prime requires n >= 1");
  // Rosser: p_n < n (ln n + ln ln n) for n >= 6.
  std::uint64_t bound = 15;
  if (n >= 6) {
    const double ln = std::log(static_cast<double>(n));
    bound = static_cast<std::uint64_t>(static_cast<double>(n) * (ln + std::log(ln))) + 3;
  }
  check_cap(bound, config);
  const std::uint64_t seg = config.segment_size == 0 ? kDefaultSegmentSize : config.segment_size;
  std::vector<std::uint8_t> scratch;
  std::vector<std::uint64_t> primes;
  std::uint64_t seen = 0;
  for (std::uint64_t a = 0; a < bound;) {
    const std::uint64_t b = std::min(bound, a + seg);
    sieve_segment(a, b, scratch, primes);
    if (seen + primes.size() >= n) return primes[n - seen - 1];
    seen += primes.size();
    a = b;
  }
  throw RangeTooLarge("nth_prime bound exhausted");  // unreachable given Rosser's bound
}

std::vector<GapRecord> max_gap_scan(std::uint64_t limit, const SieveConfig& config) {
  if (limit < 3) throw DomainError("max_gap_scan requires limit >= 3");
  std::vector<GapRecord> records;
  std::uint64_t prev = 0;
  std::uint64_t best = 0;
  for_each_segment(0, limit + 1, config,
                   [&](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> primes) {
                     for (auto p : primes) {
                       if (prev != 0 && p - prev > best) {
                         best = p - prev;
                         records.push_back({prev, p, best});
                       }
                       prev = p;
                     }
                   });
  return records;
}

double prime_reciprocal_sum(std::uint64_t x, const SieveConfig& config) {
  auto parts = map_segments<CompensatedSum>(
      0, x + 1, config, [](std::uint64_t, std::uint64_t, std::span<const std::uint64_t> p) {
        CompensatedSum s;
        for (auto v : p) s.add(1.0 / static_cast<double>(v));
        return s;
      });
  CompensatedSum total;
  for (const auto& part : parts) total.merge(part);
  return total.value();
}

}  // namespace sieve
}  // namespace primelab
