#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "primelab/parallel.hpp"
#include "primelab/summation.hpp"

namespace primelab {

inline constexpr std::uint64_t kDefaultSieveCap = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

struct SieveConfig {
  std::uint64_t cap = kDefaultSieveCap;         // exclusive upper bound on any sieved value
  std::uint64_t segment_size = kDefaultSegmentSize;
  Parallelism parallelism{};

  // Honors PRIMELAB_SIEVE_CAP when set; the value is clamped to 2^40.
  static SieveConfig from_environment();
};

// Primes in the half-open range [lo, hi), ascending.
struct PrimeTable {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> primes;
};

struct ChebyshevSnapshot {
  std::uint64_t x = 0;
  std::uint64_t pi = 0;
  double theta = 0.0;
  double psi = 0.0;
};

struct GapRecord {
  std::uint64_t p = 0;
  std::uint64_t next_p = 0;
  std::uint64_t gap = 0;

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

// Called once per segment, in ascending segment order, with the primes in
// [seg_lo, seg_hi).
using SegmentVisitor =
    std::function<void(std::uint64_t seg_lo, std::uint64_t seg_hi,
                       std::span<const std::uint64_t> primes)>;

namespace sieve {

/// Throws RangeTooLarge if hi exceeds config.cap.
void check_cap(std::uint64_t hi, const SieveConfig& config);

/// Sieving primes up to 2^20 (enough for every value below 2^40), built once.
std::span<const std::uint64_t> base_primes();

PrimeTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

/// Sequential segment walk; memory stays at one segment.
void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                      const SegmentVisitor& visit);

/// Segment-parallel map. Results come back in segment order and the segment
/// partition depends only on config.segment_size, so any reduction over the
/// result vector is independent of the thread count.
template <typename T, typename Fn>
std::vector<T> map_segments(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                            Fn&& fn);

std::uint64_t prime_pi(std::uint64_t x, const SieveConfig& config = {});
double chebyshev_theta(std::uint64_t x, const SieveConfig& config = {});
double chebyshev_psi(std::uint64_t x, const SieveConfig& config = {});
ChebyshevSnapshot snapshot(std::uint64_t x, const SieveConfig& config = {});

/// p_1 = 2.
std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& config = {});

/// Record-setting gaps between consecutive primes p < next_p <= limit.
std::vector<GapRecord> max_gap_scan(std::uint64_t limit, const SieveConfig& config = {});

/// Sum of 1/p over p <= x, compensated.
double prime_reciprocal_sum(std::uint64_t x, const SieveConfig& config = {});

// Segment sieve kernel, exposed for map_segments.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& scratch,
                   std::vector<std::uint64_t>& out);

}  // namespace sieve

template <typename T, typename Fn>
std::vector<T> sieve::map_segments(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                                   Fn&& fn) {
  check_cap(hi, config);
  if (hi <= lo) return {};
  const std::uint64_t seg = config.segment_size == 0 ? kDefaultSegmentSize : config.segment_size;
  const std::uint64_t count = (hi - lo + seg - 1) / seg;
  std::vector<T> results(count);
  parallel_for(count, config.parallelism, [&](std::size_t i) {
    thread_local std::vector<std::uint8_t> scratch;
    thread_local std::vector<std::uint64_t> primes;
    const std::uint64_t a = lo + i * seg;
    const std::uint64_t b = (hi - a > seg) ? a + seg : hi;
    sieve_segment(a, b, scratch, primes);
    results[i] = fn(a, b, std::span<const std::uint64_t>(primes));
  });
  return results;
}

}  // namespace primelab
