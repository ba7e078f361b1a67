#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace primelab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr std::uint64_t kDefaultExemption = 100;

// One examined case of a scan. Fields that do not apply stay zero.
struct Witness {
  std::string label;           // sub-check name when a scan runs several
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  std::uint64_t y = 0;        // interval length, when the scan has one
  bool pass = true;
  bool exempt = false;        // x below the small-x exemption threshold
  std::uint64_t witness = 0;  // prime found, 0 when none
  double margin = 0.0;        // per-scan meaning, documented at each scan

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string theorem_id;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t samples = 0;
  std::uint64_t exemption_threshold = kDefaultExemption;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Witness> rows;
  std::vector<Witness> failures;
  std::optional<Witness> extremal;
  std::map<std::string, double> metrics;
  double runtime_seconds = 0.0;

  /// Failures at or above the exemption threshold.
  std::size_t counted_failures() const;
  bool passed() const { return counted_failures() == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct EmitOptions {
  bool include_runtime = true;  // the only run-dependent field
  bool include_rows = true;
};

std::string to_json(const VerificationReport& report, const EmitOptions& options = {});
/// Inverse of to_json. Throws ParseError on malformed input.
VerificationReport report_from_json(std::string_view text);

/// Columns theorem,label,x,q,a,y,pass,exempt,witness,margin. Uses the failure list
/// when rows were not kept.
std::string to_csv(const VerificationReport& report);

/// Human-readable summary with padded columns.
std::string to_table(const VerificationReport& report);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

/// Shortest round-trip decimal form; independent of the C locale.
std::string format_double(double v);
std::string format_fixed(double v, int decimals);

}  // namespace primelab
