#include <cerrno>
#include <csignal>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"
#include "primelab/arith.hpp"
#include "primelab/bernoulli.hpp"
#include "primelab/characters.hpp"
#include "primelab/error.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/lfunc.hpp"
#include "primelab/progressions.hpp"
#include "primelab/report.hpp"
#include "primelab/sieve.hpp"
#include "primelab/verify.hpp"
#include "primelab/zeta.hpp"

namespace {

using namespace primelab;
using cli::Cell;
using cli::Format;
using cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string sieve_cap;
  std::string format = "table";
  std::uint64_t seed = kDefaultSeed;
  std::string threads = "1";
  std::string zero_bank = "builtin";
  bool no_timestamp = false;

  Format output_format() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::table;
  }
  Parallelism parallelism() const {
    if (threads == "auto") return Parallelism::automatic();
    const long n = std::stol(threads);
    if (n < 1) throw UsageError("--threads must be a positive integer or 'auto'");
    return {static_cast<unsigned>(n)};
  }
  SieveConfig sieve() const;
};

// Accepts plain integers and exact scientific forms such as 1e6 or 2.5e5.
std::uint64_t parse_u64(const std::string& s) {
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("integer out of range: " + s);
    }
  }
  double v = 0.0;
  std::size_t used = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size() || v < 0 || v != std::floor(v) || v > 1.8e19)
    throw UsageError("not a non-negative integer: '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

SieveConfig RunConfig::sieve() const {
  SieveConfig cfg = SieveConfig::from_environment();
  if (!sieve_cap.empty()) {
    const std::uint64_t cap = parse_u64(sieve_cap);
    if (cap > kDefaultSieveCap) throw UsageError("--sieve-cap may not exceed 2^40");
    cfg.cap = cap;
  }
  cfg.parallelism = parallelism();
  return cfg;
}

std::vector<std::uint64_t> parse_list(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const auto& s : items) out.push_back(parse_u64(s));
  return out;
}

// Writes to stdout; a closed pipe is treated as a normal end of output.
void emit(const std::string& text) {
  if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size() || std::fflush(stdout) != 0) {
    if (errno == EPIPE) std::_Exit(kExitOk);
    throw Error("write to standard output failed");
  }
}

int emit_report(const VerificationReport& report, const RunConfig& rc) {
  switch (rc.output_format()) {
    case Format::json:
      emit(to_json(report, {.include_runtime = !rc.no_timestamp, .include_rows = true}));
      break;
    case Format::csv:
      emit(to_csv(report));
      break;
    case Format::table:
      emit(to_table(report));
      if (!rc.no_timestamp) emit("runtime      " + format_fixed(report.runtime_seconds, 3) + " s\n");
      break;
  }
  if (!report.passed()) {
    std::fprintf(stderr, "verification failed: %zu counted failure(s) in %s\n",
                 report.counted_failures(), report.theorem_id.c_str());
    return kExitFailure;
  }
  return kExitOk;
}

int emit_table(const Table& t, const RunConfig& rc) {
  emit(cli::render(t, rc.output_format()));
  return kExitOk;
}

Character lookup_character(std::uint64_t q, std::uint64_t index) {
  return character_group(q)->character(index);
}

std::string root_text(const RootOfUnity& r) {
  if (r.zero) return "0";
  if (r.numerator == 0) return "1";
  return "e(" + std::to_string(r.numerator) + "/" + std::to_string(r.denominator) + ")";
}

Table identity_table(const std::vector<IdentityRow>& rows) {
  Table t{{"identity", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "verdict"}, {}, {}, false};
  for (const auto& r : rows) {
    const bool informative = r.label.find("printed") != std::string::npos;
    const Cell verdict = informative ? Cell{std::string("info")}
                                     : Cell{std::string(r.residual < 1e-6 ? "pass" : "FAIL")};
    t.add({r.label, r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.residual, verdict});
  }
  return t;
}

bool identities_pass(const std::vector<IdentityRow>& rows) {
  for (const auto& r : rows)
    if (r.label.find("printed") == std::string::npos && !(r.residual < 1e-6)) return false;
  return true;
}

Complex evaluate_zeta(double re, double im, const std::string& method) {
  const ComplexPoint s{re, im};
  if (method == "hasse") return zeta_alternating(s);
  if (method == "em") {
    unsigned order = 12;
    while (static_cast<double>(order) <= 1.0 - re) order += 2;
    return zeta_euler_maclaurin(s, order);
  }
  if (re > 0.0 && !near_eta_singularity(s) && std::fabs(im) <= 200.0) return zeta_alternating(s);
  unsigned order = 12;
  while (static_cast<double>(order) <= 1.0 - re) order += 2;
  return zeta_euler_maclaurin(s, order);
}

std::vector<std::uint64_t> collect_samples(const std::vector<std::string>& xs, const std::string& lo,
                                           const std::string& hi, std::size_t count,
                                           const std::string& dense, std::uint64_t seed) {
  std::vector<std::uint64_t> out = parse_list(xs);
  if (!lo.empty() || !hi.empty()) {
    if (lo.empty() || hi.empty()) throw UsageError("--lo and --hi must be given together");
    const auto s = sample_log_uniform(parse_u64(lo), parse_u64(hi), count, seed);
    out.insert(out.end(), s.begin(), s.end());
  }
  if (!dense.empty()) {
    const auto colon = dense.find(':');
    if (colon == std::string::npos) throw UsageError("--dense expects lo:hi");
    const auto d = dense_range(parse_u64(dense.substr(0, colon)), parse_u64(dense.substr(colon + 1)));
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw UsageError("no samples: give --x, --lo/--hi or --dense");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);

  CLI::App app{"primelab: prime counting, zeta zeros, Dirichlet characters and verification scans"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--format", rc.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", rc.seed, "Seed for randomized scans")->capture_default_str();
  app.add_option("--threads", rc.threads, "Worker threads, or 'auto'")->capture_default_str();
  app.add_option("--sieve-cap", rc.sieve_cap, "Sieve cap (at most 2^40; env PRIMELAB_SIEVE_CAP)");
  app.add_option("--zeros", rc.zero_bank, "Zero bank: 'builtin' or a file")->capture_default_str();
  app.add_flag("--no-timestamp", rc.no_timestamp, "Omit run-dependent timing fields");

  std::function<int()> action;

  // Prime counting.
  std::string x_arg;
  auto* pi_cmd = app.add_subcommand("pi", "Prime counting function pi(x)");
  pi_cmd->add_option("x", x_arg, "Upper limit")->required();
  pi_cmd->callback([&] {
    action = [&] {
      const auto x = parse_u64(x_arg);
      Table t{{"x", "pi"}, {}, {}, true};
      t.add({x, sieve::prime_pi(x, rc.sieve())});
      return emit_table(t, rc);
    };
  });
  auto* theta_cmd = app.add_subcommand("theta", "Chebyshev theta(x)");
  theta_cmd->add_option("x", x_arg, "Upper limit")->required();
  theta_cmd->callback([&] {
    action = [&] {
      const auto x = parse_u64(x_arg);
      Table t{{"x", "theta"}, {}, {}, true};
      t.add({x, sieve::chebyshev_theta(x, rc.sieve())});
      return emit_table(t, rc);
    };
  });
  auto* psi_cmd = app.add_subcommand("psi", "Chebyshev psi(x)");
  psi_cmd->add_option("x", x_arg, "Upper limit")->required();
  psi_cmd->callback([&] {
    action = [&] {
      const auto x = parse_u64(x_arg);
      Table t{{"x", "psi"}, {}, {}, true};
      t.add({x, sieve::chebyshev_psi(x, rc.sieve())});
      return emit_table(t, rc);
    };
  });
  auto* nth_cmd = app.add_subcommand("nth-prime", "The n-th prime, p_1 = 2");
  nth_cmd->add_option("n", x_arg, "Index")->required();
  nth_cmd->callback([&] {
    action = [&] {
      const auto n = parse_u64(x_arg);
      Table t{{"n", "prime"}, {}, {}, true};
      t.add({n, sieve::nth_prime(n, rc.sieve())});
      return emit_table(t, rc);
    };
  });
  auto* gaps_cmd = app.add_subcommand("gaps", "Record gaps between consecutive primes up to a limit");
  gaps_cmd->add_option("limit", x_arg, "Upper limit")->required();
  gaps_cmd->callback([&] {
    action = [&] {
      Table t{{"p", "next_p", "gap"}, {}, {}, false};
      for (const auto& g : sieve::max_gap_scan(parse_u64(x_arg), rc.sieve()))
        t.add({g.p, g.next_p, g.gap});
      return emit_table(t, rc);
    };
  });

  // Zeta.
  double s_re = 0.0, s_im = 0.0;
  std::string zeta_method = "auto";
  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta at s = re + i im");
  zeta_cmd->add_option("re", s_re, "Real part")->required();
  zeta_cmd->add_option("im", s_im, "Imaginary part");
  zeta_cmd->add_option("--method", zeta_method, "auto, hasse or em")
      ->check(CLI::IsMember({"auto", "hasse", "em"}));
  zeta_cmd->callback([&] {
    action = [&] {
      const Complex z = evaluate_zeta(s_re, s_im, zeta_method);
      Table t{{"re", "im", "zeta_re", "zeta_im"}, {}, {}, false};
      t.add({s_re, s_im, z.real(), z.imag()});
      return emit_table(t, rc);
    };
  });
  double t_max = 50.0;
  std::string export_path;
  auto* zeros_cmd = app.add_subcommand("zeros", "Critical-line zeros with 10 <= t <= t-max");
  zeros_cmd->add_option("--t-max", t_max, "Height, at most 500")->capture_default_str();
  zeros_cmd->add_option("--export", export_path, "Also write a zero bank file");
  zeros_cmd->callback([&] {
    action = [&] {
      const auto zeros = find_zeros(t_max, rc.parallelism());
      if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        out << export_zero_bank(bank_from_zeros(zeros, t_max, "scan"));
        if (!out) throw Error("cannot write " + export_path);
      }
      Table t{{"n", "t", "half_width"}, {}, {{1, 12}}, false};
      for (const auto& z : zeros) t.add({z.index, z.t, z.half_width});
      return emit_table(t, rc);
    };
  });
  std::int64_t gram_from = 0, gram_to = 0;
  auto* gram_cmd = app.add_subcommand("gram", "Gram points g_n for n in [from, to]");
  gram_cmd->add_option("from", gram_from, "First index")->required()->check(CLI::NonNegativeNumber);
  gram_cmd->add_option("to", gram_to, "Last index (default: from)");
  gram_cmd->callback([&] {
    action = [&] {
      const std::int64_t last = std::max(gram_to, gram_from);
      Table t{{"n", "g"}, {}, {}, false};
      for (std::int64_t n = gram_from; n <= last; ++n) t.add({n, gram_point(n)});
      return emit_table(t, rc);
    };
  });

  // Characters and L-functions.
  std::uint64_t q_arg = 1, index_arg = 0;
  bool with_values = false;
  auto* chars_cmd = app.add_subcommand("chars", "Character table modulo q");
  chars_cmd->add_option("q", q_arg, "Modulus")->required();
  chars_cmd->add_flag("--values", with_values, "Include values chi(n), 0 <= n < q");
  chars_cmd->callback([&] {
    action = [&] {
      const auto group = character_group(q_arg);
      if (rc.output_format() == Format::json) {
        emit(character_table_json(*group, with_values) + "\n");
        return kExitOk;
      }
      Table t{{"index", "order", "parity", "conductor", "primitive"}, {}, {}, false};
      if (with_values) t.columns.push_back("values");
      for (const auto& chi : group->characters()) {
        std::vector<Cell> row{chi.index(), chi.order(), std::int64_t{chi.parity()}, chi.conductor(),
                              chi.is_primitive()};
        if (with_values) {
          std::string v;
          for (std::uint64_t n = 0; n < q_arg; ++n) v += (n ? " " : "") + root_text(chi.value(n));
          row.emplace_back(v);
        }
        t.add(std::move(row));
      }
      return emit_table(t, rc);
    };
  });
  std::int64_t gauss_a = 1;
  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum tau(chi) (or the a-twisted sum)");
  gauss_cmd->add_option("q", q_arg, "Modulus")->required();
  gauss_cmd->add_option("index", index_arg, "Character index")->required();
  gauss_cmd->add_option("--a", gauss_a, "Twist parameter")->capture_default_str();
  gauss_cmd->callback([&] {
    action = [&] {
      const auto chi = lookup_character(q_arg, index_arg);
      const auto tau = gauss_sum(chi, gauss_a);
      Table t{{"q", "index", "a", "re", "im", "abs"}, {}, {}, false};
      t.add({q_arg, index_arg, gauss_a, tau.real(), tau.imag(), std::abs(tau)});
      return emit_table(t, rc);
    };
  });
  double l_re = 2.0, l_im = 0.0;
  unsigned special_n = 0;
  auto* lfunc_cmd = app.add_subcommand("lfunc", "Dirichlet L-function L(s, chi)");
  lfunc_cmd->add_option("q", q_arg, "Modulus")->required();
  lfunc_cmd->add_option("index", index_arg, "Character index")->required();
  lfunc_cmd->add_option("--re", l_re, "Re(s)")->capture_default_str();
  lfunc_cmd->add_option("--im", l_im, "Im(s)")->capture_default_str();
  lfunc_cmd->add_option("--special", special_n, "Evaluate L(1 - n, chi) from B_{n,chi}");
  lfunc_cmd->callback([&] {
    action = [&] {
      const auto chi = lookup_character(q_arg, index_arg);
      Table t{{"q", "index", "s_re", "s_im", "re", "im", "est_error"}, {}, {}, false};
      if (special_n > 0) {
        const Complex v = l_special_value(special_n, chi);
        t.add({q_arg, index_arg, 1.0 - special_n, 0.0, v.real(), v.imag(), 0.0});
      } else {
        const LValue v = l_value({l_re, l_im}, chi);
        t.add({q_arg, index_arg, l_re, l_im, v.value.real(), v.value.imag(), v.est_error});
      }
      return emit_table(t, rc);
    };
  });

  // Progressions.
  std::uint64_t a_arg = 1;
  auto* ap_cmd = app.add_subcommand("ap-count", "pi, theta and psi over n = a (mod q)");
  ap_cmd->add_option("x", x_arg, "Upper limit")->required();
  ap_cmd->add_option("q", q_arg, "Modulus")->required();
  ap_cmd->add_option("a", a_arg, "Residue")->required();
  ap_cmd->callback([&] {
    action = [&] {
      const auto s = count_ap(parse_u64(x_arg), q_arg, a_arg, rc.sieve());
      Table t{{"x", "q", "a", "pi", "theta", "psi"}, {}, {}, false};
      t.add({s.x, s.q, s.a, s.pi_ap, s.theta_ap, s.psi_ap});
      return emit_table(t, rc);
    };
  });
  auto* twist_cmd = app.add_subcommand("twist", "Character twists theta(x, chi) and psi(x, chi)");
  twist_cmd->add_option("x", x_arg, "Upper limit")->required();
  twist_cmd->add_option("q", q_arg, "Modulus")->required();
  twist_cmd->add_option("index", index_arg, "Character index")->required();
  twist_cmd->callback([&] {
    action = [&] {
      const auto tw = twist(parse_u64(x_arg), lookup_character(q_arg, index_arg), rc.sieve());
      Table t{{"x", "q", "index", "theta_re", "theta_im", "psi_re", "psi_im"}, {}, {}, false};
      t.add({tw.x, tw.chi_id.q, tw.chi_id.index, tw.theta_twist.real(), tw.theta_twist.imag(),
             tw.psi_twist.real(), tw.psi_twist.imag()});
      return emit_table(t, rc);
    };
  });

  // Explicit formula.
  std::vector<double> grid;
  double trunc_T = 50.0;
  bool scan_bank = false;
  auto* explicit_cmd = app.add_subcommand("explicit", "Truncated explicit formula for psi(x)");
  explicit_cmd->add_option("--x", grid, "Grid points (integers are shifted by 0.5)")
      ->required()
      ->delimiter(',');
  explicit_cmd->add_option("--T", trunc_T, "Truncation height")->capture_default_str();
  explicit_cmd->add_flag("--scan-zeros", scan_bank, "Build the bank with the zero finder up to T");
  explicit_cmd->callback([&] {
    action = [&] {
      const ZeroBank bank = scan_bank ? bank_from_zeros(find_zeros(trunc_T, rc.parallelism()),
                                                        trunc_T, "scan")
                                      : load_zeros(rc.zero_bank);
      const auto results = residual_scan(grid, bank, trunc_T, rc.sieve(), rc.parallelism());
      Table t{{"x", "T", "psi_explicit", "psi_sieve", "residual", "bound"}, {}, {}, false};
      for (const auto& r : results)
        t.add({r.x, r.T, r.psi_estimate, r.sieve_psi, r.residual, r.bound});
      return emit_table(t, rc);
    };
  });
  double li_x = 2.0;
  std::string li_variant = "offset";
  auto* li_cmd = app.add_subcommand("li", "Logarithmic integral");
  li_cmd->add_option("x", li_x, "Argument")->required();
  li_cmd->add_option("--variant", li_variant, "offset (from 2) or principal")
      ->check(CLI::IsMember({"offset", "principal"}))
      ->capture_default_str();
  li_cmd->callback([&] {
    action = [&] {
      const auto v = li_variant == "offset" ? LiVariant::offset_from_2 : LiVariant::principal_value;
      Table t{{"x", "li"}, {}, {}, true};
      t.add({li_x, li(li_x, v)});
      return emit_table(t, rc);
    };
  });

  // Verification scans.
  auto* verify_cmd = app.add_subcommand("verify", "Verification scans; exit 1 when a report fails");
  verify_cmd->require_subcommand(1);
  auto options = [&] {
    VerifyOptions o;
    o.sieve = rc.sieve();
    o.seed = rc.seed;
    return o;
  };
  std::uint64_t exemption = kDefaultExemption;
  verify_cmd->add_option("--exempt-below", exemption, "Small-x exemption threshold")
      ->capture_default_str();

  auto* v_bertrand = verify_cmd->add_subcommand("bertrand", "A prime in [x, 2x] for every x <= limit");
  v_bertrand->add_option("--limit", x_arg, "Upper limit")->required();
  v_bertrand->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      return emit_report(verify_bertrand(parse_u64(x_arg), o), rc);
    };
  });

  std::vector<std::string> xs;
  std::string lo_arg, hi_arg, dense_arg;
  std::size_t count_arg = 100;
  double epsilon = 1.0;
  auto sample_flags = [&](CLI::App* c) {
    c->add_option("--x", xs, "Sample points")->delimiter(',');
    c->add_option("--lo", lo_arg, "Log-uniform sampling range start");
    c->add_option("--hi", hi_arg, "Log-uniform sampling range end");
    c->add_option("--count", count_arg, "Number of random samples")->capture_default_str();
    c->add_option("--dense", dense_arg, "Every integer in lo:hi");
  };
  auto* v_t1 = verify_cmd->add_subcommand("theorem1", "Primes in [x, x + sqrt(x) (log x)^eps]");
  sample_flags(v_t1);
  v_t1->add_option("--epsilon", epsilon, "Exponent")->capture_default_str();
  v_t1->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      const auto s = collect_samples(xs, lo_arg, hi_arg, count_arg, dense_arg, rc.seed);
      return emit_report(verify_theorem1(s, epsilon, o), rc);
    };
  });
  auto* v_t48 = verify_cmd->add_subcommand("theorem48", "Primes in [x, x + x / (log x)^(1-eps)]");
  sample_flags(v_t48);
  v_t48->add_option("--epsilon", epsilon, "Exponent")->capture_default_str();
  v_t48->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      const auto s = collect_samples(xs, lo_arg, hi_arg, count_arg, dense_arg, rc.seed);
      return emit_report(verify_theorem48(s, epsilon, o), rc);
    };
  });
  double big_a = 1.0;
  auto* v_ap = verify_cmd->add_subcommand("ap-bertrand",
                                          "Primes p = a (mod q) in [x, 2x] for q <= (log x)^A");
  sample_flags(v_ap);
  v_ap->add_option("--A", big_a, "Exponent")->capture_default_str();
  v_ap->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      const auto s = collect_samples(xs, lo_arg, hi_arg, count_arg, dense_arg, rc.seed);
      return emit_report(verify_ap_bertrand(s, big_a, o), rc);
    };
  });
  auto* v_l55 = verify_cmd->add_subcommand("lemma55", "Signed margins of the short-interval log sum");
  std::string l55_lo = "1000000", l55_hi = "2000000";
  v_l55->add_option("--lo", l55_lo, "Range start")->capture_default_str();
  v_l55->add_option("--hi", l55_hi, "Range end")->capture_default_str();
  v_l55->add_option("--count", count_arg, "Number of random samples")->capture_default_str();
  v_l55->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      return emit_report(lemma55_scan(parse_u64(l55_lo), parse_u64(l55_hi), count_arg, o), rc);
    };
  });
  auto* v_mertens = verify_cmd->add_subcommand("mertens", "Sum of 1/p minus log log x");
  v_mertens->add_option("--x", x_arg, "Upper limit")->required();
  v_mertens->callback([&] {
    action = [&] {
      const auto m = mertens_estimate(parse_u64(x_arg), rc.sieve());
      Table t{{"x", "sum", "b_estimate", "deviation"}, {}, {}, false};
      t.add({m.x, m.sum, m.b_estimate, m.b_estimate - kMertensConstant});
      return emit_table(t, rc);
    };
  });
  std::string quad_mode = "exact";
  double quad_tol = 1e-12;
  auto* v_43 = verify_cmd->add_subcommand("thm43", "Partial-summation identities for pi, theta, psi");
  v_43->add_option("--x", x_arg, "Upper limit")->required();
  v_43->add_option("--mode", quad_mode, "exact or quadrature")
      ->check(CLI::IsMember({"exact", "quadrature"}));
  v_43->add_option("--tolerance", quad_tol, "Quadrature tolerance")->capture_default_str();
  v_43->callback([&] {
    action = [&] {
      IdentityOptions o{quad_mode == "exact" ? IdentityMode::exact : IdentityMode::quadrature,
                        quad_tol, rc.sieve()};
      const auto rows = identity_check_thm43(parse_u64(x_arg), o);
      emit_table(identity_table(rows), rc);
      return identities_pass(rows) ? kExitOk : kExitFailure;
    };
  });
  auto* v_44 = verify_cmd->add_subcommand("thm44", "Progression and twist identities");
  v_44->add_option("--x", x_arg, "Upper limit")->required();
  v_44->add_option("--q", q_arg, "Modulus")->required();
  v_44->add_option("--a", a_arg, "Residue")->capture_default_str();
  v_44->add_option("--index", index_arg, "Character index for the twist identity")
      ->capture_default_str();
  v_44->add_option("--mode", quad_mode, "exact or quadrature")
      ->check(CLI::IsMember({"exact", "quadrature"}));
  v_44->add_option("--tolerance", quad_tol, "Quadrature tolerance")->capture_default_str();
  v_44->callback([&] {
    action = [&] {
      IdentityOptions o{quad_mode == "exact" ? IdentityMode::exact : IdentityMode::quadrature,
                        quad_tol, rc.sieve()};
      const auto rows =
          identity_check_thm44(parse_u64(x_arg), lookup_character(q_arg, index_arg), a_arg, o);
      emit_table(identity_table(rows), rc);
      return identities_pass(rows) ? kExitOk : kExitFailure;
    };
  });
  auto* v_pnt = verify_cmd->add_subcommand("pnt-error", "Error-term ratios against 1/(8 pi)");
  v_pnt->add_option("--limit", x_arg, "Upper limit")->required();
  v_pnt->callback([&] {
    action = [&] {
      auto o = options();
      o.exemption_threshold = exemption;
      return emit_report(pnt_error_scan(parse_u64(x_arg), o), rc);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const primelab::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
