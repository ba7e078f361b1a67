#include "primelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "primelab/error.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/primality.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

__extension__ typedef unsigned __int128 u128;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Shared body of the two interval scans.
VerificationReport interval_scan(std::string id, std::span<const std::uint64_t> xs,
                                 const std::function<std::uint64_t(std::uint64_t)>& length,
                                 const VerifyOptions& options) {
  const auto start = Clock::now();
  std::vector<std::uint64_t> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = length(xs[i]);
    sieve::check_cap(xs[i] + ys[i] + 1, options.sieve);
  }
  std::vector<Witness> rows(xs.size());
  SieveConfig inner = options.sieve;
  inner.parallelism = {};
  parallel_for(xs.size(), options.sieve.parallelism, [&](std::size_t i) {
    const auto table = sieve::sieve_range(xs[i], xs[i] + ys[i] + 1, inner);
    Witness& w = rows[i];
    w.x = xs[i];
    w.y = ys[i];
    w.exempt = xs[i] < options.exemption_threshold;
    w.pass = !table.primes.empty();
    w.witness = w.pass ? table.primes.front() : 0;
    w.margin = static_cast<double>(table.primes.size());
  });

  VerificationReport report;
  report.theorem_id = std::move(id);
  report.exemption_threshold = options.exemption_threshold;
  report.seed = options.seed;
  report.samples = xs.size();
  if (!xs.empty()) {
    report.lo = *std::min_element(xs.begin(), xs.end());
    report.hi = *std::max_element(xs.begin(), xs.end());
  }
  for (auto& w : rows) {
    if (!w.pass) report.failures.push_back(w);
    if (!w.exempt && (!report.extremal || w.margin < report.extremal->margin)) report.extremal = w;
    if (options.keep_rows) report.rows.push_back(w);
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

// Right-continuous step function given by jump points (ascending, >= 2) and
// jump sizes.
struct StepFunction {
  std::vector<double> at;
  std::vector<std::complex<double>> jump;

  void push(double t, std::complex<double> v) {
    if (!at.empty() && at.back() == t) {
      jump.back() += v;
    } else {
      at.push_back(t);
      jump.push_back(v);
    }
  }

  std::complex<double> value_at_end() const {
    CompensatedComplexSum s;
    for (auto v : jump) s.add(v);
    return s.value();
  }
};

// int_2^x F(t) w(t) dt, where W is an antiderivative of w.
std::complex<double> step_integral(const StepFunction& f, double x,
                                   const std::function<double(double)>& w,
                                   const std::function<double(double)>& W,
                                   const IdentityOptions& options) {
  CompensatedComplexSum total;
  CompensatedComplexSum level;
  for (std::size_t i = 0; i < f.at.size(); ++i) {
    level.add(f.jump[i]);
    const double a = f.at[i];
    const double b = i + 1 < f.at.size() ? f.at[i + 1] : x;
    if (b <= a) continue;
    double piece = 0.0;
    if (options.mode == IdentityMode::exact) {
      piece = W(b) - W(a);
    } else {
      using boost::math::quadrature::gauss_kronrod;
      piece = gauss_kronrod<double, 15>::integrate(w, a, b, 15, options.tolerance);
    }
    total.add(level.value() * piece);
  }
  return total.value();
}

IdentityRow make_row(std::string label, std::complex<double> lhs, std::complex<double> rhs) {
  IdentityRow row{std::move(label), lhs, rhs, 0.0};
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  row.residual = scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
  return row;
}

const std::function<double(double)> k_theta = [](double t) {
  const double l = std::log(t);
  return 1.0 / (t * l * l);
};
const std::function<double(double)> K_theta = [](double t) { return -1.0 / std::log(t); };
const std::function<double(double)> k_inv = [](double t) { return 1.0 / t; };
const std::function<double(double)> K_inv = [](double t) { return std::log(t); };
const std::function<double(double)> k_inv2 = [](double t) { return 1.0 / (t * t); };
const std::function<double(double)> K_inv2 = [](double t) { return -1.0 / t; };
const std::function<double(double)> k_twist = [](double t) {
  const double l = std::log(t);
  return (1.0 + l) / (t * t * l * l);
};
const std::function<double(double)> K_twist = [](double t) { return -1.0 / (t * std::log(t)); };

}  // namespace

std::vector<std::uint64_t> sample_log_uniform(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                              std::uint64_t seed) {
  if (lo == 0 || hi < lo) throw DomainError("log-uniform sampling needs 1 <= lo <= hi");
  std::mt19937_64 rng(seed);
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi) + 1.0);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = static_cast<std::uint64_t>(std::exp(a + unit_interval(rng) * (b - a)));
    out.push_back(std::clamp(x, lo, hi));
  }
  return sorted_unique(std::move(out));
}

std::vector<std::uint64_t> sample_uniform(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                          std::uint64_t seed) {
  if (hi < lo) throw DomainError("uniform sampling needs lo <= hi");
  std::mt19937_64 rng(seed);
  const u128 span = static_cast<u128>(hi - lo) + 1;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(lo + static_cast<std::uint64_t>((span * rng()) >> 64));
  return sorted_unique(std::move(out));
}

std::vector<std::uint64_t> dense_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  out.reserve(hi - lo + 1);
  for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

VerificationReport verify_bertrand(std::uint64_t limit, const VerifyOptions& options) {
  const auto start = Clock::now();
  sieve::check_cap(2 * limit + 1, options.sieve);
  const auto table = sieve::sieve_range(0, 2 * limit + 1, options.sieve);

  VerificationReport report;
  report.theorem_id = "bertrand";
  report.lo = 1;
  report.hi = limit;
  report.samples = limit;
  report.exemption_threshold = options.exemption_threshold;
  report.seed = options.seed;
  std::size_t k = 0;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    while (k < table.primes.size() && table.primes[k] < x) ++k;
    Witness w;
    w.x = x;
    w.y = x;
    w.exempt = x < options.exemption_threshold;
    const bool found = k < table.primes.size() && table.primes[k] <= 2 * x;
    w.pass = found;
    w.witness = found ? table.primes[k] : 0;
    w.margin = found ? static_cast<double>(w.witness - x) / static_cast<double>(x) : -1.0;
    if (!w.pass) report.failures.push_back(w);
    if (!w.exempt && (!report.extremal || w.margin > report.extremal->margin)) report.extremal = w;
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_theorem1(std::span<const std::uint64_t> x_samples, double epsilon,
                                   const VerifyOptions& options) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  auto report = interval_scan(
      "theorem1", x_samples,
      [epsilon](std::uint64_t x) -> std::uint64_t {
        if (x < 2) return 0;
        const double lx = std::log(static_cast<double>(x));
        return static_cast<std::uint64_t>(
            std::ceil(std::sqrt(static_cast<double>(x)) * std::pow(lx, epsilon)));
      },
      options);
  report.metrics["epsilon"] = epsilon;
  return report;
}

VerificationReport verify_theorem48(std::span<const std::uint64_t> x_samples, double epsilon,
                                    const VerifyOptions& options) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  auto report = interval_scan(
      "theorem48", x_samples,
      [epsilon](std::uint64_t x) -> std::uint64_t {
        if (x < 3) return x;
        const double lx = std::log(static_cast<double>(x));
        return static_cast<std::uint64_t>(
            std::floor(static_cast<double>(x) / std::pow(lx, 1.0 - epsilon)));
      },
      options);
  report.metrics["epsilon"] = epsilon;
  return report;
}

Lemma55Margins lemma55_check(std::uint64_t x, std::uint64_t y, const SieveConfig& config) {
  if (x < 3) throw DomainError("lemma55_check needs x >= 3");
  const auto table = sieve::sieve_range(x + 1, x + y + 1, config);
  CompensatedSum s;
  for (std::uint64_t p : table.primes) s.add(std::log(static_cast<double>(p)));
  const double lx = std::log(static_cast<double>(x));
  const double r = std::log(lx) / lx;
  const double yd = static_cast<double>(y);
  Lemma55Margins m;
  m.sum_log = s.value();
  m.lower = m.sum_log - yd * (1.0 - r);
  m.upper = yd * (1.0 + 2.0 * r) - m.sum_log;
  return m;
}

VerificationReport lemma55_scan(std::uint64_t x_lo, std::uint64_t x_hi, std::size_t count,
                                const VerifyOptions& options) {
  const auto start = Clock::now();
  if (x_hi <= x_lo) throw DomainError("lemma55_scan needs x_lo < x_hi");
  const auto xs = sample_uniform(x_lo, x_hi - 1, count, options.seed);
  std::vector<Witness> rows(xs.size());
  std::vector<double> lower(xs.size());
  SieveConfig inner = options.sieve;
  inner.parallelism = {};
  parallel_for(xs.size(), options.sieve.parallelism, [&](std::size_t i) {
    const std::uint64_t x = xs[i];
    const double xd = static_cast<double>(x);
    const auto y = static_cast<std::uint64_t>(std::floor(std::sqrt(xd) * std::log(xd)));
    const auto m = lemma55_check(x, y, inner);
    Witness& w = rows[i];
    w.label = "upper";
    w.x = x;
    w.y = y;
    w.exempt = x < options.exemption_threshold;
    w.margin = m.upper;
    lower[i] = m.lower;
  });

  VerificationReport report;
  report.theorem_id = "lemma55";
  report.lo = x_lo;
  report.hi = x_hi;
  report.samples = xs.size();
  report.exemption_threshold = options.exemption_threshold;
  report.seed = options.seed;
  double min_lower = INFINITY, min_upper = INFINITY;
  std::size_t neg_lower = 0, neg_upper = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    min_lower = std::min(min_lower, lower[i]);
    min_upper = std::min(min_upper, rows[i].margin);
    neg_lower += lower[i] < 0.0;
    neg_upper += rows[i].margin < 0.0;
    if (!report.extremal || rows[i].margin < report.extremal->margin) report.extremal = rows[i];
    if (options.keep_rows) report.rows.push_back(rows[i]);
  }
  if (!rows.empty()) {
    report.metrics["min_lower_margin"] = min_lower;
    report.metrics["min_upper_margin"] = min_upper;
  }
  report.metrics["negative_lower_margins"] = static_cast<double>(neg_lower);
  report.metrics["negative_upper_margins"] = static_cast<double>(neg_upper);
  report.metrics["c0"] = 1.0;
  report.runtime_seconds = seconds_since(start);
  return report;
}

MertensEstimate mertens_estimate(std::uint64_t x, const SieveConfig& config) {
  if (x < 100) throw DomainError("mertens_estimate needs x >= 100");
  MertensEstimate m;
  m.x = x;
  m.sum = sieve::prime_reciprocal_sum(x, config);
  m.b_estimate = m.sum - std::log(std::log(static_cast<double>(x)));
  return m;
}

std::vector<IdentityRow> identity_check_thm43(std::uint64_t x, const IdentityOptions& options) {
  if (x < 3) throw DomainError("identity checks need x > 2");
  const auto table = sieve::sieve_range(2, x + 1, options.sieve);
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);

  StepFunction pi_f, theta_f, psi_f;
  CompensatedSum recip, lambda_over_log, lambda_log;
  for (std::uint64_t p : table.primes) {
    const double pd = static_cast<double>(p);
    const double lp = std::log(pd);
    pi_f.push(pd, 1.0);
    theta_f.push(pd, lp);
    recip.add(1.0 / pd);
  }
  // psi jumps at prime powers; collect them in ascending order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> powers;  // (p^k, p)
  for (std::uint64_t p : table.primes) {
    std::uint64_t pk = p;
    for (unsigned k = 1;; ++k) {
      powers.emplace_back(pk, p);
      lambda_over_log.add(1.0 / k);
      lambda_log.add(k * std::log(static_cast<double>(p)) * std::log(static_cast<double>(p)));
      if (pk > x / p) break;
      pk *= p;
    }
  }
  std::sort(powers.begin(), powers.end());
  for (auto [pk, p] : powers) psi_f.push(static_cast<double>(pk), std::log(static_cast<double>(p)));

  const auto pi_x = pi_f.value_at_end();
  const auto theta_x = theta_f.value_at_end();
  const auto psi_x = psi_f.value_at_end();
  std::vector<IdentityRow> rows;
  rows.push_back(make_row("i", pi_x, theta_x / lx + step_integral(theta_f, xd, k_theta, K_theta, options)));
  rows.push_back(make_row("ii", theta_x, pi_x * lx - step_integral(pi_f, xd, k_inv, K_inv, options)));
  rows.push_back(make_row("ii-printed", theta_x,
                          pi_x * lx - step_integral(pi_f, xd, k_theta, K_theta, options)));
  rows.push_back(make_row("iii", lambda_over_log.value(),
                          psi_x / lx + step_integral(psi_f, xd, k_theta, K_theta, options)));
  rows.push_back(make_row("iv", recip.value(), pi_x / xd + step_integral(pi_f, xd, k_inv2, K_inv2, options)));
  rows.push_back(make_row("v", lambda_log.value(), psi_x * lx - step_integral(psi_f, xd, k_inv, K_inv, options)));
  return rows;
}

std::vector<IdentityRow> identity_check_thm44(std::uint64_t x, const Character& chi,
                                              std::uint64_t a, const IdentityOptions& options) {
  if (x < 3) throw DomainError("identity checks need x > 2");
  const std::uint64_t q = chi.modulus();
  a %= q;
  if (gcd(a, q) != 1) throw DomainError("residue is not coprime to the modulus");
  const auto table = sieve::sieve_range(2, x + 1, options.sieve);
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);

  StepFunction pi_f, theta_f, twist_f;
  CompensatedSum recip;
  CompensatedComplexSum twist_recip;
  for (std::uint64_t p : table.primes) {
    const double pd = static_cast<double>(p);
    const double lp = std::log(pd);
    if (p % q == a) {
      pi_f.push(pd, 1.0);
      theta_f.push(pd, lp);
      recip.add(1.0 / pd);
    }
    const RootOfUnity v = chi.value(p);
    if (!v.zero) {
      twist_f.push(pd, v.value() * lp);
      twist_recip.add(v.value() / pd);
    }
  }
  const auto pi_x = pi_f.value_at_end();
  const auto theta_x = theta_f.value_at_end();
  const auto twist_x = twist_f.value_at_end();
  std::vector<IdentityRow> rows;
  rows.push_back(make_row("i", pi_x, theta_x / lx + step_integral(theta_f, xd, k_theta, K_theta, options)));
  rows.push_back(make_row("ii", theta_x, pi_x * lx - step_integral(pi_f, xd, k_inv, K_inv, options)));
  rows.push_back(make_row("ii-printed", theta_x,
                          pi_x * lx - step_integral(pi_f, xd, k_theta, K_theta, options)));
  rows.push_back(make_row("iii", twist_recip.value(),
                          twist_x / (xd * lx) + step_integral(twist_f, xd, k_twist, K_twist, options)));
  rows.push_back(make_row("iv", recip.value(), pi_x / xd + step_integral(pi_f, xd, k_inv2, K_inv2, options)));
  return rows;
}

VerificationReport pnt_error_scan(std::uint64_t limit, const VerifyOptions& options) {
  const auto start = Clock::now();
  if (limit < 2) throw DomainError("pnt_error_scan needs limit >= 2");
  sieve::check_cap(limit + 1, options.sieve);
  const auto table = sieve::sieve_range(2, limit + 1, options.sieve);

  // Lambda(n) for n <= limit, indexed by n.
  std::vector<double> lambda(limit + 1, 0.0);
  std::vector<std::uint8_t> is_p(limit + 1, 0);
  for (std::uint64_t p : table.primes) {
    is_p[p] = 1;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p;; pk *= p) {
      lambda[pk] = lp;
      if (pk > limit / p) break;
    }
  }

  const double target = 1.0 / (8.0 * std::numbers::pi);
  VerificationReport report;
  report.theorem_id = "pnt-error";
  report.lo = 2;
  report.hi = limit;
  report.samples = limit - 1;
  report.exemption_threshold = options.exemption_threshold;
  report.seed = options.seed;

  struct Run {
    const char* label;
    std::optional<Witness> open;
    double max_ratio = 0.0;
    std::uint64_t max_x = 0;
  };
  Run runs[3] = {{"psi", {}, 0.0, 0}, {"theta", {}, 0.0, 0}, {"pi-li", {}, 0.0, 0}};
  auto close = [&](Run& r) {
    if (r.open) {
      report.failures.push_back(*r.open);
      r.open.reset();
    }
  };
  auto observe = [&](Run& r, std::uint64_t x, double ratio) {
    const bool exempt = x < options.exemption_threshold;
    if (!exempt && ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.max_x = x;
    }
    if (ratio < target) {
      close(r);
      return;
    }
    if (r.open && r.open->exempt != exempt) close(r);
    if (!r.open) {
      Witness w;
      w.label = r.label;
      w.x = x;
      w.pass = false;
      w.exempt = exempt;
      r.open = w;
    }
    r.open->y = x - r.open->x + 1;
    r.open->margin = std::max(r.open->margin, ratio);
  };

  // Quadrature nodes for the unit steps of li.
  static constexpr double gl_x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                     0.5384693101056831, 0.9061798459386640};
  static constexpr double gl_w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                     0.4786286704993665, 0.2369268850561891};
  CompensatedSum li_acc(li(2.0, LiVariant::principal_value));
  CompensatedSum psi_acc, theta_acc;
  std::uint64_t pi_count = 0;

  // Sign tracking of psi(x) - x.
  std::vector<double> changes;
  int sign = 0;
  auto track = [&](double at, double d) {
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s != 0 && sign != 0 && s != sign) changes.push_back(at);
    if (s != 0) sign = s;
  };

  for (std::uint64_t n = 2; n <= limit; ++n) {
    const double x = static_cast<double>(n);
    if (n > 2) {
      CompensatedSum step;
      for (int k = 0; k < 5; ++k) step.add(0.5 * gl_w[k] / std::log(x - 0.5 + 0.5 * gl_x[k]));
      li_acc.merge(step);
    }
    const double psi_before = psi_acc.value();
    const double theta_before = theta_acc.value();
    const double pi_before = static_cast<double>(pi_count);
    if (lambda[n] > 0.0) psi_acc.add(lambda[n]);
    if (is_p[n]) {
      theta_acc.add(lambda[n]);
      ++pi_count;
    }
    const double lx = std::log(x);
    const double s2 = std::sqrt(x) * lx * lx;
    const double s1 = std::sqrt(x) * lx;
    const double li_x = li_acc.value();
    const double psi_x = psi_acc.value();
    const double theta_x = theta_acc.value();
    const double pi_x = static_cast<double>(pi_count);
    observe(runs[0], n, std::max(std::fabs(psi_before - x), std::fabs(psi_x - x)) / s2);
    observe(runs[1], n, std::max(std::fabs(theta_before - x), std::fabs(theta_x - x)) / s2);
    observe(runs[2], n, std::max(std::fabs(pi_before - li_x), std::fabs(pi_x - li_x)) / s1);

    track(x, psi_before - x);
    track(x, psi_x - x);
  }
  for (auto& r : runs) close(r);
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Witness& a, const Witness& b) { return a.x < b.x; });

  if (runs[0].max_x) {
    Witness w;
    w.label = "psi";
    w.x = runs[0].max_x;
    w.margin = runs[0].max_ratio;
    w.pass = runs[0].max_ratio < target;
    report.extremal = w;
  }
  report.metrics["target"] = target;
  report.metrics["max_ratio_psi"] = runs[0].max_ratio;
  report.metrics["max_ratio_psi_at"] = static_cast<double>(runs[0].max_x);
  report.metrics["max_ratio_theta"] = runs[1].max_ratio;
  report.metrics["max_ratio_theta_at"] = static_cast<double>(runs[1].max_x);
  report.metrics["max_ratio_pi_li"] = runs[2].max_ratio;
  report.metrics["max_ratio_pi_li_at"] = static_cast<double>(runs[2].max_x);
  report.metrics["sign_changes"] = static_cast<double>(changes.size());

  std::size_t windows = 0, covered = 0;
  for (double w = 2.0; w * 2.02 <= static_cast<double>(limit); w *= 2.02) {
    ++windows;
    const auto it = std::lower_bound(changes.begin(), changes.end(), w);
    if (it != changes.end() && *it <= w * 2.02) ++covered;
  }
  report.metrics["windows"] = static_cast<double>(windows);
  report.metrics["windows_with_sign_change"] = static_cast<double>(covered);
  report.runtime_seconds = seconds_since(start);
  return report;
}

}  // namespace primelab
