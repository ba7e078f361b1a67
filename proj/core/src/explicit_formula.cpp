#include "primelab/explicit_formula.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "primelab/arith.hpp"
#include "primelab/error.hpp"
#include "primelab/report.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(out);
}

void check_T(const ZeroBank& bank, double T) {
  if (T < 0.0) throw DomainError("truncation height must be non-negative");
  if (T > bank.height)
    throw Error("truncation height " + format_double(T) + " exceeds the zero bank height " +
                format_double(bank.height) + " (" + bank.source + ")");
}

}  // namespace

ZeroBank builtin_zero_bank() {
  return {{14.1347251417346, 21.0220396387715, 25.0108575801456, 30.4248761258595,
           32.9350615877391, 37.5861781588256, 40.9187190121474, 43.3270732809149,
           48.0051508811671, 49.7738324776723},
          50.0,
          "builtin"};
}

ZeroBank parse_zero_bank(std::string_view text, std::string source) {
  ZeroBank bank;
  bank.source = std::move(source);
  bool explicit_height = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      constexpr std::string_view key = "height:";
      if (body.substr(0, key.size()) == key) {
        double h = 0.0;
        if (!parse_number(trim(body.substr(key.size())), h) || h < 0.0)
          throw ParseError("invalid height declaration", line_no);
        bank.height = h;
        explicit_height = true;
      }
      continue;
    }
    double t = 0.0;
    if (!parse_number(line, t)) throw ParseError("not a decimal number: '" + std::string(line) + "'", line_no);
    if (t <= 0.0) throw ParseError("zero ordinates must be positive", line_no);
    if (!bank.zeros.empty() && t <= bank.zeros.back())
      throw ParseError("zeros are not strictly ascending", line_no);
    bank.zeros.push_back(t);
  }
  if (!explicit_height) bank.height = bank.zeros.empty() ? 0.0 : bank.zeros.back();
  else if (!bank.zeros.empty() && bank.zeros.back() > bank.height)
    throw ParseError("declared height is below the largest zero", line_no);
  return bank;
}

ZeroBank load_zeros(std::string_view source) {
  if (source == "builtin") return builtin_zero_bank();
  std::ifstream in{std::string(source), std::ios::binary};
  if (!in) throw Error("cannot open zero file '" + std::string(source) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_zero_bank(buf.str(), std::string(source));
}

ZeroBank bank_from_zeros(const std::vector<ZetaZero>& zeros, double height, std::string source) {
  ZeroBank bank;
  bank.source = std::move(source);
  bank.height = height;
  for (const auto& z : zeros) bank.zeros.push_back(z.t);
  return bank;
}

std::string export_zero_bank(const ZeroBank& bank) {
  std::string out = "# height: " + format_double(bank.height) + "\n";
  for (double t : bank.zeros) out += format_fixed(t, 12) + "\n";
  return out;
}

double zero_sum(double x, const ZeroBank& bank, double T) {
  check_T(bank, T);
  const double lx = std::log(x);
  const double sx = std::sqrt(x);
  CompensatedSum sum;
  for (double t : bank.zeros) {
    if (t > T) break;
    const std::complex<double> term = std::polar(sx, t * lx) / std::complex<double>(0.5, t);
    sum.add(2.0 * term.real());
  }
  return sum.value();
}

std::complex<double> zero_sum_unfolded(double x, const ZeroBank& bank, double T) {
  check_T(bank, T);
  const double lx = std::log(x);
  const double sx = std::sqrt(x);
  CompensatedComplexSum sum;
  for (double t : bank.zeros) {
    if (t > T) break;
    sum.add(std::polar(sx, t * lx) / std::complex<double>(0.5, t));
    sum.add(std::polar(sx, -t * lx) / std::complex<double>(0.5, -t));
  }
  return sum.value();
}

double psi_explicit(double x, const ZeroBank& bank, double T) {
  if (!(x >= 2.0)) throw DomainError("psi_explicit requires x >= 2");
  const double zeros = zero_sum(x, bank, T);
  return x - zeros - std::log(2.0 * std::numbers::pi) - 0.5 * std::log1p(-1.0 / (x * x));
}

bool is_prime_power_point(double x) {
  if (!(x >= 2.0) || x != std::floor(x) || x > 1.8e19) return false;
  return von_mangoldt(static_cast<std::uint64_t>(x)) > 0.0;
}

std::vector<ExplicitResult> residual_scan(std::span<const double> x_grid, const ZeroBank& bank,
                                          double T, const SieveConfig& config, Parallelism par) {
  if (!(T > 0.0)) throw DomainError("residual scan needs T > 0");
  check_T(bank, T);
  std::vector<ExplicitResult> out(x_grid.size());
  SieveConfig inner = config;
  if (par.threads > 1) inner.parallelism = {};
  parallel_for(x_grid.size(), par, [&](std::size_t i) {
    double x = x_grid[i];
    if (x == std::floor(x)) x += 0.5;
    ExplicitResult r;
    r.x = x;
    r.T = T;
    r.psi_estimate = psi_explicit(x, bank, T);
    r.sieve_psi = sieve::chebyshev_psi(static_cast<std::uint64_t>(std::floor(x)), inner);
    r.residual = std::fabs(r.psi_estimate - r.sieve_psi);
    const double l = std::log(T * x);
    r.bound = x / T * l * l;
    out[i] = r;
  });
  return out;
}

std::string residual_csv(const std::vector<ExplicitResult>& results) {
  std::string out = "x,T,psi_explicit,psi_sieve,residual,bound\n";
  for (const auto& r : results) {
    out += format_double(r.x) + ',' + format_double(r.T) + ',' + format_double(r.psi_estimate) +
           ',' + format_double(r.sieve_psi) + ',' + format_double(r.residual) + ',' +
           format_double(r.bound) + '\n';
  }
  return out;
}

double li(double x, LiVariant variant) {
  if (variant == LiVariant::offset_from_2) {
    if (!(x >= 2.0)) throw DomainError("offset li requires x >= 2");
    if (x == 2.0) return 0.0;
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 61>::integrate([](double t) { return 1.0 / std::log(t); }, 2.0,
                                                 x, 20, 1e-13);
  }
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("principal li requires x > 1");
  const double lx = std::log(x);
  CompensatedSum series;
  double term = lx;  // (log x)^n / (n! 2^{n-1}) at n = 1
  double inner = 1.0;
  for (unsigned n = 1; n < 2000; ++n) {
    if (n > 1) {
      term *= lx / (2.0 * n);
      if ((n - 1) % 2 == 0) inner += 1.0 / static_cast<double>(n);
    }
    const double contribution = (n % 2 == 1 ? term : -term) * inner;
    series.add(contribution);
    if (n > lx && std::fabs(contribution) < 1e-18 * std::fabs(series.value())) break;
  }
  return std::numbers::egamma + std::log(lx) + std::sqrt(x) * series.value();
}

}  // namespace primelab
