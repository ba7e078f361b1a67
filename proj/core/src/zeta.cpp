#include "primelab/zeta.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "primelab/bernoulli.hpp"
#include "primelab/error.hpp"
#include "primelab/gamma.hpp"

namespace primelab {

namespace {

using std::numbers::pi;

// w_k = sum_{n=k}^{N-1} C(n,k) / 2^{n+1} = P(Binomial(N, 1/2) >= k+1).
// Built row by row from Pascal's rule; only positive terms are ever added.
std::vector<double> build_hasse_weights(unsigned levels) {
  std::vector<double> weights(levels, 0.0);
  std::vector<double> row{0.5};  // C(0,0) / 2
  for (unsigned n = 0; n < levels; ++n) {
    for (unsigned k = 0; k <= n; ++k) weights[k] += row[k];
    std::vector<double> next(n + 2);
    next[0] = row[0] * 0.5;
    for (unsigned k = 1; k <= n; ++k) next[k] = (row[k] + row[k - 1]) * 0.5;
    next[n + 1] = row[n] * 0.5;
    row = std::move(next);
  }
  return weights;
}

const std::vector<double>& hasse_weights(unsigned levels) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const std::vector<double>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[levels];
  if (!slot) slot = std::make_shared<const std::vector<double>>(build_hasse_weights(levels));
  return *slot;
}

Complex eta_factor(Complex s) { return 1.0 - std::exp((1.0 - s) * std::log(2.0)); }

// n^{-s}
Complex inverse_power(double n, Complex s) {
  const double ln = std::log(n);
  const double mag = std::exp(-s.real() * ln);
  const double phase = -s.imag() * ln;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace

unsigned hasse_levels(double t) {
  return std::max(64u, 40u + static_cast<unsigned>(std::ceil(2.5 * std::fabs(t))));
}

bool near_eta_singularity(ComplexPoint s) { return std::abs(eta_factor(s.value())) < 1e-6; }

Complex zeta_alternating(ComplexPoint sp) {
  const Complex s = sp.value();
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta has a pole at s = 1");
  if (s.real() <= 0.0) throw DomainError("zeta_alternating requires Re(s) > 0");
  const unsigned levels = hasse_levels(s.imag());
  const auto& w = hasse_weights(levels);
  Complex acc{0.0, 0.0};
  for (unsigned k = 0; k < levels; ++k) {
    const Complex term = w[k] * inverse_power(static_cast<double>(k + 1), s);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc / eta_factor(s);
}

namespace {

Complex euler_maclaurin_direct(Complex s, unsigned order) {
  // Bernoulli coefficients B_{2j} / (2j)!.
  std::vector<double> coef;
  mpz_class fact = 1;
  for (unsigned j = 1; j <= order / 2 + 1; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    coef.push_back(mpq_class(bernoulli_number(2 * j) / fact).get_d());
  }
  // Size of the first omitted term decides the cutoff N.
  auto rising = [&](unsigned len) {
    Complex r{1.0, 0.0};
    for (unsigned i = 0; i < len; ++i) r *= s + static_cast<double>(i);
    return r;
  };
  const double next_rising = std::abs(rising(order + 1));
  const double next_coef = std::fabs(coef.back());
  double n_cut = 1.0;
  while (n_cut < 1e6) {
    const double bound = next_coef * next_rising *
                         std::pow(n_cut, -(s.real() + static_cast<double>(order) + 1.0));
    if (bound < 1e-17) break;
    n_cut = std::ceil(n_cut * 1.25 + 1.0);
  }
  const double big_n = n_cut;
  Complex total{0.0, 0.0};
  for (double n = 1.0; n < big_n; n += 1.0) total += inverse_power(n, s);
  const Complex n_pow = inverse_power(big_n, s);  // N^{-s}
  total += big_n * n_pow / (s - 1.0);
  total += 0.5 * n_pow;
  Complex ratio = s * n_pow / big_n;  // s N^{-s-1}
  for (unsigned j = 1; j <= order / 2; ++j) {
    total += coef[j - 1] * ratio;
    // advance to (s)_{2j+1} N^{-s-2j-1}
    ratio *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j)) /
             (big_n * big_n);
  }
  return total;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

}  // namespace

Complex zeta_euler_maclaurin(ComplexPoint sp, unsigned order) {
  const Complex s = sp.value();
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta has a pole at s = 1");
  if (order < 2 || order % 2 != 0) throw DomainError("Euler-Maclaurin order must be even, >= 2");
  if (s.real() <= 1.0 - static_cast<double>(order)) {
    throw DomainError("insufficient Euler-Maclaurin order for Re(s) = " +
                      std::to_string(s.real()));
  }
  // Left of the critical strip the head sum grows like N^{1-Re s} and cancels
  // badly, so go through the functional equation. At non-positive integers
  // the expansion terminates and the direct form is exact.
  if (s.real() < 0.0 && !is_nonpositive_integer(s)) {
    const Complex w = 1.0 - s;
    const Complex factor =
        std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(w)) * std::sin(pi * s / 2.0);
    return factor * euler_maclaurin_direct(w, order);
  }
  return euler_maclaurin_direct(s, order);
}

double riemann_siegel_theta(double t) {
  if (!(t >= 10.0)) throw DomainError("riemann_siegel_theta requires t >= 10");
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  return 0.5 * t * std::log(t / (2.0 * pi)) - 0.5 * t - pi / 8.0 +
         inv * (1.0 / 48.0 +
                inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0))));
}

Complex hardy_z_complex(double t) {
  const double th = riemann_siegel_theta(t);
  return Complex{std::cos(th), std::sin(th)} * zeta_alternating({0.5, t});
}

double hardy_z(double t) { return hardy_z_complex(t).real(); }

namespace {

double theta_derivative(double t) { return 0.5 * std::log(t / (2.0 * pi)) - 1.0 / (48.0 * t * t); }

}  // namespace

double gram_point(std::int64_t n) {
  if (n < 0) throw DomainError("gram_point requires n >= 0 (g_{-1} lies below t = 10)");
  const double target = static_cast<double>(n) * pi;
  double lo = 10.0;
  double hi = 20.0;
  while (riemann_siegel_theta(hi) < target) {
    lo = hi;
    hi *= 2.0;
  }
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = riemann_siegel_theta(t) - target;
    if (f < 0.0)
      lo = t;
    else
      hi = t;
    double next = t - f / theta_derivative(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - t) <= 1e-15 * t || hi - lo <= 1e-15 * t) return next;
    t = next;
  }
  return t;
}

namespace {

struct Block {
  std::vector<double> nodes;  // ascending boundaries of the Gram intervals in the block
  std::size_t expected = 0;
};

// Sign changes of Z over the sampled nodes, each as a bracketing pair.
std::vector<std::pair<double, double>> sign_changes(const std::vector<double>& nodes,
                                                    unsigned density) {
  std::vector<double> grid;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i];
    const double b = nodes[i + 1];
    for (unsigned j = 0; j < density; ++j)
      grid.push_back(a + (b - a) * static_cast<double>(j) / density);
  }
  grid.push_back(nodes.back());
  std::vector<std::pair<double, double>> out;
  double prev_t = grid.front();
  double prev_z = hardy_z(prev_t);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double z = hardy_z(grid[i]);
    if ((prev_z < 0.0 && z > 0.0) || (prev_z > 0.0 && z < 0.0)) out.emplace_back(prev_t, grid[i]);
    prev_t = grid[i];
    prev_z = z;
  }
  return out;
}

ZetaZero bisect(double a, double b, double tolerance) {
  double za = hardy_z(a);
  while (0.5 * (b - a) > tolerance) {
    const double m = 0.5 * (a + b);
    const double zm = hardy_z(m);
    if (zm == 0.0) return {0, m, 0.0};
    if ((za < 0.0) == (zm < 0.0)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return {0, 0.5 * (a + b), 0.5 * (b - a)};
}

}  // namespace

std::vector<ZetaZero> find_zeros(double t_max, Parallelism par, double tolerance,
                                 ZeroScanStats* stats) {
  if (!(t_max >= 10.0 && t_max <= kZeroScanMax))
    throw DomainError("find_zeros requires 10 <= t_max <= 500");
  // No zero lies below the first Gram point's predecessor region t < 14, so
  // the scan opens at t = 10 with the zero of [g_{-1}, g_0] still ahead.
  // A Gram point g_n is good when (-1)^n Z(g_n) > 0; between consecutive good
  // points g_a < g_b there are exactly b - a zeros throughout this range.
  std::vector<double> gram;
  std::vector<bool> good;
  ZeroScanStats local;
  for (std::int64_t n = 0;; ++n) {
    const double g = gram_point(n);
    const double z = hardy_z(g);
    const bool is_good = (n % 2 == 0) ? z > 0.0 : z < 0.0;
    gram.push_back(g);
    good.push_back(is_good);
    if (!is_good) ++local.bad_gram_points;
    if (g > t_max && is_good) break;
    if (n > 100000) throw Error("find_zeros: no good Gram point found");
  }
  local.gram_intervals = gram.size();

  std::vector<Block> blocks;
  Block current{{10.0}, 0};
  std::size_t zeros_before = 0;  // zeros below the current block's left edge
  for (std::size_t n = 0; n < gram.size(); ++n) {
    current.nodes.push_back(gram[n]);
    if (good[n]) {
      current.expected = (n + 1) - zeros_before;
      zeros_before = n + 1;
      blocks.push_back(std::move(current));
      current = Block{{gram[n]}, 0};
    }
  }

  std::vector<std::vector<ZetaZero>> found(blocks.size());
  std::vector<unsigned> refined(blocks.size(), 0);
  parallel_for(blocks.size(), par, [&](std::size_t i) {
    const Block& block = blocks[i];
    unsigned density = 1;
    auto changes = sign_changes(block.nodes, density);
    for (int round = 0; round < 3 && changes.size() < block.expected; ++round) {
      density *= 10;
      changes = sign_changes(block.nodes, density);
      refined[i] = 1;
    }
    if (changes.size() != block.expected) {
      throw Error("unresolved Gram block [" + std::to_string(block.nodes.front()) + ", " +
                  std::to_string(block.nodes.back()) + "]: expected " +
                  std::to_string(block.expected) + " zeros, found " +
                  std::to_string(changes.size()));
    }
    for (const auto& [a, b] : changes) found[i].push_back(bisect(a, b, tolerance));
  });

  std::vector<ZetaZero> zeros;
  for (std::size_t i = 0; i < found.size(); ++i) {
    local.refined_blocks += refined[i];
    for (const auto& z : found[i]) {
      if (z.t <= t_max) zeros.push_back(z);
    }
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].index = i + 1;
  if (stats != nullptr) *stats = local;
  return zeros;
}

double zero_count_main_term(double T, bool include_constant) {
  if (!(T > 2.0 * pi)) throw DomainError("zero_count_main_term requires T > 2 pi");
  const double u = T / (2.0 * pi);
  return u * std::log(u) - u + (include_constant ? 7.0 / 8.0 : 0.0);
}

double jacobi_theta(double t) {
  if (!(t > 0.0)) throw DomainError("jacobi_theta requires t > 0");
  double sum = 1.0;
  for (double n = 1.0;; n += 1.0) {
    const double term = std::exp(-pi * n * n * t);
    sum += 2.0 * term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

std::string export_zeros(const std::vector<ZetaZero>& zeros) {
  std::string out;
  char buf[64];
  for (const auto& z : zeros) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, z.t, std::chars_format::fixed, 12);
    out.append(buf, end);
    out.push_back('\n');
  }
  return out;
}

}  // namespace primelab
