#include "rbperm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace rbperm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

void require_theta(double theta) {
  require(theta > 0.0 && std::isfinite(theta), "theta must be positive");
}

// Asymptotic tail of Psi, valid for x >= 10: log x - 1/(2x) - sum of
// Bernoulli terms. The last kept term at x = 10 is ~5e-17 relative.
double digamma_tail(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  static const double coef[] = {
      1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,       -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
  };
  double p = inv2;
  for (double c : coef) {
    series += c * p;
    p *= inv2;
  }
  return std::log(x) - 0.5 * inv - series;
}

}  // namespace

double digamma(double x) {
  require(x > 0.0 && std::isfinite(x), "digamma needs x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_tail(x);
}

double digamma_diff(double x, double d) {
  require(x > 0.0 && std::isfinite(x), "digamma_diff needs x > 0");
  require(d > 0.0 && std::isfinite(d), "digamma_diff needs d > 0");
  // Shift x upward; each shift term d/((x+i)(x+i+d)) is positive, so the sum
  // never cancels.
  double acc = 0.0;
  while (x < 10.0) {
    acc += d / (x * (x + d));
    x += 1.0;
  }
  const double y = x + d;
  // Difference of the asymptotic tails with every term written as a stable
  // difference: log(y/x) = log1p(d/x), 1/(2x) - 1/(2y) = d/(2xy), and the
  // Bernoulli corrections via (1/x^{2k} - 1/y^{2k}) factors.
  double total = std::log1p(d / x) + d / (2.0 * x * y);
  const double ix2 = 1.0 / (x * x), iy2 = 1.0 / (y * y);
  static const double coef[] = {
      1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,       -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
  };
  double px = ix2, py = iy2;
  for (double c : coef) {
    total += c * (px - py);
    px *= ix2;
    py *= iy2;
  }
  return acc + total;
}

double log_rising_factorial(double x, std::int64_t n) {
  require(x > 0.0 && std::isfinite(x), "rising factorial needs x > 0");
  require(n >= 0, "rising factorial needs n >= 0");
  if (n == 0) return 0.0;
  return std::lgamma(x + static_cast<double>(n)) - std::lgamma(x);
}

double prob_record_at(double theta, std::int64_t i) {
  require_theta(theta);
  require(i >= 1, "position must be >= 1");
  return theta / (theta + static_cast<double>(i - 1));
}

double prob_descent_at(double theta, std::int64_t i) {
  require_theta(theta);
  require(i >= 2, "descents live at positions >= 2");
  const double im1 = static_cast<double>(i - 1);
  const double im2 = static_cast<double>(i - 2);
  return im1 * (2.0 * theta + im2) /
         (2.0 * (theta + im1) * (theta + im2));
}

double prob_invj(double theta, std::int64_t j, std::int64_t k) {
  require_theta(theta);
  require(j >= 1, "column index must be >= 1");
  require(k >= 0 && k <= j - 1, "k must lie in [0, j-1]");
  const double denom = theta + static_cast<double>(j - 1);
  return (k == 0) ? theta / denom : 1.0 / denom;
}

double prob_first_value(double theta, std::int64_t n, std::int64_t k) {
  require_theta(theta);
  require(n >= 1, "n must be >= 1");
  require(k >= 1 && k <= n, "k must lie in [1, n]");
  const double logp = std::lgamma(static_cast<double>(n)) +
                      log_rising_factorial(theta, n - k) + std::log(theta) -
                      std::lgamma(static_cast<double>(n - k) + 1.0) -
                      log_rising_factorial(theta, n);
  return std::exp(logp);
}

double prob_lmax(double theta, std::int64_t n, std::int64_t i,
                 std::int64_t j) {
  require_theta(theta);
  require(n >= 1 && i >= 1 && i <= n && j >= 1 && j <= n,
          "positions must lie in [1, n]");
  if (j < i) return 0.0;
  auto lfact = [](std::int64_t m) {
    return std::lgamma(static_cast<double>(m) + 1.0);
  };
  // (i/j) C(j,i) C(n-i, j-i) (j-i)! = j!/(i-1)! * (n-i)!/((j-i)! (n-j)!) / j
  const double logp =
      log_rising_factorial(theta, i) + log_rising_factorial(theta, n - j) -
      log_rising_factorial(theta, n) + std::log(static_cast<double>(i)) -
      std::log(static_cast<double>(j)) + lfact(j) - lfact(i) - lfact(j - i) +
      lfact(n - i) - lfact(n - j);
  return std::exp(logp);
}

double expected_value(StatisticId stat, double theta, std::int64_t n) {
  require_theta(theta);
  require(n >= 1, "n must be >= 1");
  const double nd = static_cast<double>(n);
  switch (stat) {
    case StatisticId::Records:
      return theta * digamma_diff(theta, nd);
    case StatisticId::Descents:
      return nd * (nd - 1.0) / (2.0 * (theta + nd - 1.0));
    case StatisticId::Inversions:
      return nd * (nd + 1.0 - 2.0 * theta) / 4.0 +
             theta * (theta - 1.0) / 2.0 * digamma_diff(theta, nd);
    case StatisticId::FirstValue:
      return (theta + nd) / (theta + 1.0);
  }
  throw DomainError("unknown statistic");
}

double variance_invj(double theta, std::int64_t j) {
  require_theta(theta);
  require(j >= 1, "column index must be >= 1");
  const double jd = static_cast<double>(j);
  const double denom = theta + jd - 1.0;
  return jd * (jd - 1.0) *
         (jd * jd + (4.0 * theta - 3.0) * jd + 2.0 - 2.0 * theta) /
         (12.0 * denom * denom);
}

double variance_inversions(double theta, std::int64_t n) {
  require(n >= 1, "n must be >= 1");
  double total = 0.0;
  for (std::int64_t j = 1; j <= n; ++j) total += variance_invj(theta, j);
  return total;
}

std::vector<double> exact_pmf_records(double theta, std::int64_t n,
                                      std::int64_t max_n) {
  require_theta(theta);
  require(n >= 1, "n must be >= 1");
  if (n > max_n)
    throw SupportTooLarge("records pmf capped at n = " +
                          std::to_string(max_n));
  std::vector<double> pmf(static_cast<size_t>(n) + 1, 0.0);
  pmf[0] = 1.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const double p = theta / (theta + static_cast<double>(i - 1));
    for (std::int64_t k = i; k >= 1; --k)
      pmf[static_cast<size_t>(k)] = pmf[static_cast<size_t>(k)] * (1.0 - p) +
                                    pmf[static_cast<size_t>(k) - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

std::vector<double> exact_pmf_inversions(double theta, std::int64_t n,
                                         std::int64_t max_n) {
  require_theta(theta);
  require(n >= 1, "n must be >= 1");
  if (n > max_n)
    throw SupportTooLarge("inversions pmf capped at n = " +
                          std::to_string(max_n));
  std::vector<double> pmf{1.0};
  std::vector<double> prefix;
  for (std::int64_t j = 2; j <= n; ++j) {
    const double denom = theta + static_cast<double>(j - 1);
    const std::int64_t old_size = static_cast<std::int64_t>(pmf.size());
    const std::int64_t new_size = old_size + j - 1;
    prefix.assign(static_cast<size_t>(old_size) + 1, 0.0);
    for (std::int64_t k = 0; k < old_size; ++k)
      prefix[static_cast<size_t>(k) + 1] =
          prefix[static_cast<size_t>(k)] + pmf[static_cast<size_t>(k)];
    std::vector<double> next(static_cast<size_t>(new_size), 0.0);
    for (std::int64_t k = 0; k < new_size; ++k) {
      const double spike =
          (k < old_size) ? theta * pmf[static_cast<size_t>(k)] : 0.0;
      // window sum of pmf over [k-j+1, k-1]
      const std::int64_t lo = std::max<std::int64_t>(0, k - j + 1);
      const std::int64_t hi = std::min<std::int64_t>(old_size, k);
      const double window = (hi > lo) ? prefix[static_cast<size_t>(hi)] -
                                            prefix[static_cast<size_t>(lo)]
                                      : 0.0;
      next[static_cast<size_t>(k)] = (spike + window) / denom;
    }
    pmf = std::move(next);
  }
  return pmf;
}

std::vector<double> eulerian_numbers(int r) {
  require(r >= 1, "r must be >= 1");
  std::vector<double> a{1.0};
  for (int m = 2; m <= r; ++m) {
    std::vector<double> b(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
      const double left = (i < m - 1) ? a[static_cast<size_t>(i)] : 0.0;
      const double up = (i > 0) ? a[static_cast<size_t>(i) - 1] : 0.0;
      b[static_cast<size_t>(i)] =
          static_cast<double>(i + 1) * left + static_cast<double>(m - i) * up;
    }
    a = std::move(b);
  }
  return a;
}

double first_value_moment(double theta, std::int64_t n, int r) {
  require_theta(theta);
  require(r >= 1 && r <= n - 1, "need 1 <= r <= n-1");
  const std::vector<double> a = eulerian_numbers(r);
  const double common = std::lgamma(static_cast<double>(n)) +
                        std::log(theta) - log_rising_factorial(theta, n);
  double top = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<size_t>(r));
  for (int j = 1; j <= r; ++j) {
    const double lt = std::log(a[static_cast<size_t>(j) - 1]) +
                      log_rising_factorial(theta + r + 1.0, n - j) -
                      std::lgamma(static_cast<double>(n - j) + 1.0);
    logs[static_cast<size_t>(j) - 1] = lt;
    top = std::max(top, lt);
  }
  double sum = 0.0;
  for (double lt : logs) sum += std::exp(lt - top);
  return std::exp(common + top) * sum;
}

double asymptotic_expectation(StatisticId stat, const Regime& regime,
                              std::int64_t n) {
  require(n >= 2, "asymptotics need n >= 2");
  const double nd = static_cast<double>(n);
  const double logn = std::log(nd);
  struct Visitor {
    StatisticId stat;
    double nd, logn;
    double operator()(const Regime::Uniform&) const {
      switch (stat) {
        case StatisticId::Records:
          return logn;
        case StatisticId::Descents:
          return nd / 2.0;
        case StatisticId::Inversions:
          return nd * nd / 4.0;
        case StatisticId::FirstValue:
          return nd / 2.0;
      }
      throw UnsupportedCell("no table entry");
    }
    double operator()(const Regime::FixedTheta& m) const {
      if (!(m.theta > 0.0)) throw DomainError("theta must be positive");
      switch (stat) {
        case StatisticId::Records:
          return m.theta * logn;
        case StatisticId::Descents:
          return nd / 2.0;
        case StatisticId::Inversions:
          return nd * nd / 4.0;
        case StatisticId::FirstValue:
          return nd / (m.theta + 1.0);
      }
      throw UnsupportedCell("no table entry");
    }
    double operator()(const Regime::Sublinear& m) const {
      if (!(m.epsilon > 0.0 && m.epsilon < 1.0))
        throw DomainError("need 0 < epsilon < 1");
      switch (stat) {
        case StatisticId::Records:
          return (1.0 - m.epsilon) * std::pow(nd, m.epsilon) * logn;
        case StatisticId::Descents:
          return nd / 2.0;
        case StatisticId::Inversions:
          return nd * nd / 4.0;
        case StatisticId::FirstValue:
          return std::pow(nd, 1.0 - m.epsilon);
      }
      throw UnsupportedCell("no table entry");
    }
    double operator()(const Regime::Linear& m) const {
      if (!(m.lambda > 0.0)) throw DomainError("need lambda > 0");
      const double l = m.lambda;
      switch (stat) {
        case StatisticId::Records:
          return l * std::log1p(1.0 / l) * nd;
        case StatisticId::Descents:
          return nd / (2.0 * (l + 1.0));
        case StatisticId::Inversions: {
          const double f = 1.0 - 2.0 * l + 2.0 * l * l * std::log1p(1.0 / l);
          return nd * nd * f / 4.0;
        }
        case StatisticId::FirstValue:
          return (l + 1.0) / l;
      }
      throw UnsupportedCell("no table entry");
    }
    double operator()(const Regime::Superlinear& m) const {
      if (!(m.delta > 1.0)) throw DomainError("need delta > 1");
      switch (stat) {
        case StatisticId::Records:
          return nd;
        case StatisticId::Descents:
          return std::pow(nd, 2.0 - m.delta) / 2.0;
        case StatisticId::Inversions:
          return std::pow(nd, 3.0 - m.delta) / 6.0;
        case StatisticId::FirstValue:
          return 1.0;
      }
      throw UnsupportedCell("no table entry");
    }
  };
  return std::visit(Visitor{stat, nd, logn}, regime.id);
}

double reference_cdf(const ReferenceDistribution& d, double x) {
  struct Visitor {
    double x;
    double operator()(const ReferenceDistribution::StandardNormal&) const {
      return 0.5 * std::erfc(-x / std::sqrt(2.0));
    }
    double operator()(const ReferenceDistribution::BetaOneTheta& b) const {
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return 1.0 - std::pow(1.0 - x, b.theta);
    }
  };
  return std::visit(Visitor{x}, d.id);
}

}  // namespace rbperm
