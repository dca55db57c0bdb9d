#ifndef RBPERM_ANALYTIC_HPP
#define RBPERM_ANALYTIC_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "rbperm/errors.hpp"

namespace rbperm {

enum class StatisticId { Records, Descents, Inversions, FirstValue };

/// Asymptotic regimes for theta as a function of n.
struct Regime {
  struct Uniform {};
  struct FixedTheta {
    double theta;
  };
  struct Sublinear {
    double epsilon;  // theta = n^epsilon, 0 < epsilon < 1
  };
  struct Linear {
    double lambda;  // theta = lambda * n
  };
  struct Superlinear {
    double delta;  // theta = n^delta, delta > 1
  };
  std::variant<Uniform, FixedTheta, Sublinear, Linear, Superlinear> id;
};

/// Psi(x) = Gamma'(x)/Gamma(x); relative error <= 1e-12 for x >= 1e-3.
double digamma(double x);

/// Psi(x + d) - Psi(x) for d > 0, computed without the cancellation that a
/// naive difference suffers when d << x.
double digamma_diff(double x, double d);

/// log of the rising factorial x^(n) = x(x+1)...(x+n-1); n = 0 gives 0.
double log_rising_factorial(double x, std::int64_t n);

/// P(record at position i) = theta / (theta + i - 1).
double prob_record_at(double theta, std::int64_t i);

/// P(descent at position i), i >= 2:
/// (i-1)(2 theta + i - 2) / (2 (theta+i-1)(theta+i-2)).
double prob_descent_at(double theta, std::int64_t i);

/// P(inv_j = k): theta/(theta+j-1) for k = 0, else 1/(theta+j-1).
double prob_invj(double theta, std::int64_t j, std::int64_t k);

/// P(sigma(1) = k) = (n-1)! theta^(n-k) theta / ((n-k)! theta^(n)).
double prob_first_value(double theta, std::int64_t n, std::int64_t k);

/// P(lmax(sigma, i) = j); zero for j < i.
double prob_lmax(double theta, std::int64_t n, std::int64_t i, std::int64_t j);

/// Exact expectation of the statistic under the record-biased law.
double expected_value(StatisticId stat, double theta, std::int64_t n);

double variance_invj(double theta, std::int64_t j);

/// Sum of the per-column variances (the inv_j are independent).
double variance_inversions(double theta, std::int64_t n);

/// pmf of the record count; entry k is P(rec = k), k = 0..n. Computed as
/// the coefficients of prod_i (1 - p_i + p_i z) with p_i = theta/(theta+i-1).
std::vector<double> exact_pmf_records(double theta, std::int64_t n,
                                      std::int64_t max_n = 20000);

/// pmf of the inversion count on 0..n(n-1)/2, the convolution of the per-j
/// laws. O(n^3) work overall, hence the configurable cap.
std::vector<double> exact_pmf_inversions(double theta, std::int64_t n,
                                         std::int64_t max_n = 2000);

/// Eulerian numbers a_{r,0..r-1}; a_{r,i} counts size-r permutations with i
/// descents. Exact in doubles up to r = 18.
std::vector<double> eulerian_numbers(int r);

/// Exact r-th moment of sigma(1), 1 <= r <= n-1.
double first_value_moment(double theta, std::int64_t n, int r);

/// The asymptotic equivalent of E[stat] in the given regime at size n.
double asymptotic_expectation(StatisticId stat, const Regime& regime,
                              std::int64_t n);

struct ReferenceDistribution {
  struct StandardNormal {};
  struct BetaOneTheta {
    double theta;
  };
  std::variant<StandardNormal, BetaOneTheta> id;

  static ReferenceDistribution standard_normal() {
    return {StandardNormal{}};
  }
  static ReferenceDistribution beta_one_theta(double theta) {
    return {BetaOneTheta{theta}};
  }
};

/// Phi(x) for the normal; clamp(1 - (1-x)^theta) on [0,1] for Beta(1, theta).
double reference_cdf(const ReferenceDistribution& d, double x);

}  // namespace rbperm

#endif
