#ifndef RBPERM_ORACLE_HPP
#define RBPERM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rbperm/analytic.hpp"
#include "rbperm/permutation.hpp"
#include "rbperm/samplers.hpp"

namespace rbperm {

/// Exact law over permutations, keyed by word.
using PermLaw = std::map<std::vector<int>, double>;

/// Exact (or empirical) law over integer statistic values.
using StatLaw = std::map<std::int64_t, double>;

enum class WeightStat { Records, Cycles };

/// Enumerates all of S_n and normalizes theta^stat weights. 1 <= n <= 8.
PermLaw exact_distribution(std::int64_t n, double theta, WeightStat weight);

/// Marginal pmf of a statistic under the record-biased law, via enumeration.
StatLaw exact_statistic_pmf(std::int64_t n, double theta, StatisticId stat);

/// Runs the production sampler over every branch of its decision tree with
/// scripted choices and accumulates the exact per-permutation probability.
/// 1 <= n <= 6.
PermLaw sampler_tree_law(SamplerKind kind, std::int64_t n, double theta);

/// (1/2) sum |a - b|, missing outcomes counted as 0.
double tv_distance(const PermLaw& a, const PermLaw& b);
double tv_distance(const StatLaw& a, const StatLaw& b);

/// Normalized frequencies of the statistic over a nonempty sample set.
StatLaw empirical_histogram(const std::vector<Permutation>& samples,
                            StatisticId stat);

/// Two-sided Kolmogorov-Smirnov statistic against a reference CDF.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);
double ks_statistic(const std::vector<double>& samples,
                    const ReferenceDistribution& ref);

}  // namespace rbperm

#endif
