#include "rbperm/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace rbperm {

namespace {

void check_n(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > cap)
    throw NTooLarge("enumeration capped at n = " + std::to_string(cap));
}

// Replays a fixed script of branch choices through a sampler, multiplying the
// exact probability of the path. Also records the branch arity of every step
// so the caller can enumerate the whole tree.
struct ScriptedChoice {
  const std::vector<std::int64_t>* script = nullptr;  // null: all-zero probe
  std::vector<std::int64_t>* arity_out = nullptr;
  size_t pos = 0;
  double prob = 1.0;

  std::int64_t pick(double theta, std::int64_t m) {
    if (arity_out) arity_out->push_back(m);
    const std::int64_t c = script ? (*script)[pos] : 0;
    ++pos;
    const double md = static_cast<double>(m);
    prob *= (c == 0) ? theta / (theta + md) : 1.0 / (theta + md);
    return c;
  }
};

}  // namespace

PermLaw exact_distribution(std::int64_t n, double theta, WeightStat weight) {
  check_n(n, 8);
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  PermLaw law;
  double total = 0.0;
  do {
    const StatSummary s = statistics(Permutation::from_word(word));
    const auto stat = (weight == WeightStat::Records) ? s.records : s.cycles;
    const double w = std::pow(theta, static_cast<double>(stat));
    law[word] = w;
    total += w;
  } while (std::next_permutation(word.begin(), word.end()));
  for (auto& [_, p] : law) p /= total;
  return law;
}

StatLaw exact_statistic_pmf(std::int64_t n, double theta, StatisticId stat) {
  check_n(n, 8);
  StatLaw pmf;
  for (const auto& [word, p] : exact_distribution(n, theta, WeightStat::Records)) {
    const StatSummary s = statistics(Permutation::unchecked(word));
    std::int64_t value = 0;
    switch (stat) {
      case StatisticId::Records:
        value = s.records;
        break;
      case StatisticId::Descents:
        value = s.descents;
        break;
      case StatisticId::Inversions:
        value = s.inversions;
        break;
      case StatisticId::FirstValue:
        value = s.first_value;
        break;
    }
    pmf[value] += p;
  }
  return pmf;
}

PermLaw sampler_tree_law(SamplerKind kind, std::int64_t n, double theta) {
  check_n(n, 6);
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  const int ni = static_cast<int>(n);

  // Probe run: discover the branch arity of every step. The arities of all
  // four processes depend only on the step index, never on earlier choices.
  std::vector<std::int64_t> arity;
  {
    ScriptedChoice probe{nullptr, &arity};
    sample_with(kind, ni, theta, probe);
  }

  PermLaw law;
  std::vector<std::int64_t> script(arity.size(), 0);
  for (;;) {
    std::vector<std::int64_t> seen;
    ScriptedChoice replay{&script, &seen};
    const Permutation p = sample_with(kind, ni, theta, replay);
    assert(seen == arity);
    law[p.word()] += replay.prob;
    // Odometer over the mixed-radix script space; digit i runs 0..arity[i].
    size_t d = 0;
    while (d < script.size() && script[d] == arity[d]) {
      script[d] = 0;
      ++d;
    }
    if (d == script.size()) break;
    ++script[d];
  }
  return law;
}

namespace {

template <class Law>
double tv_impl(const Law& a, const Law& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += std::abs(ib->second);
      ++ib;
    } else {
      sum += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * sum;
}

}  // namespace

double tv_distance(const PermLaw& a, const PermLaw& b) { return tv_impl(a, b); }
double tv_distance(const StatLaw& a, const StatLaw& b) { return tv_impl(a, b); }

StatLaw empirical_histogram(const std::vector<Permutation>& samples,
                            StatisticId stat) {
  if (samples.empty()) throw EmptyInput("no samples");
  StatLaw hist;
  for (const Permutation& p : samples) {
    const StatSummary s = statistics(p);
    std::int64_t value = 0;
    switch (stat) {
      case StatisticId::Records:
        value = s.records;
        break;
      case StatisticId::Descents:
        value = s.descents;
        break;
      case StatisticId::Inversions:
        value = s.inversions;
        break;
      case StatisticId::FirstValue:
        value = s.first_value;
        break;
    }
    hist[value] += 1.0;
  }
  const double total = static_cast<double>(samples.size());
  for (auto& [_, p] : hist) p /= total;
  return hist;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw EmptyInput("no samples");
  std::sort(samples.begin(), samples.end());
  const double inv_n = 1.0 / static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) * inv_n);
    d = std::max(d, static_cast<double>(i + 1) * inv_n - f);
  }
  return d;
}

double ks_statistic(const std::vector<double>& samples,
                    const ReferenceDistribution& ref) {
  return ks_statistic(samples,
                      [&](double x) { return reference_cdf(ref, x); });
}

}  // namespace rbperm
