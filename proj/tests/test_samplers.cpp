#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <map>

#include "rbperm/samplers.hpp"

using namespace rbperm;

namespace {

using Sampler = Permutation (*)(int, double, RandomStream&);

const std::map<std::string, Sampler> kSamplers = {
    {"ewens", sample_ewens},       {"slots", sample_slots},
    {"sequences", sample_sequences}, {"diagram", sample_diagram},
    {"foata", sample_foata},
};

}  // namespace

TEST_CASE("degenerate sizes") {
  for (const auto& [name, s] : kSamplers) {
    CAPTURE(name);
    RandomStream rng(1);
    CHECK(s(0, 2.0, rng).size() == 0);
    CHECK(s(1, 2.0, rng) == Permutation::identity(1));
  }
}

TEST_CASE("samplers emit valid permutations") {
  for (const auto& [name, s] : kSamplers) {
    CAPTURE(name);
    RandomStream rng(123);
    for (int rep = 0; rep < 50; ++rep) {
      const Permutation p = s(37, 0.7, rng);
      CHECK_NOTHROW(Permutation::from_word(p.word()));
    }
  }
}

TEST_CASE("slot sampler two-element law") {
  // P([1,2]) = theta^2 / (theta (theta+1)) = 2/3 at theta = 2.
  RandomStream rng(5);
  int asc = 0;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i)
    if (sample_slots(2, 2.0, rng) == Permutation::identity(2)) ++asc;
  const double freq = static_cast<double>(asc) / trials;
  CHECK(freq == doctest::Approx(2.0 / 3.0).epsilon(0.01));
}

TEST_CASE("record marginal matches theta/(theta+i-1)") {
  // Thm-1-style empirical check on the diagram sampler.
  const int n = 20;
  const double theta = 3.0;
  const int trials = 100000;
  std::vector<int> record_at(static_cast<size_t>(n) + 1, 0);
  RandomStream rng(11);
  for (int t = 0; t < trials; ++t) {
    const Permutation p = sample_diagram(n, theta, rng);
    int best = 0;
    for (int i = 1; i <= n; ++i)
      if (p(i) > best) {
        best = p(i);
        ++record_at[static_cast<size_t>(i)];
      }
  }
  for (int i = 1; i <= n; ++i) {
    const double expect = theta / (theta + i - 1);
    const double got = static_cast<double>(record_at[static_cast<size_t>(i)]) /
                       trials;
    const double sigma = std::sqrt(expect * (1 - expect) / trials);
    CHECK(std::abs(got - expect) < 5 * sigma + 1e-9);
  }
}

TEST_CASE("theta = 1 gives the uniform distribution") {
  for (const auto& [name, s] : kSamplers) {
    CAPTURE(name);
    RandomStream rng(17);
    std::map<std::vector<int>, int> counts;
    const int trials = 120000;
    for (int t = 0; t < trials; ++t) counts[s(4, 1.0, rng).word()]++;
    CHECK(counts.size() == 24);
    for (const auto& [w, c] : counts)
      CHECK(std::abs(c - trials / 24) < 5 * std::sqrt(trials / 24.0));
  }
}

TEST_CASE("batch_sample is deterministic and thread-invariant") {
  const auto a = batch_sample(SamplerKind::SlotWord, 18,
                              RecordBias::fixed(2.0), 500, 42, 1);
  const auto b = batch_sample(SamplerKind::SlotWord, 18,
                              RecordBias::fixed(2.0), 500, 42, 1);
  const auto c = batch_sample(SamplerKind::SlotWord, 18,
                              RecordBias::fixed(2.0), 500, 42, 4);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(batch_sample(SamplerKind::Diagram, 8, RecordBias::fixed(1.0), 0, 1)
            .empty());
  const auto d = batch_sample(SamplerKind::SlotWord, 18,
                              RecordBias::fixed(2.0), 500, 43, 1);
  CHECK(a != d);
}

TEST_CASE("batch frequency of the identity at n=3, theta=2") {
  // Exact value 8/24 = 1/3; tolerance is a 4-sigma multinomial band.
  const std::int64_t count = 1000000;
  const auto batch = batch_sample(SamplerKind::SlotWord, 3,
                                  RecordBias::fixed(2.0), count, 42);
  std::int64_t hits = 0;
  const Permutation id3 = Permutation::identity(3);
  for (const auto& p : batch)
    if (p == id3) ++hits;
  const double freq = static_cast<double>(hits) / static_cast<double>(count);
  CHECK(std::abs(freq - 1.0 / 3.0) < 0.002);
}

TEST_CASE("samplers scale linearly" * doctest::skip()) {
  // Heavy wall-clock check; the acceptance suite runs the calibrated version.
  auto time_one = [](Sampler s, int n) {
    RandomStream rng(9);
    const auto t0 = std::chrono::steady_clock::now();
    s(n, 2.0, rng);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
  };
  for (const char* name : {"slots", "diagram"}) {
    const Sampler s = kSamplers.at(name);
    const double r = time_one(s, 2000000) / time_one(s, 1000000);
    CHECK(r > 1.2);
    CHECK(r < 3.5);
  }
}
