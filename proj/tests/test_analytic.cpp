#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rbperm/analytic.hpp"
#include "rbperm/oracle.hpp"

using namespace rbperm;

TEST_CASE("digamma") {
  CHECK(digamma(1.0) ==
        doctest::Approx(-0.5772156649015329).epsilon(1e-13));
  for (double x : {0.5, 1.0, 7.3}) {
    CHECK(digamma(x + 1.0) - digamma(x) ==
          doctest::Approx(1.0 / x).epsilon(1e-13));
  }
  // Psi(x+n) - Psi(x) telescopes over 1/(x+i).
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += 1.0 / (2.0 + i);
  CHECK(digamma(7.0) - digamma(2.0) == doctest::Approx(s).epsilon(1e-13));
  CHECK(digamma(0.001) == doctest::Approx(-1000.5755719318103).epsilon(1e-12));
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-2.0), DomainError);
}

TEST_CASE("digamma_diff agrees with digamma and stays stable") {
  for (double x : {0.01, 0.7, 3.0, 50.0}) {
    for (double d : {0.5, 1.0, 12.0, 4000.0}) {
      CHECK(digamma_diff(x, d) ==
            doctest::Approx(digamma(x + d) - digamma(x)).epsilon(1e-12));
    }
  }
  // Huge x, small relative d: the naive difference would lose everything.
  double s = 0.0;
  for (int i = 0; i < 100; ++i) s += 1.0 / (1e10 + i);
  CHECK(digamma_diff(1e10, 100.0) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("log_rising_factorial") {
  CHECK(log_rising_factorial(3.7, 0) == 0.0);
  CHECK(log_rising_factorial(1.0, 5) ==
        doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(log_rising_factorial(2.0, 3) ==
        doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_rising_factorial(0.0, 3), DomainError);
}

TEST_CASE("elementary probabilities") {
  CHECK(prob_record_at(5.0, 1) == 1.0);
  CHECK(prob_record_at(1.0, 7) == doctest::Approx(1.0 / 7.0));
  CHECK(prob_record_at(2.0, 3) == doctest::Approx(0.5));

  CHECK(prob_descent_at(1.0, 5) == doctest::Approx(0.5));
  CHECK(prob_descent_at(3.0, 2) == doctest::Approx(1.0 / 4.0));
  // Oracle over S_3 at theta = 2 gives 10/24 for the descent at position 3.
  CHECK(prob_descent_at(2.0, 3) == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
  CHECK_THROWS_AS(prob_descent_at(2.0, 1), DomainError);

  CHECK(prob_invj(2.0, 1, 0) == 1.0);
  CHECK(prob_invj(1.0, 6, 3) == doctest::Approx(1.0 / 6.0));
  CHECK(prob_invj(2.0, 3, 0) == doctest::Approx(0.5));
  CHECK(prob_invj(2.0, 3, 1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(prob_invj(2.0, 3, 3), DomainError);
  CHECK_THROWS_AS(prob_invj(2.0, 3, -1), DomainError);
}

TEST_CASE("prob_first_value") {
  for (int k = 1; k <= 3; ++k)
    CHECK(prob_first_value(1.0, 3, k) == doctest::Approx(1.0 / 3.0));
  CHECK(prob_first_value(2.0, 2, 1) == doctest::Approx(2.0 / 3.0));
  double total = 0.0;
  for (int k = 1; k <= 50; ++k) total += prob_first_value(2.5, 50, k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("prob_lmax") {
  CHECK(prob_lmax(1.0, 3, 1, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(prob_lmax(2.0, 5, 3, 2) == 0.0);
  for (int j = 1; j <= 9; ++j)
    CHECK(prob_lmax(1.7, 9, 1, j) ==
          doctest::Approx(prob_first_value(1.7, 9, j)).epsilon(1e-12));
  double total = 0.0;
  for (int j = 1; j <= 7; ++j) total += prob_lmax(2.0, 7, 4, j);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(prob_lmax(2.0, 5, 0, 3), DomainError);
}

TEST_CASE("closed-form marginals match the enumeration oracle") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    for (double theta : {0.5, 1.0, 2.0}) {
      const PermLaw law = exact_distribution(n, theta, WeightStat::Records);
      std::vector<double> rec(static_cast<size_t>(n) + 1, 0.0);
      std::vector<double> desc(static_cast<size_t>(n) + 1, 0.0);
      std::vector<std::vector<double>> invj(
          static_cast<size_t>(n) + 1,
          std::vector<double>(static_cast<size_t>(n), 0.0));
      std::vector<double> first(static_cast<size_t>(n) + 1, 0.0);
      std::vector<std::vector<double>> lm(
          static_cast<size_t>(n) + 1,
          std::vector<double>(static_cast<size_t>(n) + 1, 0.0));
      for (const auto& [word, p] : law) {
        const Permutation perm = Permutation::unchecked(word);
        const auto prof = inv_profile(perm);
        int best = 0;
        for (std::int64_t i = 1; i <= n; ++i) {
          const int v = word[static_cast<size_t>(i) - 1];
          if (v > best) {
            best = v;
            rec[static_cast<size_t>(i)] += p;
          }
          if (i >= 2 && word[static_cast<size_t>(i) - 2] > v)
            desc[static_cast<size_t>(i)] += p;
          invj[static_cast<size_t>(i)]
              [static_cast<size_t>(prof[static_cast<size_t>(i) - 1])] += p;
          lm[static_cast<size_t>(i)][static_cast<size_t>(best)] += p;
        }
        first[static_cast<size_t>(word[0])] += p;
      }
      for (std::int64_t i = 1; i <= n; ++i) {
        CHECK(rec[static_cast<size_t>(i)] ==
              doctest::Approx(prob_record_at(theta, i)).epsilon(1e-12));
        if (i >= 2)
          CHECK(desc[static_cast<size_t>(i)] ==
                doctest::Approx(prob_descent_at(theta, i)).epsilon(1e-12));
        for (std::int64_t k = 0; k < i; ++k)
          CHECK(invj[static_cast<size_t>(i)][static_cast<size_t>(k)] ==
                doctest::Approx(prob_invj(theta, i, k)).epsilon(1e-12));
        CHECK(first[static_cast<size_t>(i)] ==
              doctest::Approx(prob_first_value(theta, n, i)).epsilon(1e-12));
        for (std::int64_t j = 1; j <= n; ++j)
          CHECK(lm[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                doctest::Approx(prob_lmax(theta, n, i, j))
                    .epsilon(1e-12)
                    .scale(1.0));
      }
    }
  }
}

TEST_CASE("expected values") {
  CHECK(expected_value(StatisticId::Records, 1.0, 3) ==
        doctest::Approx(11.0 / 6.0).epsilon(1e-13));
  CHECK(expected_value(StatisticId::Records, 2.0, 3) ==
        doctest::Approx(13.0 / 6.0).epsilon(1e-13));
  CHECK(expected_value(StatisticId::Descents, 2.0, 3) ==
        doctest::Approx(0.75).epsilon(1e-13));
  CHECK(expected_value(StatisticId::Inversions, 2.0, 3) ==
        doctest::Approx(13.0 / 12.0).epsilon(1e-13));
  CHECK(expected_value(StatisticId::FirstValue, 2.0, 3) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-13));
  CHECK(expected_value(StatisticId::FirstValue, 3.0, 100) ==
        doctest::Approx(103.0 / 4.0).epsilon(1e-13));
}

TEST_CASE("expectation identities from the per-position laws") {
  for (std::int64_t n : {4, 30}) {
    for (double theta : {0.3, 1.0, 5.0}) {
      double rec = 0.0;
      for (std::int64_t i = 1; i <= n; ++i) rec += prob_record_at(theta, i);
      CHECK(rec == doctest::Approx(expected_value(StatisticId::Records, theta,
                                                  n))
                       .epsilon(1e-12));
      double desc = 0.0;
      for (std::int64_t i = 2; i <= n; ++i) desc += prob_descent_at(theta, i);
      CHECK(desc == doctest::Approx(expected_value(StatisticId::Descents,
                                                   theta, n))
                        .epsilon(1e-10));
      double inv = 0.0;
      for (std::int64_t j = 1; j <= n; ++j)
        for (std::int64_t k = 1; k < j; ++k)
          inv += static_cast<double>(k) * prob_invj(theta, j, k);
      CHECK(inv == doctest::Approx(expected_value(StatisticId::Inversions,
                                                  theta, n))
                       .epsilon(1e-10));
    }
  }
}

TEST_CASE("variances") {
  CHECK(variance_invj(3.0, 1) == 0.0);
  // Brute force over uniform S_3: V[inv] = 19/6 - (3/2)^2 = 11/12.
  CHECK(variance_inversions(1.0, 3) ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-13));
  const double v = variance_inversions(2.0, 10000);
  CHECK(v / (1e12 / 36.0) > 0.95);
  CHECK(v / (1e12 / 36.0) < 1.05);
}

TEST_CASE("exact pmfs match the oracle") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    for (double theta : {0.5, 1.0, 2.0}) {
      const auto rec = exact_pmf_records(theta, n);
      const auto inv = exact_pmf_inversions(theta, n);
      const StatLaw rec_oracle =
          exact_statistic_pmf(n, theta, StatisticId::Records);
      const StatLaw inv_oracle =
          exact_statistic_pmf(n, theta, StatisticId::Inversions);
      double rec_sum = 0.0, inv_sum = 0.0;
      for (double p : rec) rec_sum += p;
      for (double p : inv) inv_sum += p;
      CHECK(rec_sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(inv_sum == doctest::Approx(1.0).epsilon(1e-12));
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(rec.size()); ++k) {
        const double want =
            rec_oracle.count(k) ? rec_oracle.at(k) : 0.0;
        CHECK(rec[static_cast<size_t>(k)] ==
              doctest::Approx(want).epsilon(1e-12).scale(1.0));
      }
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(inv.size()); ++k) {
        const double want =
            inv_oracle.count(k) ? inv_oracle.at(k) : 0.0;
        CHECK(inv[static_cast<size_t>(k)] ==
              doctest::Approx(want).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("pmf moments match the closed forms") {
  for (std::int64_t n : {5, 40}) {
    for (double theta : {0.5, 2.0}) {
      const auto rec = exact_pmf_records(theta, n);
      double mean = 0.0;
      for (size_t k = 0; k < rec.size(); ++k)
        mean += static_cast<double>(k) * rec[k];
      CHECK(mean == doctest::Approx(expected_value(StatisticId::Records,
                                                   theta, n))
                        .epsilon(1e-10));
      const auto inv = exact_pmf_inversions(theta, n);
      double m1 = 0.0, m2 = 0.0;
      for (size_t k = 0; k < inv.size(); ++k) {
        m1 += static_cast<double>(k) * inv[k];
        m2 += static_cast<double>(k) * static_cast<double>(k) * inv[k];
      }
      CHECK(m2 - m1 * m1 ==
            doctest::Approx(variance_inversions(theta, n)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(exact_pmf_inversions(1.0, 3000), SupportTooLarge);
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian_numbers(1) == std::vector<double>{1.0});
  CHECK(eulerian_numbers(3) == std::vector<double>{1.0, 4.0, 1.0});
  double sum = 0.0;
  for (double a : eulerian_numbers(6)) sum += a;
  CHECK(sum == doctest::Approx(720.0));
  // Descent-count histogram over S_4, brute force.
  CHECK(eulerian_numbers(4) == std::vector<double>{1.0, 11.0, 11.0, 1.0});
}

TEST_CASE("first_value_moment") {
  CHECK(first_value_moment(2.0, 10, 1) ==
        doctest::Approx(expected_value(StatisticId::FirstValue, 2.0, 10))
            .epsilon(1e-12));
  // Oracle second moment over S_6, theta = 2.
  const StatLaw fv = exact_statistic_pmf(6, 2.0, StatisticId::FirstValue);
  double m2 = 0.0;
  for (const auto& [v, p] : fv)
    m2 += static_cast<double>(v) * static_cast<double>(v) * p;
  CHECK(first_value_moment(2.0, 6, 2) == doctest::Approx(m2).epsilon(1e-12));
  // Beta-moment limit r!/(theta+1)^(r).
  CHECK(first_value_moment(2.0, 1000000, 3) / 1e18 ==
        doctest::Approx(0.1).epsilon(1e-3));
  CHECK_THROWS_AS(first_value_moment(2.0, 5, 5), DomainError);
}

TEST_CASE("asymptotic expectations") {
  const std::int64_t n = 100000;
  CHECK(asymptotic_expectation(StatisticId::Descents, {Regime::Uniform{}},
                               n) == doctest::Approx(n / 2.0));
  CHECK(asymptotic_expectation(StatisticId::Records, {Regime::Linear{1.0}},
                               n) ==
        doctest::Approx(static_cast<double>(n) * std::log(2.0)));
  CHECK(asymptotic_expectation(StatisticId::FirstValue,
                               {Regime::Superlinear{2.0}}, n) == 1.0);
  CHECK_THROWS_AS(asymptotic_expectation(StatisticId::Records,
                                         {Regime::Sublinear{1.5}}, n),
                  DomainError);
  CHECK_THROWS_AS(asymptotic_expectation(StatisticId::Records,
                                         {Regime::Superlinear{0.5}}, n),
                  DomainError);
}

TEST_CASE("reference cdfs") {
  const auto normal = ReferenceDistribution::standard_normal();
  CHECK(reference_cdf(normal, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(reference_cdf(normal, 1.959963984540054) ==
        doctest::Approx(0.975).epsilon(1e-9));
  const auto beta1 = ReferenceDistribution::beta_one_theta(1.0);
  for (double x : {0.1, 0.5, 0.9})
    CHECK(reference_cdf(beta1, x) == doctest::Approx(x));
  const auto beta2 = ReferenceDistribution::beta_one_theta(2.0);
  CHECK(reference_cdf(beta2, 0.5) == doctest::Approx(0.75));
  CHECK(reference_cdf(beta2, -0.5) == 0.0);
  CHECK(reference_cdf(beta2, 1.5) == 1.0);
}
