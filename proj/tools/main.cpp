// Command-line surface for record-biased permutation experiments: sampling,
// empirical laws, permuton distances, heatmaps, closed-form expectations,
// oracle verification and sampler benchmarks. All commands are deterministic
// given an explicit seed. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rbperm/analytic.hpp"
#include "rbperm/io.hpp"
#include "rbperm/oracle.hpp"
#include "rbperm/permuton.hpp"
#include "rbperm/samplers.hpp"

using namespace rbperm;

namespace {

struct ThetaSpec {
  RecordBias bias = RecordBias::fixed(1.0);
  std::string text = "fixed:1";
};

ThetaSpec parse_theta_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("theta", "expected fixed:<x>, linear:<l> or power:<e>");
  const std::string kind = text.substr(0, colon);
  double value;
  try {
    value = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("theta", "bad numeric value in '" + text + "'");
  }
  ThetaSpec spec;
  spec.text = text;
  if (kind == "fixed")
    spec.bias = RecordBias::fixed(value);
  else if (kind == "linear")
    spec.bias = RecordBias::linear_in_size(value);
  else if (kind == "power")
    spec.bias = RecordBias::power_of_size(value);
  else
    throw CLI::ValidationError("theta", "unknown theta kind '" + kind + "'");
  return spec;
}

std::uint64_t seed_from_env_or_default() {
  if (const char* env = std::getenv("RBPERM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed RBPERM_SEED\n";
    }
  }
  return 0;
}

// Stream that writes either to a file or to stdout ("-").
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("out", "cannot open " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

SamplerKind parse_sampler(const std::string& name) {
  static const std::map<std::string, SamplerKind> kinds = {
      {"slots", SamplerKind::SlotWord},
      {"sequences", SamplerKind::SequenceOfSequences},
      {"diagram", SamplerKind::Diagram},
      {"foata", SamplerKind::FoataFromEwens},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end())
    throw CLI::ValidationError("sampler", "unknown sampler '" + name + "'");
  return it->second;
}

StatisticId parse_stat(const std::string& name) {
  static const std::map<std::string, StatisticId> stats = {
      {"records", StatisticId::Records},
      {"descents", StatisticId::Descents},
      {"inversions", StatisticId::Inversions},
      {"first", StatisticId::FirstValue},
  };
  const auto it = stats.find(name);
  if (it == stats.end())
    throw CLI::ValidationError("stat", "unknown statistic '" + name + "'");
  return it->second;
}

int cmd_sample(int n, const ThetaSpec& theta, std::int64_t count,
               const std::string& sampler, std::uint64_t seed, int threads,
               const std::string& out_path) {
  const auto batch =
      batch_sample(parse_sampler(sampler), n, theta.bias, count, seed, threads);
  Output out(out_path);
  write_permutations(out.get(), batch);
  return 0;
}

// Exact pmf column for cmd_law, where one is available at this size.
std::optional<StatLaw> exact_law_column(StatisticId stat, int n,
                                        double theta) {
  StatLaw exact;
  try {
    switch (stat) {
      case StatisticId::Records: {
        const auto pmf = exact_pmf_records(theta, n);
        for (size_t k = 0; k < pmf.size(); ++k)
          if (pmf[k] > 0.0)
            exact[static_cast<std::int64_t>(k)] = pmf[k];
        return exact;
      }
      case StatisticId::Inversions: {
        const auto pmf = exact_pmf_inversions(theta, n);
        for (size_t k = 0; k < pmf.size(); ++k)
          exact[static_cast<std::int64_t>(k)] = pmf[k];
        return exact;
      }
      case StatisticId::FirstValue: {
        for (int k = 1; k <= n; ++k)
          exact[k] = prob_first_value(theta, n, k);
        return exact;
      }
      case StatisticId::Descents: {
        if (n > 8) return std::nullopt;
        return exact_statistic_pmf(n, theta, StatisticId::Descents);
      }
    }
  } catch (const SupportTooLarge&) {
    return std::nullopt;
  }
  return std::nullopt;
}

int cmd_law(const std::string& stat_name, int n, const ThetaSpec& theta,
            std::int64_t count, const std::string& sampler, std::uint64_t seed,
            const std::string& format, const std::string& out_path) {
  const StatisticId stat = parse_stat(stat_name);
  const double theta_value = resolve_theta(theta.bias, n);
  const auto batch =
      batch_sample(parse_sampler(sampler), n, theta.bias, count, seed);
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& p : batch) {
    const StatSummary s = statistics(p);
    std::int64_t v = 0;
    switch (stat) {
      case StatisticId::Records: v = s.records; break;
      case StatisticId::Descents: v = s.descents; break;
      case StatisticId::Inversions: v = s.inversions; break;
      case StatisticId::FirstValue: v = s.first_value; break;
    }
    ++counts[v];
  }
  const std::optional<StatLaw> exact = exact_law_column(stat, n, theta_value);

  std::map<std::int64_t, std::pair<std::int64_t, std::optional<double>>> rows;
  for (const auto& [v, c] : counts) rows[v] = {c, std::nullopt};
  if (exact) {
    for (const auto& [v, p] : *exact) {
      rows[v].second = p;
    }
  }
  Output out(out_path);
  std::ostream& os = out.get();
  const double total = static_cast<double>(count);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [v, row] : rows) {
      nlohmann::json rec = {
          {"value", v},
          {"count", row.first},
          {"empirical_prob", static_cast<double>(row.first) / total},
      };
      if (row.second) rec["exact_prob"] = *row.second;
      arr.push_back(rec);
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "value,count,empirical_prob,exact_prob\n";
    for (const auto& [v, row] : rows) {
      os << v << ',' << row.first << ','
         << csv_double(static_cast<double>(row.first) / total) << ',';
      if (row.second) os << csv_double(*row.second);
      os << '\n';
    }
  }
  return 0;
}

int cmd_permuton(const std::vector<int>& sizes, double lambda, int seeds,
                 const std::string& sampler, std::uint64_t base_seed,
                 const std::string& out_path) {
  const SamplerKind kind = parse_sampler(sampler);
  const LimitPermuton limit(lambda);
  Output out(out_path);
  std::ostream& os = out.get();
  os << "n,seed,d\n";
  for (int n : sizes) {
    const double theta = resolve_theta(RecordBias::linear_in_size(lambda), n);
    for (int s = 0; s < seeds; ++s) {
      RandomStream rng(derive_seed(base_seed, static_cast<std::uint64_t>(s)));
      RandomChoice choice{rng};
      const Permutation p = sample_with(kind, n, theta, choice);
      os << n << ',' << s << ',' << csv_double(distance_grid(p, limit))
         << '\n';
    }
  }
  return 0;
}

int cmd_heatmap(int n, const ThetaSpec& theta, std::int64_t count,
                const std::string& sampler, std::uint64_t seed,
                const std::string& out_path) {
  const auto batch =
      batch_sample(parse_sampler(sampler), n, theta.bias, count, seed);
  std::vector<std::vector<std::int64_t>> counts(
      static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
  for (const auto& p : batch)
    for (int i = 1; i <= n; ++i)
      ++counts[static_cast<size_t>(i) - 1][static_cast<size_t>(p(i)) - 1];
  Output out(out_path);
  std::ostream& os = out.get();
  os << "i";
  for (int j = 1; j <= n; ++j) os << ",j" << j;
  os << '\n';
  for (int i = 1; i <= n; ++i) {
    os << i;
    for (int j = 1; j <= n; ++j)
      os << ',' << counts[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
    os << '\n';
  }
  return 0;
}

int cmd_expect(const std::string& stat_name, std::int64_t n,
               const ThetaSpec& theta) {
  const StatisticId stat = parse_stat(stat_name);
  const double theta_value = resolve_theta(theta.bias, n);
  const double exact = expected_value(stat, theta_value, n);

  Regime regime{Regime::Uniform{}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RecordBias::Fixed>) {
          regime.id = Regime::FixedTheta{m.theta};
        } else if constexpr (std::is_same_v<T, RecordBias::LinearInSize>) {
          regime.id = Regime::Linear{m.lambda};
        } else {
          if (m.exponent < 1.0)
            regime.id = Regime::Sublinear{m.exponent};
          else if (m.exponent > 1.0)
            regime.id = Regime::Superlinear{m.exponent};
          else
            regime.id = Regime::Linear{1.0};
        }
      },
      theta.bias.mode);
  const double asym = asymptotic_expectation(stat, regime, n);
  std::cout << "stat " << stat_name << "  n " << n << "  theta " << theta.text
            << " (= " << csv_double(theta_value) << ")\n"
            << "exact       " << csv_double(exact) << '\n'
            << "asymptotic  " << csv_double(asym) << '\n'
            << "ratio       " << csv_double(exact / asym) << '\n';
  return 0;
}

int cmd_bench(const std::string& sampler, const std::vector<int>& sizes,
              int reps, std::uint64_t seed, const std::string& out_path) {
  const SamplerKind kind = parse_sampler(sampler);
  Output out(out_path);
  std::ostream& os = out.get();
  os << "sampler,size,seconds,ns_per_element\n";
  for (int n : sizes) {
    std::vector<double> times;
    for (int r = 0; r < reps; ++r) {
      RandomStream rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      RandomChoice choice{rng};
      const auto t0 = std::chrono::steady_clock::now();
      const Permutation p = sample_with(kind, n, 2.0, choice);
      const auto t1 = std::chrono::steady_clock::now();
      if (p.size() != n) return 1;  // keep the sample alive past the clock
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const double med = times[times.size() / 2];
    os << sampler << ',' << n << ',' << csv_double(med) << ','
       << csv_double(med * 1e9 / static_cast<double>(n)) << '\n';
  }
  return 0;
}

// Oracle-backed verification; prints one line per check, returns 1 on any
// failure.
int cmd_verify(int max_n, const std::vector<double>& thetas) {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass, double worst) {
    std::cout << (pass ? "[ok]   " : "[FAIL] ") << name
              << "  (worst deviation " << worst << ")\n";
    ok = ok && pass;
  };

  {  // Weight normalization: sum of theta^rec over S_n vs theta^(n).
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (double theta : thetas) {
        std::vector<int> word(static_cast<size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        double total = 0.0;
        do {
          total += std::pow(
              theta,
              static_cast<double>(
                  statistics(Permutation::unchecked(word)).records));
        } while (std::next_permutation(word.begin(), word.end()));
        const double want = std::exp(log_rising_factorial(theta, n));
        worst = std::max(worst, std::abs(total - want) / want);
      }
    }
    report("normalization sum theta^rec = theta^(n)", worst <= 1e-12, worst);
  }

  {  // Decision-tree laws of all four samplers vs the exact distribution.
    double worst = 0.0;
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
      for (double theta : thetas) {
        const PermLaw target = exact_distribution(n, theta, WeightStat::Records);
        for (SamplerKind kind :
             {SamplerKind::SlotWord, SamplerKind::SequenceOfSequences,
              SamplerKind::Diagram, SamplerKind::FoataFromEwens}) {
          const PermLaw law = sampler_tree_law(kind, n, theta);
          for (const auto& [word, p] : target) {
            const double got = law.count(word) ? law.at(word) : 0.0;
            worst = std::max(worst, std::abs(got - p) / p);
          }
        }
      }
    }
    report("sampler decision trees = theta^rec law", worst <= 1e-12, worst);
  }

  {  // Foata pushforward of the cycle-weighted law.
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (double theta : thetas) {
        PermLaw pushed;
        for (const auto& [word, p] :
             exact_distribution(n, theta, WeightStat::Cycles))
          pushed[foata(Permutation::unchecked(word)).word()] += p;
        worst = std::max(
            worst,
            tv_distance(pushed, exact_distribution(n, theta, WeightStat::Records)));
      }
    }
    report("foata maps cycle law onto record law", worst <= 1e-12, worst);
  }

  {  // Closed-form marginals vs enumeration.
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (double theta : thetas) {
        const PermLaw law = exact_distribution(n, theta, WeightStat::Records);
        std::vector<double> rec(static_cast<size_t>(n) + 1, 0.0);
        std::vector<double> first(static_cast<size_t>(n) + 1, 0.0);
        std::vector<double> desc(static_cast<size_t>(n) + 1, 0.0);
        for (const auto& [word, p] : law) {
          int best = 0;
          for (int i = 1; i <= n; ++i) {
            const int v = word[static_cast<size_t>(i) - 1];
            if (v > best) {
              best = v;
              rec[static_cast<size_t>(i)] += p;
            }
            if (i >= 2 && word[static_cast<size_t>(i) - 2] > v)
              desc[static_cast<size_t>(i)] += p;
          }
          first[static_cast<size_t>(word[0])] += p;
        }
        for (int i = 1; i <= n; ++i) {
          worst = std::max(worst, std::abs(rec[static_cast<size_t>(i)] -
                                           prob_record_at(theta, i)));
          if (i >= 2)
            worst = std::max(worst, std::abs(desc[static_cast<size_t>(i)] -
                                             prob_descent_at(theta, i)));
          worst = std::max(worst, std::abs(first[static_cast<size_t>(i)] -
                                           prob_first_value(theta, n, i)));
        }
      }
    }
    report("positional closed forms = oracle marginals", worst <= 1e-12,
           worst);
  }

  {  // Closed-form expectations vs oracle means.
    double worst = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      for (double theta : thetas) {
        for (StatisticId stat :
             {StatisticId::Records, StatisticId::Descents,
              StatisticId::Inversions, StatisticId::FirstValue}) {
          double mean = 0.0;
          for (const auto& [v, p] : exact_statistic_pmf(n, theta, stat))
            mean += static_cast<double>(v) * p;
          worst = std::max(
              worst, std::abs(mean - expected_value(stat, theta, n)));
        }
      }
    }
    report("closed-form expectations = oracle means", worst <= 1e-10, worst);
  }

  std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"record-biased permutations: samplers, laws, permutons"};
  app.require_subcommand(1);

  std::string theta_text = "fixed:1";
  std::string sampler = "slots";
  std::string out_path = "-";
  std::string format = "csv";
  std::string stat_name = "records";
  int n = 100;
  std::int64_t count = 1000;
  int threads = 1;
  int seeds = 20;
  int reps = 3;
  int max_n = 6;
  double lambda = 0.2;
  std::vector<int> sizes;
  std::vector<double> thetas{0.5, 1.0, 2.0};
  std::optional<std::uint64_t> seed_flag;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_flag,
                    "RNG seed (default: RBPERM_SEED env, then 0)");
  };

  CLI::App* sample = app.add_subcommand("sample", "emit random permutations");
  sample->add_option("--n", n, "permutation size")->required()
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--theta", theta_text, "fixed:<x> | linear:<l> | power:<e>")
      ->required();
  sample->add_option("--count", count, "number of samples")->required()
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--sampler", sampler, "slots|sequences|diagram|foata");
  sample->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  sample->add_option("--out", out_path, "output file or - for stdout");
  add_seed(sample);

  CLI::App* law = app.add_subcommand("law", "empirical vs exact statistic law");
  law->add_option("--stat", stat_name, "records|descents|inversions|first")
      ->required();
  law->add_option("--n", n, "permutation size")->required()
      ->check(CLI::PositiveNumber);
  law->add_option("--theta", theta_text, "theta spec")->required();
  law->add_option("--count", count, "number of samples")->required()
      ->check(CLI::PositiveNumber);
  law->add_option("--sampler", sampler, "slots|sequences|diagram|foata");
  law->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  law->add_option("--out", out_path, "output file or - for stdout");
  add_seed(law);

  CLI::App* permuton =
      app.add_subcommand("permuton", "grid distance to the limit permuton");
  permuton->add_option("--n-list", sizes, "sizes, e.g. 200,1000,5000")
      ->required()->delimiter(',');
  permuton->add_option("--lambda", lambda, "theta = lambda * n")->required()
      ->check(CLI::PositiveNumber);
  permuton->add_option("--seeds", seeds, "number of seeds")
      ->check(CLI::PositiveNumber);
  permuton->add_option("--sampler", sampler, "slots|sequences|diagram|foata");
  permuton->add_option("--out", out_path, "output file or - for stdout");
  add_seed(permuton);

  CLI::App* heatmap = app.add_subcommand("heatmap", "count matrix of sigma(i)=j");
  heatmap->add_option("--n", n, "permutation size")->required()
      ->check(CLI::PositiveNumber);
  heatmap->add_option("--theta", theta_text, "theta spec")->required();
  heatmap->add_option("--count", count, "number of samples")->required()
      ->check(CLI::NonNegativeNumber);
  heatmap->add_option("--sampler", sampler, "slots|sequences|diagram|foata");
  heatmap->add_option("--out", out_path, "output file or - for stdout");
  add_seed(heatmap);

  CLI::App* verify = app.add_subcommand("verify", "run the enumeration oracle");
  verify->add_option("--max-n", max_n, "largest size to enumerate (<= 8)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--thetas", thetas, "theta values")->delimiter(',');

  CLI::App* expect = app.add_subcommand("expect", "exact and asymptotic expectation");
  expect->add_option("--stat", stat_name, "records|descents|inversions|first")
      ->required();
  expect->add_option("--n", n, "permutation size")->required()
      ->check(CLI::PositiveNumber);
  expect->add_option("--theta", theta_text, "theta spec")->required();

  CLI::App* bench = app.add_subcommand("bench", "sampler timing");
  bench->add_option("--sampler", sampler, "slots|sequences|diagram|foata");
  bench->add_option("--sizes", sizes, "sizes, e.g. 1000000,2000000")
      ->required()->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path, "output file or - for stdout");
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::uint64_t seed =
      seed_flag ? *seed_flag : seed_from_env_or_default();

  try {
    const ThetaSpec theta = parse_theta_spec(theta_text);
    if (sample->parsed())
      return cmd_sample(n, theta, count, sampler, seed, threads, out_path);
    if (law->parsed())
      return cmd_law(stat_name, n, theta, count, sampler, seed, format,
                     out_path);
    if (permuton->parsed())
      return cmd_permuton(sizes, lambda, seeds, sampler, seed, out_path);
    if (heatmap->parsed())
      return cmd_heatmap(n, theta, count, sampler, seed, out_path);
    if (verify->parsed()) return cmd_verify(max_n, thetas);
    if (expect->parsed()) return cmd_expect(stat_name, n, theta);
    if (bench->parsed()) return cmd_bench(sampler, sizes, reps, seed, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
