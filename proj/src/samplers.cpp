#include "rbperm/samplers.hpp"

#include <thread>

namespace rbperm {

Permutation sample_ewens(int n, double theta, RandomStream& rng) {
  RandomChoice c{rng};
  return sample_ewens_with(n, theta, c);
}

Permutation sample_slots(int n, double theta, RandomStream& rng) {
  RandomChoice c{rng};
  return sample_slots_with(n, theta, c);
}

Permutation sample_sequences(int n, double theta, RandomStream& rng) {
  RandomChoice c{rng};
  return sample_sequences_with(n, theta, c);
}

Permutation sample_diagram(int n, double theta, RandomStream& rng) {
  RandomChoice c{rng};
  return sample_diagram_with(n, theta, c);
}

Permutation sample_foata(int n, double theta, RandomStream& rng) {
  RandomChoice c{rng};
  return sample_foata_with(n, theta, c);
}

std::vector<Permutation> batch_sample(SamplerKind kind, int n,
                                      const RecordBias& bias,
                                      std::int64_t count, std::uint64_t seed,
                                      int threads) {
  std::vector<Permutation> out(static_cast<size_t>(count));
  if (count == 0) return out;
  const double theta = resolve_theta(bias, n);
  auto worker = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t k = lo; k < hi; ++k) {
      RandomStream rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
      RandomChoice c{rng};
      out[static_cast<size_t>(k)] = sample_with(kind, n, theta, c);
    }
  };
  if (threads <= 1) {
    worker(0, count);
    return out;
  }
  const std::int64_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (std::int64_t lo = 0; lo < count; lo += chunk)
    pool.emplace_back(worker, lo, std::min(count, lo + chunk));
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace rbperm
