#include "rbperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rbperm {

Permutation Permutation::from_word(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw NotABijection("word is not a rearrangement of 1.." +
                          std::to_string(n));
    seen[static_cast<size_t>(v)] = 1;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::unchecked(std::vector<int> values) {
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) inv[static_cast<size_t>(word_[i - 1]) - 1] = i;
  return Permutation(std::move(inv));
}

CycleDecomposition to_cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  // Gather cycles keyed by their maximum so the canonical order falls out of
  // a single ascending sweep over start values.
  CycleDecomposition cycles;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    int mx = start;
    for (int v = p(start); v != start; v = p(v)) mx = std::max(mx, v);
    std::vector<int> cycle;
    cycle.push_back(mx);
    visited[static_cast<size_t>(mx)] = 1;
    for (int v = p(mx); v != mx; v = p(v)) {
      cycle.push_back(v);
      visited[static_cast<size_t>(v)] = 1;
    }
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

Permutation from_cycles(const CycleDecomposition& cycles) {
  size_t total = 0;
  for (const auto& c : cycles) total += c.size();
  const int n = static_cast<int>(total);
  std::vector<int> word(static_cast<size_t>(n), 0);
  for (const auto& c : cycles) {
    if (c.empty()) throw NotAPartition("empty cycle");
    for (size_t k = 0; k < c.size(); ++k) {
      const int from = c[k];
      const int to = c[(k + 1) % c.size()];
      if (from < 1 || from > n)
        throw NotAPartition("element " + std::to_string(from) +
                            " outside 1.." + std::to_string(n));
      if (word[static_cast<size_t>(from) - 1] != 0)
        throw NotAPartition("element " + std::to_string(from) + " reused");
      word[static_cast<size_t>(from) - 1] = to;
    }
  }
  return Permutation::from_word(std::move(word));
}

namespace {

// Fenwick tree over values 1..n; used for inversion counting.
class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(static_cast<size_t>(n) + 1, 0) {}
  void add(int i) {
    for (; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
  }
  int prefix(int i) const {  // count of added values <= i
    int s = 0;
    for (; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }

 private:
  std::vector<int> tree_;
};

std::int64_t count_cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  std::int64_t cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    ++cycles;
    for (int v = start; !visited[static_cast<size_t>(v)]; v = p(v))
      visited[static_cast<size_t>(v)] = 1;
  }
  return cycles;
}

}  // namespace

StatSummary statistics(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw EmptyPermutation("statistics of the empty permutation");
  StatSummary s;
  s.first_value = p(1);
  int best = 0;
  Fenwick seen(n);
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    if (v > best) {
      best = v;
      ++s.records;
    }
    if (i >= 2 && p(i - 1) > v) ++s.descents;
    s.inversions += (i - 1) - seen.prefix(v);
    seen.add(v);
    if (v >= i)
      ++s.weak_exceedances;
    else
      ++s.anti_exceedances;
  }
  s.cycles = count_cycles(p);
  return s;
}

std::vector<int> inv_profile(const Permutation& p) {
  const int n = p.size();
  std::vector<int> prof(static_cast<size_t>(n));
  Fenwick seen(n == 0 ? 1 : n);
  for (int j = 1; j <= n; ++j) {
    const int v = p(j);
    prof[static_cast<size_t>(j) - 1] = (j - 1) - seen.prefix(v);
    seen.add(v);
  }
  return prof;
}

int lmax(const Permutation& p, int i) {
  if (i < 1 || i > p.size())
    throw PositionOutOfRange("lmax position " + std::to_string(i) +
                             " outside 1.." + std::to_string(p.size()));
  int best = 0;
  for (int k = 1; k <= i; ++k) best = std::max(best, p(k));
  return best;
}

Permutation foata(const Permutation& p) {
  std::vector<int> word;
  word.reserve(static_cast<size_t>(p.size()));
  for (const auto& cycle : to_cycles(p))
    word.insert(word.end(), cycle.begin(), cycle.end());
  return Permutation::unchecked(std::move(word));
}

Permutation foata_inverse(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition cycles;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    if (v > best) {
      best = v;
      cycles.emplace_back();
    }
    cycles.back().push_back(v);
  }
  return from_cycles(cycles);
}

Permutation reversed(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation::unchecked(std::move(w));
}

}  // namespace rbperm
