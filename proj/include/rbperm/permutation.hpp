#ifndef RBPERM_PERMUTATION_HPP
#define RBPERM_PERMUTATION_HPP

#include <cstdint>
#include <vector>

#include "rbperm/errors.hpp"

namespace rbperm {

/// A permutation of {1..n} stored as its one-line word: entry at position i
/// (1-based) is sigma(i). The empty permutation (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n; throws NotABijection.
  static Permutation from_word(std::vector<int> values);

  /// Wraps a word the caller guarantees to be valid (sampler internals).
  static Permutation unchecked(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }

  /// sigma(i), 1-based. No bounds check beyond the debug assert.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> w) : word_(std::move(w)) {}
  std::vector<int> word_;
};

/// Cycles partitioning {1..n}; each cycle lists its elements in sigma-order.
using CycleDecomposition = std::vector<std::vector<int>>;

/// All seven scalar statistics of a nonempty permutation.
struct StatSummary {
  std::int64_t records = 0;
  std::int64_t descents = 0;
  std::int64_t inversions = 0;
  std::int64_t cycles = 0;
  int first_value = 0;
  std::int64_t weak_exceedances = 0;   // positions with sigma(i) >= i
  std::int64_t anti_exceedances = 0;   // positions with sigma(i) < i
};

/// Canonical cycle form: each cycle written from its maximal element,
/// cycles ordered by increasing maximum.
CycleDecomposition to_cycles(const Permutation& p);

/// Rebuilds the permutation; throws NotAPartition if the cycles do not
/// partition {1..n}.
Permutation from_cycles(const CycleDecomposition& cycles);

/// Throws EmptyPermutation for n = 0. Inversions are counted with a Fenwick
/// tree in O(n log n).
StatSummary statistics(const Permutation& p);

/// Entry j (1-based) counts inversions (i, j) with i < j; sums to inv(sigma).
std::vector<int> inv_profile(const Permutation& p);

/// Largest value among the first i positions, 1 <= i <= n.
int lmax(const Permutation& p, int i);

/// Fundamental bijection: cycles written from their maxima, in increasing
/// order of maxima, concatenated. Maps cycle count to record count.
Permutation foata(const Permutation& p);

/// Inverse of foata: the word splits into blocks at its records; each block
/// is read back as one cycle.
Permutation foata_inverse(const Permutation& p);

/// Word reversed left-to-right.
Permutation reversed(const Permutation& p);

}  // namespace rbperm

#endif
