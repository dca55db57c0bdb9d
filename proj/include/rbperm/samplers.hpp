#ifndef RBPERM_SAMPLERS_HPP
#define RBPERM_SAMPLERS_HPP

#include <concepts>
#include <cstdint>
#include <vector>

#include "rbperm/bias.hpp"
#include "rbperm/permutation.hpp"
#include "rbperm/random.hpp"

namespace rbperm {

enum class SamplerKind { SlotWord, SequenceOfSequences, Diagram, FoataFromEwens };

/// Every step of the generative processes makes one choice between a branch
/// of weight theta and m branches of weight 1 each. A ChoiceSource answers
/// with 0 for the theta-branch and 1..m otherwise. Production sampling draws
/// from a RandomStream; the test oracle replays scripted choices through the
/// exact same sampler code.
template <class S>
concept ChoiceSource = requires(S s, double theta, std::int64_t m) {
  { s.pick(theta, m) } -> std::convertible_to<std::int64_t>;
};

struct RandomChoice {
  RandomStream& rng;
  std::int64_t pick(double theta, std::int64_t m) {
    if (m == 0) return 0;
    const double md = static_cast<double>(m);
    if (rng.next_unit() < theta / (theta + md)) return 0;
    return 1 + rng.next_below(m);
  }
};

/// Chinese-restaurant step i: new fixed point with probability
/// theta/(theta+i-1), otherwise i is inserted before a uniformly chosen
/// existing element of its cycle. Law: theta^cyc(sigma) / theta^(n).
template <ChoiceSource S>
Permutation sample_ewens_with(int n, double theta, S& choices) {
  std::vector<int> word(static_cast<size_t>(n));
  std::vector<int> inv(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const std::int64_t c = choices.pick(theta, i - 1);
    if (c == 0) {
      word[static_cast<size_t>(i) - 1] = i;
      inv[static_cast<size_t>(i)] = i;
    } else {
      const int j = static_cast<int>(c);  // insert i before j in its cycle
      const int prev = inv[static_cast<size_t>(j)];
      word[static_cast<size_t>(prev) - 1] = i;
      inv[static_cast<size_t>(i)] = prev;
      word[static_cast<size_t>(i) - 1] = j;
      inv[static_cast<size_t>(j)] = i;
    }
  }
  return Permutation::unchecked(std::move(word));
}

/// Word-slot process: values 1..n are placed in order; at step i the value
/// goes to the leftmost empty slot with probability theta/(theta+n-i) and to
/// each other empty slot with probability 1/(theta+n-i). The empty slots are
/// kept in a doubly linked list L plus a gap-free array A (all empties except
/// the leftmost) with inverse index invA, so each step is O(1).
/// Law: theta^rec(sigma) / theta^(n).
template <ChoiceSource S>
Permutation sample_slots_with(int n, double theta, S& choices) {
  std::vector<int> word(static_cast<size_t>(n));
  std::vector<int> nxt(static_cast<size_t>(n) + 2), prv(static_cast<size_t>(n) + 2);
  for (int p = 0; p <= n + 1; ++p) {
    nxt[static_cast<size_t>(p)] = p + 1;
    prv[static_cast<size_t>(p)] = p - 1;
  }
  nxt[static_cast<size_t>(n)] = n + 1;  // sentinel tail
  std::vector<int> A;
  A.reserve(static_cast<size_t>(n));
  std::vector<int> invA(static_cast<size_t>(n) + 1, -1);
  for (int p = 2; p <= n; ++p) {
    invA[static_cast<size_t>(p)] = static_cast<int>(A.size());
    A.push_back(p);
  }
  auto take_from_A = [&](int pos) {
    const int idx = invA[static_cast<size_t>(pos)];
    const int last = A.back();
    A[static_cast<size_t>(idx)] = last;
    invA[static_cast<size_t>(last)] = idx;
    A.pop_back();
    invA[static_cast<size_t>(pos)] = -1;
  };
  auto unlink = [&](int pos) {
    nxt[static_cast<size_t>(prv[static_cast<size_t>(pos)])] =
        nxt[static_cast<size_t>(pos)];
    prv[static_cast<size_t>(nxt[static_cast<size_t>(pos)])] =
        prv[static_cast<size_t>(pos)];
  };
  for (int i = 1; i <= n; ++i) {
    const std::int64_t c = choices.pick(theta, n - i);
    int pos;
    if (c == 0) {
      pos = nxt[0];  // leftmost empty slot
      unlink(pos);
      const int new_min = nxt[0];
      if (new_min <= n) take_from_A(new_min);  // A never holds the minimum
    } else {
      pos = A[static_cast<size_t>(c) - 1];
      take_from_A(pos);
      unlink(pos);
    }
    word[static_cast<size_t>(pos) - 1] = i;
  }
  return Permutation::unchecked(std::move(word));
}

/// Sequence-of-sequences process: at step i, with probability
/// theta/(theta+i-1) a new open sequence is created holding the largest
/// value not yet placed; otherwise that value is inserted right after one of
/// the i-1 already placed elements, chosen uniformly. Sequences are created
/// from right to left and concatenated at the end.  Since every step places
/// the largest remaining value, values enter in decreasing order n..1.
/// Law: theta^rec(sigma) / theta^(n).
template <ChoiceSource S>
Permutation sample_sequences_with(int n, double theta, S& choices) {
  std::vector<int> next(static_cast<size_t>(n) + 1, 0);  // successor in its sequence
  std::vector<int> heads, placed;
  heads.reserve(static_cast<size_t>(n));
  placed.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = n + 1 - i;
    const std::int64_t c = choices.pick(theta, i - 1);
    if (c == 0) {
      heads.push_back(v);
    } else {
      const int after = placed[static_cast<size_t>(c) - 1];
      next[static_cast<size_t>(v)] = next[static_cast<size_t>(after)];
      next[static_cast<size_t>(after)] = v;
    }
    placed.push_back(v);
  }
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  for (auto it = heads.rbegin(); it != heads.rend(); ++it)
    for (int v = *it; v != 0; v = next[static_cast<size_t>(v)])
      word.push_back(v);
  return Permutation::unchecked(std::move(word));
}

/// Diagram process: columns are added left to right; the new point lands on
/// the highest row with probability theta/(theta+i-1) and otherwise just
/// below the point of a uniformly chosen existing column. A linked list of
/// columns ordered by decreasing point height makes each step O(1); heights
/// are read off the final list. Law: theta^rec(sigma) / theta^(n).
template <ChoiceSource S>
Permutation sample_diagram_with(int n, double theta, S& choices) {
  // List cells indexed by column; 0 is the head sentinel, n+1 the tail.
  std::vector<int> nxt(static_cast<size_t>(n) + 2), prv(static_cast<size_t>(n) + 2);
  nxt[0] = n + 1;
  prv[static_cast<size_t>(n) + 1] = 0;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t c = choices.pick(theta, i - 1);
    const int before = (c == 0) ? 0 : static_cast<int>(c);
    const int after = nxt[static_cast<size_t>(before)];
    nxt[static_cast<size_t>(before)] = i;
    prv[static_cast<size_t>(i)] = before;
    nxt[static_cast<size_t>(i)] = after;
    prv[static_cast<size_t>(after)] = i;
  }
  std::vector<int> word(static_cast<size_t>(n));
  int value = n;
  for (int col = nxt[0]; col <= n; col = nxt[static_cast<size_t>(col)])
    word[static_cast<size_t>(col) - 1] = value--;
  return Permutation::unchecked(std::move(word));
}

/// Pushes an Ewens sample through the fundamental bijection.
template <ChoiceSource S>
Permutation sample_foata_with(int n, double theta, S& choices) {
  return foata(sample_ewens_with(n, theta, choices));
}

template <ChoiceSource S>
Permutation sample_with(SamplerKind kind, int n, double theta, S& choices) {
  switch (kind) {
    case SamplerKind::SlotWord:
      return sample_slots_with(n, theta, choices);
    case SamplerKind::SequenceOfSequences:
      return sample_sequences_with(n, theta, choices);
    case SamplerKind::Diagram:
      return sample_diagram_with(n, theta, choices);
    case SamplerKind::FoataFromEwens:
      return sample_foata_with(n, theta, choices);
  }
  throw DomainError("unknown sampler kind");
}

Permutation sample_ewens(int n, double theta, RandomStream& rng);
Permutation sample_slots(int n, double theta, RandomStream& rng);
Permutation sample_sequences(int n, double theta, RandomStream& rng);
Permutation sample_diagram(int n, double theta, RandomStream& rng);
Permutation sample_foata(int n, double theta, RandomStream& rng);

/// Deterministic batch: sample k uses the sub-stream derive_seed(seed, k), so
/// the output is identical regardless of `threads`, which only partitions
/// the work.
std::vector<Permutation> batch_sample(SamplerKind kind, int n,
                                      const RecordBias& bias,
                                      std::int64_t count, std::uint64_t seed,
                                      int threads = 1);

}  // namespace rbperm

#endif
