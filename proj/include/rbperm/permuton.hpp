#ifndef RBPERM_PERMUTON_HPP
#define RBPERM_PERMUTON_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rbperm/permutation.hpp"
#include "rbperm/random.hpp"

namespace rbperm {

/// Dominance prefix counts of a permutation: corner_count(i, j) is the number
/// of positions k <= i with sigma(k) <= j, so the permuton mass of the grid
/// rectangle [0, i/n] x [0, j/n] is corner_count(i, j) / n. The full
/// (n+1)^2 table is stored up to `dense_limit`; above that only the word is
/// kept and queries scan it.
class EmpiricalPermuton {
 public:
  explicit EmpiricalPermuton(const Permutation& p, int dense_limit = 20000);

  int size() const { return n_; }

  std::int64_t corner_count(int i, int j) const;

  double corner_mass(int i, int j) const {
    return static_cast<double>(corner_count(i, j)) / static_cast<double>(n_);
  }

  /// Calls f(i, row) for i = 0..n, where row[j] = corner_count(i, j). Runs in
  /// O(n^2) total and O(n) extra memory in either storage mode.
  void for_each_row(
      const std::function<void(int, const std::vector<std::int64_t>&)>& f)
      const;

 private:
  int n_ = 0;
  std::vector<std::int32_t> dense_;  // (n+1)^2, row-major; empty in sparse mode
  std::vector<int> word_;            // kept only in sparse mode
};

/// The closed-form limit of record-biased permutations with theta = lambda*n:
/// mass lambda/(lambda+x) dx on the curve y = f(x) = x(lambda+1)/(lambda+x)
/// plus Lebesgue density 1/(lambda+1) below it.
class LimitPermuton {
 public:
  explicit LimitPermuton(double lambda);

  double lambda() const { return lambda_; }

  /// f(x) = x(lambda+1)/(lambda+x) on [0,1].
  double curve(double x) const;

  /// f^{-1}(y) = lambda*y/(1+lambda-y) on [0,1].
  double curve_inv(double y) const;

  /// mu([0,a] x [0,b]) = x* + b(a - x*)/(lambda+1), x* = min(a, f^{-1}(b)).
  double mass_corner(double a, double b) const;

  /// mu([a1,a2] x [b1,b2]) by inclusion-exclusion over corner masses.
  double mass_rect(double a1, double a2, double b1, double b2) const;

  /// Exponential rate F(x, y) of P(lmax at position xn is about yn); equals 1
  /// exactly on y = f(x). Requires 0 < x < y < 1.
  double rate(double x, double y) const;

  /// One draw from mu: a curve point with probability lambda*log(1+1/lambda)
  /// (inverse-CDF in x), otherwise a uniform point below the curve by
  /// rejection.
  std::pair<double, double> sample_point(RandomStream& rng) const;

 private:
  double lambda_;
};

/// sup over grid corner rectangles [0,i/n] x [0,j/n] of the mass discrepancy
/// between the permutation's permuton and the limit. O(n^2), O(n) memory.
double distance_grid(const Permutation& p, const LimitPermuton& limit);

}  // namespace rbperm

#endif
