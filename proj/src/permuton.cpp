#include "rbperm/permuton.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbperm/errors.hpp"

namespace rbperm {

EmpiricalPermuton::EmpiricalPermuton(const Permutation& p, int dense_limit)
    : n_(p.size()) {
  if (n_ == 0) throw EmptyPermutation("permuton of the empty permutation");
  if (n_ <= dense_limit) {
    const size_t stride = static_cast<size_t>(n_) + 1;
    dense_.assign(stride * stride, 0);
    for (int i = 1; i <= n_; ++i) {
      const int v = p(i);
      for (int j = 0; j <= n_; ++j)
        dense_[static_cast<size_t>(i) * stride + static_cast<size_t>(j)] =
            dense_[static_cast<size_t>(i - 1) * stride +
                   static_cast<size_t>(j)] +
            (v <= j ? 1 : 0);
    }
  } else {
    word_ = p.word();
  }
}

std::int64_t EmpiricalPermuton::corner_count(int i, int j) const {
  if (i < 0 || i > n_ || j < 0 || j > n_)
    throw PositionOutOfRange("corner index outside the grid");
  if (!dense_.empty()) {
    const size_t stride = static_cast<size_t>(n_) + 1;
    return dense_[static_cast<size_t>(i) * stride + static_cast<size_t>(j)];
  }
  std::int64_t count = 0;
  for (int k = 0; k < i; ++k)
    if (word_[static_cast<size_t>(k)] <= j) ++count;
  return count;
}

void EmpiricalPermuton::for_each_row(
    const std::function<void(int, const std::vector<std::int64_t>&)>& f)
    const {
  std::vector<std::int64_t> row(static_cast<size_t>(n_) + 1, 0);
  f(0, row);
  for (int i = 1; i <= n_; ++i) {
    int v;
    if (!dense_.empty()) {
      const size_t stride = static_cast<size_t>(n_) + 1;
      // Recover sigma(i) from adjacent rows to avoid keeping the word around.
      v = 0;
      for (int j = 1; j <= n_; ++j) {
        if (dense_[static_cast<size_t>(i) * stride + static_cast<size_t>(j)] !=
            dense_[static_cast<size_t>(i - 1) * stride +
                   static_cast<size_t>(j)]) {
          v = j;
          break;
        }
      }
    } else {
      v = word_[static_cast<size_t>(i) - 1];
    }
    for (int j = v; j <= n_; ++j) ++row[static_cast<size_t>(j)];
    f(i, row);
  }
}

LimitPermuton::LimitPermuton(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("lambda must be positive and finite");
}

namespace {

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw DomainError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

double LimitPermuton::curve(double x) const {
  check_unit(x, "x");
  return x * (lambda_ + 1.0) / (lambda_ + x);
}

double LimitPermuton::curve_inv(double y) const {
  check_unit(y, "y");
  return lambda_ * y / (1.0 + lambda_ - y);
}

double LimitPermuton::mass_corner(double a, double b) const {
  check_unit(a, "a");
  check_unit(b, "b");
  const double xs = std::min(a, curve_inv(b));
  return xs + b * (a - xs) / (lambda_ + 1.0);
}

double LimitPermuton::mass_rect(double a1, double a2, double b1,
                                double b2) const {
  if (!(a1 <= a2) || !(b1 <= b2))
    throw DomainError("rectangle bounds must be ordered");
  const double m = mass_corner(a2, b2) - mass_corner(a1, b2) -
                   mass_corner(a2, b1) + mass_corner(a1, b1);
  return std::max(m, 0.0);
}

double LimitPermuton::rate(double x, double y) const {
  if (!(x > 0.0 && x < y && y < 1.0))
    throw DomainError("rate needs 0 < x < y < 1");
  auto xlogx = [](double v) { return v == 0.0 ? 0.0 : v * std::log(v); };
  const double l = lambda_;
  const double log_f = xlogx(y) + xlogx(1.0 - x) + xlogx(l + x) +
                       xlogx(l + 1.0 - y) - xlogx(x) - xlogx(y - x) -
                       xlogx(1.0 - y) - xlogx(l) - xlogx(l + 1.0);
  return std::exp(log_f);
}

std::pair<double, double> LimitPermuton::sample_point(RandomStream& rng) const {
  const double curve_mass = lambda_ * std::log1p(1.0 / lambda_);
  if (rng.next_unit() < curve_mass) {
    const double u = rng.next_unit();
    const double x = lambda_ * (std::pow(1.0 + 1.0 / lambda_, u) - 1.0);
    return {x, curve(x)};
  }
  for (;;) {
    const double x = rng.next_unit();
    const double y = rng.next_unit();
    if (y <= curve(x)) return {x, y};
  }
}

double distance_grid(const Permutation& p, const LimitPermuton& limit) {
  const int n = p.size();
  if (n == 0) throw EmptyPermutation("distance of the empty permutation");
  const double nd = static_cast<double>(n);
  // Stream the prefix rows directly from the word; no table is materialized.
  std::vector<std::int64_t> row(static_cast<size_t>(n) + 1, 0);
  double worst = 0.0;
  auto scan_row = [&](int i) {
    const double a = static_cast<double>(i) / nd;
    for (int j = 0; j <= n; ++j) {
      const double mass = static_cast<double>(row[static_cast<size_t>(j)]) / nd;
      const double d =
          std::abs(mass - limit.mass_corner(a, static_cast<double>(j) / nd));
      worst = std::max(worst, d);
    }
  };
  scan_row(0);
  for (int i = 1; i <= n; ++i) {
    for (int j = p(i); j <= n; ++j) ++row[static_cast<size_t>(j)];
    scan_row(i);
  }
  return worst;
}

}  // namespace rbperm
