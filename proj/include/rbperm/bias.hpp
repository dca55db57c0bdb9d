#ifndef RBPERM_BIAS_HPP
#define RBPERM_BIAS_HPP

#include <cmath>
#include <string>
#include <variant>

#include "rbperm/errors.hpp"

namespace rbperm {

/// theta parameterizations: a fixed value, theta = lambda * n, or
/// theta = n^exponent.
struct RecordBias {
  struct Fixed {
    double theta;
  };
  struct LinearInSize {
    double lambda;
  };
  struct PowerOfSize {
    double exponent;
  };

  std::variant<Fixed, LinearInSize, PowerOfSize> mode;

  static RecordBias fixed(double theta) { return {Fixed{theta}}; }
  static RecordBias linear_in_size(double lambda) {
    return {LinearInSize{lambda}};
  }
  static RecordBias power_of_size(double exponent) {
    return {PowerOfSize{exponent}};
  }
};

/// Resolves the bias to a concrete theta for size n; throws NonPositiveTheta
/// if the result is not strictly positive and finite.
inline double resolve_theta(const RecordBias& bias, std::int64_t n) {
  if (n < 1) throw NonPositiveTheta("theta is resolved only for n >= 1");
  const double theta = std::visit(
      [n](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RecordBias::Fixed>) {
          return m.theta;
        } else if constexpr (std::is_same_v<T, RecordBias::LinearInSize>) {
          return m.lambda * static_cast<double>(n);
        } else {
          return std::pow(static_cast<double>(n), m.exponent);
        }
      },
      bias.mode);
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw NonPositiveTheta("resolved theta = " + std::to_string(theta));
  return theta;
}

}  // namespace rbperm

#endif
