#ifndef HRW_LDP_HPP
#define HRW_LDP_HPP

#include <optional>
#include <utility>

#include "hrw/event_set.hpp"
#include "hrw/linalg.hpp"
#include "hrw/tail_exponent.hpp"

namespace hrw {

// Rate function of the scaled walk S_n / n at scale h:
//   alpha > 0:  I(x) = |x|^alpha (continuous, good)
//   alpha = 0:  I(x) = 1 off the origin, 0 at the origin (not good)
// where alpha is the regular-variation index of the tail exponent.
class RateFunction {
 public:
  explicit RateFunction(const TailExponent& exponent);
  static RateFunction from_index(double alpha);

  double alpha() const { return alpha_; }
  const std::optional<TailExponent>& exponent() const { return exponent_; }

  double value(const Vec& x) const { return radial(norm2(x)); }
  double operator()(const Vec& x) const { return value(x); }
  double radial(double r) const;

 private:
  RateFunction() = default;
  double alpha_ = 0.0;
  std::optional<TailExponent> exponent_;
};

// Closed-form (or, for mapped cones, numerically minimized) infimum of the
// rate function over a tail event. Mapped sets go through the preimage:
// inf over L^{-1}(inner). Nested mapped sets are rejected.
double inf_rate(const RateFunction& rf, const EventSet& set);

// (-inf over the interior, -inf over the closure). For the supported open
// variants both coincide: the closure only adds boundary points, which change
// neither the infimum for alpha > 0 nor, with positive thresholds, for
// alpha = 0.
std::pair<double, double> ldp_bounds(const RateFunction& rf, const EventSet& set);

// First-order theoretical value of log P(|S_n| > n a): minus h(n a).
double theoretical_log_asymptote(const TailExponent& exponent, double n, double a);

}  // namespace hrw

#endif  // HRW_LDP_HPP
