#ifndef HRW_RADIUS_HPP
#define HRW_RADIUS_HPP

#include "hrw/rng.hpp"
#include "hrw/tail_exponent.hpp"

namespace hrw {

// Radius law with the exact tail P(R > x) = min(1, exp(-h(x))). Fixing the
// tail exactly (rather than only asymptotically) makes the sampler and the
// analytic tail agree by construction, so Monte Carlo runs can be compared
// against theory without an extra calibration layer.
class RadiusDistribution {
 public:
  explicit RadiusDistribution(TailExponent exponent);

  const TailExponent& exponent() const { return exponent_; }

  // P(R > x) for x > 0.
  double tail(double x) const;

  // Upper end of {x : tail(x) = 1}.
  double x_min() const { return x_min_; }

  // Inverse-transform draw: R = h^{-1}(E) with E standard exponential.
  double sample(Rng& rng) const;

  // P(R > x - g(x)) / P(R > x) with g(x) = sqrt(x / h(x)); the ratio tending
  // to 1 as x grows is the working criterion for subexponential decay.
  // Requires h(x) > 0 and g(x) < x.
  double subexp_ratio(double x) const;

 private:
  TailExponent exponent_;
  double x_min_;
};

}  // namespace hrw

#endif  // HRW_RADIUS_HPP
