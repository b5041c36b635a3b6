#include "hrw/radius.hpp"

#include <cmath>
#include <stdexcept>

namespace hrw {

RadiusDistribution::RadiusDistribution(TailExponent exponent)
    : exponent_(std::move(exponent)), x_min_(exponent_.support_start()) {}

double RadiusDistribution::tail(double x) const {
  return std::min(1.0, std::exp(-exponent_.value(x)));
}

double RadiusDistribution::sample(Rng& rng) const {
  const double e = -std::log(rng.uniform());
  return exponent_.inverse(e);
}

double RadiusDistribution::subexp_ratio(double x) const {
  const double h = exponent_.value(x);
  if (!(h > 0.0)) throw std::domain_error("subexp_ratio: h(x) must be positive");
  const double g = std::sqrt(x / h);
  if (!(g < x)) throw std::domain_error("subexp_ratio: x too small, g(x) >= x");
  return std::exp(exponent_.difference(x, x - g));
}

}  // namespace hrw
