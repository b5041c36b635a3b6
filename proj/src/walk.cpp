#include "hrw/walk.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrw {

IncrementSpec::IncrementSpec(RadiusDistribution r, DirectionDistribution d,
                             std::optional<EllipsoidMap> m)
    : radius(std::move(r)), direction(std::move(d)), map(std::move(m)) {
  if (map && map->dim() != direction.dim())
    throw std::invalid_argument("increment spec: map and direction dimensions differ");
}

Vec sample_increment(const IncrementSpec& spec, Rng& rng) {
  const double r = spec.radius.sample(rng);
  Vec x = spec.direction.sample(rng);
  for (double& c : x) c *= r;
  if (spec.map) return spec.map->forward(x);
  return x;
}

WalkSample simulate_sum(const IncrementSpec& spec, std::uint64_t n, Rng& rng,
                        const std::optional<Vec>& monitor) {
  if (n == 0) throw std::invalid_argument("simulate_sum: need at least one step");
  if (monitor) {
    if (monitor->size() != spec.dim())
      throw std::invalid_argument("simulate_sum: monitor dimension mismatch");
    if (std::fabs(norm2(*monitor) - 1.0) > 1e-12)
      throw std::domain_error("simulate_sum: monitor must be a unit vector");
  }

  WalkSample out;
  out.n = n;
  out.s_n.assign(spec.dim(), 0.0);
  out.max_norm = 0.0;
  out.max_proj = -std::numeric_limits<double>::infinity();
  out.has_proj = monitor.has_value();

  for (std::uint64_t i = 0; i < n; ++i) {
    const Vec x = sample_increment(spec, rng);
    for (std::size_t k = 0; k < x.size(); ++k) out.s_n[k] += x[k];
    out.max_norm = std::max(out.max_norm, norm2(x));
    if (monitor) out.max_proj = std::max(out.max_proj, dot(*monitor, x));
  }
  if (!monitor) out.max_proj = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace hrw
