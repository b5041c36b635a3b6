#ifndef HRW_WALK_HPP
#define HRW_WALK_HPP

#include <cstdint>
#include <optional>

#include "hrw/direction.hpp"
#include "hrw/ellipsoid.hpp"
#include "hrw/radius.hpp"
#include "hrw/rng.hpp"

namespace hrw {

// Full description of the increment law X = R * U, optionally pushed through
// an ellipsoid map to X = A (R * U). Radius and direction are independent;
// each increment draws the radius first, then the direction, from the same
// stream, so runs are reproducible draw by draw.
struct IncrementSpec {
  RadiusDistribution radius;
  DirectionDistribution direction;
  std::optional<EllipsoidMap> map;

  IncrementSpec(RadiusDistribution r, DirectionDistribution d,
                std::optional<EllipsoidMap> m = std::nullopt);

  std::size_t dim() const { return direction.dim(); }
};

Vec sample_increment(const IncrementSpec& spec, Rng& rng);

struct WalkSample {
  std::uint64_t n = 0;
  Vec s_n;
  double max_norm = 0.0;  // running max of |X_i|
  double max_proj = 0.0;  // running max of <v, X_i> for the monitored v
  bool has_proj = false;
};

// Sum of n independent increments with running maxima. Deterministic given
// (spec, n, generator state). The monitored direction, when given, must be a
// unit vector of matching dimension.
WalkSample simulate_sum(const IncrementSpec& spec, std::uint64_t n, Rng& rng,
                        const std::optional<Vec>& monitor = std::nullopt);

}  // namespace hrw

#endif  // HRW_WALK_HPP
