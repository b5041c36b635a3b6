#ifndef HRW_DIRECTION_HPP
#define HRW_DIRECTION_HPP

#include <cstddef>
#include <vector>

#include "hrw/linalg.hpp"
#include "hrw/rng.hpp"

namespace hrw {

// Spherical cap with a mixture weight, for direction laws that concentrate
// mass around chosen axes.
struct Cap {
  Vec center;            // unit vector
  double angular_radius;  // in (0, pi]
  double weight;          // > 0
};

// Law of the unit direction U. Either uniform on the sphere, or a cap
// mixture: a mandatory uniform component of weight w0 > 0 (which guarantees
// full support) plus caps that must come in antipodal pairs of equal weight,
// so the mean direction is structurally zero.
class DirectionDistribution {
 public:
  static DirectionDistribution uniform(std::size_t dim);
  static DirectionDistribution cap_mixture(std::size_t dim, std::vector<Cap> caps,
                                           double base_weight);

  std::size_t dim() const { return dim_; }
  bool is_uniform() const { return caps_.empty(); }
  const std::vector<Cap>& caps() const { return caps_; }
  double base_weight() const { return base_weight_; }

  // A unit vector (norm 1 within 1e-12). A cap component is drawn by weight,
  // then filled by rejection from the uniform sphere restricted to the cap.
  Vec sample(Rng& rng) const;

 private:
  DirectionDistribution(std::size_t dim, std::vector<Cap> caps, double base_weight);
  Vec sample_uniform(Rng& rng) const;

  std::size_t dim_;
  std::vector<Cap> caps_;
  double base_weight_;
  double total_weight_;
};

}  // namespace hrw

#endif  // HRW_DIRECTION_HPP
