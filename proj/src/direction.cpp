#include "hrw/direction.hpp"

#include <cmath>
#include <stdexcept>

namespace hrw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr double kUnitTol = 1e-12;
constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

DirectionDistribution::DirectionDistribution(std::size_t dim, std::vector<Cap> caps,
                                             double base_weight)
    : dim_(dim), caps_(std::move(caps)), base_weight_(base_weight) {
  require(dim_ >= 2, "direction: dimension must be at least 2");
  require(base_weight_ > 0.0 || caps_.empty(),
          "direction: base uniform weight must be positive");

  total_weight_ = base_weight_;
  for (const Cap& cap : caps_) {
    require(cap.center.size() == dim_, "direction: cap center dimension mismatch");
    require(std::fabs(norm2(cap.center) - 1.0) <= kUnitTol,
            "direction: cap centers must be unit vectors");
    require(cap.angular_radius > 0.0 && cap.angular_radius <= kPi,
            "direction: cap angular radius must lie in (0, pi]");
    require(cap.weight > 0.0, "direction: cap weights must be positive");
    total_weight_ += cap.weight;
  }

  // Caps must pair up antipodally with equal geometry and weight; this keeps
  // E(U) = 0 by construction instead of by an unverifiable numeric limit.
  std::vector<bool> matched(caps_.size(), false);
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (matched[i]) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < caps_.size(); ++j) {
      if (matched[j]) continue;
      double mirror_gap = 0.0;
      for (std::size_t k = 0; k < dim_; ++k)
        mirror_gap = std::max(mirror_gap, std::fabs(caps_[i].center[k] + caps_[j].center[k]));
      if (mirror_gap <= kUnitTol &&
          std::fabs(caps_[i].angular_radius - caps_[j].angular_radius) <= kUnitTol &&
          std::fabs(caps_[i].weight - caps_[j].weight) <=
              kUnitTol * std::max(1.0, caps_[i].weight)) {
        matched[i] = matched[j] = true;
        found = true;
        break;
      }
    }
    require(found, "direction: caps must come in antipodal pairs with equal weights");
  }
}

DirectionDistribution DirectionDistribution::uniform(std::size_t dim) {
  return DirectionDistribution(dim, {}, 1.0);
}

DirectionDistribution DirectionDistribution::cap_mixture(std::size_t dim, std::vector<Cap> caps,
                                                         double base_weight) {
  require(!caps.empty(), "direction: cap mixture needs at least one cap");
  return DirectionDistribution(dim, std::move(caps), base_weight);
}

Vec DirectionDistribution::sample_uniform(Rng& rng) const {
  Vec u(dim_);
  while (true) {
    for (std::size_t i = 0; i + 1 < dim_; i += 2) {
      const auto [g1, g2] = rng.gaussian_pair();
      u[i] = g1;
      u[i + 1] = g2;
    }
    if (dim_ % 2 == 1) u[dim_ - 1] = rng.gaussian_pair().first;
    const double n = norm2(u);
    if (n > 1e-150) {
      for (double& c : u) c /= n;
      return u;
    }
  }
}

Vec DirectionDistribution::sample(Rng& rng) const {
  if (caps_.empty()) return sample_uniform(rng);

  double pick = rng.uniform() * total_weight_;
  if (pick <= base_weight_) return sample_uniform(rng);
  pick -= base_weight_;
  std::size_t chosen = caps_.size() - 1;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (pick <= caps_[i].weight) {
      chosen = i;
      break;
    }
    pick -= caps_[i].weight;
  }

  const Cap& cap = caps_[chosen];
  const double cos_limit = std::cos(cap.angular_radius);
  while (true) {
    Vec u = sample_uniform(rng);
    if (dot(u, cap.center) >= cos_limit) return u;
  }
}

}  // namespace hrw
