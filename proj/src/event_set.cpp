#include "hrw/event_set.hpp"

#include <cmath>
#include <stdexcept>

namespace hrw {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

EventSet EventSet::ball_complement(double a) {
  require(a > 0.0, "event set: radius must be positive");
  EventSet s;
  s.kind_ = Kind::BallComplement;
  s.a_ = a;
  return s;
}

EventSet EventSet::cone(double a, std::vector<GeoCap> caps) {
  require(a > 0.0, "event set: radius must be positive");
  require(!caps.empty(), "event set: cone needs at least one cap");
  const std::size_t d = caps.front().center.size();
  for (const GeoCap& cap : caps) {
    require(cap.center.size() == d, "event set: cap dimensions differ");
    require(std::fabs(norm2(cap.center) - 1.0) <= 1e-12,
            "event set: cap centers must be unit vectors");
    require(cap.angular_radius > 0.0 && cap.angular_radius <= kPi,
            "event set: cap angular radius must lie in (0, pi]");
  }
  EventSet s;
  s.kind_ = Kind::Cone;
  s.a_ = a;
  s.caps_ = std::move(caps);
  return s;
}

EventSet EventSet::half_space(Vec v, double a) {
  require(a > 0.0, "event set: level must be positive");
  require(std::fabs(norm2(v) - 1.0) <= 1e-12, "event set: normal must be a unit vector");
  EventSet s;
  s.kind_ = Kind::HalfSpace;
  s.a_ = a;
  s.v_ = std::move(v);
  return s;
}

EventSet EventSet::mapped(EventSet inner, EllipsoidMap map) {
  const std::size_t inner_dim = inner.dim();
  require(inner_dim == 0 || inner_dim == map.dim(),
          "event set: inner set and map dimensions differ");
  EventSet s;
  s.kind_ = Kind::Mapped;
  s.a_ = inner.a_;
  s.inner_ = std::make_shared<const EventSet>(std::move(inner));
  s.map_ = std::make_shared<const EllipsoidMap>(std::move(map));
  return s;
}

std::size_t EventSet::dim() const {
  switch (kind_) {
    case Kind::BallComplement: return 0;
    case Kind::Cone: return caps_.front().center.size();
    case Kind::HalfSpace: return v_.size();
    case Kind::Mapped: return map_->dim();
  }
  return 0;
}

bool EventSet::contains(const Vec& x) const {
  switch (kind_) {
    case Kind::BallComplement:
      return norm2(x) > a_;
    case Kind::Cone: {
      const double n = norm2(x);
      if (!(n > a_)) return false;
      for (const GeoCap& cap : caps_) {
        if (dot(x, cap.center) >= n * std::cos(cap.angular_radius)) return true;
      }
      return false;
    }
    case Kind::HalfSpace:
      return dot(v_, x) > a_;
    case Kind::Mapped:
      return inner_->contains(map_->inverse(x));
  }
  return false;
}

}  // namespace hrw
