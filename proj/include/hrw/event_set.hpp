#ifndef HRW_EVENT_SET_HPP
#define HRW_EVENT_SET_HPP

#include <memory>
#include <vector>

#include "hrw/ellipsoid.hpp"
#include "hrw/linalg.hpp"

namespace hrw {

// Spherical cap without a weight; the geometric building block of cone sets.
struct GeoCap {
  Vec center;             // unit vector
  double angular_radius;  // in (0, pi]
};

// Tail event over which exceedance probabilities and rate infima are taken.
//
//   BallComplement(a)   { x : |x| > a }
//   Cone(a, caps)       { x : |x| > a, x/|x| in the cap union }
//   HalfSpace(v, a)     { x : <v, x> > a }
//   Mapped(inner, L)    { x : L^{-1}(x) in inner }
//
// All thresholds are strict, so each variant is open (Mapped is the preimage
// of an open set under a linear bijection).
class EventSet {
 public:
  enum class Kind { BallComplement, Cone, HalfSpace, Mapped };

  static EventSet ball_complement(double a);
  static EventSet cone(double a, std::vector<GeoCap> caps);
  static EventSet half_space(Vec v, double a);
  static EventSet mapped(EventSet inner, EllipsoidMap map);

  Kind kind() const { return kind_; }
  bool contains(const Vec& x) const;

  double threshold() const { return a_; }
  const std::vector<GeoCap>& caps() const { return caps_; }
  const Vec& normal() const { return v_; }
  const EventSet& inner() const { return *inner_; }
  const EllipsoidMap& map() const { return *map_; }

  // 0 when the set works in any dimension (plain ball complement).
  std::size_t dim() const;

 private:
  EventSet() = default;

  Kind kind_ = Kind::BallComplement;
  double a_ = 0.0;
  std::vector<GeoCap> caps_;
  Vec v_;
  std::shared_ptr<const EventSet> inner_;
  std::shared_ptr<const EllipsoidMap> map_;
};

}  // namespace hrw

#endif  // HRW_EVENT_SET_HPP
