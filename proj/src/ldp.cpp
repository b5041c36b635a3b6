#include "hrw/ldp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrw {

namespace {

// min over the closed cap {angle(u, center) <= theta} of |A^{-1} u|.
//
// On the sphere the only interior critical directions of u -> |A^{-1}u| are
// eigendirections of A, so the minimum is attained either at an
// eigendirection inside the cap or on the cap boundary. The boundary is two
// points for d = 2 and a circle for d = 3, which is scanned with a
// deterministic 4096-point grid refined by golden-section search.
double min_inverse_norm_on_cap(const EllipsoidMap& map, const GeoCap& cap) {
  const std::size_t d = map.dim();
  const double cos_limit = std::cos(cap.angular_radius);
  double best = std::numeric_limits<double>::infinity();

  const auto value_at = [&](const Vec& u) { return norm2(map.inverse(u)); };

  // Eigendirections (both signs) lying inside the cap.
  for (std::size_t k = 0; k < d; ++k) {
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = map.eigen().vectors(i, k);
    for (int sign = 0; sign < 2; ++sign) {
      if (dot(v, cap.center) >= cos_limit) best = std::min(best, value_at(v));
      for (double& c : v) c = -c;
    }
  }

  if (cap.angular_radius >= 3.14159265358979323846) return best;  // whole sphere

  if (d == 2) {
    // Boundary = the two arc endpoints.
    const Vec& c = cap.center;
    const Vec perp = {-c[1], c[0]};
    const double ct = std::cos(cap.angular_radius), st = std::sin(cap.angular_radius);
    for (int sign : {+1, -1}) {
      Vec u(2);
      for (std::size_t i = 0; i < 2; ++i) u[i] = ct * c[i] + sign * st * perp[i];
      best = std::min(best, value_at(u));
    }
    return best;
  }

  if (d == 3) {
    // Orthonormal pair spanning the plane orthogonal to the cap center.
    const Vec& c = cap.center;
    Vec e1(3);
    if (std::fabs(c[0]) <= std::fabs(c[1]) && std::fabs(c[0]) <= std::fabs(c[2]))
      e1 = {0.0, -c[2], c[1]};
    else if (std::fabs(c[1]) <= std::fabs(c[2]))
      e1 = {-c[2], 0.0, c[0]};
    else
      e1 = {-c[1], c[0], 0.0};
    const double n1 = norm2(e1);
    for (double& v : e1) v /= n1;
    Vec e2 = {c[1] * e1[2] - c[2] * e1[1], c[2] * e1[0] - c[0] * e1[2],
              c[0] * e1[1] - c[1] * e1[0]};

    const double ct = std::cos(cap.angular_radius), st = std::sin(cap.angular_radius);
    const auto boundary_value = [&](double t) {
      Vec u(3);
      for (std::size_t i = 0; i < 3; ++i)
        u[i] = ct * c[i] + st * (std::cos(t) * e1[i] + std::sin(t) * e2[i]);
      return value_at(u);
    };

    constexpr int kGrid = 4096;
    constexpr double kTwoPi = 6.28318530717958647692528676655900577;
    double best_t = 0.0, best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
      const double t = kTwoPi * i / kGrid;
      const double val = boundary_value(t);
      if (val < best_val) {
        best_val = val;
        best_t = t;
      }
    }
    // Golden-section refinement around the best grid cell.
    double lo = best_t - kTwoPi / kGrid, hi = best_t + kTwoPi / kGrid;
    const double invphi = 0.6180339887498948482;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = boundary_value(x1), f2 = boundary_value(x2);
    while (hi - lo > 1e-12) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = boundary_value(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = boundary_value(x2);
      }
    }
    return std::min(best, std::min(f1, f2));
  }

  throw std::invalid_argument("inf_rate: mapped cone infimum supported for dimension 2 or 3 only");
}

}  // namespace

RateFunction::RateFunction(const TailExponent& exponent) {
  alpha_ = exponent.rv_index();
  exponent_ = exponent;
}

RateFunction RateFunction::from_index(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("rate function: index must be nonnegative");
  RateFunction rf;
  rf.alpha_ = alpha;
  return rf;
}

double RateFunction::radial(double r) const {
  if (r < 0.0) throw std::domain_error("rate function: radius must be nonnegative");
  if (r == 0.0) return 0.0;
  if (alpha_ == 0.0) return 1.0;
  return std::pow(r, alpha_);
}

double inf_rate(const RateFunction& rf, const EventSet& set) {
  switch (set.kind()) {
    case EventSet::Kind::BallComplement:
    case EventSet::Kind::Cone:
    case EventSet::Kind::HalfSpace:
      // The rate depends on the norm alone, so the direction constraint of a
      // cone and the tilt of a half-space do not move the infimum: the
      // nearest points of all three sets sit at distance a from the origin.
      return rf.radial(set.threshold());
    case EventSet::Kind::Mapped: {
      const EventSet& inner = set.inner();
      const EllipsoidMap& map = set.map();
      switch (inner.kind()) {
        case EventSet::Kind::BallComplement:
          // Nearest preimage point of {|y| > a}: distance a / sigma_max(A).
          return rf.radial(inner.threshold() / map.sigma_max());
        case EventSet::Kind::HalfSpace: {
          // {y : <v, Ay> > a} = {y : <Av, y> > a}; nearest point a / |Av|.
          const Vec w = map.matrix().apply(inner.normal());
          return rf.radial(inner.threshold() / norm2(w));
        }
        case EventSet::Kind::Cone: {
          double closest = std::numeric_limits<double>::infinity();
          for (const GeoCap& cap : inner.caps())
            closest = std::min(closest, min_inverse_norm_on_cap(map, cap));
          return rf.radial(inner.threshold() * closest);
        }
        case EventSet::Kind::Mapped:
          throw std::invalid_argument("inf_rate: nested mapped sets are not supported");
      }
      break;
    }
  }
  throw std::invalid_argument("inf_rate: unsupported set variant");
}

std::pair<double, double> ldp_bounds(const RateFunction& rf, const EventSet& set) {
  const double v = inf_rate(rf, set);
  return {-v, -v};
}

double theoretical_log_asymptote(const TailExponent& exponent, double n, double a) {
  if (!(n >= 1.0)) throw std::invalid_argument("theoretical_log_asymptote: n must be at least 1");
  if (!(a > 0.0)) throw std::invalid_argument("theoretical_log_asymptote: a must be positive");
  return -exponent.value(n * a);
}

}  // namespace hrw
