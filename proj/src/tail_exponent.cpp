#include "hrw/tail_exponent.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hrw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const char* tail_family_name(TailFamily f) {
  switch (f) {
    case TailFamily::Weibull: return "weibull";
    case TailFamily::LognormalType: return "lognormal_type";
    case TailFamily::StretchedExp: return "stretched_exp";
    case TailFamily::PiecewiseConcave: return "piecewise_concave";
  }
  return "unknown";
}

TailExponent TailExponent::weibull(double c, double beta) {
  require(c > 0.0, "weibull: scale c must be positive");
  require(beta > 0.0 && beta < 1.0, "weibull: shape beta must lie in (0,1)");
  TailExponent e;
  e.family_ = TailFamily::Weibull;
  e.c_ = c;
  e.beta_ = beta;
  e.x0_ = 0.0;
  return e;
}

TailExponent TailExponent::lognormal_type(double p) {
  require(p > 1.0, "lognormal_type: power p must exceed 1");
  TailExponent e;
  e.family_ = TailFamily::LognormalType;
  e.p_ = p;
  // Anchor where the tangent line of (log x)^p passes through the origin;
  // from here outward the chord construction keeps global concavity.
  e.x0_ = std::exp(p);
  return e;
}

TailExponent TailExponent::stretched_exp(double l, double beta) {
  require(l > 0.0, "stretched_exp: level l must be positive");
  require(beta > 0.0 && beta < 1.0, "stretched_exp: shape beta must lie in (0,1)");
  TailExponent e;
  e.family_ = TailFamily::StretchedExp;
  e.l_ = l;
  e.beta_ = beta;
  e.x0_ = 0.0;
  return e;
}

TailExponent TailExponent::piecewise_concave(std::vector<Knot> knots,
                                             std::optional<double> declared_index) {
  require(knots.size() >= 2, "piecewise_concave: need at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    require(std::isfinite(knots[i].x) && std::isfinite(knots[i].h),
            "piecewise_concave: knots must be finite");
    require(knots[i].x > 0.0, "piecewise_concave: knot abscissae must be positive");
    require(knots[i].h >= 0.0, "piecewise_concave: knot values must be nonnegative");
    if (i > 0) {
      require(knots[i].x > knots[i - 1].x, "piecewise_concave: knot abscissae must increase");
      require(knots[i].h >= knots[i - 1].h, "piecewise_concave: knot values must not decrease");
    }
  }
  if (declared_index) {
    require(*declared_index >= 0.0, "piecewise_concave: declared index must be nonnegative");
  }
  TailExponent e;
  e.family_ = TailFamily::PiecewiseConcave;
  e.knots_ = std::move(knots);
  e.declared_index_ = declared_index;
  // Concavity (slopes nonincreasing) is deliberately not enforced here: the
  // assumption checker exists to detect its violation on concrete instances.
  e.x0_ = e.knots_.front().x;
  return e;
}

double TailExponent::segment_slope(std::size_t i) const {
  const Knot& a = knots_[i];
  const Knot& b = knots_[i + 1];
  return (b.h - a.h) / (b.x - a.x);
}

double TailExponent::raw_value(double x) const {
  switch (family_) {
    case TailFamily::Weibull:
      return c_ * std::pow(x, beta_);
    case TailFamily::LognormalType:
      return x < 1.0 ? 0.0 : std::pow(std::log(x), p_);
    case TailFamily::StretchedExp:
      return l_ * std::pow(x, beta_);
    case TailFamily::PiecewiseConcave: {
      const std::size_t m = knots_.size();
      if (x <= knots_.front().x) {
        const double s = segment_slope(0);
        return std::max(0.0, knots_.front().h + s * (x - knots_.front().x));
      }
      if (x >= knots_.back().x) {
        const double s = segment_slope(m - 2);
        return knots_.back().h + s * (x - knots_.back().x);
      }
      std::size_t lo = 0, hi = m - 1;
      while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (knots_[mid].x <= x ? lo : hi) = mid;
      }
      return knots_[lo].h + segment_slope(lo) * (x - knots_[lo].x);
    }
  }
  return kNaN;
}

double TailExponent::value(double x) const {
  if (!(x > 0.0)) throw std::domain_error("tail exponent: argument must be positive");
  if (head_ && x < head_->x0) return head_->intercept + head_->slope * x;
  return raw_value(x);
}

double TailExponent::difference(double x, double y) const {
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("tail exponent: argument must be positive");
  if (x < y) throw std::domain_error("tail exponent: difference requires x >= y");
  if (x == y) return 0.0;

  const double head_end = head_ ? head_->x0 : 0.0;
  switch (family_) {
    case TailFamily::Weibull:
    case TailFamily::StretchedExp: {
      if (y >= head_end) {
        // c x^b - c y^b = -c x^b expm1(b log1p((y-x)/x)), stable for y near x.
        const double cc = (family_ == TailFamily::Weibull) ? c_ : l_;
        return -cc * std::pow(x, beta_) * std::expm1(beta_ * std::log1p((y - x) / x));
      }
      break;
    }
    case TailFamily::LognormalType: {
      if (y >= std::max(1.0, head_end)) {
        const double a = std::log(x);
        const double delta = -std::log1p((y - x) / x);  // log x - log y >= 0
        if (a > 0.0) return -std::pow(a, p_) * std::expm1(p_ * std::log1p(-delta / a));
        return 0.0;
      }
      break;
    }
    case TailFamily::PiecewiseConcave:
      // Piecewise linear: exact within a segment, otherwise the plain
      // difference below is accurate enough (knot values are user scale).
      break;
  }
  return value(x) - value(y);
}

double TailExponent::support_start() const {
  if (head_) {
    if (head_->intercept > 0.0) return 0.0;
    if (head_->slope > 0.0) return 0.0;  // h = slope*x > 0 for every x > 0
    return head_->x0;                    // flat zero head
  }
  switch (family_) {
    case TailFamily::Weibull:
    case TailFamily::StretchedExp:
      return 0.0;
    case TailFamily::LognormalType:
      return 1.0;
    case TailFamily::PiecewiseConcave: {
      if (knots_.front().h > 0.0) {
        const double s = segment_slope(0);
        if (s <= 0.0) return 0.0;
        return std::max(0.0, knots_.front().x - knots_.front().h / s);
      }
      // h starts at zero; find where it leaves zero.
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (knots_[i].h > 0.0) return knots_[i - 1].x;
      }
      // Identically zero over the knots; positive only past the last knot if
      // the final slope is.
      return knots_.back().x;
    }
  }
  return 0.0;
}

double TailExponent::inverse(double t) const {
  if (t <= 0.0) return support_start();

  if (head_ && head_->slope > 0.0) {
    const double head_top = head_->intercept + head_->slope * head_->x0;
    if (t <= head_top) return std::max(0.0, (t - head_->intercept) / head_->slope);
  }

  switch (family_) {
    case TailFamily::Weibull:
      return std::pow(t / c_, 1.0 / beta_);
    case TailFamily::StretchedExp:
      return std::pow(t / l_, 1.0 / beta_);
    case TailFamily::LognormalType:
      return std::exp(std::pow(t, 1.0 / p_));
    case TailFamily::PiecewiseConcave: {
      // Bisection against the evaluated exponent, 1e-12 absolute on x.
      double lo = support_start();
      double hi = std::max(knots_.back().x, std::max(lo, 1.0));
      int expansions = 0;
      while (value(std::max(hi, 1e-300)) < t) {
        hi *= 2.0;
        if (++expansions > 2100) {
          throw std::domain_error("tail exponent: not invertible at this level (bounded tail)");
        }
      }
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // no representable midpoint left
        (value(std::max(mid, 1e-300)) >= t ? hi : lo) = mid;
      }
      return hi;
    }
  }
  return kNaN;
}

double TailExponent::rv_index() const {
  switch (family_) {
    case TailFamily::Weibull:
    case TailFamily::StretchedExp:
      return beta_;
    case TailFamily::LognormalType:
      return 0.0;
    case TailFamily::PiecewiseConcave:
      if (declared_index_) return *declared_index_;
      throw std::domain_error("piecewise_concave: regular-variation index unknown (none declared)");
  }
  return kNaN;
}

double TailExponent::shape_parameter() const {
  switch (family_) {
    case TailFamily::Weibull:
    case TailFamily::StretchedExp:
      return beta_;
    case TailFamily::LognormalType:
      return p_;
    case TailFamily::PiecewiseConcave:
      return declared_index_ ? *declared_index_ : kNaN;
  }
  return kNaN;
}

TailExponent TailExponent::normalized() const {
  if (head_) return *this;

  switch (family_) {
    case TailFamily::Weibull:
    case TailFamily::StretchedExp:
      // Already concave and nondecreasing on [0, inf) with h(0) = 0.
      return *this;
    case TailFamily::LognormalType: {
      TailExponent e = *this;
      const double slope = std::pow(p_, p_) / std::exp(p_);  // h(e^p)/e^p
      e.head_ = LinearHead{std::exp(p_), 0.0, slope};
      e.x0_ = 0.0;
      return e;
    }
    case TailFamily::PiecewiseConcave: {
      // Anchor the linear head at the first knot whose forward-slope line has
      // a nonnegative intercept; replacing h on [0, x_k] by that line keeps
      // continuity at x_k and global concavity, provided the slopes past the
      // anchor are nonincreasing.
      const std::size_t m = knots_.size();
      std::size_t anchor = m;
      double slope = 0.0, intercept = -1.0;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        const double s = segment_slope(k);
        const double i0 = knots_[k].h - s * knots_[k].x;
        if (i0 >= 0.0) {
          anchor = k;
          slope = s;
          intercept = i0;
          break;
        }
      }
      if (anchor == m) {
        const double s = segment_slope(m - 2);
        const double i0 = knots_.back().h - s * knots_.back().x;
        if (i0 >= 0.0) {
          anchor = m - 1;
          slope = s;
          intercept = i0;
        }
      }
      if (anchor == m) {
        throw std::domain_error(
            "piecewise_concave: cannot normalize, every chord through the origin "
            "undercuts the tail slope");
      }
      for (std::size_t k = anchor; k + 2 < m; ++k) {
        if (segment_slope(k + 1) > segment_slope(k) * (1.0 + 1e-12) + 1e-300) {
          throw std::domain_error("piecewise_concave: cannot normalize a non-concave exponent");
        }
      }
      if (anchor > 0 && slope > segment_slope(anchor - 1)) {
        throw std::domain_error("piecewise_concave: cannot normalize a non-concave exponent");
      }
      TailExponent e = *this;
      e.head_ = LinearHead{knots_[anchor].x, intercept, slope};
      e.x0_ = 0.0;
      return e;
    }
  }
  return *this;
}

AssumptionA1Report check_assumption_a1(const TailExponent& e, const std::vector<double>& grid) {
  const std::size_t m = grid.size();
  if (m < 8) throw std::invalid_argument("assumption check: grid needs at least 8 points");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
      throw std::invalid_argument("assumption check: grid must be positive and finite");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("assumption check: grid must be strictly increasing");
  }
  if (grid.back() / grid.front() < 1e3)
    throw std::invalid_argument("assumption check: grid must span at least three orders of magnitude");

  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = e.value(grid[i]);

  AssumptionA1Report report;

  // (i) nondecreasing values.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (v[i + 1] < v[i]) {
      report.nondecreasing = {false, grid[i + 1], v[i + 1] - v[i]};
      break;
    }
  }

  // (ii) chord slopes nonincreasing from the concavity threshold on.
  {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (grid[i] >= e.concavity_threshold()) idx.push_back(i);
    double prev_slope = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      const std::size_t i = idx[k], j = idx[k + 1];
      const double s = (v[j] - v[i]) / (grid[j] - grid[i]);
      const double tol = 1e-12 * std::max({std::fabs(s), std::fabs(prev_slope), 1.0});
      if (s > prev_slope + tol) {
        report.concave = {false, grid[i], s - prev_slope};
        break;
      }
      prev_slope = s;
    }
  }

  // (iii) h(x)/x strictly decreasing and h(x)/log(x) strictly increasing over
  // the top half of the grid.
  {
    const std::size_t start = m / 2;
    for (std::size_t i = start; i < m; ++i) {
      if (grid[i] <= 1.0)
        throw std::invalid_argument("assumption check: top half of the grid must exceed 1");
    }
    for (std::size_t i = start; i + 1 < m; ++i) {
      const double r0 = v[i] / grid[i];
      const double r1 = v[i + 1] / grid[i + 1];
      if (!(r1 < r0)) {
        report.growth = {false, grid[i + 1], r1 - r0};
        break;
      }
      const double g0 = v[i] / std::log(grid[i]);
      const double g1 = v[i + 1] / std::log(grid[i + 1]);
      if (!(g1 > g0)) {
        report.growth = {false, grid[i + 1], g1 - g0};
        break;
      }
    }
  }

  return report;
}

}  // namespace hrw
