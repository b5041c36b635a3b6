#ifndef HRW_TAIL_EXPONENT_HPP
#define HRW_TAIL_EXPONENT_HPP

#include <optional>
#include <vector>

namespace hrw {

enum class TailFamily { Weibull, LognormalType, StretchedExp, PiecewiseConcave };

const char* tail_family_name(TailFamily f);

struct Knot {
  double x;
  double h;
};

// Tail exponent: the function h with -log P(R > x) = h(x) for the radius law.
//
// Built-in families:
//   Weibull           h(x) = c * x^beta            c > 0, beta in (0,1)
//   LognormalType     h(x) = (log x)^p for x >= 1, h = 0 on (0,1), p > 1
//   StretchedExp      h(x) = l * x^beta            constant slowly-varying level
//   PiecewiseConcave  linear interpolation through knots; extrapolated with the
//                     first/last segment slope, clamped at zero below
//
// All families are nondecreasing with h >= 0 and concave from
// concavity_threshold() on. normalized() replaces h on [0, x0] by a linear
// head with nonnegative intercept, making the result concave and
// nondecreasing on all of [0, inf) and therefore subadditive, while leaving
// it unchanged from x0 on.
class TailExponent {
 public:
  static TailExponent weibull(double c, double beta);
  static TailExponent lognormal_type(double p);
  static TailExponent stretched_exp(double l, double beta);
  static TailExponent piecewise_concave(std::vector<Knot> knots,
                                        std::optional<double> declared_index = std::nullopt);

  TailFamily family() const { return family_; }

  // h(x); throws std::domain_error for x <= 0.
  double value(double x) const;
  double operator()(double x) const { return value(x); }

  // h(x) - h(y) for x >= y > 0, computed without the catastrophic cancellation
  // a direct subtraction suffers when x and y are large and close.
  double difference(double x, double y) const;

  // Smallest x with h(x) >= t for t > 0; support_start() for t <= 0.
  // Closed form for the analytic families, bisection (1e-12 absolute on x)
  // for PiecewiseConcave.
  double inverse(double t) const;

  // Regular-variation index alpha with h(ax)/h(x) -> a^alpha.
  // Weibull/StretchedExp: beta. LognormalType: 0. PiecewiseConcave: the
  // declared index; throws std::domain_error when none was declared.
  double rv_index() const;

  // Point from which h is concave (and the anchor of the linear head used by
  // normalized()). 0 for Weibull/StretchedExp, e^p for LognormalType, the
  // first knot for PiecewiseConcave, 0 after normalization.
  double concavity_threshold() const { return x0_; }

  // Upper end of {x : h(x) = 0}; P(R > x) = 1 up to this point.
  double support_start() const;

  bool has_linear_head() const { return head_.has_value(); }
  TailExponent normalized() const;

  // Family parameters, for serialization and reporting.
  double param_c() const { return c_; }
  double param_beta() const { return beta_; }
  double param_p() const { return p_; }
  double param_l() const { return l_; }
  const std::vector<Knot>& knots() const { return knots_; }
  std::optional<double> declared_index() const { return declared_index_; }

  // The scalar parameter conventionally reported next to the family name
  // (beta, p, or the declared index; NaN when unknown).
  double shape_parameter() const;

 private:
  struct LinearHead {
    double x0;
    double intercept;
    double slope;
  };

  TailExponent() = default;
  double raw_value(double x) const;
  double segment_slope(std::size_t i) const;  // slope of [knot i, knot i+1]

  TailFamily family_ = TailFamily::Weibull;
  double c_ = 0.0;
  double beta_ = 0.0;
  double p_ = 0.0;
  double l_ = 0.0;
  std::vector<Knot> knots_;
  std::optional<double> declared_index_;
  double x0_ = 0.0;
  std::optional<LinearHead> head_;
};

struct A1CheckItem {
  bool passed = true;
  double witness_x = 0.0;      // grid point where the check first fails
  double witness_value = 0.0;  // offending quantity at the witness
};

struct AssumptionA1Report {
  A1CheckItem nondecreasing;  // h nondecreasing along the grid
  A1CheckItem concave;        // successive chord slopes nonincreasing beyond x0
  A1CheckItem growth;         // h/x strictly decreasing and h/log x strictly
                              // increasing over the top half of the grid
  bool pass() const { return nondecreasing.passed && concave.passed && growth.passed; }
};

// Numeric shape check of the tail-exponent assumptions on a finite grid.
// The grid must be strictly increasing with at least 8 points spanning at
// least three orders of magnitude; the top half must lie above 1.
AssumptionA1Report check_assumption_a1(const TailExponent& e, const std::vector<double>& grid);

}  // namespace hrw

#endif  // HRW_TAIL_EXPONENT_HPP
