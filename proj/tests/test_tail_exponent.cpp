#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "hrw/rng.hpp"
#include "hrw/tail_exponent.hpp"

using hrw::Knot;
using hrw::TailExponent;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> half_decade_grid(double lo_exp, double hi_exp) {
  std::vector<double> grid;
  for (double e = lo_exp; e <= hi_exp + 1e-9; e += 0.5) grid.push_back(std::pow(10.0, e));
  return grid;
}

}  // namespace

TEST_CASE("tail exponent evaluates the built-in families", "[tail]") {
  CHECK(TailExponent::weibull(1.0, 0.5).value(4.0) == 2.0);
  CHECK(TailExponent::lognormal_type(2.0).value(1.0) == 0.0);
  CHECK(TailExponent::weibull(2.0, 0.5).value(1.0) == 2.0);
  CHECK_THAT(TailExponent::stretched_exp(3.0, 0.7).value(10.0),
             WithinRel(3.0 * std::pow(10.0, 0.7), 1e-15));

  const TailExponent pw = TailExponent::piecewise_concave({{1.0, 1.0}, {3.0, 2.0}, {7.0, 3.0}});
  CHECK_THAT(pw.value(2.0), WithinRel(1.5, 1e-15));        // interpolation
  CHECK_THAT(pw.value(11.0), WithinRel(4.0, 1e-15));       // last-slope extrapolation
  CHECK_THAT(pw.value(0.1), WithinRel(0.55, 1e-12));       // first-slope extrapolation
  const TailExponent steep = TailExponent::piecewise_concave({{1.0, 0.1}, {2.0, 10.0}});
  CHECK(steep.value(0.9) == 0.0);                          // clamped at zero below

  CHECK_THROWS_AS(TailExponent::weibull(1.0, 0.5).value(0.0), std::domain_error);
  CHECK_THROWS_AS(TailExponent::weibull(1.0, 0.5).value(-1.0), std::domain_error);
}

TEST_CASE("tail exponent rejects bad parameters", "[tail]") {
  CHECK_THROWS_AS(TailExponent::weibull(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::weibull(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::lognormal_type(1.0), std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::stretched_exp(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::piecewise_concave({{1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::piecewise_concave({{1.0, 1.0}, {1.0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TailExponent::piecewise_concave({{1.0, 2.0}, {2.0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("regular-variation index per family", "[tail]") {
  CHECK(TailExponent::weibull(1.0, 0.3).rv_index() == 0.3);
  CHECK(TailExponent::lognormal_type(2.0).rv_index() == 0.0);
  CHECK(TailExponent::stretched_exp(3.0, 0.7).rv_index() == 0.7);
  CHECK(TailExponent::piecewise_concave({{1.0, 1.0}, {2.0, 1.5}}, 0.4).rv_index() == 0.4);
  CHECK_THROWS_AS(TailExponent::piecewise_concave({{1.0, 1.0}, {2.0, 1.5}}).rv_index(),
                  std::domain_error);
}

TEST_CASE("index matches the h(aX)/h(X) limit where the limit is reachable", "[tail]") {
  const double big = 1e10;
  for (const double a : {0.5, 2.0, 10.0}) {
    for (const TailExponent& e :
         {TailExponent::weibull(1.0, 0.3), TailExponent::weibull(2.5, 0.8),
          TailExponent::stretched_exp(3.0, 0.7)}) {
      CHECK_THAT(e.value(a * big) / e.value(big), WithinAbs(std::pow(a, e.rv_index()), 1e-3));
    }
  }
  // The index-0 family approaches its limit only logarithmically: the finite-X
  // gap is (1 + log a / log X)^p - 1, far above 1e-3 at X = 1e10. Check the
  // gap against that bound and that it shrinks with X.
  const TailExponent ln = TailExponent::lognormal_type(2.0);
  for (const double a : {0.5, 2.0, 10.0}) {
    const double gap10 = std::fabs(ln.value(a * 1e10) / ln.value(1e10) - 1.0);
    const double gap14 = std::fabs(ln.value(a * 1e14) / ln.value(1e14) - 1.0);
    const double bound10 = std::fabs(std::pow(1.0 + std::log(a) / std::log(1e10), 2.0) - 1.0);
    CHECK(gap10 <= bound10 * (1.0 + 1e-9));
    CHECK(gap14 < gap10);
  }
}

TEST_CASE("assumption checker passes the built-in families", "[tail]") {
  const auto weibull_report =
      hrw::check_assumption_a1(TailExponent::weibull(1.0, 0.5), half_decade_grid(0.0, 6.0));
  CHECK(weibull_report.pass());

  const auto lognormal_report =
      hrw::check_assumption_a1(TailExponent::lognormal_type(1.5), half_decade_grid(1.0, 7.0));
  CHECK(lognormal_report.pass());

  const auto stretched_report =
      hrw::check_assumption_a1(TailExponent::stretched_exp(2.0, 0.7), half_decade_grid(0.0, 6.0));
  CHECK(stretched_report.pass());
}

TEST_CASE("assumption checker flags a convexity violation with its knot", "[tail]") {
  // Slopes 0.5 then 1.25: increasing at the knot x = 2.
  const TailExponent bad =
      TailExponent::piecewise_concave({{1.0, 1.0}, {2.0, 1.5}, {4.0, 4.0}});
  const std::vector<double> grid = {1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0, 1024.0, 4096.0};
  const auto report = hrw::check_assumption_a1(bad, grid);
  CHECK(report.nondecreasing.passed);
  CHECK_FALSE(report.concave.passed);
  CHECK(report.concave.witness_x == 2.0);
  CHECK_FALSE(report.pass());
}

TEST_CASE("assumption checker validates its grid", "[tail]") {
  const TailExponent e = TailExponent::weibull(1.0, 0.5);
  CHECK_THROWS_AS(hrw::check_assumption_a1(e, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(hrw::check_assumption_a1(e, {1, 2, 3, 4, 5, 6, 7, 8}), std::invalid_argument);
  CHECK_THROWS_AS(
      hrw::check_assumption_a1(e, {1, 2, 2, 4, 100, 1000, 2000, 4000}), std::invalid_argument);
}

TEST_CASE("normalization leaves zero-at-origin families untouched", "[tail]") {
  const TailExponent e = TailExponent::weibull(1.0, 0.5);
  const TailExponent n = e.normalized();
  CHECK_FALSE(n.has_linear_head());
  for (double x : {0.01, 1.0, 100.0}) CHECK(n.value(x) == e.value(x));
}

TEST_CASE("normalization of the lognormal-type exponent is the origin tangent", "[tail]") {
  const double p = 2.0;
  const TailExponent e = TailExponent::lognormal_type(p);
  const TailExponent n = e.normalized();
  const double x0 = std::exp(p);
  const double slope = 4.0 / x0;  // h(e^2) = 4 through the origin

  REQUIRE(n.has_linear_head());
  CHECK_THAT(n.value(1.0), WithinRel(slope, 1e-12));
  CHECK_THAT(n.value(x0), WithinRel(4.0, 1e-12));
  CHECK_THAT(n.value(0.5), WithinRel(0.5 * slope, 1e-12));
  CHECK(n.value(1e-12) < 1e-10);  // head intercept is zero
  // Unchanged beyond the anchor.
  for (double x : {x0 * 1.0001, 100.0, 1e6}) CHECK(n.value(x) == e.value(x));
  // Globally concave and nondecreasing now (threshold 0).
  CHECK(n.concavity_threshold() == 0.0);
  const auto report = hrw::check_assumption_a1(n, half_decade_grid(-2.0, 6.0));
  CHECK(report.pass());
}

TEST_CASE("normalization of piecewise exponents clamps the head at zero", "[tail]") {
  // First-segment intercept is positive: head extends that segment.
  const TailExponent a = TailExponent::piecewise_concave({{1.0, 2.0}, {3.0, 4.0}});
  const TailExponent an = a.normalized();
  REQUIRE(an.has_linear_head());
  CHECK_THAT(an.value(0.5), WithinRel(1.5, 1e-12));  // 1 + 1*x
  CHECK(an.value(2.0) == a.value(2.0));

  // First-segment intercept is negative: the head anchors at the first knot
  // whose forward line clears the origin, keeping the result concave.
  const TailExponent b =
      TailExponent::piecewise_concave({{1.0, 0.1}, {2.0, 10.0}, {3.0, 10.5}});
  const TailExponent bn = b.normalized();
  REQUIRE(bn.has_linear_head());
  CHECK(bn.value(1e-12) >= 0.0);
  CHECK_THAT(bn.value(2.0), WithinRel(10.0, 1e-12));
  CHECK_THAT(bn.value(1.0), WithinRel(9.5, 1e-12));  // 9 + 0.5*x, above the raw 0.1
  CHECK(bn.value(2.5) == b.value(2.5));

  // Slopes increasing past the anchor cannot be repaired.
  const TailExponent bad =
      TailExponent::piecewise_concave({{1.0, 1.0}, {2.0, 1.5}, {4.0, 4.0}});
  CHECK_THROWS_AS(bad.normalized(), std::domain_error);
}

TEST_CASE("normalized exponents are subadditive", "[tail][property]") {
  hrw::Rng rng(99);
  const TailExponent normalized[] = {
      TailExponent::weibull(1.3, 0.4).normalized(),
      TailExponent::lognormal_type(2.5).normalized(),
      TailExponent::stretched_exp(0.7, 0.8).normalized(),
      TailExponent::piecewise_concave({{1.0, 2.0}, {10.0, 6.0}, {100.0, 12.0}}).normalized(),
  };
  for (const TailExponent& e : normalized) {
    for (int i = 0; i < 300; ++i) {
      const double x = std::pow(10.0, 6.0 * rng.uniform() - 2.0);
      const double y = std::pow(10.0, 6.0 * rng.uniform() - 2.0);
      const double lhs = e.value(x + y);
      const double rhs = e.value(x) + e.value(y);
      CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
    }
  }
}

TEST_CASE("chord slopes decrease beyond the concavity threshold", "[tail][property]") {
  hrw::Rng rng(7);
  const TailExponent exponents[] = {
      TailExponent::weibull(2.0, 0.6),
      TailExponent::lognormal_type(3.0),
      TailExponent::stretched_exp(1.5, 0.25),
  };
  for (const TailExponent& e : exponents) {
    const double lo = std::max(e.concavity_threshold(), 1e-3);
    for (int i = 0; i < 300; ++i) {
      double t[3];
      for (double& v : t) v = lo * std::pow(10.0, 8.0 * rng.uniform());
      std::sort(std::begin(t), std::end(t));
      if (t[1] - t[0] < 1e-9 || t[2] - t[1] < 1e-9) continue;
      const double s01 = (e.value(t[1]) - e.value(t[0])) / (t[1] - t[0]);
      const double s12 = (e.value(t[2]) - e.value(t[1])) / (t[2] - t[1]);
      CHECK(s01 >= s12 * (1.0 - 1e-9) - 1e-12);
    }
  }
}

TEST_CASE("difference avoids cancellation at large arguments", "[tail]") {
  const TailExponent e = TailExponent::weibull(1.0, 0.5);
  // Moderate arguments: must agree with the plain subtraction.
  CHECK_THAT(e.difference(100.0, 50.0), WithinRel(e.value(100.0) - e.value(50.0), 1e-12));
  // Large, nearby arguments: h(x) - h(x - g) with g = sqrt(x / h(x)).
  const double x = 1e6, g = std::sqrt(1e6 / 1e3);
  const double expected = 1000.0 - std::sqrt(x - g);  // direct evaluation
  CHECK_THAT(e.difference(x, x - g), WithinRel(expected, 1e-9));
  CHECK_THROWS_AS(e.difference(1.0, 2.0), std::domain_error);

  const TailExponent ln = TailExponent::lognormal_type(2.0);
  const double y = 1e8;
  CHECK_THAT(ln.difference(y, y - 10.0),
             WithinRel(std::pow(std::log(y), 2.0) - std::pow(std::log(y - 10.0), 2.0), 1e-6));
  // One side below the support start: plain difference.
  CHECK(ln.difference(2.0, 0.5) == ln.value(2.0));
}

TEST_CASE("inverse round trips through the exponent", "[tail]") {
  CHECK(TailExponent::weibull(1.0, 0.5).inverse(2.0) == 4.0);
  CHECK_THAT(TailExponent::lognormal_type(2.0).inverse(4.0), WithinRel(std::exp(2.0), 1e-12));
  CHECK(TailExponent::lognormal_type(2.0).inverse(0.0) == 1.0);
  CHECK(TailExponent::weibull(1.0, 0.5).inverse(0.0) == 0.0);

  const TailExponent pw =
      TailExponent::piecewise_concave({{1.0, 1.0}, {10.0, 4.0}, {100.0, 8.0}});
  // This profile extrapolates to h(0+) = 2/3, so the law has an atom at zero:
  // levels below 2/3 invert to the origin.
  CHECK(pw.inverse(0.5) <= 1e-9);
  for (double t : {0.7, 1.0, 2.7, 5.0, 9.9}) {
    const double x = pw.inverse(t);
    CHECK_THAT(pw.value(x), WithinAbs(t, 1e-9));
  }
}
