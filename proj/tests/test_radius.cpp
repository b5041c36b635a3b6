#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hrw/radius.hpp"

using hrw::RadiusDistribution;
using hrw::TailExponent;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Sup deviation between the empirical tail of `samples` and the analytic
// tail, over a grid placed at equal tail levels i/(points+1).
double tail_sup_deviation(const RadiusDistribution& dist, std::vector<double> samples,
                          int points) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double level = static_cast<double>(i) / (points + 1);
    const double x = dist.exponent().inverse(-std::log(level));
    const auto above = samples.end() - std::upper_bound(samples.begin(), samples.end(), x);
    const double empirical = static_cast<double>(above) / n;
    sup = std::max(sup, std::fabs(empirical - dist.tail(x)));
  }
  return sup;
}

}  // namespace

TEST_CASE("tails fall and exponents rise across the whole range", "[radius][property]") {
  // Dense grid sweep over [1, 1e8] for every built-in family.
  const RadiusDistribution dists[] = {
      RadiusDistribution(TailExponent::weibull(1.0, 0.5)),
      RadiusDistribution(TailExponent::lognormal_type(2.0)),
      RadiusDistribution(TailExponent::stretched_exp(2.0, 0.7)),
      RadiusDistribution(TailExponent::piecewise_concave({{1.0, 0.5}, {100.0, 4.0}, {1e4, 9.0}})),
  };
  for (const RadiusDistribution& dist : dists) {
    double prev_tail = 1.0 + 1e-12;
    double prev_h = -1.0;
    bool tails_fall = true, exponents_rise = true;
    for (int i = 0; i < 10'000; ++i) {
      const double x = std::pow(10.0, 8.0 * i / 9999.0);
      const double t = dist.tail(x);
      const double h = dist.exponent().value(x);
      tails_fall = tails_fall && t <= prev_tail;
      exponents_rise = exponents_rise && h >= prev_h;
      prev_tail = t;
      prev_h = h;
    }
    CHECK(tails_fall);
    CHECK(exponents_rise);
  }
}

TEST_CASE("radius tail values", "[radius]") {
  const RadiusDistribution weibull(TailExponent::weibull(1.0, 0.5));
  CHECK_THAT(weibull.tail(4.0), WithinRel(std::exp(-2.0), 1e-15));

  const RadiusDistribution lognormal(TailExponent::lognormal_type(2.0));
  CHECK(lognormal.tail(1.0) == 1.0);
  CHECK(lognormal.x_min() == 1.0);
  CHECK(weibull.x_min() == 0.0);

  double prev = 1.0;
  for (double x = 1.0; x <= 1e6; x *= 10.0) {
    const double t = weibull.tail(x);
    CHECK(t <= prev);
    prev = t;
  }
  CHECK(weibull.tail(1e6) < 1e-300);  // exp(-1000)
  CHECK_THROWS_AS(weibull.tail(0.0), std::domain_error);
}

TEST_CASE("sampler matches the analytic tail", "[radius][slow]") {
  hrw::Rng rng(2024);
  const RadiusDistribution dist(TailExponent::weibull(1.0, 0.5));
  const std::size_t n = 1'000'000;
  std::vector<double> samples(n);
  std::size_t above4 = 0;
  for (double& s : samples) {
    s = dist.sample(rng);
    if (s > 4.0) ++above4;
  }
  // Frequency of {R > 4} against exp(-2).
  CHECK_THAT(static_cast<double>(above4) / n, WithinAbs(std::exp(-2.0), 0.002));
  // Two-sided sup bound over a 100-point grid.
  CHECK(tail_sup_deviation(dist, samples, 100) <= 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("lognormal-type samples stay on the support", "[radius]") {
  hrw::Rng rng(5);
  const RadiusDistribution dist(TailExponent::lognormal_type(2.0));
  for (int i = 0; i < 100'000; ++i) CHECK(dist.sample(rng) >= 1.0);
}

TEST_CASE("piecewise sampling inverts through bisection", "[radius]") {
  hrw::Rng rng(17);
  const RadiusDistribution dist(
      TailExponent::piecewise_concave({{1.0, 0.5}, {10.0, 3.0}, {100.0, 6.0}}));
  const std::size_t n = 100'000;
  std::vector<double> samples(n);
  for (double& s : samples) s = dist.sample(rng);
  CHECK(tail_sup_deviation(dist, samples, 100) <= 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sampling is deterministic per seed", "[radius]") {
  const RadiusDistribution dist(TailExponent::weibull(1.0, 0.5));
  hrw::Rng a(42), b(42), c(43);
  bool all_equal = true, any_differs = false;
  for (int i = 0; i < 64; ++i) {
    const double va = dist.sample(a);
    all_equal = all_equal && va == dist.sample(b);
    any_differs = any_differs || va != dist.sample(c);
  }
  CHECK(all_equal);
  CHECK(any_differs);
}

TEST_CASE("moments up to order eight stay finite", "[radius]") {
  // Sanity only: with all moments finite the empirical ones must not blow up,
  // though the high orders are noisy.
  const RadiusDistribution dist(TailExponent::weibull(1.0, 0.5));
  for (const std::size_t n : {100'000, 200'000}) {
    hrw::Rng rng(31);
    std::vector<double> moments(8, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = dist.sample(rng);
      double pw = 1.0;
      for (double& m : moments) {
        pw *= r;
        m += pw;
      }
    }
    for (double m : moments) {
      CHECK(std::isfinite(m / n));
      CHECK(m > 0.0);
    }
  }
}

TEST_CASE("subexponentiality ratio", "[radius]") {
  const RadiusDistribution dist(TailExponent::weibull(1.0, 0.5));

  // Hand value at x = 1e6: g = sqrt(1000), ratio = exp(1000 - sqrt(1e6 - g)).
  const double g = std::sqrt(1000.0);
  const double expected = std::exp(1000.0 - std::sqrt(1e6 - g));
  CHECK_THAT(dist.subexp_ratio(1e6), WithinRel(expected, 1e-9));
  CHECK_THAT(dist.subexp_ratio(1e6), WithinAbs(1.0159, 1e-4));

  // Decreasing toward 1 along a growing grid, for light and heavy shapes.
  for (const double beta : {0.4, 0.5, 0.9}) {
    const RadiusDistribution d(TailExponent::weibull(1.0, beta));
    double prev = std::numeric_limits<double>::infinity();
    for (double x = 1e3; x <= 1e8 * 1.5; x *= 10.0) {
      const double r = d.subexp_ratio(x);
      CHECK(r > 1.0);
      CHECK(r < prev);
      prev = r;
    }
  }

  // Direct evaluation for the slow heavy shape: the ratio at 1e8 is still
  // around 1.43, approaching 1 only far beyond double-digit exponents.
  const RadiusDistribution heavy(TailExponent::weibull(1.0, 0.9));
  const double x = 1e8;
  const double gx = std::sqrt(x / std::pow(x, 0.9));
  CHECK_THAT(heavy.subexp_ratio(x),
             WithinRel(std::exp(std::pow(x, 0.9) - std::pow(x - gx, 0.9)), 1e-6));

  CHECK_THROWS_AS(RadiusDistribution(TailExponent::lognormal_type(2.0)).subexp_ratio(1.0),
                  std::domain_error);
  CHECK_THROWS_AS(dist.subexp_ratio(1e-8), std::domain_error);
}
