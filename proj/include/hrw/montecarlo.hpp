#ifndef HRW_MONTECARLO_HPP
#define HRW_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "hrw/event_set.hpp"
#include "hrw/walk.hpp"

namespace hrw {

// 95% Wilson score interval for a binomial proportion. Zero hits fall back to
// the rule-of-three upper bound [0, 3/trials].
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials);

// Monte Carlo estimate of a log tail probability, normalized by the
// theoretical scale h. The ratio log(p_hat) / h is the quantity whose limit
// the asymptote predicts; it is reported only from 10 hits up, below that the
// interval carries the information.
struct TailEstimate {
  double n = 0.0;
  double a = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  bool log_defined = false;
  double log_p = 0.0;          // natural log of p_hat when hits > 0
  double h_scale = 0.0;        // h(n a) for exceedances, h(n) for scaled sets
  bool ratio_defined = false;  // hits >= 10 and h_scale > 0
  double ratio = 0.0;          // log_p / h_scale
  double ci_low = 0.0;         // Wilson interval on p (rule of three at 0 hits)
  double ci_high = 0.0;
  double ratio_ci_low = 0.0;   // interval mapped through log and 1/h_scale
  double ratio_ci_high = 0.0;  // NaN where undefined
};

enum class Functional { Norm, Projection };

// Frequency of {|S_n| > n a} (Norm) or {<v, S_n> > n a} (Projection) over
// independent paths, sharded deterministically by (seed, shards).
// Requires trials >= 1000; v must be a unit vector for Projection.
TailEstimate estimate_exceedance(const IncrementSpec& spec, Functional functional,
                                 const std::optional<Vec>& v, std::uint64_t n, double a,
                                 std::uint64_t trials, std::uint64_t seed, unsigned shards = 1);

// Frequency of {S_n / n in set}, normalized by h(n), to be held against
// minus the rate infimum over the set.
TailEstimate estimate_set_probability(const IncrementSpec& spec, const EventSet& set,
                                      std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                                      unsigned shards = 1);

// Among paths whose projection exceeds n a, the share where a single
// increment already reaches (1 - eps) of the threshold.
struct BigJumpDiagnostic {
  std::uint64_t trials = 0;
  std::uint64_t exceed_count = 0;
  std::uint64_t bigjump_count = 0;
  bool available = false;  // false when no path exceeded
  double conditional_freq = 0.0;
};

BigJumpDiagnostic big_jump_diagnostic(const IncrementSpec& spec, const Vec& v, std::uint64_t n,
                                      double a, double eps, std::uint64_t trials,
                                      std::uint64_t seed, unsigned shards = 1);

}  // namespace hrw

#endif  // HRW_MONTECARLO_HPP
