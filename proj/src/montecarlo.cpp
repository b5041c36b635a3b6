#include "hrw/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hrw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZ95 = 1.959963984540054;  // 97.5% normal quantile

struct ShardPlan {
  std::uint64_t first_trial;
  std::uint64_t count;
  std::uint64_t seed;
};

std::vector<ShardPlan> plan_shards(std::uint64_t trials, std::uint64_t seed, unsigned shards) {
  if (shards == 0) throw std::invalid_argument("monte carlo: shard count must be positive");
  std::vector<ShardPlan> plan;
  plan.reserve(shards);
  const std::uint64_t base = trials / shards;
  const std::uint64_t rem = trials % shards;
  std::uint64_t at = 0;
  for (unsigned k = 0; k < shards; ++k) {
    const std::uint64_t count = base + (k < rem ? 1 : 0);
    plan.push_back({at, count, shard_seed(seed, k)});
    at += count;
  }
  return plan;
}

// Runs one count-two-events kernel per shard; the per-shard counters are
// summed in shard order, so the outcome depends only on (seed, shards).
template <typename PathFn>
std::pair<std::uint64_t, std::uint64_t> run_sharded(std::uint64_t trials, std::uint64_t seed,
                                                    unsigned shards, const PathFn& path_fn) {
  const std::vector<ShardPlan> plan = plan_shards(trials, seed, shards);
  std::vector<std::uint64_t> primary(plan.size(), 0), secondary(plan.size(), 0);

  const auto worker = [&](std::size_t k) {
    Rng rng(plan[k].seed);
    std::uint64_t c1 = 0, c2 = 0;
    for (std::uint64_t t = 0; t < plan[k].count; ++t) {
      const auto [e1, e2] = path_fn(rng);
      c1 += e1 ? 1 : 0;
      c2 += e2 ? 1 : 0;
    }
    primary[k] = c1;
    secondary[k] = c2;
  };

  if (plan.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(plan.size());
    for (std::size_t k = 0; k < plan.size(); ++k) pool.emplace_back(worker, k);
    for (std::thread& t : pool) t.join();
  }

  std::uint64_t total1 = 0, total2 = 0;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    total1 += primary[k];
    total2 += secondary[k];
  }
  return {total1, total2};
}

TailEstimate finish_estimate(double n, double a, std::uint64_t trials, std::uint64_t hits,
                             double h_scale) {
  TailEstimate est;
  est.n = n;
  est.a = a;
  est.trials = trials;
  est.hits = hits;
  est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  est.h_scale = h_scale;

  const auto [lo, hi] = wilson_interval(hits, trials);
  est.ci_low = lo;
  est.ci_high = hi;

  est.log_defined = hits > 0;
  est.log_p = est.log_defined ? std::log(est.p_hat) : kNaN;

  const bool scale_ok = h_scale > 0.0;
  est.ratio_defined = scale_ok && hits >= 10;
  est.ratio = est.ratio_defined ? est.log_p / h_scale : kNaN;
  est.ratio_ci_low = (est.ratio_defined && lo > 0.0) ? std::log(lo) / h_scale : kNaN;
  est.ratio_ci_high = (scale_ok && hi > 0.0) ? std::log(hi) / h_scale : kNaN;
  return est;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson interval: no trials");
  if (hits > trials) throw std::invalid_argument("wilson interval: hits exceed trials");
  const double nd = static_cast<double>(trials);
  if (hits == 0) return {0.0, 3.0 / nd};

  const double p = static_cast<double>(hits) / nd;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TailEstimate estimate_exceedance(const IncrementSpec& spec, Functional functional,
                                 const std::optional<Vec>& v, std::uint64_t n, double a,
                                 std::uint64_t trials, std::uint64_t seed, unsigned shards) {
  if (trials < 1000) throw std::invalid_argument("estimate_exceedance: need at least 1000 trials");
  if (!(a > 0.0)) throw std::invalid_argument("estimate_exceedance: a must be positive");
  if (n == 0) throw std::invalid_argument("estimate_exceedance: n must be positive");

  std::optional<Vec> direction;
  if (functional == Functional::Projection) {
    if (!v) throw std::invalid_argument("estimate_exceedance: projection needs a direction");
    if (v->size() != spec.dim())
      throw std::invalid_argument("estimate_exceedance: direction dimension mismatch");
    if (std::fabs(norm2(*v) - 1.0) > 1e-12)
      throw std::domain_error("estimate_exceedance: direction must be a unit vector");
    direction = *v;
  }

  const double level = static_cast<double>(n) * a;
  const auto path_fn = [&](Rng& rng) -> std::pair<bool, bool> {
    const WalkSample ws = simulate_sum(spec, n, rng);
    const double stat = direction ? dot(*direction, ws.s_n) : norm2(ws.s_n);
    return {stat > level, false};
  };

  const auto [hits, unused] = run_sharded(trials, seed, shards, path_fn);
  (void)unused;
  return finish_estimate(static_cast<double>(n), a, trials, hits,
                         spec.radius.exponent().value(level));
}

TailEstimate estimate_set_probability(const IncrementSpec& spec, const EventSet& set,
                                      std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                                      unsigned shards) {
  if (trials == 0) throw std::invalid_argument("estimate_set_probability: no trials");
  if (n == 0) throw std::invalid_argument("estimate_set_probability: n must be positive");
  if (set.dim() != 0 && set.dim() != spec.dim())
    throw std::invalid_argument("estimate_set_probability: set dimension mismatch");

  const double nd = static_cast<double>(n);
  const auto path_fn = [&](Rng& rng) -> std::pair<bool, bool> {
    WalkSample ws = simulate_sum(spec, n, rng);
    for (double& c : ws.s_n) c /= nd;
    return {set.contains(ws.s_n), false};
  };

  const auto [hits, unused] = run_sharded(trials, seed, shards, path_fn);
  (void)unused;
  TailEstimate est = finish_estimate(nd, set.threshold(), trials, hits,
                                     spec.radius.exponent().value(nd));
  return est;
}

BigJumpDiagnostic big_jump_diagnostic(const IncrementSpec& spec, const Vec& v, std::uint64_t n,
                                      double a, double eps, std::uint64_t trials,
                                      std::uint64_t seed, unsigned shards) {
  if (trials == 0) throw std::invalid_argument("big_jump_diagnostic: no trials");
  if (n == 0) throw std::invalid_argument("big_jump_diagnostic: n must be positive");
  if (!(a > 0.0)) throw std::invalid_argument("big_jump_diagnostic: a must be positive");
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("big_jump_diagnostic: eps must lie in (0, 1]");
  if (v.size() != spec.dim())
    throw std::invalid_argument("big_jump_diagnostic: direction dimension mismatch");
  if (std::fabs(norm2(v) - 1.0) > 1e-12)
    throw std::domain_error("big_jump_diagnostic: direction must be a unit vector");

  const double level = static_cast<double>(n) * a;
  const double jump_level = (1.0 - eps) * level;
  const std::optional<Vec> monitor = v;

  const auto path_fn = [&](Rng& rng) -> std::pair<bool, bool> {
    const WalkSample ws = simulate_sum(spec, n, rng, monitor);
    const bool exceeded = dot(v, ws.s_n) > level;
    return {exceeded, exceeded && ws.max_proj > jump_level};
  };

  const auto [exceed, bigjump] = run_sharded(trials, seed, shards, path_fn);

  BigJumpDiagnostic diag;
  diag.trials = trials;
  diag.exceed_count = exceed;
  diag.bigjump_count = bigjump;
  diag.available = exceed > 0;
  diag.conditional_freq =
      diag.available ? static_cast<double>(bigjump) / static_cast<double>(exceed) : kNaN;
  return diag;
}

}  // namespace hrw
