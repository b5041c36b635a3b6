#include "hrw/reinsurance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hrw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Vec require_diagonal(const EllipsoidMap& a_map, const char* who) {
  if (!a_map.is_diagonal())
    throw std::invalid_argument(std::string(who) +
                                ": requires an axis-aligned ellipsoid (diagonal matrix); rotate "
                                "the data into principal axes first");
  return a_map.matrix().diagonal_entries();
}

}  // namespace

QuotaMatrix::QuotaMatrix(Vec q, QuotaContext context) : q_(std::move(q)), context_(context) {
  require(!q_.empty(), "quota matrix: empty diagonal");
  double q_max = 0.0;
  for (double v : q_) {
    require(v > 0.0, "quota matrix: shares must be positive");
    q_max = std::max(q_max, v);
  }
  if (context_ == QuotaContext::Ceding) {
    for (double v : q_) require(v <= 1.0, "quota matrix: ceding shares must lie in (0, 1]");
    require(q_max == 1.0, "quota matrix: the ceding company must fully retain at least one line");
  } else {
    for (double v : q_) require(v < 1.0, "quota matrix: reinsurer-side shares must lie in (0, 1)");
  }
}

PremiumVector::PremiumVector(Vec rates) : p(std::move(rates)) {
  require(!p.empty(), "premium vector: empty");
  for (double v : p) require(v > 0.0, "premium vector: rates must be strictly positive");
}

double premium(const QuotaMatrix& q, const PremiumVector& p) {
  if (q.dim() != p.dim()) throw std::invalid_argument("premium: dimension mismatch");
  double total = 0.0;
  for (std::size_t j = 0; j < q.dim(); ++j) total += (1.0 - q.diag()[j]) * p.p[j];
  return total;
}

double quota_objective(const Vec& retention, const EllipsoidMap& a_map, double a) {
  const Vec diag = require_diagonal(a_map, "quota_objective");
  require(retention.size() == diag.size(), "quota_objective: dimension mismatch");
  require(a > 0.0, "quota_objective: level a must be positive");
  double worst = 0.0;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    require(retention[j] > 0.0, "quota_objective: retention entries must be positive");
    worst = std::max(worst, diag[j] * retention[j]);
  }
  return a / worst;
}

QuotaMatrix ceding_optimal_q(const EllipsoidMap& a_map) {
  const Vec diag = require_diagonal(a_map, "ceding_optimal_q");
  const double a_min = *std::min_element(diag.begin(), diag.end());
  Vec q(diag.size());
  for (std::size_t j = 0; j < diag.size(); ++j) q[j] = a_min / diag[j];
  return QuotaMatrix(std::move(q), QuotaContext::Ceding);
}

QuotaMatrix reinsurer_q(const EllipsoidMap& a_map, double c) {
  const Vec diag = require_diagonal(a_map, "reinsurer_q");
  double threshold = 0.0;
  for (double v : diag) threshold = std::max(threshold, 1.0 / v);
  if (!(c > threshold))
    throw std::domain_error("reinsurer_q: c must exceed max_j 1/a_j (strictly)");
  Vec q(diag.size());
  for (std::size_t j = 0; j < diag.size(); ++j) q[j] = 1.0 - 1.0 / (diag[j] * c);
  return QuotaMatrix(std::move(q), QuotaContext::Reinsurer);
}

StrategyReport improvement_check(const QuotaMatrix& q, const EllipsoidMap& a_map, double a,
                                 double alpha, const std::optional<PremiumVector>& p) {
  const Vec diag = require_diagonal(a_map, "improvement_check");
  require(q.dim() == diag.size(), "improvement_check: dimension mismatch");
  require(a > 0.0, "improvement_check: level a must be positive");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::domain_error("improvement_check: index must lie in [0, 1)");

  const double premium_value = p ? premium(q, *p) : kNaN;

  if (alpha == 0.0) {
    // Constant rate off the origin: the exponent is -1 on both sides no
    // matter the quota split.
    return StrategyReport{q, premium_value, kNaN, -1.0, -1.0,
                          ImprovementStatus::NoImprovementRegime};
  }

  Vec retention = q.diag();
  if (q.context() == QuotaContext::Reinsurer)
    for (double& r : retention) r = 1.0 - r;

  // The unshared side is the objective at full retention; evaluating both
  // sides through the same expression keeps exact ties exact.
  const double before_inf = quota_objective(Vec(diag.size(), 1.0), a_map, a);
  const double after_inf = quota_objective(retention, a_map, a);

  StrategyReport report{q,
                        premium_value,
                        after_inf,
                        -std::pow(before_inf, alpha),
                        -std::pow(after_inf, alpha),
                        ImprovementStatus::NoImprovement};
  if (report.exponent_after < report.exponent_before)
    report.status = ImprovementStatus::Improves;
  return report;
}

QuotaMatrix brute_force_optimal_q(const EllipsoidMap& a_map, double a, double grid_step,
                                  const PremiumVector& p) {
  const Vec diag = require_diagonal(a_map, "brute_force_optimal_q");
  const std::size_t d = diag.size();
  require(d <= 4, "brute_force_optimal_q: refuses dimensions above 4");
  require(grid_step > 0.0 && grid_step <= 0.25, "brute_force_optimal_q: step must lie in (0, 0.25]");
  require(p.dim() == d, "brute_force_optimal_q: premium dimension mismatch");
  require(a > 0.0, "brute_force_optimal_q: level a must be positive");

  const std::size_t levels = static_cast<std::size_t>(std::llround(1.0 / grid_step));
  // Grid points j/levels so that the full-retention share 1 is exactly on
  // the grid.
  Vec grid(levels);
  for (std::size_t j = 0; j < levels; ++j)
    grid[j] = static_cast<double>(j + 1) / static_cast<double>(levels);

  constexpr double kTie = 1e-12;
  Vec best_q;
  double best_obj = -1.0, best_prem = 0.0;

  std::vector<std::size_t> idx(d, 0);
  Vec q(d);
  while (true) {
    bool has_full = false;
    for (std::size_t j = 0; j < d; ++j) {
      q[j] = grid[idx[j]];
      has_full = has_full || idx[j] + 1 == levels;
    }
    if (has_full) {
      const double obj = quota_objective(q, a_map, a);
      bool take = false;
      if (obj > best_obj + kTie) {
        take = true;
      } else if (obj > best_obj - kTie) {
        double prem = 0.0;
        for (std::size_t j = 0; j < d; ++j) prem += (1.0 - q[j]) * p.p[j];
        if (prem < best_prem - kTie) {
          take = true;
        } else if (prem < best_prem + kTie &&
                   std::lexicographical_compare(q.begin(), q.end(), best_q.begin(),
                                                best_q.end())) {
          take = true;
        }
      }
      if (take) {
        best_q = q;
        best_obj = obj;
        best_prem = 0.0;
        for (std::size_t j = 0; j < d; ++j) best_prem += (1.0 - q[j]) * p.p[j];
      }
    }

    std::size_t k = 0;
    while (k < d && ++idx[k] == levels) idx[k++] = 0;
    if (k == d) break;
  }

  return QuotaMatrix(std::move(best_q), QuotaContext::Ceding);
}

}  // namespace hrw
