#ifndef HRW_REINSURANCE_HPP
#define HRW_REINSURANCE_HPP

#include <optional>

#include "hrw/ellipsoid.hpp"
#include "hrw/linalg.hpp"

namespace hrw {

// Which side of the quota-share contract the diagonal matrix describes.
// The ceding company retains q_j of line j and keeps at least one line in
// full (some q_j = 1); the reinsurer covers 1 - q_j of every line, so each
// q_j is strictly inside (0, 1).
enum class QuotaContext { Ceding, Reinsurer };

class QuotaMatrix {
 public:
  QuotaMatrix(Vec q, QuotaContext context);

  const Vec& diag() const { return q_; }
  QuotaContext context() const { return context_; }
  std::size_t dim() const { return q_.size(); }

 private:
  Vec q_;
  QuotaContext context_;
};

// Per-line premium rates for full reinsurance; all strictly positive.
struct PremiumVector {
  Vec p;
  explicit PremiumVector(Vec rates);
  std::size_t dim() const { return p.size(); }
};

// Total premium of a strategy: sum over lines of (1 - q_j) p_j.
double premium(const QuotaMatrix& q, const PremiumVector& p);

// Sphere infimum that the optimizers maximize: for diagonal A and retention
// entries r, a * min_j 1/(a_j r_j) -- exactly the minimum over |x| = a of
// |A^{-1} diag(r)^{-1} x|.
double quota_objective(const Vec& retention, const EllipsoidMap& a_map, double a);

// Ceding-side optimum q_j = (min_k a_k) / a_j for an axis-aligned ellipsoid:
// beats every admissible strategy in the objective and, among ties, has the
// smallest premium. Requires a diagonal positive matrix.
QuotaMatrix ceding_optimal_q(const EllipsoidMap& a_map);

// Reinsurer-side strategy q_j = 1 - 1/(a_j c) for c > max_j 1/a_j; the
// reinsurer's retained share maps the ellipsoid onto a ball of diagonal value
// 1/c, so the post-sharing objective is exactly c * a.
QuotaMatrix reinsurer_q(const EllipsoidMap& a_map, double c);

enum class ImprovementStatus {
  Improves,             // strictly smaller tail exponent after sharing
  NoImprovement,        // sharing leaves the exponent unchanged
  NoImprovementRegime,  // index 0: no quota share can move the exponent
};

struct StrategyReport {
  QuotaMatrix q;
  double premium_value;     // NaN when no premium vector was supplied
  double objective;         // post-sharing sphere infimum
  double exponent_before;   // -(a sigma_min(A^{-1}))^alpha
  double exponent_after;    // -(objective)^alpha
  ImprovementStatus status;
};

// Compares the tail exponents of the unshared and shared risk at level a for
// a tail with regular-variation index alpha in [0, 1). Index 0 returns the
// explicit no-improvement-regime status.
StrategyReport improvement_check(const QuotaMatrix& q, const EllipsoidMap& a_map, double a,
                                 double alpha,
                                 const std::optional<PremiumVector>& p = std::nullopt);

// Exhaustive grid oracle for the ceding optimum: enumerates diagonal
// strategies with q_j in {step, 2 step, ..., 1} and max_j q_j = 1, maximizing
// the objective with ties broken by minimal premium, then lexicographic q.
// Guards: step in (0, 0.25], dimension at most 4. Test oracle, not for
// production sizing.
QuotaMatrix brute_force_optimal_q(const EllipsoidMap& a_map, double a, double grid_step,
                                  const PremiumVector& p);

}  // namespace hrw

#endif  // HRW_REINSURANCE_HPP
