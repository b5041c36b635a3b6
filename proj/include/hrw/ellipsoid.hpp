#ifndef HRW_ELLIPSOID_HPP
#define HRW_ELLIPSOID_HPP

#include "hrw/linalg.hpp"

namespace hrw {

// Linear map x -> A x with A symmetric positive definite; it carries the unit
// sphere onto an ellipsoid centred at the origin. The inverse and the extreme
// singular values are precomputed at construction.
class EllipsoidMap {
 public:
  // Accepts a matrix symmetric up to 1e-10 relative (stored exactly
  // symmetrized) whose eigenvalues are positive at 1e-10 relative tolerance.
  explicit EllipsoidMap(Matrix a);

  // Axis-aligned ellipsoid with the given positive semi-axes.
  static EllipsoidMap axis_aligned(const Vec& semi_axes);

  std::size_t dim() const { return a_.dim(); }
  const Matrix& matrix() const { return a_; }
  const Matrix& inverse_matrix() const { return a_inv_; }
  bool is_diagonal() const { return diagonal_; }

  double sigma_min() const { return sigma_min_; }
  double sigma_max() const { return sigma_max_; }
  const SymmetricEigen& eigen() const { return eigen_; }

  Vec forward(const Vec& x) const { return a_.apply(x); }
  Vec inverse(const Vec& x) const { return a_inv_.apply(x); }

 private:
  Matrix a_;
  Matrix a_inv_;
  SymmetricEigen eigen_;
  double sigma_min_;
  double sigma_max_;
  bool diagonal_;
};

}  // namespace hrw

#endif  // HRW_ELLIPSOID_HPP
