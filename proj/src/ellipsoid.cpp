#include "hrw/ellipsoid.hpp"

#include <cmath>
#include <stdexcept>

namespace hrw {

EllipsoidMap::EllipsoidMap(Matrix a) : a_(std::move(a)) {
  const std::size_t n = a_.dim();
  if (n < 1) throw std::invalid_argument("ellipsoid map: empty matrix");

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a_(i, j)));
  if (scale == 0.0) throw std::invalid_argument("ellipsoid map: zero matrix");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(a_(i, j) - a_(j, i)) > 1e-10 * scale)
        throw std::invalid_argument("ellipsoid map: matrix must be symmetric");
      const double avg = 0.5 * (a_(i, j) + a_(j, i));
      a_(i, j) = avg;
      a_(j, i) = avg;
    }

  diagonal_ = a_.is_diagonal();

  if (diagonal_) {
    // Keep the diagonal path exact: eigensystem is the diagonal itself.
    eigen_.values = a_.diagonal_entries();
    eigen_.vectors = Matrix::identity(n);
    // Sort eigenpairs ascending without perturbing the stored matrix.
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n - i; ++j)
        if (eigen_.values[j] > eigen_.values[j + 1]) {
          std::swap(eigen_.values[j], eigen_.values[j + 1]);
          for (std::size_t k = 0; k < n; ++k)
            std::swap(eigen_.vectors(k, j), eigen_.vectors(k, j + 1));
        }
    a_inv_ = Matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a_(i, i) > 0.0))
        throw std::invalid_argument("ellipsoid map: matrix must be positive definite");
      a_inv_(i, i) = 1.0 / a_(i, i);
    }
  } else {
    eigen_ = symmetric_eigen(a_);
    a_inv_ = Matrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          s += eigen_.vectors(i, k) * eigen_.vectors(j, k) / eigen_.values[k];
        a_inv_(i, j) = s;
      }
  }

  const double lambda_max = eigen_.values.back();
  const double lambda_min = eigen_.values.front();
  if (!(lambda_min > 1e-10 * std::fabs(lambda_max)) || !(lambda_min > 0.0))
    throw std::invalid_argument("ellipsoid map: matrix must be positive definite");

  sigma_min_ = lambda_min;
  sigma_max_ = lambda_max;
}

EllipsoidMap EllipsoidMap::axis_aligned(const Vec& semi_axes) {
  if (semi_axes.empty()) throw std::invalid_argument("ellipsoid map: no semi-axes given");
  for (double v : semi_axes)
    if (!(v > 0.0)) throw std::invalid_argument("ellipsoid map: semi-axes must be positive");
  return EllipsoidMap(Matrix::diagonal(semi_axes));
}

}  // namespace hrw
