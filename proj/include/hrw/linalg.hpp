#ifndef HRW_LINALG_HPP
#define HRW_LINALG_HPP

#include <cstddef>
#include <vector>

namespace hrw {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

// Dense square matrix, row major. Dimensions here are small (risk lines,
// spatial dimensions), so a flat vector is all that is needed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Vec apply(const Vec& x) const;
  Matrix multiply(const Matrix& other) const;
  Matrix transpose() const;
  bool is_diagonal() const;  // off-diagonal entries exactly zero
  Vec diagonal_entries() const;

 private:
  std::size_t n_ = 0;
  Vec data_;
};

// Eigenvalues (ascending) and matching eigenvector columns of a symmetric
// matrix, by cyclic Jacobi rotations. Dimensions are tiny, so Jacobi is both
// simple and fully accurate.
struct SymmetricEigen {
  Vec values;
  Matrix vectors;
};
SymmetricEigen symmetric_eigen(const Matrix& a);

// Length of the projection of x onto the unit vector v.
// v must have unit norm within 1e-12.
double project(const Vec& v, const Vec& x);

// inf over the sphere of radius a of the mapped length:
// a * sigma_min(M). Exact a * min_j |m_jj| for diagonal M.
double min_norm_on_sphere(const Matrix& m, double a);

}  // namespace hrw

#endif  // HRW_LINALG_HPP
