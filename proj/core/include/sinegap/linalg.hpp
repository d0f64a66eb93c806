#pragma once

#include <cstddef>
#include <vector>

namespace sinegap::linalg {

// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double trace() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Eigenvalues of a real symmetric matrix, descending order. Householder
// tridiagonalization followed by implicit-shift QL (eigenvalues only).
// Throws ConvergenceError if a QL sweep fails to deflate within the cap.
std::vector<double> sym_eigenvalues(Matrix a);

// Eigenvalues of a symmetric tridiagonal matrix (diag d, sub-diag e of size
// n-1), ascending order.
std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e);

struct LuResult {
  double log_abs_det = 0.0;
  int sign = 1;
};

// ln|det A| via LU with partial pivoting. Throws on an exactly singular pivot.
LuResult lu_log_abs_det(Matrix a);

}  // namespace sinegap::linalg
