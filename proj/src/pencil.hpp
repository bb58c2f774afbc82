#pragma once

#include <Eigen/Sparse>
#include <complex>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace rim {

using Complex = std::complex<double>;
using SparseRealMatrix = Eigen::SparseMatrix<double>;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex>;

/* Advice to the shifted solver: factor z B - A densely or keep it sparse.
 * Structural metadata only; both paths satisfy the same contract. */
enum class StorageHint { dense, sparse };

/* A generalized eigenvalue problem A x = lambda B x. A and B are square of
 * the same dimension with finite entries; immutable after construction, so
 * a Pencil may be shared freely across threads. Real pencils stay in real
 * storage and are promoted to complex per shifted factorization. */
class Pencil {
 public:
  static Pencil from_real(SparseRealMatrix a, SparseRealMatrix b,
                          StorageHint hint);
  static Pencil from_complex(SparseComplexMatrix a, SparseComplexMatrix b,
                             StorageHint hint);

  Eigen::Index dim() const { return dim_; }
  bool is_complex() const { return is_complex_; }
  StorageHint storage_hint() const { return hint_; }

  const SparseRealMatrix& a_real() const { return a_real_; }
  const SparseRealMatrix& b_real() const { return b_real_; }
  const SparseComplexMatrix& a_complex() const { return a_complex_; }
  const SparseComplexMatrix& b_complex() const { return b_complex_; }

  /* z B - A in complex sparse form. */
  SparseComplexMatrix shifted(Complex z) const;

  Eigen::VectorXcd apply_b(const Eigen::VectorXcd& y) const;
  Eigen::MatrixXcd apply_b(const Eigen::MatrixXcd& ys) const;

 private:
  Pencil() = default;

  Eigen::Index dim_ = 0;
  bool is_complex_ = false;
  StorageHint hint_ = StorageHint::dense;
  SparseRealMatrix a_real_, b_real_;
  SparseComplexMatrix a_complex_, b_complex_;
};

/* Upper-bidiagonal pencil with eigenvalues on a line (defaults 100, 20):
 * A diag (size-1)/100 .. 0/100, superdiagonal 1/100; B = diag of
 * (size - num_ones) zeros then num_ones ones. Finite spectrum is
 * {0, 0.01, ..., (num_ones-1)/100}. */
Pencil example3_pencil(int size = 100, int num_ones = 20);

/* Symmetric tridiagonal Wilkinson-type matrix with off-diagonals -1 and
 * the two-sided diagonal profile n/2, ..., 2, 1, 1, 2, ..., n/2; B = I.
 * n must be even, n >= 2. Known for pathologically close eigenvalue
 * pairs near the large diagonal entries. */
Pencil wilkinson_pencil(int n);

/* A = diag(eigs), B = I: spectrum exactly eigs. */
Pencil diagonal_pencil(const std::vector<Complex>& eigs);

}  // namespace rim
