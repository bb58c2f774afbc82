#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>

#include "pencil.hpp"

namespace rim {

struct SolveStats {
  std::uint64_t factorizations = 0;
  std::uint64_t solves = 0;
};

/* LU factorization of z B - A with partial pivoting, dense or sparse per
 * the pencil's storage hint. Construction throws SingularShiftError when
 * the smallest pivot magnitude falls below n * ulp * |z B - A|_inf, the
 * signal that z is numerically an eigenvalue. Immutable after
 * construction; concurrent solves against one factorization are safe. */
class ShiftedFactorization {
 public:
  ShiftedFactorization(const Pencil& pencil, Complex shift);
  ~ShiftedFactorization();
  ShiftedFactorization(ShiftedFactorization&&) noexcept;
  ShiftedFactorization& operator=(ShiftedFactorization&&) noexcept;

  Complex shift() const { return shift_; }
  Eigen::Index dim() const { return dim_; }

  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;

  class Impl;

 private:
  Complex shift_;
  Eigen::Index dim_ = 0;
  std::unique_ptr<Impl> impl_;
};

inline ShiftedFactorization factor(const Pencil& pencil, Complex shift) {
  return ShiftedFactorization(pencil, shift);
}

inline Eigen::VectorXcd solve(const ShiftedFactorization& fact,
                              const Eigen::VectorXcd& rhs) {
  return fact.solve(rhs);
}

}  // namespace rim
