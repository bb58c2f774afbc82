#include "linsolve.hpp"

#include <Eigen/SparseLU>
#include <limits>
#include <sstream>

namespace rim {

namespace {

/* SparseLU with access to the pivot magnitudes. The U diagonal lives in
 * the supernodal L store; this walks it the same way the determinant
 * accessors in Eigen do. Guarded by a unit test against the dense path. */
class PivotSparseLU
    : public Eigen::SparseLU<SparseComplexMatrix, Eigen::COLAMDOrdering<int>> {
 public:
  double min_abs_pivot() const {
    double least = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < cols(); ++j) {
      bool found = false;
      for (SCMatrix::InnerIterator it(m_Lstore, j); it; ++it) {
        if (it.row() < j) continue;
        if (it.row() == j) {
          least = std::min(least, std::abs(it.value()));
          found = true;
          break;
        }
      }
      if (!found) return 0.0;
    }
    return least;
  }
};

std::string shift_string(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

double inf_norm(const SparseComplexMatrix& mat) {
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(mat.rows());
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseComplexMatrix::InnerIterator it(mat, k); it; ++it)
      row_sums[it.row()] += std::abs(it.value());
  return mat.rows() > 0 ? row_sums.maxCoeff() : 0.0;
}

}  // namespace

class ShiftedFactorization::Impl {
 public:
  virtual ~Impl() = default;
  virtual Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const = 0;
};

namespace {

class DenseImpl final : public ShiftedFactorization::Impl {
 public:
  DenseImpl(const SparseComplexMatrix& shifted, Complex z, double norm) {
    lu_.compute(Eigen::MatrixXcd(shifted));
    const double pivot = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
    const double tol = static_cast<double>(shifted.rows()) *
                       std::numeric_limits<double>::epsilon() * norm;
    if (!(pivot > tol))
      throw SingularShiftError(
          z, "shift " + shift_string(z) + " is numerically an eigenvalue (pivot " +
             std::to_string(pivot) + " <= " + std::to_string(tol) + ")");
  }

  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const override {
    return lu_.solve(rhs);
  }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

class SparseImpl final : public ShiftedFactorization::Impl {
 public:
  SparseImpl(const SparseComplexMatrix& shifted, Complex z, double norm) {
    lu_.isSymmetric(false);
    lu_.analyzePattern(shifted);
    lu_.factorize(shifted);
    const double tol = static_cast<double>(shifted.rows()) *
                       std::numeric_limits<double>::epsilon() * norm;
    const double pivot =
        lu_.info() == Eigen::Success ? lu_.min_abs_pivot() : 0.0;
    if (lu_.info() != Eigen::Success || !(pivot > tol))
      throw SingularShiftError(
          z, "shift " + shift_string(z) + " is numerically an eigenvalue (pivot " +
             std::to_string(pivot) + " <= " + std::to_string(tol) + ")");
  }

  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const override {
    return lu_.solve(rhs);
  }

 private:
  PivotSparseLU lu_;
};

}  // namespace

ShiftedFactorization::ShiftedFactorization(const Pencil& pencil, Complex shift)
    : shift_(shift), dim_(pencil.dim()) {
  if (!std::isfinite(shift.real()) || !std::isfinite(shift.imag()))
    throw Error(ErrorCode::invalid_argument, "factor: non-finite shift");
  const SparseComplexMatrix shifted = pencil.shifted(shift);
  const double norm = inf_norm(shifted);
  if (norm == 0.0)
    throw SingularShiftError(shift, "shift " + shift_string(shift) +
                                        ": z B - A vanishes identically");
  if (pencil.storage_hint() == StorageHint::dense)
    impl_ = std::make_unique<DenseImpl>(shifted, shift, norm);
  else
    impl_ = std::make_unique<SparseImpl>(shifted, shift, norm);
}

ShiftedFactorization::~ShiftedFactorization() = default;
ShiftedFactorization::ShiftedFactorization(ShiftedFactorization&&) noexcept =
    default;
ShiftedFactorization& ShiftedFactorization::operator=(
    ShiftedFactorization&&) noexcept = default;

Eigen::VectorXcd ShiftedFactorization::solve(const Eigen::VectorXcd& rhs) const {
  if (rhs.size() != dim_)
    throw Error(ErrorCode::dimension_mismatch,
                "solve: rhs has length " + std::to_string(rhs.size()) +
                    ", expected " + std::to_string(dim_));
  return solve(Eigen::MatrixXcd(rhs));
}

Eigen::MatrixXcd ShiftedFactorization::solve(const Eigen::MatrixXcd& rhs) const {
  if (rhs.rows() != dim_)
    throw Error(ErrorCode::dimension_mismatch,
                "solve: rhs has " + std::to_string(rhs.rows()) +
                    " rows, expected " + std::to_string(dim_));
  Eigen::MatrixXcd out = impl_->solve(rhs);
  if (!out.allFinite())
    throw Error(ErrorCode::solver, "solve: non-finite solution at shift " +
                                       shift_string(shift_));
  return out;
}

}  // namespace rim
