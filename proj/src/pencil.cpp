#include "pencil.hpp"

#include <cmath>

namespace rim {

namespace {

template <typename Scalar>
void check_square_pair(const Eigen::SparseMatrix<Scalar>& a,
                       const Eigen::SparseMatrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw Error(ErrorCode::invalid_argument, "pencil: matrices must be square");
  if (a.rows() != b.rows())
    throw Error(ErrorCode::dimension_mismatch,
                "pencil: A is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " but B is " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.rows() < 1)
    throw Error(ErrorCode::invalid_argument, "pencil: dimension must be >= 1");
  auto all_finite = [](const Eigen::SparseMatrix<Scalar>& mat) {
    for (int k = 0; k < mat.outerSize(); ++k)
      for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(mat, k); it;
           ++it)
        if (!std::isfinite(std::abs(it.value()))) return false;
    return true;
  };
  if (!all_finite(a) || !all_finite(b))
    throw Error(ErrorCode::invalid_argument, "pencil: non-finite entry");
}

}  // namespace

Pencil Pencil::from_real(SparseRealMatrix a, SparseRealMatrix b,
                         StorageHint hint) {
  a.makeCompressed();
  b.makeCompressed();
  check_square_pair(a, b);
  Pencil p;
  p.dim_ = a.rows();
  p.is_complex_ = false;
  p.hint_ = hint;
  p.a_real_ = std::move(a);
  p.b_real_ = std::move(b);
  return p;
}

Pencil Pencil::from_complex(SparseComplexMatrix a, SparseComplexMatrix b,
                            StorageHint hint) {
  a.makeCompressed();
  b.makeCompressed();
  check_square_pair(a, b);
  Pencil p;
  p.dim_ = a.rows();
  p.is_complex_ = true;
  p.hint_ = hint;
  p.a_complex_ = std::move(a);
  p.b_complex_ = std::move(b);
  return p;
}

SparseComplexMatrix Pencil::shifted(Complex z) const {
  SparseComplexMatrix out;
  if (is_complex_) {
    out = (z * b_complex_ - a_complex_).pruned(0.0);
  } else {
    out = (z * b_real_.cast<Complex>() - a_real_.cast<Complex>()).pruned(0.0);
  }
  out.makeCompressed();
  return out;
}

Eigen::VectorXcd Pencil::apply_b(const Eigen::VectorXcd& y) const {
  if (y.size() != dim_)
    throw Error(ErrorCode::dimension_mismatch, "apply_b: vector length");
  if (is_complex_) return b_complex_ * y;
  Eigen::VectorXcd out(dim_);
  out.real() = b_real_ * y.real();
  out.imag() = b_real_ * y.imag();
  return out;
}

Eigen::MatrixXcd Pencil::apply_b(const Eigen::MatrixXcd& ys) const {
  if (ys.rows() != dim_)
    throw Error(ErrorCode::dimension_mismatch, "apply_b: row count");
  if (is_complex_) return b_complex_ * ys;
  Eigen::MatrixXcd out(ys.rows(), ys.cols());
  out.real() = b_real_ * ys.real();
  out.imag() = b_real_ * ys.imag();
  return out;
}

Pencil example3_pencil(int size, int num_ones) {
  if (size < 1 || num_ones < 1 || num_ones > size)
    throw Error(ErrorCode::invalid_argument,
                "example3_pencil: need 1 <= num_ones <= size");
  std::vector<Eigen::Triplet<double>> ta, tb;
  ta.reserve(2 * size);
  tb.reserve(num_ones);
  for (int i = 0; i < size; ++i) {
    ta.emplace_back(i, i, (size - 1 - i) / 100.0);
    if (i + 1 < size) ta.emplace_back(i, i + 1, 1.0 / 100.0);
  }
  for (int i = size - num_ones; i < size; ++i) tb.emplace_back(i, i, 1.0);
  SparseRealMatrix a(size, size), b(size, size);
  a.setFromTriplets(ta.begin(), ta.end());
  b.setFromTriplets(tb.begin(), tb.end());
  return Pencil::from_real(std::move(a), std::move(b), StorageHint::dense);
}

Pencil wilkinson_pencil(int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::invalid_argument,
                "wilkinson_pencil: n must be even and >= 2");
  const int half = n / 2;
  std::vector<Eigen::Triplet<double>> ta, tb;
  for (int i = 0; i < n; ++i) {
    const int profile = i < half ? half - i : i - half + 1;
    ta.emplace_back(i, i, static_cast<double>(profile));
    if (i + 1 < n) {
      ta.emplace_back(i, i + 1, -1.0);
      ta.emplace_back(i + 1, i, -1.0);
    }
    tb.emplace_back(i, i, 1.0);
  }
  SparseRealMatrix a(n, n), b(n, n);
  a.setFromTriplets(ta.begin(), ta.end());
  b.setFromTriplets(tb.begin(), tb.end());
  return Pencil::from_real(std::move(a), std::move(b), StorageHint::dense);
}

Pencil diagonal_pencil(const std::vector<Complex>& eigs) {
  if (eigs.empty())
    throw Error(ErrorCode::invalid_argument, "diagonal_pencil: empty list");
  const int n = static_cast<int>(eigs.size());
  bool any_imag = false;
  for (const Complex& e : eigs)
    if (e.imag() != 0.0) any_imag = true;
  if (any_imag) {
    std::vector<Eigen::Triplet<Complex>> ta, tb;
    for (int i = 0; i < n; ++i) {
      ta.emplace_back(i, i, eigs[i]);
      tb.emplace_back(i, i, Complex(1.0, 0.0));
    }
    SparseComplexMatrix a(n, n), b(n, n);
    a.setFromTriplets(ta.begin(), ta.end());
    b.setFromTriplets(tb.begin(), tb.end());
    return Pencil::from_complex(std::move(a), std::move(b),
                                StorageHint::dense);
  }
  std::vector<Eigen::Triplet<double>> ta, tb;
  for (int i = 0; i < n; ++i) {
    ta.emplace_back(i, i, eigs[i].real());
    tb.emplace_back(i, i, 1.0);
  }
  SparseRealMatrix a(n, n), b(n, n);
  a.setFromTriplets(ta.begin(), ta.end());
  b.setFromTriplets(tb.begin(), tb.end());
  return Pencil::from_real(std::move(a), std::move(b), StorageHint::dense);
}

}  // namespace rim
