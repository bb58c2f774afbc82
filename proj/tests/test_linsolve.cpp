#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "linsolve.hpp"
#include "pencil.hpp"

using rim::Complex;
using rim::Pencil;
using rim::ShiftedFactorization;

namespace {

Eigen::VectorXcd seeded_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(u(rng), u(rng));
  return v;
}

double relative_residual(const Pencil& p, Complex z, const Eigen::VectorXcd& r,
                         const Eigen::VectorXcd& rhs) {
  const Eigen::MatrixXcd shifted = Eigen::MatrixXcd(p.shifted(z));
  return (shifted * r - rhs).norm() / rhs.norm();
}

Pencil with_hint(const Pencil& p, rim::StorageHint hint) {
  if (p.is_complex())
    return Pencil::from_complex(p.a_complex(), p.b_complex(), hint);
  return Pencil::from_real(p.a_real(), p.b_real(), hint);
}

}  // namespace

TEST_CASE("shifted solve on a diagonal pencil") {
  const Pencil p = rim::diagonal_pencil({Complex(1, 0), Complex(2, 0)});
  const ShiftedFactorization fact(p, Complex(5, 0));
  Eigen::VectorXcd rhs(2);
  rhs << Complex(1, 0), Complex(1, 0);
  const Eigen::VectorXcd r = fact.solve(rhs);
  CHECK(std::abs(r[0] - Complex(0.25, 0)) <= 1e-15);
  CHECK(std::abs(r[1] - Complex(1.0 / 3.0, 0)) <= 1e-15);
}

TEST_CASE("shift equal to an eigenvalue raises SingularShift") {
  const Pencil p = rim::diagonal_pencil({Complex(1, 0)});
  CHECK_THROWS_AS(ShiftedFactorization(p, Complex(1, 0)),
                  rim::SingularShiftError);
}

TEST_CASE("identity-like solves") {
  SUBCASE("(2I - I) r = e1") {
    const Pencil p = rim::diagonal_pencil({Complex(1, 0), Complex(1, 0)});
    const ShiftedFactorization fact(p, Complex(2, 0));
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(2);
    e1[0] = 1.0;
    CHECK((fact.solve(e1) - e1).norm() <= 1e-15);
  }
  SUBCASE("(0 - 3) r = 6") {
    const Pencil p = rim::diagonal_pencil({Complex(3, 0)});
    const ShiftedFactorization fact(p, Complex(0, 0));
    Eigen::VectorXcd rhs(1);
    rhs << Complex(6, 0);
    CHECK(std::abs(fact.solve(rhs)[0] - Complex(-2, 0)) <= 1e-15);
  }
  SUBCASE("zero rhs gives zero solution") {
    const Pencil p = rim::example3_pencil(10, 4);
    const ShiftedFactorization fact(p, Complex(0.003, 0.001));
    CHECK(fact.solve(Eigen::VectorXcd::Zero(10)).norm() == 0.0);
  }
}

TEST_CASE("example3 shifted solve meets the residual contract") {
  const Pencil p = rim::example3_pencil(100, 20);
  const Complex z(0.005, 0.001);
  const ShiftedFactorization fact(p, z);
  for (unsigned seed : {1u, 2u, 3u}) {
    const Eigen::VectorXcd rhs = seeded_vector(100, seed);
    const Eigen::VectorXcd r = fact.solve(rhs);
    CHECK(relative_residual(p, z, r, rhs) <= 1e-10);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  const Pencil p = rim::diagonal_pencil({Complex(1, 0), Complex(2, 0)});
  const ShiftedFactorization fact(p, Complex(5, 0));
  CHECK_THROWS_AS(fact.solve(Eigen::VectorXcd::Zero(3)), rim::Error);
}

TEST_CASE("factorization is deterministic") {
  const Pencil p = rim::example3_pencil(50, 10);
  const Complex z(0.011, 0.002);
  const Eigen::VectorXcd rhs = seeded_vector(50, 42);
  const Eigen::VectorXcd r1 = ShiftedFactorization(p, z).solve(rhs);
  const Eigen::VectorXcd r2 = ShiftedFactorization(p, z).solve(rhs);
  CHECK(r1 == r2);
}

TEST_CASE("sparse path matches dense path") {
  const Pencil dense = rim::example3_pencil(60, 12);
  const Pencil sparse = with_hint(dense, rim::StorageHint::sparse);
  const Complex z(0.04, 0.015);
  const Eigen::VectorXcd rhs = seeded_vector(60, 7);

  const Eigen::VectorXcd rd = ShiftedFactorization(dense, z).solve(rhs);
  const Eigen::VectorXcd rs = ShiftedFactorization(sparse, z).solve(rhs);
  CHECK((rd - rs).norm() / rd.norm() <= 1e-12);
  CHECK(relative_residual(sparse, z, rs, rhs) <= 1e-10);

  /* Both paths must flag an exact eigenvalue hit; this also guards the
   * pivot extraction from the sparse factorization internals. */
  const Pencil diag = rim::diagonal_pencil(
      {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)});
  const Pencil diag_sparse = with_hint(diag, rim::StorageHint::sparse);
  CHECK_THROWS_AS(ShiftedFactorization(diag, Complex(2, 0)),
                  rim::SingularShiftError);
  CHECK_THROWS_AS(ShiftedFactorization(diag_sparse, Complex(2, 0)),
                  rim::SingularShiftError);
}

TEST_CASE("well-posed random systems keep small residuals on both paths") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> eigs;
    for (int i = 0; i < 12; ++i) eigs.emplace_back(u(rng), u(rng));
    const Pencil p = rim::diagonal_pencil(eigs);
    const Complex z(2.5 + u(rng), 2.5 + u(rng)); /* away from the spectrum */
    const Eigen::VectorXcd rhs = seeded_vector(12, 100 + trial);
    for (rim::StorageHint hint :
         {rim::StorageHint::dense, rim::StorageHint::sparse}) {
      const Pencil q = with_hint(p, hint);
      const Eigen::VectorXcd r = ShiftedFactorization(q, z).solve(rhs);
      CHECK(relative_residual(q, z, r, rhs) <= 1e-10);
    }
  }
}
