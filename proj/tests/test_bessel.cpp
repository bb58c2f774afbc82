#include <cmath>

#include "doctest.h"
#include "bessel.hpp"
#include "errors.hpp"

TEST_CASE("bessel_j at the origin") {
  CHECK(rim::bessel_j(0, 0.0) == 1.0);
  CHECK(rim::bessel_j(1, 0.0) == 0.0);
  CHECK(rim::bessel_j(17, 0.0) == 0.0);
}

TEST_CASE("bessel_j agrees with the standard library implementation") {
  /* std::cyl_bessel_j is an independent route to the same values. */
  const int orders[] = {0, 1, 2, 3, 5, 10, 25, 40, 60};
  const double args[] = {1e-6, 0.5,  1.0,  2.0,  4.5,  8.9,
                         9.1,  12.0, 20.0, 35.0, 47.3, 59.5};
  for (int m : orders) {
    for (double x : args) {
      const double ours = rim::bessel_j(m, x);
      const double reference = std::cyl_bessel_j(static_cast<double>(m), x);
      CAPTURE(m);
      CAPTURE(x);
      CHECK(std::abs(ours - reference) <= 1e-12);
    }
  }
}

TEST_CASE("three-term recurrence holds across the grid") {
  for (int m = 1; m <= 30; m += 3) {
    for (double x = 0.5; x <= 59.0; x += 3.7) {
      const double lhs = rim::bessel_j(m - 1, x) + rim::bessel_j(m + 1, x);
      const double rhs = (2.0 * m / x) * rim::bessel_j(m, x);
      CAPTURE(m);
      CAPTURE(x);
      CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
  }
}

TEST_CASE("out-of-range arguments are rejected") {
  CHECK_THROWS_AS(rim::bessel_j(-1, 1.0), rim::Error);
  CHECK_THROWS_AS(rim::bessel_j(61, 1.0), rim::Error);
  CHECK_THROWS_AS(rim::bessel_j(0, -0.5), rim::Error);
  CHECK_THROWS_AS(rim::bessel_j(0, 61.0), rim::Error);
}

TEST_CASE("first zeros of J0 and J1") {
  const auto z0 = rim::bessel_j_zeros(0, 3);
  REQUIRE(z0.size() == 3);
  CHECK(std::abs(z0[0] - 2.404825557695773) <= 1e-12);
  CHECK(std::abs(z0[1] - 5.520078110286311) <= 1e-11);
  const auto z1 = rim::bessel_j_zeros(1, 1);
  REQUIRE(z1.size() == 1);
  CHECK(std::abs(z1[0] - 3.831705970207512) <= 1e-11);
}

TEST_CASE("disc transmission roots reproduce the known leading values") {
  const auto roots = rim::disc_te_roots(6.0, 20);
  REQUIRE(roots.size() >= 3);

  /* Smallest eigenvalue lambda = k^2 ~ 3.952. */
  CHECK(roots[0].lambda == doctest::Approx(3.952).epsilon(5e-4));

  /* Next distinct value ~ 6.827. */
  CHECK(roots[1].lambda == doctest::Approx(6.827).epsilon(5e-4));

  for (const auto& root : roots) {
    CHECK(root.lambda == root.k * root.k);
    CHECK(std::abs(rim::disc_dispersion(root.order_m, root.k)) <= 1e-10);
    CHECK(root.k > 0.0);
    CHECK(root.k <= 6.0);
  }

  /* Sorted ascending in k. */
  for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i].k >= roots[i - 1].k);
}

TEST_CASE("no roots below the first one") {
  CHECK(rim::disc_te_roots(0.5, 20).empty());
}

TEST_CASE("root list is stable under grid refinement") {
  const auto coarse = rim::disc_te_roots(6.0, 10);
  const auto fine = rim::disc_te_roots(6.0, 10, 5e-4);
  REQUIRE(coarse.size() == fine.size());
  for (size_t i = 0; i < coarse.size(); ++i) {
    CHECK(coarse[i].order_m == fine[i].order_m);
    CHECK(std::abs(coarse[i].k - fine[i].k) <= 1e-10);
  }
}
