#pragma once

#include <vector>

namespace rim {

/* Bessel function of the first kind J_m(x) for 0 <= m <= 60 and
 * 0 <= x <= 60 (the ranges the dispersion search needs), accurate to
 * 1e-12 absolute. Ascending series for small x, backward recurrence with
 * normalization otherwise. */
double bessel_j(int m, double x);

/* First `count` positive zeros of J_m below x = 60, bracketed on a scan
 * grid and refined by bisection. */
std::vector<double> bessel_j_zeros(int m, int count);

/* Dispersion function for the radius-1/2 disc with refraction index 16:
 *   m = 0:  f(k) = J_1(k/2) J_0(2k) - 4 J_0(k/2) J_1(2k)
 *   m >= 1: f(k) = J_{m-1}(k/2) J_m(2k) - 4 J_m(k/2) J_{m-1}(2k)
 * Its positive roots are the exact real transmission wavenumbers. */
double disc_dispersion(int m, double k);

struct DiscTeRoot {
  int order_m;   /* angular index */
  double k;      /* wavenumber, |f_m(k)| <= 1e-10 */
  double lambda; /* k^2 */
};

/* All dispersion roots with k in (0, k_max] for m = 0..m_max, found by a
 * sign scan of step scan_step plus bisection to 1e-12, sorted ascending
 * in k. A root shared by two angular orders appears once per order. */
std::vector<DiscTeRoot> disc_te_roots(double k_max = 6.0, int m_max = 20,
                                      double scan_step = 1e-3);

}  // namespace rim
