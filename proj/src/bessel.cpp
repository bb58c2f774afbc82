#include "bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace rim {

namespace {

constexpr int kMaxOrder = 60;
constexpr double kMaxArgument = 60.0;

/* Ascending series J_m(x) = sum_j (-1)^j (x/2)^(m+2j) / (j! (m+j)!).
 * Cancellation stays harmless for x below ~10. */
double bessel_series(int m, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= m; ++i) term *= half / static_cast<double>(i);
  double sum = term;
  for (int j = 1; j < 200; ++j) {
    term *= -(half * half) /
            (static_cast<double>(j) * static_cast<double>(m + j));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

/* Backward (Miller) recurrence with normalization by
 * J_0 + 2 J_2 + 2 J_4 + ... = 1. */
double bessel_backward(int m, double x) {
  const int start = 2 * ((std::max(m, static_cast<int>(x)) + 52) / 2);
  double jp = 0.0;       /* J_{k+1} */
  double jc = 1e-30;     /* J_k, arbitrary seed */
  double result = (m == start) ? jc : 0.0;
  double norm = 2.0 * jc; /* start is even */
  for (int k = start; k >= 1; --k) {
    double jm = (2.0 * k / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 == m) result = jc;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
  }
  return result / norm;
}

}  // namespace

double bessel_j(int m, double x) {
  if (m < 0 || m > kMaxOrder || !(x >= 0.0) || x > kMaxArgument)
    throw Error(ErrorCode::invalid_argument,
                "bessel_j: need 0 <= m <= 60 and 0 <= x <= 60");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x < 9.0) return bessel_series(m, x);
  return bessel_backward(m, x);
}

double disc_dispersion(int m, double k) {
  if (m == 0)
    return bessel_j(1, 0.5 * k) * bessel_j(0, 2.0 * k) -
           4.0 * bessel_j(0, 0.5 * k) * bessel_j(1, 2.0 * k);
  return bessel_j(m - 1, 0.5 * k) * bessel_j(m, 2.0 * k) -
         4.0 * bessel_j(m, 0.5 * k) * bessel_j(m - 1, 2.0 * k);
}

namespace {

/* Bisection on [lo, hi] with f(lo), f(hi) of opposite sign. */
template <typename F>
double bisect(F&& f, double lo, double hi, double f_lo) {
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0.0) != (f_mid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> bessel_j_zeros(int m, int count) {
  if (count < 1)
    throw Error(ErrorCode::invalid_argument, "bessel_j_zeros: count >= 1");
  std::vector<double> zeros;
  const double step = 1e-3;
  double prev_x = step;
  double prev_f = bessel_j(m, prev_x);
  for (double x = 2.0 * step; x <= kMaxArgument && static_cast<int>(zeros.size()) < count;
       x += step) {
    const double f = bessel_j(m, x);
    if (f == 0.0) {
      zeros.push_back(x);
    } else if ((prev_f < 0.0) != (f < 0.0)) {
      zeros.push_back(
          bisect([m](double t) { return bessel_j(m, t); }, prev_x, x, prev_f));
    }
    prev_x = x;
    prev_f = f;
  }
  return zeros;
}

std::vector<DiscTeRoot> disc_te_roots(double k_max, int m_max,
                                      double scan_step) {
  if (!(k_max > 0.0) || 2.0 * k_max > kMaxArgument)
    throw Error(ErrorCode::invalid_argument,
                "disc_te_roots: need 0 < k_max <= 30");
  if (m_max < 0 || m_max > kMaxOrder)
    throw Error(ErrorCode::invalid_argument,
                "disc_te_roots: need 0 <= m_max <= 60");
  if (!(scan_step > 0.0) || scan_step > 0.1)
    throw Error(ErrorCode::invalid_argument,
                "disc_te_roots: need 0 < scan_step <= 0.1");
  std::vector<DiscTeRoot> roots;
  const double step = scan_step;
  for (int m = 0; m <= m_max; ++m) {
    double prev_k = step;
    double prev_f = disc_dispersion(m, prev_k);
    for (double k = 2.0 * step; k <= k_max + 0.5 * step; k += step) {
      const double clamped = std::min(k, k_max);
      const double f = disc_dispersion(m, clamped);
      if (f == 0.0) {
        roots.push_back({m, clamped, clamped * clamped});
      } else if ((prev_f < 0.0) != (f < 0.0)) {
        const double root = bisect(
            [m](double t) { return disc_dispersion(m, t); }, prev_k, clamped,
            prev_f);
        roots.push_back({m, root, root * root});
      }
      prev_k = clamped;
      prev_f = f;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const DiscTeRoot& a, const DiscTeRoot& b) { return a.k < b.k; });
  return roots;
}

}  // namespace rim
