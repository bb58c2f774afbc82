#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "errors.hpp"

namespace rim {

/* Axis-aligned search region in the complex plane. Degenerate (empty or
 * inverted) rectangles are rejected at construction. */
struct Rectangle {
  double re_min, re_max, im_min, im_max;

  Rectangle(double re_lo, double re_hi, double im_lo, double im_hi)
      : re_min(re_lo), re_max(re_hi), im_min(im_lo), im_max(im_hi) {
    if (!(std::isfinite(re_min) && std::isfinite(re_max) &&
          std::isfinite(im_min) && std::isfinite(im_max)))
      throw Error(ErrorCode::invalid_argument, "rectangle: non-finite corner");
    if (!(re_min < re_max && im_min < im_max))
      throw Error(ErrorCode::invalid_argument, "rectangle: empty or inverted");
  }

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  double diameter() const { return std::hypot(width(), height()); }
  std::complex<double> center() const {
    return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
  }
  bool contains(std::complex<double> z) const {
    return re_min <= z.real() && z.real() <= re_max && im_min <= z.imag() &&
           z.imag() <= im_max;
  }
};

/* Region size h(S): the larger side length. */
inline double size(const Rectangle& rect) {
  return rect.width() > rect.height() ? rect.width() : rect.height();
}

/* The four equal quadrants, in (SW, SE, NW, NE) order. */
inline std::array<Rectangle, 4> subdivide(const Rectangle& rect) {
  const double rm = 0.5 * (rect.re_min + rect.re_max);
  const double im = 0.5 * (rect.im_min + rect.im_max);
  return {Rectangle(rect.re_min, rm, rect.im_min, im),
          Rectangle(rm, rect.re_max, rect.im_min, im),
          Rectangle(rect.re_min, rm, im, rect.im_max),
          Rectangle(rm, rect.re_max, im, rect.im_max)};
}

}  // namespace rim
