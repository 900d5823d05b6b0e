#pragma once

#include <cmath>
#include <complex>

#include "lieclosed/types.hpp"

namespace lieclosed::detail {

// sinh(z)/z, entire.
inline Complex shc(Complex z) {
  if (std::abs(z) < 1e-3) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0));
  }
  return std::sinh(z) / z;
}

// (cosh z - 1)/z^2, entire.
inline Complex chm(Complex z) {
  if (std::abs(z) < 1e-3) {
    const Complex z2 = z * z;
    return 0.5 + z2 / 24.0 * (1.0 + z2 / 30.0 * (1.0 + z2 / 56.0));
  }
  const Complex h = std::sinh(0.5 * z);
  return 2.0 * h * h / (z * z);
}

}  // namespace lieclosed::detail
