#include <cmath>

#include "lieclosed/groups.hpp"
#include "lieclosed/zmethod.hpp"

namespace lieclosed {

std::array<Mat3c, 8> gell_mann() {
  const Complex i(0.0, 1.0);
  std::array<Mat3c, 8> t;
  for (auto& m : t) m.setZero();
  t[0](0, 1) = t[0](1, 0) = 1.0;
  t[1](0, 1) = -i;
  t[1](1, 0) = i;
  t[2](0, 0) = 1.0;
  t[2](1, 1) = -1.0;
  t[3](0, 2) = t[3](2, 0) = 1.0;
  t[4](0, 2) = -i;
  t[4](2, 0) = i;
  t[5](1, 2) = t[5](2, 1) = 1.0;
  t[6](1, 2) = -i;
  t[6](2, 1) = i;
  const double r = 1.0 / std::sqrt(3.0);
  t[7](0, 0) = r;
  t[7](1, 1) = r;
  t[7](2, 2) = -2.0 * r;
  return t;
}

Mat3c su3_element(const SU3Params& p) {
  const auto t = gell_mann();
  Mat3c w = Mat3c::Zero();
  for (int k = 0; k < 8; ++k) w += p.alpha(k) * t[static_cast<std::size_t>(k)];
  return w;
}

Mat3c su3_square_closed(const SU3Params& p) {
  const auto& al = p.alpha;
  const double r = 1.0 / std::sqrt(3.0);
  const Complex a12(al(0), al(1)), a45(al(3), al(4)), a67(al(5), al(6));
  const double a38 = al(2) + r * al(7);
  const double a38m = al(2) - r * al(7);
  const double a8 = al(7);
  Mat3c s;
  s(0, 0) = std::norm(a12) + std::norm(a45) + a38 * a38;
  s(1, 1) = std::norm(a12) + std::norm(a67) + a38m * a38m;
  s(2, 2) = std::norm(a45) + std::norm(a67) + 4.0 * a8 * a8 / 3.0;
  s(0, 1) = std::conj(a45) * a67 + 2.0 * r * std::conj(a12) * a8;
  s(1, 0) = std::conj(s(0, 1));
  s(0, 2) = std::conj(a12) * std::conj(a67) + std::conj(a45) * a38m;
  s(2, 0) = std::conj(s(0, 2));
  s(1, 2) = a12 * std::conj(a45) - std::conj(a67) * a38;
  s(2, 1) = std::conj(s(1, 2));
  return s;
}

SU3Invariants su3_invariants(const SU3Params& p) {
  const auto& a = p.alpha;
  const double r = 1.0 / std::sqrt(3.0);
  const double a1 = a(0), a2 = a(1), a3 = a(2), a4 = a(3), a5 = a(4), a6 = a(5), a7 = a(6),
               a8 = a(7);
  const double det = 2.0 * (a1 * a4 * a6 + a2 * a5 * a6 - a2 * a4 * a7 + a1 * a5 * a7) +
                     a3 * (a4 * a4 + a5 * a5 - a6 * a6 - a7 * a7) +
                     r * a8 *
                         (2.0 * (a1 * a1 + a2 * a2 + a3 * a3) - a4 * a4 - a5 * a5 - a6 * a6 -
                          a7 * a7 - 2.0 * a8 * a8 / 3.0);
  return {-a.squaredNorm(), -det};
}

Mat3c su3_exp(const SU3Params& p) {
  const Matrix w = su3_element(p);
  return matrix_exp(Complex(0.0, 0.5) * w);
}

}  // namespace lieclosed
