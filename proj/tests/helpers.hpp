#pragma once

#include <random>
#include <vector>

#include "lieclosed/groups.hpp"
#include "lieclosed/rational.hpp"
#include "lieclosed/types.hpp"

namespace testing {

using lieclosed::Complex;
using lieclosed::ExactRational;
using lieclosed::Matrix;

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

template <class M1, class M2>
double max_diff(const M1& a, const M2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  // p/q with |p| <= num, 1 <= q <= den
  ExactRational rational(int num = 9, int den = 7) {
    return ExactRational(integer(-num, num)) / ExactRational(integer(1, den));
  }
  ExactRational nonzero_rational(int num = 9, int den = 7) {
    for (;;) {
      ExactRational r = rational(num, den);
      if (r != 0) return r;
    }
  }

  lieclosed::Vec3 vec3(double bound) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
  }

  // random direction scaled to a norm drawn from [0, bound]
  lieclosed::Vec3 ball(double bound) {
    lieclosed::Vec3 v(normal(), normal(), normal());
    return v.normalized() * uniform(0.0, bound);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

  Matrix complex_matrix(int n, double scale) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(uniform(-scale, scale), uniform(-scale, scale));
    return m;
  }

  Matrix real_matrix(int n, double scale) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = uniform(-scale, scale);
    return m;
  }

  // S diag(lambda) S^-1 with a well-conditioned S
  Matrix with_spectrum(const std::vector<Complex>& lambda) {
    const int n = static_cast<int>(lambda.size());
    Matrix s = Matrix::Identity(n, n) + complex_matrix(n, 0.3);
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = lambda[static_cast<std::size_t>(i)];
    return s * d * s.inverse();
  }

  // n eigenvalues in the disc of radius r, pairwise at least gap apart
  std::vector<Complex> separated(int n, double r, double gap) {
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < n) {
      Complex z(uniform(-r, r), uniform(-r, r));
      if (std::abs(z) > r) continue;
      bool ok = true;
      for (const Complex& w : out)
        if (std::abs(z - w) < gap) ok = false;
      if (ok) out.push_back(z);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing
