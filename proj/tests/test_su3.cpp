#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/invariants.hpp"
#include "lieclosed/oracle.hpp"

using namespace lieclosed;
using testing::max_diff;

namespace {
SU3Params draw(testing::Rng& rng, double bound) {
  SU3Params p;
  for (int k = 0; k < 8; ++k) p.alpha(k) = rng.uniform(-bound, bound);
  return p;
}
}  // namespace

TEST_CASE("gell-mann normalization") {
  const auto t = gell_mann();
  for (std::size_t a = 0; a < 8; ++a) {
    CHECK(max_diff(Mat3c(t[a].adjoint()), t[a]) == 0.0);
    CHECK(std::abs(t[a].trace()) < 1e-15);
    for (std::size_t b = 0; b < 8; ++b)
      CHECK(std::abs((t[a] * t[b]).trace() - (a == b ? 2.0 : 0.0)) < 1e-15);
  }
}

TEST_CASE("su3 element examples") {
  SU3Params p;
  p.alpha(2) = 1.0;
  Mat3c d = Mat3c::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CHECK(max_diff(su3_element(p), d) == 0.0);
  p.alpha.setZero();
  p.alpha(7) = std::sqrt(3.0);
  d.setZero();
  d(0, 0) = d(1, 1) = 1.0;
  d(2, 2) = -2.0;
  CHECK(max_diff(su3_element(p), d) < 1e-15);
}

TEST_CASE("su3 square, invariants and secular equation") {
  testing::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const SU3Params p = draw(rng, 2.0);
    const Mat3c w = su3_element(p);
    CHECK(max_diff(su3_square_closed(p), Mat3c(w * w)) < 1e-13);
    const SU3Invariants inv = su3_invariants(p);
    CHECK(std::abs(inv.phi2 + p.alpha.squaredNorm()) < 1e-12);
    const InvariantVector phi = char_poly_invariants(Matrix(w));
    CHECK(std::abs(phi[1]) < 1e-13);
    CHECK(std::abs(phi[2] - inv.phi2) < 1e-12);
    CHECK(std::abs(phi[3] - inv.phi3) < 1e-11);
    CHECK(std::abs((w * w * w).trace() - 3.0 * w.determinant()) < 1e-11);
    const Mat3c secular = w * w * w + inv.phi2 * w + inv.phi3 * Mat3c::Identity();
    CHECK(secular.cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("su3 exponential") {
  SU3Params p;
  const double th = 0.9;
  p.alpha(2) = th;
  Mat3c expect = Mat3c::Identity();
  expect(0, 0) = std::exp(Complex(0, th / 2));
  expect(1, 1) = std::exp(Complex(0, -th / 2));
  CHECK(max_diff(su3_exp(p), expect) < 1e-14);

  testing::Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const SU3Params q = draw(rng, 3.0);
    const Mat3c u = su3_exp(q);
    CHECK(max_diff(Mat3c(u.adjoint() * u), Mat3c(Mat3c::Identity())) < 1e-12);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
    const Matrix ref = oracle::series_exp(Matrix(Complex(0, 0.5) * su3_element(q)));
    CHECK(max_diff(Matrix(u), ref) < 1e-11);
  }
}
