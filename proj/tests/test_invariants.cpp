#include "doctest.h"
#include "helpers.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/invariants.hpp"
#include "lieclosed/oracle.hpp"
#include "lieclosed/symfun.hpp"

using namespace lieclosed;

namespace {
Matrix diag123() {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1, 2, 3;
  return d;
}

std::vector<Matrix> to_dynamic(const std::array<Mat4, 6>& g) {
  std::vector<Matrix> out;
  for (const Mat4& m : g) out.push_back(to_complex(m));
  return out;
}

std::vector<Matrix> gell_mann_dynamic() {
  std::vector<Matrix> out;
  for (const Mat3c& m : gell_mann()) out.push_back(m);
  return out;
}
}  // namespace

TEST_CASE("trace powers") {
  for (const Complex& t : trace_powers(Matrix::Zero(3, 3), 4)) CHECK(t == Complex(0.0));
  for (const Complex& t : trace_powers(Matrix::Identity(3, 3), 4)) CHECK(t == Complex(3.0));
  const auto t = trace_powers(diag123(), 3);
  CHECK(t[0] == Complex(6.0));
  CHECK(t[1] == Complex(14.0));
  CHECK(t[2] == Complex(36.0));
  CHECK_THROWS_AS(trace_powers(diag123(), 0), DomainError);
}

TEST_CASE("characteristic invariants") {
  const auto phi = char_poly_invariants(diag123());
  const double expect[] = {1, -6, 11, -6};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(phi[static_cast<std::size_t>(j)] - expect[j]) < 1e-13);

  testing::Rng rng(1);
  const Matrix a = rng.complex_matrix(5, 1.0);
  CHECK(std::abs(char_poly_invariants(a)[1] + a.trace()) < 1e-14);

  const Matrix l = to_complex(lorentz_algebra({Vec3(1, 0, 0), Vec3(2, 0, 0)}));
  const auto pl = char_poly_invariants(l);
  CHECK(std::abs(pl[1]) < 1e-14);
  CHECK(std::abs(pl[2] + 3.0) < 1e-13);
  CHECK(std::abs(pl[3]) < 1e-13);
  // constant term of the quartic is -(omega . zeta)^2
  CHECK(std::abs(pl[4] + 4.0) < 1e-13);
  CHECK(std::abs(oracle::brute_determinant(l) + 4.0) < 1e-13);
}

TEST_CASE("determinant through Bell sums") {
  CHECK(std::abs(det_via_bell(Matrix::Identity(4, 4)) - 1.0) < 1e-15);
  CHECK(std::abs(det_via_bell(diag123()) - 6.0) < 1e-13);
  testing::Rng rng(2);
  Matrix r(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = static_cast<double>(rng.integer(-4, 4)) / rng.integer(1, 3);
  const Complex ref = oracle::brute_determinant(r);
  CHECK(std::abs(det_via_bell(r) - ref) <= 1e-10 * std::abs(ref));
}

TEST_CASE("similarity invariance and spectral identity") {
  testing::Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(2, 6);
    const Matrix a = rng.complex_matrix(n, 1.0);
    const Matrix g = Matrix::Identity(n, n) + rng.complex_matrix(n, 0.4);
    const auto p1 = char_poly_invariants(a);
    const auto p2 = char_poly_invariants(g.inverse() * a * g);
    for (int j = 0; j <= n; ++j)
      CHECK(std::abs(p1[static_cast<std::size_t>(j)] - p2[static_cast<std::size_t>(j)]) <=
            1e-8 * (1.0 + std::abs(p1[static_cast<std::size_t>(j)])));

    const auto lambda = rng.separated(n, 2.0, 0.1);
    const auto p3 = char_poly_invariants(rng.with_spectrum(lambda));
    for (int j = 0; j <= n; ++j) {
      const Complex sigma = elementary(static_cast<unsigned>(j), lambda);
      const Complex expect = (j % 2 == 0 ? 1.0 : -1.0) * sigma;
      CHECK(std::abs(p3[static_cast<std::size_t>(j)] - expect) <= 1e-8 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("odd invariants vanish for pseudo-orthogonal elements") {
  testing::Rng rng(7);
  const Mat4 eta = lorentz_metric();
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 a = lorentz_algebra({rng.vec3(2), rng.vec3(2)});
    CHECK(testing::max_diff(a.transpose(), Mat4(-eta * a * eta.inverse())) == 0.0);
    const auto phi = char_poly_invariants(to_complex(a));
    CHECK(std::abs(phi[1]) < 1e-12);
    CHECK(std::abs(phi[3]) < 1e-12);
  }
}

TEST_CASE("invariant tensor of order one and shape errors") {
  const auto gm = gell_mann_dynamic();
  const auto eta1 = invariant_tensor(gm, 1);
  for (const Complex& v : eta1.data()) CHECK(v == Complex(0.0));
  CHECK_THROWS_AS(invariant_tensor(gm, 5), DomainError);
  auto mixed = gm;
  mixed.push_back(Matrix::Identity(4, 4));
  CHECK_THROWS_AS(invariant_tensor(mixed, 2), InputError);
  CHECK_THROWS_AS(invariant_tensor({}, 2), InputError);
}

TEST_CASE("Killing form of su(3)") {
  const auto gm = gell_mann_dynamic();
  const auto eta2 = invariant_tensor(gm, 2);
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) {
      const unsigned idx[] = {i, j};
      const double expect = i == j ? -1.0 : 0.0;
      CHECK(std::abs(eta2(idx) - expect) < 1e-14);
      // traceless generators: eta2 = -(1/2) tr(T_i T_j)
      CHECK(std::abs(eta2(idx) + 0.5 * (gm[i] * gm[j]).trace()) < 1e-14);
    }
}

TEST_CASE("contractions reproduce the characteristic invariants") {
  testing::Rng rng(17);
  const auto lg = to_dynamic(lorentz_generators());
  const auto eta2 = invariant_tensor(lg, 2);
  const auto eta3 = invariant_tensor(lg, 3);
  const auto eta4 = invariant_tensor(lg, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec3 w = rng.vec3(1.5), z = rng.vec3(1.5);
    const std::vector<Complex> coeff{z(0), z(1), z(2), w(0), w(1), w(2)};
    const auto phi = char_poly_invariants(to_complex(lorentz_algebra({w, z})));
    CHECK(std::abs(contract(tensor_power(coeff, 2), eta2) - phi[2]) < 1e-10);
    CHECK(std::abs(contract(tensor_power(coeff, 3), eta3) - phi[3]) < 1e-10);
    CHECK(std::abs(contract(tensor_power(coeff, 4), eta4) - phi[4]) < 1e-10);
  }

  const auto gm = gell_mann_dynamic();
  const auto g2 = invariant_tensor(gm, 2);
  const auto g3 = invariant_tensor(gm, 3);
  for (int trial = 0; trial < 10; ++trial) {
    SU3Params p;
    for (int k = 0; k < 8; ++k) p.alpha(k) = rng.uniform(-1, 1);
    std::vector<Complex> al(p.alpha.data(), p.alpha.data() + 8);
    const Mat3c w = su3_element(p);
    CHECK(std::abs(contract(tensor_power(al, 2), g2) + 0.5 * (w * w).trace()) < 1e-12);
    CHECK(std::abs(contract(tensor_power(al, 3), g3) + w.determinant()) < 1e-12);
  }
}

TEST_CASE("su(3) trilinear example") {
  const auto g3 = invariant_tensor(gell_mann_dynamic(), 3);
  std::vector<Complex> al(8, Complex(0.0));
  al[2] = 1.0;
  al[3] = 1.0;
  // the cubic invariant at this point is alpha_3 alpha_4^2 = 1 = det W
  const Complex v = contract(tensor_power(al, 3), g3);
  CHECK(std::abs(v + 1.0) < 1e-14);
  SU3Params p;
  p.alpha(2) = 1;
  p.alpha(3) = 1;
  CHECK(std::abs(su3_element(p).determinant() - 1.0) < 1e-14);
}

TEST_CASE("tensor symmetry and serial reference") {
  const auto lg = to_dynamic(lorentz_generators());
  const auto par = invariant_tensor(lg, 3);
  const auto ser = invariant_tensor_serial(lg, 3);
  for (std::size_t i = 0; i < par.data().size(); ++i) CHECK(par.data()[i] == ser.data()[i]);
  const unsigned a[] = {0, 4, 2}, b[] = {4, 2, 0}, c[] = {2, 0, 4};
  CHECK(par(a) == par(b));
  CHECK(par(a) == par(c));
}

TEST_CASE("contract shape check") {
  SymmetricTensor t(2, 3);
  CHECK(contract(std::vector<Complex>(9, Complex(0.0)), t) == Complex(0.0));
  CHECK_THROWS_AS(contract(std::vector<Complex>(8), t), InputError);
}
