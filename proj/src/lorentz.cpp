#include <cmath>

#include "group_util.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/zmethod.hpp"

namespace lieclosed {

Mat3 epsilon_dot(const Vec3& w) {
  Mat3 m;
  m << 0, w(2), -w(1),
      -w(2), 0, w(0),
      w(1), -w(0), 0;
  return m;
}

Matrix to_complex(const RealMatrix& m) { return m.cast<Complex>(); }

RealMatrix real_part_checked(const Matrix& m, double tol) {
  const double im = m.imag().cwiseAbs().maxCoeff();
  if (!(im < tol))
    throw NumericalError("group element has imaginary residue " + std::to_string(im));
  return m.real();
}

LorentzAux lorentz_aux(const LorentzParams& p) {
  const Vec3& w = p.omega;
  const Vec3& z = p.zeta;
  LorentzAux x;
  x.f1 = w.squaredNorm() - z.squaredNorm();
  x.f2 = w.dot(z);
  const double r = std::hypot(0.5 * x.f1, x.f2);
  // take the root without cancellation, the other from U^2 V^2 = -f2^2
  if (x.f1 <= 0) {
    x.U2 = -0.5 * x.f1 + r;
    x.V2 = x.U2 > 0 ? -x.f2 * x.f2 / x.U2 : 0.0;
  } else {
    x.V2 = -0.5 * x.f1 - r;
    x.U2 = x.V2 < 0 ? -x.f2 * x.f2 / x.V2 : 0.0;
  }
  x.U = std::sqrt(Complex(x.U2, 0.0));
  x.V = std::sqrt(Complex(x.V2, 0.0));
  x.Q = w.cross(z);
  x.C = x.f1 * w + x.f2 * z;
  x.D = x.f1 * z - x.f2 * w;
  x.X = x.V2 * z + x.f2 * w;
  x.Y = x.U2 * z + x.f2 * w;
  x.Wvec = x.V2 * w - x.f2 * z;
  x.Zvec = x.U2 * w - x.f2 * z;
  x.L = z * z.transpose() + w * w.transpose() - w.squaredNorm() * Mat3::Identity();
  return x;
}

Mat4 lorentz_metric() { return Eigen::Vector4d(1, -1, -1, -1).asDiagonal(); }

Mat4 lorentz_algebra(const LorentzParams& p) {
  Mat4 a = Mat4::Zero();
  a.block<1, 3>(0, 1) = -p.zeta.transpose();
  a.block<3, 1>(1, 0) = -p.zeta;
  a.block<3, 3>(1, 1) = -epsilon_dot(p.omega);
  return a;
}

LorentzPowers lorentz_powers(const LorentzParams& p) {
  const LorentzAux x = lorentz_aux(p);
  LorentzPowers out;
  out.a2.setZero();
  out.a2(0, 0) = p.zeta.squaredNorm();
  out.a2.block<1, 3>(0, 1) = x.Q.transpose();
  out.a2.block<3, 1>(1, 0) = -x.Q;
  out.a2.block<3, 3>(1, 1) = x.L;
  out.a3.setZero();
  out.a3.block<1, 3>(0, 1) = x.D.transpose();
  out.a3.block<3, 1>(1, 0) = x.D;
  out.a3.block<3, 3>(1, 1) = epsilon_dot(x.C);
  return out;
}

std::pair<Complex, Complex> lorentz_UV(const LorentzParams& p) {
  const LorentzAux x = lorentz_aux(p);
  return {x.U, x.V};
}

bool lorentz_degenerate(const LorentzAux& x) {
  return std::abs(x.U2 - x.V2) < 1e-6 * (1.0 + std::abs(x.U2) + std::abs(x.V2));
}

namespace {

Mat4 confluent_fallback(const Mat4& a) {
  return real_part_checked(matrix_exp(to_complex(a)));
}

}  // namespace

Mat4 lorentz_exp_closed(const LorentzParams& p) {
  const LorentzAux x = lorentz_aux(p);
  if (lorentz_degenerate(x)) return confluent_fallback(lorentz_algebra(p));

  const Complex cu = std::cosh(x.U), cv = std::cosh(x.V);
  const Complex su = detail::shc(x.U), sv = detail::shc(x.V);
  const double d = x.U2 - x.V2;
  const double z2 = p.zeta.squaredNorm();

  Eigen::Matrix4cd g;
  g(0, 0) = ((z2 - x.V2) * cu + (x.U2 - z2) * cv) / d;
  for (int i = 0; i < 3; ++i) {
    const Complex common = x.X(i) * sv - x.Y(i) * su;
    const Complex rot = x.Q(i) * (cv - cu);
    g(0, i + 1) = (common - rot) / d;
    g(i + 1, 0) = (common + rot) / d;
  }
  const Mat3 I3 = Mat3::Identity();
  const Eigen::Matrix3cd lu = (x.L - x.V2 * I3).cast<Complex>();
  const Eigen::Matrix3cd lv = (x.L - x.U2 * I3).cast<Complex>();
  const Eigen::Matrix3cd ew = epsilon_dot(x.Wvec).cast<Complex>();
  const Eigen::Matrix3cd ez = epsilon_dot(x.Zvec).cast<Complex>();
  g.block<3, 3>(1, 1) = (lu * cu - lv * cv + ew * sv - ez * su) / d;
  return real_part_checked(g);
}

Mat4 lorentz_exp_powers(const LorentzParams& p) {
  const LorentzAux x = lorentz_aux(p);
  const Mat4 a = lorentz_algebra(p);
  if (lorentz_degenerate(x)) return confluent_fallback(a);
  const Matrix ac = to_complex(a);
  const Matrix a2 = ac * ac;
  const Matrix a3 = a2 * ac;
  const Matrix I = Matrix::Identity(4, 4);
  const Complex cu = std::cosh(x.U), cv = std::cosh(x.V);
  const Complex su = detail::shc(x.U), sv = detail::shc(x.V);
  const Matrix g = ((a2 - x.V2 * I) * cu + (a3 - x.V2 * ac) * su - (a2 - x.U2 * I) * cv -
                    (a3 - x.U2 * ac) * sv) /
                   (x.U2 - x.V2);
  return real_part_checked(g);
}

std::array<Matrix, 4> lorentz_projectors(const LorentzParams& p) {
  const LorentzAux x = lorentz_aux(p);
  if (lorentz_degenerate(x) || std::abs(x.U) == 0.0 || std::abs(x.V) == 0.0)
    throw DegenerateSpectrum("lorentz_projectors: repeated eigenvalue");
  const Matrix a = to_complex(lorentz_algebra(p));
  const Matrix I = Matrix::Identity(4, 4);
  const Matrix a2 = a * a;
  const Complex d = x.U2 - x.V2;
  return {(a + x.U * I) * (a2 - x.V2 * I) / (2.0 * x.U * d),
          -(a - x.U * I) * (a2 - x.V2 * I) / (2.0 * x.U * d),
          (a + x.V * I) * (a2 - x.U2 * I) / (-2.0 * x.V * d),
          -(a - x.V * I) * (a2 - x.U2 * I) / (-2.0 * x.V * d)};
}

Mat4 lorentz_generator(int a, int b) {
  const Mat4 eta = lorentz_metric();
  Mat4 lower;
  for (int g = 0; g < 4; ++g)
    for (int d = 0; d < 4; ++d) lower(g, d) = eta(a, g) * eta(b, d) - eta(b, g) * eta(a, d);
  const Mat4 upper = eta(a, a) * eta(b, b) * lower;
  return eta * upper;
}

std::array<Mat4, 6> lorentz_generators() {
  return {-lorentz_generator(0, 1), -lorentz_generator(0, 2), -lorentz_generator(0, 3),
          lorentz_generator(2, 3),  lorentz_generator(3, 1),  lorentz_generator(1, 2)};
}

}  // namespace lieclosed
