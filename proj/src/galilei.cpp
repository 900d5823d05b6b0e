#include <cmath>

#include "lieclosed/groups.hpp"

namespace lieclosed {

GalileiAux galilei_aux(const GalileiParams& p) {
  GalileiAux x;
  x.w = p.omega.norm();
  x.u = x.w > 0 ? Vec3(p.omega / x.w) : Vec3::Zero();
  x.q = p.omega.cross(p.v);
  x.p = p.omega.cross(p.a);
  x.v_par = p.v.dot(x.u) * x.u;
  x.v_perp = p.v - x.v_par;
  x.a_par = p.a.dot(x.u) * x.u;
  x.a_perp = p.a - x.a_par;
  return x;
}

Mat5 galilei_algebra(const GalileiParams& p) {
  Mat5 a = Mat5::Zero();
  a.block<3, 1>(1, 0) = -p.v;
  a.block<3, 3>(1, 1) = -epsilon_dot(p.omega);
  a.block<3, 1>(1, 4) = p.a;
  a(0, 4) = p.a0;
  return a;
}

// Powers are written without dividing by |omega|, so they stay valid at
// omega = 0.
GalileiPowers galilei_powers(const GalileiParams& p) {
  const GalileiAux x = galilei_aux(p);
  const Vec3& w = p.omega;
  const double w2 = w.squaredNorm();
  const Mat3 proj = w2 * Mat3::Identity() - w * w.transpose();
  const Vec3 v_t = w2 * p.v - p.v.dot(w) * w;  // omega^2 v_perp
  const Vec3 a_t = w2 * p.a - p.a.dot(w) * w;  // omega^2 a_perp
  GalileiPowers out;
  out.a2.setZero();
  out.a2.block<3, 1>(1, 0) = -x.q;
  out.a2.block<3, 3>(1, 1) = -proj;
  out.a2.block<3, 1>(1, 4) = x.p - p.a0 * p.v;

  out.a3.setZero();
  out.a3.block<3, 1>(1, 0) = v_t;
  out.a3.block<3, 3>(1, 1) = w2 * epsilon_dot(w);
  out.a3.block<3, 1>(1, 4) = -a_t - p.a0 * x.q;

  out.a4.setZero();
  out.a4.block<3, 1>(1, 0) = w2 * x.q;
  out.a4.block<3, 3>(1, 1) = w2 * proj;
  out.a4.block<3, 1>(1, 4) = p.a0 * v_t - w2 * x.p;
  return out;
}

namespace {

// Even/odd parts of the rotation exponential as entire functions of w.
struct AngleFunctions {
  double s1;  // sin w / w
  double c2;  // (1 - cos w) / w^2
  double s3;  // (w - sin w) / w^3
  double c4;  // (w^2/2 + cos w - 1) / w^4
};

// sum_k (-1)^k w^(2k) / (2k + first)!
double alternating_series(double w, int first) {
  const double w2 = w * w;
  double fact = 1.0;
  for (int i = 2; i <= first; ++i) fact *= i;
  double term = 1.0 / fact;
  double sum = term;
  for (int k = 1; k < 40; ++k) {
    term *= -w2 / ((2.0 * k + first - 1) * (2.0 * k + first));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Direct trigonometric forms lose about eps/w^2 of relative accuracy in
// s3 and c4, so the series takes over below 0.5.
AngleFunctions angle_functions(double w) {
  AngleFunctions f;
  if (w < 0.5) {
    f.s1 = alternating_series(w, 1);
    f.c2 = alternating_series(w, 2);
    f.s3 = alternating_series(w, 3);
    f.c4 = alternating_series(w, 4);
    return f;
  }
  const double s = std::sin(w), h = std::sin(0.5 * w);
  const double w2 = w * w;
  f.s1 = s / w;
  f.c2 = 2.0 * h * h / w2;
  f.s3 = (w - s) / (w2 * w);
  f.c4 = (0.5 - f.c2) / w2;
  return f;
}

}  // namespace

Mat3 galilei_rotation(const Vec3& omega) {
  const AngleFunctions f = angle_functions(omega.norm());
  return Mat3::Identity() - f.s1 * epsilon_dot(omega) +
         f.c2 * (omega * omega.transpose() - omega.squaredNorm() * Mat3::Identity());
}

Mat5 galilei_exp_closed(const GalileiParams& p) {
  const Vec3& w = p.omega;
  const AngleFunctions f = angle_functions(w.norm());
  const Vec3 vxw = p.v.cross(w);
  Mat5 g = Mat5::Identity();
  g(0, 4) = p.a0;
  g.block<3, 3>(1, 1) = galilei_rotation(w);
  g.block<3, 1>(1, 4) = p.a * f.s1 + p.a.dot(w) * w * f.s3 - p.a.cross(w) * f.c2 +
                        p.a0 * vxw * f.s3 - p.a0 * f.c2 * p.v - p.a0 * p.v.dot(w) * w * f.c4;
  g.block<3, 1>(1, 0) = -(p.v * f.s1 + p.v.dot(w) * w * f.s3 - vxw * f.c2);
  return g;
}

GalileiQuasiProjectors galilei_quasi_projectors(const GalileiParams& p) {
  const double w = p.omega.norm();
  if (!(w > 0)) throw DomainError("galilei_quasi_projectors: omega must be nonzero");
  const Matrix a = to_complex(galilei_algebra(p));
  const Matrix I = Matrix::Identity(5, 5);
  const Matrix a2 = a * a;
  const Matrix a3 = a2 * a;
  const Matrix a4 = a3 * a;
  const double w2 = w * w;
  const Complex i(0.0, 1.0);
  GalileiQuasiProjectors z;
  z.z10 = I - a4 / (w2 * w2);
  z.z11 = a * (I + a2 / w2);
  z.z12 = 0.5 * a2 * (I + a2 / w2);
  z.z4 = a3 / (2.0 * w2 * w) * (a / w + i * I);
  z.z5 = a3 / (2.0 * w2 * w) * (a / w - i * I);
  return z;
}

GalileiSplit galilei_reparametrize(const Mat5& g) {
  for (int j = 0; j < 4; ++j)
    if (std::abs(g(0, j) - (j == 0 ? 1.0 : 0.0)) > 1e-9)
      throw InputError("galilei_reparametrize: first row must be (1,0,0,0,a0)");
  for (int j = 0; j < 5; ++j)
    if (std::abs(g(4, j) - (j == 4 ? 1.0 : 0.0)) > 1e-9)
      throw InputError("galilei_reparametrize: last row must be (0,0,0,0,1)");
  GalileiSplit s;
  s.r = g.block<3, 3>(1, 1);
  s.vprime = -g.block<3, 1>(1, 0);
  s.aprime = g.block<3, 1>(1, 4);
  s.a0 = g(0, 4);
  return s;
}

Mat5 galilei_assemble(const GalileiSplit& s) {
  Mat5 g = Mat5::Identity();
  g.block<3, 3>(1, 1) = s.r;
  g.block<3, 1>(1, 0) = -s.vprime;
  g.block<3, 1>(1, 4) = s.aprime;
  g(0, 4) = s.a0;
  return g;
}

}  // namespace lieclosed
