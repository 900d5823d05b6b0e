#include <cmath>

#include "group_util.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/zmethod.hpp"

namespace lieclosed {

PoincareAux poincare_aux(const PoincareParams& p) {
  PoincareAux x;
  x.lorentz = lorentz_aux({p.omega, p.zeta});
  const LorentzAux& l = x.lorentz;
  x.P = p.omega.cross(p.a) - p.a0 * p.zeta;
  x.K = -p.omega.squaredNorm() * p.a + p.a.dot(p.omega) * p.omega + p.a.dot(p.zeta) * p.zeta -
        p.a0 * l.Q;
  x.M = p.a.cross(l.C) + p.a0 * l.D;
  return x;
}

Mat5 poincare_algebra(const PoincareParams& p) {
  Mat5 a = Mat5::Zero();
  a.block<4, 4>(0, 0) = lorentz_algebra({p.omega, p.zeta});
  a(0, 4) = p.a0;
  a.block<3, 1>(1, 4) = p.a;
  return a;
}

PoincarePowers poincare_powers(const PoincareParams& p) {
  const PoincareAux x = poincare_aux(p);
  const LorentzAux& l = x.lorentz;
  const LorentzPowers lp = lorentz_powers({p.omega, p.zeta});
  PoincarePowers out;
  out.a2.setZero();
  out.a2.block<4, 4>(0, 0) = lp.a2;
  out.a2(0, 4) = -p.zeta.dot(p.a);
  out.a2.block<3, 1>(1, 4) = x.P;

  out.a3.setZero();
  out.a3.block<4, 4>(0, 0) = lp.a3;
  out.a3(0, 4) = -p.zeta.dot(x.P);
  out.a3.block<3, 1>(1, 4) = x.K;

  out.a4.setZero();
  out.a4(0, 0) = l.f2 * l.f2 - l.f1 * p.zeta.squaredNorm();
  out.a4.block<1, 3>(0, 1) = -l.f1 * l.Q.transpose();
  out.a4.block<3, 1>(1, 0) = l.f1 * l.Q;
  out.a4.block<3, 3>(1, 1) = l.f2 * l.f2 * Mat3::Identity() - l.f1 * l.L;
  out.a4(0, 4) = p.a.dot(l.D);
  out.a4.block<3, 1>(1, 4) = x.M;
  return out;
}

namespace {

// I + c1 A + c2 A^2 + c3 A^3 + c4 A^4 with coefficients written through
// entire functions, so U or V near zero costs no precision.
Mat5 poincare_regularized(const PoincareParams& p, const LorentzAux& l) {
  const PoincarePowers pw = poincare_powers(p);
  const Mat5 a = poincare_algebra(p);
  const Complex su = detail::shc(l.U), sv = detail::shc(l.V);
  const Complex hu = detail::chm(l.U), hv = detail::chm(l.V);
  const double d = l.U2 - l.V2;
  const Complex c1 = (l.U2 * sv - l.V2 * su) / d;
  const Complex c2 = (l.U2 * hv - l.V2 * hu) / d;
  const Complex c3 = (su - sv) / d;
  const Complex c4 = (hu - hv) / d;
  const Matrix g = Matrix::Identity(5, 5) + c1 * to_complex(a) + c2 * to_complex(pw.a2) +
                   c3 * to_complex(pw.a3) + c4 * to_complex(pw.a4);
  Mat5 out = real_part_checked(g);
  out.row(4) << 0, 0, 0, 0, 1;
  return out;
}

}  // namespace

Mat5 poincare_exp_closed(const PoincareParams& p) {
  const PoincareAux x = poincare_aux(p);
  const LorentzAux& l = x.lorentz;
  if (lorentz_degenerate(l)) {
    Mat5 out = real_part_checked(matrix_exp(to_complex(poincare_algebra(p))));
    out.row(4) << 0, 0, 0, 0, 1;
    return out;
  }
  // the translation column divides by U^2 V^2
  if (std::min(std::abs(l.U2), std::abs(l.V2)) < 1e-3) return poincare_regularized(p, l);

  const Complex cu = std::cosh(l.U), cv = std::cosh(l.V);
  const Complex su = detail::shc(l.U), sv = detail::shc(l.V);
  const double d = l.U2 - l.V2;
  const double uv = l.U2 * l.V2;
  const double z2 = p.zeta.squaredNorm();
  const double zP = p.zeta.dot(x.P);

  Eigen::Matrix<Complex, 5, 5> g = Eigen::Matrix<Complex, 5, 5>::Zero();
  g(0, 0) = ((z2 - l.V2) * cu - (z2 - l.U2) * cv) / d;
  for (int i = 0; i < 3; ++i) {
    const Complex common = l.X(i) * sv - l.Y(i) * su;
    const Complex rot = l.Q(i) * (cu - cv);
    g(0, i + 1) = (common + rot) / d;
    g(i + 1, 0) = (common - rot) / d;
  }
  const Mat3 I3 = Mat3::Identity();
  const Eigen::Matrix3cd lu = (l.L - l.V2 * I3).cast<Complex>();
  const Eigen::Matrix3cd lv = (l.L - l.U2 * I3).cast<Complex>();
  g.block<3, 3>(1, 1) = (lu * cu - lv * cv + epsilon_dot(l.Wvec).cast<Complex>() * sv -
                         epsilon_dot(l.Zvec).cast<Complex>() * su) /
                        d;
  for (int i = 0; i < 3; ++i) {
    const Complex sinh_part = (x.K(i) - l.V2 * p.a(i)) * su + (l.U2 * p.a(i) - x.K(i)) * sv;
    const Complex cosh_part = (l.U2 * x.P(i) - x.M(i)) * l.U2 * cv -
                              (l.V2 * x.P(i) - x.M(i)) * l.V2 * cu + d * (x.M(i) + l.f1 * x.P(i));
    g(i + 1, 4) = sinh_part / d + cosh_part / (d * uv);
  }
  const Complex sinh0 = (l.U2 * p.a0 + zP) * sv - (l.V2 * p.a0 + zP) * su;
  Complex cosh0(0.0);
  for (int i = 0; i < 3; ++i)
    cosh0 += p.a(i) * (l.X(i) * l.U2 * cv - l.Y(i) * l.V2 * cu - l.f2 * d * p.omega(i));
  g(0, 4) = sinh0 / d + cosh0 / (d * uv);

  Mat5 out = real_part_checked(g);
  out.row(4) << 0, 0, 0, 0, 1;
  return out;
}

PoincareSplit poincare_reparametrize(const Mat5& g) {
  for (int j = 0; j < 5; ++j)
    if (std::abs(g(4, j) - (j == 4 ? 1.0 : 0.0)) > 1e-9)
      throw InputError("poincare_reparametrize: last row must be (0,0,0,0,1)");
  return {g.block<4, 4>(0, 0), g.block<4, 1>(0, 4)};
}

Mat5 poincare_assemble(const PoincareSplit& s) {
  Mat5 g = Mat5::Zero();
  g.block<4, 4>(0, 0) = s.lambda;
  g.block<4, 1>(0, 4) = s.a;
  g(4, 4) = 1.0;
  return g;
}

}  // namespace lieclosed
