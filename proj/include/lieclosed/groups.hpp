#pragma once

// Algebra elements and closed-form group elements for the Lorentz,
// Poincare, Galilei and SU(3) cases. Lorentz indices run 0..3 with
// metric diag(1,-1,-1,-1); the inhomogeneous groups use 0..4 with the
// translation column last.

#include <array>
#include <utility>
#include <vector>

#include "lieclosed/types.hpp"

namespace lieclosed {

using Vec4 = Eigen::Vector4d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat3c = Eigen::Matrix3cd;

// Levi-Civita contraction: (eps . w)_ij = eps_ijk w_k.
Mat3 epsilon_dot(const Vec3& w);

// ---------------------------------------------------------------- Lorentz

struct LorentzParams {
  Vec3 omega = Vec3::Zero();  // rotation angles
  Vec3 zeta = Vec3::Zero();   // boost rapidities
};

struct LorentzAux {
  double f1 = 0, f2 = 0;  // omega^2 - zeta^2, omega . zeta
  double U2 = 0, V2 = 0;  // U^2 >= 0 >= V^2, U^2 + V^2 = -f1, U^2 V^2 = -f2^2
  Complex U, V;           // principal roots
  Vec3 Q, C, D, X, Y, Wvec, Zvec;
  Mat3 L;
};

LorentzAux lorentz_aux(const LorentzParams& p);
Mat4 lorentz_metric();
Mat4 lorentz_algebra(const LorentzParams& p);

struct LorentzPowers {
  Mat4 a2, a3;
};
LorentzPowers lorentz_powers(const LorentzParams& p);

std::pair<Complex, Complex> lorentz_UV(const LorentzParams& p);

// True when U^2 and V^2 are too close for the closed form.
bool lorentz_degenerate(const LorentzAux& aux);

// Entrywise closed form; falls back to confluent interpolation when
// lorentz_degenerate holds.
Mat4 lorentz_exp_closed(const LorentzParams& p);

// Same element written as c0 I + c1 A + c2 A^2 + c3 A^3.
Mat4 lorentz_exp_powers(const LorentzParams& p);

// The four eigenprojectors for the roots U, -U, V, -V.
std::array<Matrix, 4> lorentz_projectors(const LorentzParams& p);

// Generator J^{ab} (a, b in 0..3) as the matrix acting on contravariant
// vectors, i.e. eta times the doubly-raised generator. These satisfy the
// Lorentz commutation table.
Mat4 lorentz_generator(int a, int b);

// Basis (K_1, K_2, K_3, R_1, R_2, R_3) with
// lorentz_algebra(omega, zeta) = sum_j zeta_j K_j + omega_j R_j.
// K_j = -J^{0j}, R_1 = J^{23}, R_2 = J^{31}, R_3 = J^{12}.
std::array<Mat4, 6> lorentz_generators();

// --------------------------------------------------------------- Poincare

struct PoincareParams {
  Vec3 omega = Vec3::Zero();
  Vec3 zeta = Vec3::Zero();
  Vec3 a = Vec3::Zero();  // space translation
  double a0 = 0;          // time translation
};

struct PoincareAux {
  LorentzAux lorentz;
  Vec3 P, K, M;
};

PoincareAux poincare_aux(const PoincareParams& p);
Mat5 poincare_algebra(const PoincareParams& p);

struct PoincarePowers {
  Mat5 a2, a3, a4;
};
PoincarePowers poincare_powers(const PoincareParams& p);

Mat5 poincare_exp_closed(const PoincareParams& p);

struct PoincareSplit {
  Mat4 lambda;
  Vec4 a;
};
PoincareSplit poincare_reparametrize(const Mat5& g);
Mat5 poincare_assemble(const PoincareSplit& s);

// ---------------------------------------------------------------- Galilei

struct GalileiParams {
  Vec3 omega = Vec3::Zero();
  Vec3 v = Vec3::Zero();  // boost velocity
  Vec3 a = Vec3::Zero();
  double a0 = 0;
};

struct GalileiAux {
  double w = 0;   // |omega|
  Vec3 u;         // omega / |omega|, zero when omega = 0
  Vec3 q, p;      // omega x v, omega x a
  Vec3 v_par, v_perp, a_par, a_perp;
};

GalileiAux galilei_aux(const GalileiParams& p);
Mat5 galilei_algebra(const GalileiParams& p);

struct GalileiPowers {
  Mat5 a2, a3, a4;
};
GalileiPowers galilei_powers(const GalileiParams& p);

// Rotation block R(omega).
Mat3 galilei_rotation(const Vec3& omega);

Mat5 galilei_exp_closed(const GalileiParams& p);

struct GalileiQuasiProjectors {
  Matrix z10, z11, z12, z4, z5;
};
GalileiQuasiProjectors galilei_quasi_projectors(const GalileiParams& p);

struct GalileiSplit {
  Mat3 r;
  Vec3 vprime, aprime;
  double a0 = 0;
};
GalileiSplit galilei_reparametrize(const Mat5& g);
Mat5 galilei_assemble(const GalileiSplit& s);

// ------------------------------------------------------------------ SU(3)

struct SU3Params {
  Vec8 alpha = Vec8::Zero();
};

// Gell-Mann matrices, tr(T_a T_b) = 2 delta_ab.
std::array<Mat3c, 8> gell_mann();

Mat3c su3_element(const SU3Params& p);
Mat3c su3_square_closed(const SU3Params& p);

struct SU3Invariants {
  double phi2 = 0, phi3 = 0;
};
SU3Invariants su3_invariants(const SU3Params& p);

// exp(i W / 2)
Mat3c su3_exp(const SU3Params& p);

// ------------------------------------------------------------------ misc

Matrix to_complex(const RealMatrix& m);

// Drops imaginary parts after checking they are below tol.
RealMatrix real_part_checked(const Matrix& m, double tol = 1e-9);

}  // namespace lieclosed
