#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lieclosed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;

// phi[j] is the coefficient of lambda^(n-j) in det(lambda I - A).
using InvariantVector = std::vector<Complex>;

// Input problems: malformed shapes, out-of-range orders, missing data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientCoefficients : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Runtime numerical trouble: non-convergence, singular systems, failed
// internal consistency checks.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSpectrum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

inline void require_square(const Matrix& a, const char* where) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw InputError(std::string(where) + ": expected a nonempty square matrix");
}

inline bool all_finite(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
  return true;
}

}  // namespace lieclosed
