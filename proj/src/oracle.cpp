#include "lieclosed/oracle.hpp"

#include <cmath>
#include <numbers>

namespace lieclosed::oracle {

Matrix series_exp(const Matrix& a, double tol) {
  require_square(a, "series_exp");
  if (!(tol > 0)) throw InputError("series_exp: tol must be positive");
  if (!all_finite(a)) throw DomainError("series_exp: non-finite entries");
  const Eigen::Index n = a.rows();

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix scaled = a / std::ldexp(1.0, s);
  const double stop = tol * std::ldexp(1.0, -s);

  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k < 200; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().colwise().sum().maxCoeff() < stop) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

namespace {

Complex laplace(const Matrix& a, std::vector<int>& cols, int row) {
  const int n = static_cast<int>(a.rows());
  if (row == n) return Complex(1.0);
  Complex acc(0.0);
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] < 0) continue;
    const int col = cols[c];
    const Complex entry = a(row, col);
    if (entry != Complex(0.0)) {
      cols[c] = -1;
      acc += static_cast<double>(sign) * entry * laplace(a, cols, row + 1);
      cols[c] = col;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Complex brute_determinant(const Matrix& a) {
  require_square(a, "brute_determinant");
  if (a.rows() > 8) throw InputError("brute_determinant: dimension above 8");
  std::vector<int> cols(static_cast<std::size_t>(a.cols()));
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = static_cast<int>(c);
  return laplace(a, cols, 0);
}

std::vector<Complex> char_poly_by_sampling(const Matrix& a) {
  require_square(a, "char_poly_by_sampling");
  const Eigen::Index n = a.rows();
  const int m = static_cast<int>(n) + 1;
  // sample on a circle of radius comparable to the spectrum to keep the
  // Fourier inversion well conditioned
  const double radius = std::max(1.0, a.cwiseAbs().colwise().sum().maxCoeff());
  std::vector<Complex> samples(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * p / m);
    const Matrix shifted = z * Matrix::Identity(n, n) - a;
    samples[static_cast<std::size_t>(p)] = brute_determinant(shifted);
  }
  // coefficient of lambda^q: (1/m) sum_p f(z_p) z_p^{-q}
  std::vector<Complex> coeff(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    Complex acc(0.0);
    for (int p = 0; p < m; ++p)
      acc += samples[static_cast<std::size_t>(p)] * std::polar(std::pow(radius, -q), -2.0 * std::numbers::pi * p * q / m);
    coeff[static_cast<std::size_t>(q)] = acc / static_cast<double>(m);
  }
  // highest power first, so entry j multiplies lambda^(n-j)
  return std::vector<Complex>(coeff.rbegin(), coeff.rend());
}

}  // namespace lieclosed::oracle
