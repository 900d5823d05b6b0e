#pragma once

// Reference implementations used only for verification. Nothing here
// touches spectra, projectors or Bell polynomials.

#include <string>
#include <vector>

#include "lieclosed/types.hpp"

namespace lieclosed::oracle {

// Scaling and squaring around a plain Taylor sum. The scaled matrix has
// 1-norm at most 1/2 and the sum stops once a term drops below
// tol * 2^-s, so the truncation error of the scaled exponential is below
// 2 * tol * 2^-s and squaring amplifies it by roughly 2^s * ||e^A||.
Matrix series_exp(const Matrix& a, double tol = 1e-13);

// Laplace expansion along the first row; n <= 8.
Complex brute_determinant(const Matrix& a);

// Coefficients of det(lambda I - A), highest power first, obtained by
// sampling the brute determinant at n+1 points on a circle and
// inverting the discrete Fourier transform.
std::vector<Complex> char_poly_by_sampling(const Matrix& a);

enum class SymmetricKind { sigma, power };

// Literal subset enumeration (sigma, N <= 12) or sum of powers.
template <class S>
S brute_symmetric(SymmetricKind kind, unsigned j, const std::vector<S>& x) {
  if (kind == SymmetricKind::power) {
    S acc(0);
    for (const S& letter : x) {
      S p(1);
      for (unsigned r = 0; r < j; ++r) p = p * letter;
      acc = acc + p;
    }
    return acc;
  }
  if (x.size() > 12) throw InputError("brute_symmetric: alphabet larger than 12 letters");
  S acc(0);
  const unsigned n = static_cast<unsigned>(x.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != j) continue;
    S word(1);
    for (unsigned b = 0; b < n; ++b)
      if (mask & (1u << b)) word = word * x[b];
    acc = acc + word;
  }
  return acc;
}

}  // namespace lieclosed::oracle
