#pragma once

// Partial Bell polynomials B_{n,k}(g_1, ..., g_{n-k+1}).
//
// Everything here is generic over a scalar S that supports construction
// from long long, +, -, * and division by a constructed integer. The
// coefficient sequence is stored 0-based: g[0] holds g_1.

#include <cstddef>
#include <string>
#include <vector>

#include "lieclosed/types.hpp"

namespace lieclosed {

template <class S>
using CoefficientSequence = std::vector<S>;

namespace detail {

inline void check_bell_args(unsigned n, unsigned k, std::size_t have) {
  if (k > n)
    throw DomainError("bell: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  if (k >= 1 && have < n - k + 1)
    throw InsufficientCoefficients("bell: need " + std::to_string(n - k + 1) +
                                   " coefficients, got " + std::to_string(have));
}

// Rows 0..n of Pascal's triangle in the scalar type itself (no overflow).
template <class S>
std::vector<std::vector<S>> pascal(unsigned n) {
  std::vector<std::vector<S>> c(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    c[m].assign(m + 1, S(1));
    for (unsigned j = 1; j < m; ++j) c[m][j] = c[m - 1][j - 1] + c[m - 1][j];
  }
  return c;
}

template <class S>
S factorial(unsigned n) {
  S f(1);
  for (unsigned i = 2; i <= n; ++i) f = f * S(static_cast<long long>(i));
  return f;
}

}  // namespace detail

// B_{n,k} via B(m,j) = sum_i C(m-1,i-1) g_i B(m-i,j-1). Only the band
// m - j <= n - k is filled, so g_1..g_{n-k+1} are the only inputs read.
template <class S>
S bell(unsigned n, unsigned k, const CoefficientSequence<S>& g) {
  detail::check_bell_args(n, k, g.size());
  if (k == 0) return S(n == 0 ? 1 : 0);
  const unsigned band = n - k;
  const auto binom = detail::pascal<S>(n);
  // t[j][d] = B(j + d, j), d = 0..band
  std::vector<std::vector<S>> t(k + 1, std::vector<S>(band + 1, S(0)));
  t[0][0] = S(1);
  for (unsigned j = 1; j <= k; ++j) {
    for (unsigned d = 0; d <= band; ++d) {
      const unsigned m = j + d;
      S acc(0);
      // previous row index m - i = (j - 1) + (d + 1 - i)
      for (unsigned i = 1; i <= d + 1; ++i) {
        const S& prev = t[j - 1][d + 1 - i];
        acc = acc + binom[m - 1][i - 1] * g[i - 1] * prev;
      }
      t[j][d] = acc;
    }
  }
  return t[k][band];
}

// Full triangle: result[m][j] = B_{m,j} for 0 <= j <= m <= n. Needs g_1..g_n.
template <class S>
std::vector<std::vector<S>> bell_triangle(unsigned n, const CoefficientSequence<S>& g) {
  if (g.size() < n)
    throw InsufficientCoefficients("bell_triangle: need " + std::to_string(n) +
                                   " coefficients, got " + std::to_string(g.size()));
  const auto binom = detail::pascal<S>(n);
  std::vector<std::vector<S>> b(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    b[m].assign(m + 1, S(0));
    if (m == 0) {
      b[0][0] = S(1);
      continue;
    }
    for (unsigned j = 1; j <= m; ++j) {
      S acc(0);
      for (unsigned i = 1; i <= m - j + 1; ++i)
        acc = acc + binom[m - 1][i - 1] * g[i - 1] * b[m - i][j - 1];
      b[m][j] = acc;
    }
  }
  return b;
}

// sum_{m=0}^{n} B_{n,m}[g], without any factorial prefactor.
template <class S>
S complete_bell_sum(unsigned n, const CoefficientSequence<S>& g) {
  if (g.size() < n)
    throw InsufficientCoefficients("complete_bell_sum: need " + std::to_string(n) +
                                   " coefficients, got " + std::to_string(g.size()));
  const auto tri = bell_triangle(n, g);
  S acc(0);
  for (const S& v : tri[n]) acc = acc + v;
  return acc;
}

// Reference path: (sum_j g_j t^j / j!)^k by truncated convolution, then
// n!/k! times the t^n coefficient. Shares nothing with the recurrence.
template <class S>
S bell_oracle(unsigned n, unsigned k, const CoefficientSequence<S>& g) {
  detail::check_bell_args(n, k, g.size());
  std::vector<S> base(n + 1, S(0));
  if (k >= 1) {
    S fact(1);
    for (unsigned j = 1; j <= n - k + 1; ++j) {
      fact = fact * S(static_cast<long long>(j));
      base[j] = g[j - 1] / fact;
    }
  }
  std::vector<S> power(n + 1, S(0));
  power[0] = S(1);
  for (unsigned r = 0; r < k; ++r) {
    std::vector<S> next(n + 1, S(0));
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 1; a + b <= n; ++b) next[a + b] = next[a + b] + power[a] * base[b];
    power = std::move(next);
  }
  return power[n] * detail::factorial<S>(n) / detail::factorial<S>(k);
}

}  // namespace lieclosed

#include "lieclosed/rational.hpp"

namespace lieclosed {
extern template ExactRational bell(unsigned, unsigned, const CoefficientSequence<ExactRational>&);
extern template ExactRational complete_bell_sum(unsigned, const CoefficientSequence<ExactRational>&);
extern template ExactRational bell_oracle(unsigned, unsigned, const CoefficientSequence<ExactRational>&);
extern template Complex bell(unsigned, unsigned, const CoefficientSequence<Complex>&);
extern template Complex complete_bell_sum(unsigned, const CoefficientSequence<Complex>&);
extern template Complex bell_oracle(unsigned, unsigned, const CoefficientSequence<Complex>&);
}  // namespace lieclosed
