#pragma once

// Elementary and power-sum symmetric functions of an ordered alphabet,
// the Newton-identity conversions between them, reciprocal alphabets,
// missing-letter sums and Vieta coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include "lieclosed/bell.hpp"
#include "lieclosed/types.hpp"

namespace lieclosed {

template <class S>
using Alphabet = std::vector<S>;

// sigma_j; zero for j > N.
template <class S>
S elementary(unsigned j, const Alphabet<S>& x) {
  if (j > x.size()) return S(0);
  std::vector<S> e(j + 1, S(0));
  e[0] = S(1);
  for (const S& letter : x)
    for (unsigned r = j; r >= 1; --r) e[r] = e[r] + letter * e[r - 1];
  return e[j];
}

template <class S>
S power_sum(unsigned k, const Alphabet<S>& x) {
  if (k < 1) throw DomainError("power_sum: k must be >= 1");
  S acc(0);
  for (const S& letter : x) {
    S p = letter;
    for (unsigned r = 1; r < k; ++r) p = p * letter;
    acc = acc + p;
  }
  return acc;
}

// s[0] holds s_1.
template <class S>
S sigma_from_power_sums(unsigned j, const std::vector<S>& s) {
  if (s.size() < j)
    throw InsufficientCoefficients("sigma_from_power_sums: need " + std::to_string(j) +
                                   " power sums, got " + std::to_string(s.size()));
  std::vector<S> g(j, S(0));
  S fact(1);  // (k-1)!
  for (unsigned k = 1; k <= j; ++k) {
    if (k > 1) fact = fact * S(static_cast<long long>(k - 1));
    const S term = fact * s[k - 1];
    g[k - 1] = (k % 2 == 1) ? term : S(0) - term;
  }
  return complete_bell_sum(j, g) / detail::factorial<S>(j);
}

// sigma[0] holds sigma_1.
template <class S>
S power_sum_from_sigmas(unsigned n, const std::vector<S>& sigma) {
  if (n < 1) throw DomainError("power_sum_from_sigmas: n must be >= 1");
  if (sigma.size() < n)
    throw InsufficientCoefficients("power_sum_from_sigmas: need " + std::to_string(n) +
                                   " elementary values, got " + std::to_string(sigma.size()));
  std::vector<S> g(n, S(0));
  S fact(1);
  for (unsigned k = 1; k <= n; ++k) {
    fact = fact * S(static_cast<long long>(k));
    g[k - 1] = fact * sigma[k - 1];
  }
  const auto tri = bell_triangle(n, g);
  S acc(0);
  S mfact(1);  // (m-1)!
  for (unsigned m = 1; m <= n; ++m) {
    if (m > 1) mfact = mfact * S(static_cast<long long>(m - 1));
    const S term = mfact * tri[n][m];
    acc = (m % 2 == 1) ? acc + term : acc - term;
  }
  const S scaled = acc / detail::factorial<S>(n - 1);
  return (n % 2 == 1) ? scaled : S(0) - scaled;
}

// sigma_k of the alphabet with letter i (0-based) removed, expressed
// through the full alphabet's sigma values.
template <class S>
S elementary_missing(unsigned k, std::size_t i, const Alphabet<S>& x) {
  if (i >= x.size())
    throw InputError("elementary_missing: letter index " + std::to_string(i) + " out of range");
  if (k >= x.size()) return S(0);
  const S neg = S(0) - x[i];
  S acc(0);
  S pw(1);  // (-x_i)^(k-j), built from j = k downwards
  for (unsigned jj = 0; jj <= k; ++jj) {
    const unsigned j = k - jj;
    acc = acc + pw * elementary(j, x);
    pw = pw * neg;
  }
  return acc;
}

template <class S>
Alphabet<S> reciprocal_alphabet(const Alphabet<S>& x) {
  Alphabet<S> out;
  out.reserve(x.size());
  for (const S& letter : x) {
    if (letter == S(0)) throw DomainError("reciprocal_alphabet: zero letter");
    out.push_back(S(-1) / letter);
  }
  return out;
}

template <class S>
S poly_from_roots(const Alphabet<S>& x, const S& t) {
  S acc(1);
  for (const S& letter : x) acc = acc * (t - letter);
  return acc;
}

// b[r] is the coefficient of t^(N-r) in prod (t - x_j); b[0] = 1.
template <class S>
std::vector<S> poly_coefficients(const Alphabet<S>& x) {
  std::vector<S> b(1, S(1));
  for (const S& letter : x) {
    std::vector<S> next(b.size() + 1, S(0));
    for (std::size_t r = 0; r < b.size(); ++r) {
      next[r] = next[r] + b[r];
      next[r + 1] = next[r + 1] - letter * b[r];
    }
    b = std::move(next);
  }
  return b;
}

}  // namespace lieclosed
