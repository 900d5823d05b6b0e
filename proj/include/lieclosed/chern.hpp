#pragma once

// Chern classes and characters of a curvature matrix whose entries are
// polynomials in commuting 2-form generators, truncated above the
// manifold dimension.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lieclosed/symfun.hpp"
#include "lieclosed/types.hpp"

namespace lieclosed {

class FormPolynomial {
 public:
  // exponent of each generator; trailing zeros are trimmed
  using Monomial = std::vector<unsigned>;
  static constexpr int kUnbounded = -1;

  FormPolynomial() = default;
  FormPolynomial(long long c);  // NOLINT: scalar embedding is intended
  explicit FormPolynomial(Complex c, int max_degree = kUnbounded);

  static FormPolynomial generator(unsigned index, int max_degree = kUnbounded,
                                  Complex coefficient = Complex(1.0));

  int max_degree() const { return max_degree_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }

  static int form_degree(const Monomial& m);

  bool is_zero(double tol = 0.0) const;
  bool is_constant() const;
  Complex constant_term() const;
  // Largest form degree among stored terms, -1 for the zero polynomial.
  int degree() const;

  Complex evaluate(std::span<const Complex> values) const;

  FormPolynomial& add_term(const Monomial& m, Complex c);

  friend FormPolynomial operator+(const FormPolynomial& a, const FormPolynomial& b);
  friend FormPolynomial operator-(const FormPolynomial& a, const FormPolynomial& b);
  friend FormPolynomial operator-(const FormPolynomial& a);
  friend FormPolynomial operator*(const FormPolynomial& a, const FormPolynomial& b);
  friend FormPolynomial operator*(Complex s, const FormPolynomial& a);
  // Only division by a nonzero constant is defined.
  friend FormPolynomial operator/(const FormPolynomial& a, const FormPolynomial& b);
  friend bool operator==(const FormPolynomial& a, const FormPolynomial& b);

  // Largest coefficient difference, for approximate comparisons.
  static double distance(const FormPolynomial& a, const FormPolynomial& b);

  std::string to_string() const;

 private:
  static int combine(int a, int b);
  bool fits(const Monomial& m) const;
  void prune();

  std::map<Monomial, Complex> terms_;
  int max_degree_ = kUnbounded;
};

struct FormMatrix {
  unsigned n = 0;
  std::vector<FormPolynomial> entries;  // row-major

  FormMatrix() = default;
  explicit FormMatrix(unsigned dim);

  FormPolynomial& operator()(unsigned i, unsigned j) { return entries[i * n + j]; }
  const FormPolynomial& operator()(unsigned i, unsigned j) const { return entries[i * n + j]; }

  FormMatrix operator*(const FormMatrix& other) const;
  FormPolynomial trace() const;
  Matrix evaluate(std::span<const Complex> values) const;
};

// The factor i/(2 pi) multiplying F in the total Chern class.
Complex chern_factor();

// c_0..c_N
std::vector<FormPolynomial> chern_classes(const FormMatrix& f);

// ch_0..ch_N with ch_0 = N
std::vector<FormPolynomial> chern_characters(const FormMatrix& f);

// c_0..c_J from ch_0..ch_J (ch_0 is not used).
template <class S>
std::vector<S> classes_from_characters(const std::vector<S>& ch) {
  if (ch.empty()) throw InsufficientCoefficients("classes_from_characters: empty sequence");
  const unsigned top = static_cast<unsigned>(ch.size()) - 1;
  std::vector<S> s(top, S(0));  // s_k = k! ch_k
  S fact(1);
  for (unsigned k = 1; k <= top; ++k) {
    fact = fact * S(static_cast<long long>(k));
    s[k - 1] = fact * ch[k];
  }
  std::vector<S> c;
  c.reserve(top + 1);
  for (unsigned j = 0; j <= top; ++j) c.push_back(sigma_from_power_sums(j, s));
  return c;
}

// ch_0..ch_K from c_0..c_K (c_0 is not used); ch_0 = fiber_dim.
template <class S>
std::vector<S> characters_from_classes(const std::vector<S>& c, const S& fiber_dim) {
  if (c.empty()) throw InsufficientCoefficients("characters_from_classes: empty sequence");
  const unsigned top = static_cast<unsigned>(c.size()) - 1;
  const std::vector<S> sigma(c.begin() + 1, c.end());
  std::vector<S> ch;
  ch.reserve(top + 1);
  ch.push_back(fiber_dim);
  S fact(1);
  for (unsigned k = 1; k <= top; ++k) {
    fact = fact * S(static_cast<long long>(k));
    ch.push_back(power_sum_from_sigmas(k, sigma) / fact);
  }
  return ch;
}

}  // namespace lieclosed
