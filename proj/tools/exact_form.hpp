#pragma once
// Polynomials in named commuting 2-form generators with exact rational
// coefficients, plus a small expression parser. Used by the chern
// subcommand when every input is rational.
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lieclosed/chern.hpp"
#include "lieclosed/rational.hpp"

namespace lieclosed::cli {

class RationalForm {
 public:
  using Monomial = std::vector<unsigned>;

  RationalForm() = default;
  RationalForm(long long c);  // NOLINT: scalar embedding is intended
  explicit RationalForm(const ExactRational& c, int max_degree = FormPolynomial::kUnbounded);
  static RationalForm generator(unsigned index, int max_degree = FormPolynomial::kUnbounded);

  const std::map<Monomial, ExactRational>& terms() const { return terms_; }
  bool is_constant() const;
  ExactRational constant_term() const;
  FormPolynomial to_numeric() const;
  std::string to_string(const std::vector<std::string>& names) const;

  friend RationalForm operator+(const RationalForm& a, const RationalForm& b);
  friend RationalForm operator-(const RationalForm& a, const RationalForm& b);
  friend RationalForm operator-(const RationalForm& a);
  friend RationalForm operator*(const RationalForm& a, const RationalForm& b);
  friend RationalForm operator/(const RationalForm& a, const RationalForm& b);
  friend bool operator==(const RationalForm& a, const RationalForm& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Monomial m, const ExactRational& c);
  std::map<Monomial, ExactRational> terms_;
  int max_degree_ = FormPolynomial::kUnbounded;
};

// Parses sums of products of rationals ("3", "-2/5", "1.25") and generator
// names, with integer powers, parentheses and division by constants. New
// names are appended to `names`; their position is the generator index.
RationalForm parse_form(std::string_view text, std::vector<std::string>& names, int max_degree);

// Renders a numeric form with the given generator names.
std::string format_numeric(const FormPolynomial& p, const std::vector<std::string>& names);

std::string format_rational(const ExactRational& q);

}  // namespace lieclosed::cli
