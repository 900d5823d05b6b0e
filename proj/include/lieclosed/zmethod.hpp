#pragma once

// Matrix functions through eigenprojectors: spectrum from the invariant
// coefficients, projectors in product form and in invariant form, and
// Hermite (confluent) interpolation when eigenvalues repeat.

#include <functional>
#include <optional>
#include <vector>

#include "lieclosed/types.hpp"

namespace lieclosed {

struct Root {
  Complex value;
  unsigned multiplicity = 1;
};

struct Spectrum {
  std::vector<Root> roots;
  double cluster_tol = 0.0;

  unsigned dimension() const;
  unsigned max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }
};

struct Projector {
  Complex eigenvalue;
  Matrix z;
};
using ProjectorBasis = std::vector<Projector>;

// F and its derivatives: eval(z, d) = F^(d)(z) for d <= max_order.
struct FunctionDescriptor {
  std::function<Complex(Complex, unsigned)> eval;
  unsigned max_order = 0;

  Complex operator()(Complex z, unsigned d = 0) const;

  static FunctionDescriptor exp();
  static FunctionDescriptor identity();
  static FunctionDescriptor power(unsigned p);
};

// Scale used for relative tolerances: 1 + max |root|.
double spectral_scale(const std::vector<Complex>& raw);

// Groups nearby roots. A set of m roots lying within 10 eps^(1/m) scale
// of its centroid is taken as one m-fold root (the usual roundoff
// splitting); afterwards clusters whose centroids are within tol merge.
Spectrum cluster_roots(const std::vector<Complex>& raw, double tol);

// Raw roots of sum_j phi_j t^(n-j) from a companion eigenproblem.
std::vector<Complex> polynomial_roots(const InvariantVector& phi);

// tol defaults to 1e-8 * (1 + max |lambda|).
Spectrum spectrum_of(const Matrix& a, std::optional<double> tol = std::nullopt);

// Same, with the tolerance given relative to the spectral scale.
Spectrum spectrum_of_relative(const Matrix& a, double rel_tol);

ProjectorBasis projectors_product_form(const Matrix& a, const Spectrum& sp);

ProjectorBasis projectors_from_invariants(const Matrix& a, const Spectrum& sp,
                                          const InvariantVector& phi);

// Cardinal matrices of Hermite interpolation on the spectrum: one per
// (root, derivative order d < multiplicity), with
// F(A) = sum F^(d)(lambda) * basis.z. Order-0 members at a simple root
// are the ordinary eigenprojectors.
struct ConfluentTerm {
  Complex root;
  unsigned order = 0;
  Matrix z;
};
std::vector<ConfluentTerm> confluent_basis(const Matrix& a, const Spectrum& sp);

Matrix matrix_function(const Matrix& a, const FunctionDescriptor& f);
Matrix matrix_function_confluent(const Matrix& a, const Spectrum& sp, const FunctionDescriptor& f);
Matrix matrix_exp(const Matrix& a);

// Clusters closer than this (relative to the scale) are treated as one
// root by matrix_function.
inline constexpr double kNearDegenerate = 1e-6;

}  // namespace lieclosed
