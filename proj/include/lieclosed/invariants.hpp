#pragma once

// Characteristic-polynomial invariants from traces of powers, the
// determinant as a complete Bell sum, and symmetric invariant tensors
// built from a generator basis.

#include <cstddef>
#include <span>
#include <vector>

#include "lieclosed/types.hpp"

namespace lieclosed {

// (tr A, tr A^2, ..., tr A^kmax)
std::vector<Complex> trace_powers(const Matrix& a, unsigned kmax);

// phi_0..phi_n with det(lambda I - A) = sum_j phi_j lambda^(n-j).
InvariantVector char_poly_invariants(const Matrix& a);

// phi_j from a list of traces (traces[0] = tr A); j = 0..traces.size().
InvariantVector invariants_from_traces(const std::vector<Complex>& traces);

Complex det_via_bell(const Matrix& a);

// Fully symmetric tensor with dense row-major storage of all dims^order
// entries. Writes go to every permutation of the index.
class SymmetricTensor {
 public:
  SymmetricTensor(unsigned order, unsigned dims);

  unsigned order() const { return order_; }
  unsigned dims() const { return dims_; }
  std::span<const Complex> data() const { return data_; }

  Complex operator()(std::span<const unsigned> index) const;
  void set(std::span<const unsigned> index, Complex value);

  std::size_t flat(std::span<const unsigned> index) const;

 private:
  unsigned order_;
  unsigned dims_;
  std::vector<Complex> data_;
};

// eta^(n) for A = w^a J_a, so that contracting with w x ... x w gives
// phi_n(A). Orders 1..4.
SymmetricTensor invariant_tensor(const std::vector<Matrix>& generators, unsigned order);

// Single-threaded version of the same construction, kept as a reference.
SymmetricTensor invariant_tensor_serial(const std::vector<Matrix>& generators, unsigned order);

// sum T^{a1..an} eta_{a1..an}; t is dense row-major of size dims^order.
Complex contract(std::span<const Complex> t, const SymmetricTensor& eta);

// Dense w x w x ... x w (order factors).
std::vector<Complex> tensor_power(std::span<const Complex> w, unsigned order);

}  // namespace lieclosed
