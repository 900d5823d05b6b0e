#include "lieclosed/invariants.hpp"

#include <algorithm>
#include <string>

#include "lieclosed/bell.hpp"

namespace lieclosed {

std::vector<Complex> trace_powers(const Matrix& a, unsigned kmax) {
  require_square(a, "trace_powers");
  if (kmax < 1) throw DomainError("trace_powers: kmax must be >= 1");
  std::vector<Complex> out;
  out.reserve(kmax);
  Matrix p = a;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) p = p * a;
    out.push_back(p.trace());
  }
  return out;
}

InvariantVector invariants_from_traces(const std::vector<Complex>& traces) {
  const unsigned n = static_cast<unsigned>(traces.size());
  std::vector<Complex> g(n);
  double fact = 1.0;  // (k-1)!
  for (unsigned k = 1; k <= n; ++k) {
    if (k > 1) fact *= static_cast<double>(k - 1);
    g[k - 1] = ((k % 2 == 1) ? fact : -fact) * traces[k - 1];
  }
  const auto tri = bell_triangle(n, g);
  InvariantVector phi(n + 1);
  double jfact = 1.0;
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 1) jfact *= static_cast<double>(j);
    Complex sum(0.0);
    for (const Complex& v : tri[j]) sum += v;
    phi[j] = ((j % 2 == 0) ? 1.0 : -1.0) * sum / jfact;
  }
  return phi;
}

InvariantVector char_poly_invariants(const Matrix& a) {
  require_square(a, "char_poly_invariants");
  return invariants_from_traces(trace_powers(a, static_cast<unsigned>(a.rows())));
}

Complex det_via_bell(const Matrix& a) {
  require_square(a, "det_via_bell");
  const auto phi = char_poly_invariants(a);
  const std::size_t n = phi.size() - 1;
  return (n % 2 == 0) ? phi[n] : -phi[n];
}

SymmetricTensor::SymmetricTensor(unsigned order, unsigned dims) : order_(order), dims_(dims) {
  std::size_t size = 1;
  for (unsigned r = 0; r < order; ++r) size *= dims;
  data_.assign(size, Complex(0.0));
}

std::size_t SymmetricTensor::flat(std::span<const unsigned> index) const {
  if (index.size() != order_) throw InputError("SymmetricTensor: index has wrong length");
  std::size_t f = 0;
  for (unsigned a : index) {
    if (a >= dims_) throw InputError("SymmetricTensor: index out of range");
    f = f * dims_ + a;
  }
  return f;
}

Complex SymmetricTensor::operator()(std::span<const unsigned> index) const {
  return data_[flat(index)];
}

void SymmetricTensor::set(std::span<const unsigned> index, Complex value) {
  std::vector<unsigned> perm(index.begin(), index.end());
  std::sort(perm.begin(), perm.end());
  do {
    data_[flat(perm)] = value;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

void check_generators(const std::vector<Matrix>& gens, unsigned order) {
  if (gens.empty()) throw InputError("invariant_tensor: no generators");
  if (order < 1 || order > 4) throw DomainError("invariant_tensor: order must be 1..4");
  for (const Matrix& g : gens) {
    require_square(g, "invariant_tensor");
    if (g.rows() != gens.front().rows())
      throw InputError("invariant_tensor: generators differ in dimension");
  }
}

// Average of tr(J_{b_1} ... J_{b_m}) over all orderings of the block.
Complex symmetrized_trace(const std::vector<Matrix>& gens, std::vector<unsigned> block) {
  std::sort(block.begin(), block.end());
  Complex acc(0.0);
  int count = 0;
  do {
    Matrix p = gens[block[0]];
    for (std::size_t i = 1; i < block.size(); ++i) p = p * gens[block[i]];
    acc += p.trace();
    ++count;
  } while (std::next_permutation(block.begin(), block.end()));
  return acc / static_cast<double>(count);
}

// Set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<unsigned>> set_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> rgs(n, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned blocks) -> void {
    if (pos == n) {
      out.push_back(rgs);
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

// Entry for a sorted multi-index: ((-1)^n/n!) sum over set partitions of
// prod_blocks c_{|B|} symtr(J_B), with c_k = (-1)^(k-1) (k-1)!.
Complex tensor_entry(const std::vector<Matrix>& gens, const std::vector<unsigned>& idx,
                     const std::vector<std::vector<unsigned>>& partitions) {
  static constexpr double c[] = {0.0, 1.0, -1.0, 2.0, -6.0};
  static constexpr double inv_fact[] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  const unsigned n = static_cast<unsigned>(idx.size());
  Complex total(0.0);
  for (const auto& rgs : partitions) {
    const unsigned nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    Complex term(1.0);
    for (unsigned b = 0; b < nblocks; ++b) {
      std::vector<unsigned> block;
      for (unsigned i = 0; i < n; ++i)
        if (rgs[i] == b) block.push_back(idx[i]);
      term *= c[block.size()] * symmetrized_trace(gens, block);
    }
    total += term;
  }
  return ((n % 2 == 0) ? 1.0 : -1.0) * inv_fact[n] * total;
}

std::vector<std::vector<unsigned>> sorted_indices(unsigned dims, unsigned order) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> idx(order, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned lo) -> void {
    if (pos == order) {
      out.push_back(idx);
      return;
    }
    for (unsigned a = lo; a < dims; ++a) {
      idx[pos] = a;
      self(self, pos + 1, a);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

SymmetricTensor invariant_tensor_serial(const std::vector<Matrix>& generators, unsigned order) {
  check_generators(generators, order);
  const unsigned dims = static_cast<unsigned>(generators.size());
  const auto partitions = set_partitions(order);
  SymmetricTensor eta(order, dims);
  for (const auto& idx : sorted_indices(dims, order))
    eta.set(idx, tensor_entry(generators, idx, partitions));
  return eta;
}

SymmetricTensor invariant_tensor(const std::vector<Matrix>& generators, unsigned order) {
  check_generators(generators, order);
  const unsigned dims = static_cast<unsigned>(generators.size());
  const auto partitions = set_partitions(order);
  const auto indices = sorted_indices(dims, order);
  std::vector<Complex> values(indices.size());
  const long count = static_cast<long>(indices.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i)
    values[static_cast<std::size_t>(i)] =
        tensor_entry(generators, indices[static_cast<std::size_t>(i)], partitions);
  // distinct sorted indices own disjoint permutation orbits
  SymmetricTensor eta(order, dims);
  for (std::size_t i = 0; i < indices.size(); ++i) eta.set(indices[i], values[i]);
  return eta;
}

Complex contract(std::span<const Complex> t, const SymmetricTensor& eta) {
  if (t.size() != eta.data().size())
    throw InputError("contract: coefficient array has " + std::to_string(t.size()) +
                     " entries, tensor has " + std::to_string(eta.data().size()));
  Complex acc(0.0);
  for (std::size_t i = 0; i < t.size(); ++i) acc += t[i] * eta.data()[i];
  return acc;
}

std::vector<Complex> tensor_power(std::span<const Complex> w, unsigned order) {
  std::vector<Complex> out{Complex(1.0)};
  for (unsigned r = 0; r < order; ++r) {
    std::vector<Complex> next;
    next.reserve(out.size() * w.size());
    for (const Complex& x : out)
      for (const Complex& y : w) next.push_back(x * y);
    out = std::move(next);
  }
  return out;
}

}  // namespace lieclosed
