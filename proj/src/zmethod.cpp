#include "lieclosed/zmethod.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "lieclosed/invariants.hpp"

namespace lieclosed {

unsigned Spectrum::dimension() const {
  unsigned n = 0;
  for (const Root& r : roots) n += r.multiplicity;
  return n;
}

unsigned Spectrum::max_multiplicity() const {
  unsigned m = 0;
  for (const Root& r : roots) m = std::max(m, r.multiplicity);
  return m;
}

Complex FunctionDescriptor::operator()(Complex z, unsigned d) const {
  if (d > max_order)
    throw DomainError("function descriptor: derivative of order " + std::to_string(d) +
                      " not available");
  return eval(z, d);
}

FunctionDescriptor FunctionDescriptor::exp() {
  return {[](Complex z, unsigned) { return std::exp(z); }, std::numeric_limits<unsigned>::max()};
}

FunctionDescriptor FunctionDescriptor::identity() {
  return {[](Complex z, unsigned d) {
            return d == 0 ? z : (d == 1 ? Complex(1.0) : Complex(0.0));
          },
          std::numeric_limits<unsigned>::max()};
}

FunctionDescriptor FunctionDescriptor::power(unsigned p) {
  return {[p](Complex z, unsigned d) {
            if (d > p) return Complex(0.0);
            double falling = 1.0;
            for (unsigned i = 0; i < d; ++i) falling *= static_cast<double>(p - i);
            return falling * std::pow(z, static_cast<int>(p - d));
          },
          std::numeric_limits<unsigned>::max()};
}

double spectral_scale(const std::vector<Complex>& raw) {
  double m = 0.0;
  for (const Complex& z : raw) m = std::max(m, std::abs(z));
  return 1.0 + m;
}

Spectrum cluster_roots(const std::vector<Complex>& raw, double tol) {
  if (tol < 0) throw InputError("cluster_roots: negative tolerance");
  const double scale = spectral_scale(raw);
  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t n = raw.size();
  struct Cluster {
    Complex sum;
    unsigned count;
    Complex centroid() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> cl;
  std::vector<bool> used(n, false);

  // An m-fold root comes back as a ring of radius ~ eps^(1/m), so groups
  // are searched from the largest multiplicity down: seed plus its m-1
  // nearest free neighbours, accepted when all lie near their centroid.
  for (std::size_t m = n; m >= 2; --m) {
    const double radius = 10.0 * std::pow(eps, 1.0 / static_cast<double>(m)) * scale;
    bool found = true;
    while (found) {
      found = false;
      for (std::size_t seed = 0; seed < n && !found; ++seed) {
        if (used[seed]) continue;
        std::vector<std::pair<double, std::size_t>> near;
        for (std::size_t j = 0; j < n; ++j)
          if (!used[j]) near.push_back({std::abs(raw[j] - raw[seed]), j});
        if (near.size() < m) break;
        std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(m), near.end());
        Complex sum(0.0);
        for (std::size_t k = 0; k < m; ++k) sum += raw[near[k].second];
        const Complex c = sum / static_cast<double>(m);
        bool tight = true;
        for (std::size_t k = 0; k < m; ++k) tight = tight && std::abs(raw[near[k].second] - c) <= radius;
        if (!tight) continue;
        for (std::size_t k = 0; k < m; ++k) used[near[k].second] = true;
        cl.push_back({sum, static_cast<unsigned>(m)});
        found = true;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!used[j]) cl.push_back({raw[j], 1});

  // then the caller's tolerance, by single linkage on centroids
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < cl.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < cl.size() && !merged; ++j)
        if (std::abs(cl[i].centroid() - cl[j].centroid()) <= tol) {
          cl[i].sum += cl[j].sum;
          cl[i].count += cl[j].count;
          cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
  }

  Spectrum sp;
  sp.cluster_tol = tol;
  for (const Cluster& c : cl) sp.roots.push_back({c.centroid(), c.count});
  std::sort(sp.roots.begin(), sp.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return sp;
}

std::vector<Complex> polynomial_roots(const InvariantVector& phi) {
  if (phi.empty()) throw InputError("polynomial_roots: empty coefficient list");
  const Eigen::Index n = static_cast<Eigen::Index>(phi.size()) - 1;
  if (n == 0) return {};
  Matrix companion = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) companion(0, k) = -phi[static_cast<std::size_t>(k + 1)] / phi[0];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("spectrum: eigenvalue iteration did not converge");
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    if (!std::isfinite(roots[static_cast<std::size_t>(i)].real()) ||
        !std::isfinite(roots[static_cast<std::size_t>(i)].imag()))
      throw NumericalError("spectrum: non-finite root");
  }
  return roots;
}

Spectrum spectrum_of(const Matrix& a, std::optional<double> tol) {
  require_square(a, "spectrum_of");
  if (!all_finite(a)) throw DomainError("spectrum_of: non-finite entries");
  const auto raw = polynomial_roots(char_poly_invariants(a));
  const double t = tol ? *tol : 1e-8 * spectral_scale(raw);
  return cluster_roots(raw, t);
}

Spectrum spectrum_of_relative(const Matrix& a, double rel_tol) {
  require_square(a, "spectrum_of");
  if (!all_finite(a)) throw DomainError("spectrum_of: non-finite entries");
  const auto raw = polynomial_roots(char_poly_invariants(a));
  return cluster_roots(raw, rel_tol * spectral_scale(raw));
}

namespace {

void check_match(const Matrix& a, const Spectrum& sp, const char* where) {
  require_square(a, where);
  if (sp.dimension() != static_cast<unsigned>(a.rows()))
    throw InputError(std::string(where) + ": spectrum does not match matrix dimension");
}

std::vector<Matrix> powers(const Matrix& a, Eigen::Index count) {
  std::vector<Matrix> p;
  p.reserve(static_cast<std::size_t>(count));
  p.push_back(Matrix::Identity(a.rows(), a.cols()));
  for (Eigen::Index k = 1; k < count; ++k) p.push_back(p.back() * a);
  return p;
}

}  // namespace

ProjectorBasis projectors_product_form(const Matrix& a, const Spectrum& sp) {
  check_match(a, sp, "projectors_product_form");
  if (!sp.is_simple())
    throw DegenerateSpectrum("projectors_product_form: repeated eigenvalue; use matrix_function_confluent");
  const Eigen::Index n = a.rows();
  const long count = static_cast<long>(sp.roots.size());
  ProjectorBasis out(sp.roots.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < count; ++j) {
    const Complex lj = sp.roots[static_cast<std::size_t>(j)].value;
    Matrix z = Matrix::Identity(n, n);
    for (long k = 0; k < count; ++k) {
      if (k == j) continue;
      const Complex lk = sp.roots[static_cast<std::size_t>(k)].value;
      z = z * (a - lk * Matrix::Identity(n, n)) / (lj - lk);
    }
    out[static_cast<std::size_t>(j)] = {lj, std::move(z)};
  }
  return out;
}

ProjectorBasis projectors_from_invariants(const Matrix& a, const Spectrum& sp,
                                          const InvariantVector& phi) {
  check_match(a, sp, "projectors_from_invariants");
  if (!sp.is_simple())
    throw DegenerateSpectrum("projectors_from_invariants: repeated eigenvalue; use matrix_function_confluent");
  const Eigen::Index n = a.rows();
  if (phi.size() != static_cast<std::size_t>(n) + 1)
    throw InputError("projectors_from_invariants: invariant vector has wrong length");
  const std::size_t N = static_cast<std::size_t>(n);
  const auto pw = powers(a, n);
  double scale = 1.0;
  for (const Root& r : sp.roots) scale = std::max(scale, 1.0 + std::abs(r.value));

  const long count = static_cast<long>(sp.roots.size());
  ProjectorBasis out(sp.roots.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const Complex lam = sp.roots[static_cast<std::size_t>(i)].value;
    // coef[k] multiplies t^k, k = 0..N-1
    std::vector<Complex> coef(N);
    if (std::abs(lam) >= 0.1 * scale) {
      // sum_{j<=k} lam^(j-k) phi_{N-j}, built by c_k = c_{k-1}/lam + phi_{N-k}
      Complex c = phi[N];
      coef[0] = c;
      for (std::size_t k = 1; k < N; ++k) {
        c = c / lam + phi[N - k];
        coef[k] = c;
      }
    } else {
      // Delta(t)/(t - lam): coefficient of t^(N-1-m) is sum_{j<=m} lam^(m-j) phi_j
      Complex d = phi[0];
      coef[N - 1] = d;
      for (std::size_t m = 1; m < N; ++m) {
        d = lam * d + phi[m];
        coef[N - 1 - m] = d;
      }
    }
    Matrix num = Matrix::Zero(n, n);
    Complex den(0.0);
    Complex lk(1.0);
    for (std::size_t k = 0; k < N; ++k) {
      num += coef[k] * pw[k];
      den += coef[k] * lk;
      lk *= lam;
    }
    out[static_cast<std::size_t>(i)] = {lam, num / den};
  }
  for (const Projector& p : out)
    if (!all_finite(p.z)) throw DegenerateSpectrum("projectors_from_invariants: vanishing denominator");
  return out;
}

namespace {

struct Node {
  Complex x;
  unsigned d;
};

std::vector<Node> interpolation_nodes(const Spectrum& sp) {
  std::vector<Node> nodes;
  for (const Root& r : sp.roots)
    for (unsigned d = 0; d < r.multiplicity; ++d) nodes.push_back({r.value, d});
  return nodes;
}

// Linear system in some polynomial basis B_k together with the matrices
// B_k(A); rows are (root, derivative order) conditions.
struct Interpolator {
  Eigen::MatrixXcd system;
  std::vector<Matrix> basis;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
};

Eigen::MatrixXcd monomial_system(const std::vector<Node>& nodes) {
  const Eigen::Index n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Node& nd = nodes[static_cast<std::size_t>(r)];
    for (Eigen::Index k = nd.d; k < n; ++k) {
      double falling = 1.0;
      for (unsigned i = 0; i < nd.d; ++i) falling *= static_cast<double>(k - i);
      m(r, k) = falling * std::pow(nd.x, static_cast<int>(k - nd.d));
    }
  }
  return m;
}

// Newton basis N_k(t) = prod_{j<k} (t - x_j) over the node list with
// repetition. Derivatives at a node come from the Taylor expansion in
// s = t - x, which avoids expanding into monomials.
Eigen::MatrixXcd newton_system(const std::vector<Node>& nodes) {
  const std::size_t n = nodes.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Node& nd = nodes[r];
    std::vector<Complex> taylor(nd.d + 1, Complex(0.0));
    taylor[0] = 1.0;
    double dfact = 1.0;
    for (unsigned i = 2; i <= nd.d; ++i) dfact *= i;
    for (std::size_t k = 0; k < n; ++k) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = dfact * taylor[nd.d];
      // multiply by (s + (x - x_k))
      const Complex shift = nd.x - nodes[k].x;
      for (std::size_t q = nd.d; q >= 1; --q) taylor[q] = taylor[q] * shift + taylor[q - 1];
      taylor[0] *= shift;
    }
  }
  return m;
}

constexpr double kRcondSwitch = 1e-10;
constexpr double kRcondFail = 1e-15;

Interpolator build_interpolator(const Matrix& a, const Spectrum& sp) {
  const auto nodes = interpolation_nodes(sp);
  const Eigen::Index n = a.rows();
  Interpolator ip;
  ip.system = monomial_system(nodes);
  ip.lu.compute(ip.system);
  if (ip.lu.rcond() >= kRcondSwitch) {
    ip.basis = powers(a, n);
    return ip;
  }
  ip.system = newton_system(nodes);
  ip.lu.compute(ip.system);
  if (!(ip.lu.rcond() >= kRcondFail))
    throw NumericalError("confluent interpolation: singular system in both monomial and Newton bases");
  ip.basis.clear();
  ip.basis.push_back(Matrix::Identity(n, n));
  for (Eigen::Index k = 1; k < n; ++k)
    ip.basis.push_back(ip.basis.back() * (a - nodes[static_cast<std::size_t>(k - 1)].x * Matrix::Identity(n, n)));
  return ip;
}

Eigen::MatrixXcd checked_solve(const Interpolator& ip, const Eigen::MatrixXcd& rhs) {
  Eigen::MatrixXcd c = ip.lu.solve(rhs);
  const double res = (ip.system * c - rhs).norm();
  const double ref = ip.system.norm() * c.norm() + rhs.norm();
  if (!c.allFinite() || res > 1e-8 * ref)
    throw NumericalError("confluent interpolation: solve residual too large");
  return c;
}

}  // namespace

std::vector<ConfluentTerm> confluent_basis(const Matrix& a, const Spectrum& sp) {
  check_match(a, sp, "confluent_basis");
  const Interpolator ip = build_interpolator(a, sp);
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXcd c = checked_solve(ip, Eigen::MatrixXcd::Identity(n, n));
  const auto nodes = interpolation_nodes(sp);
  std::vector<ConfluentTerm> out;
  for (Eigen::Index r = 0; r < n; ++r) {
    Matrix z = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) z += c(k, r) * ip.basis[static_cast<std::size_t>(k)];
    out.push_back({nodes[static_cast<std::size_t>(r)].x, nodes[static_cast<std::size_t>(r)].d, std::move(z)});
  }
  return out;
}

Matrix matrix_function_confluent(const Matrix& a, const Spectrum& sp, const FunctionDescriptor& f) {
  check_match(a, sp, "matrix_function_confluent");
  if (sp.max_multiplicity() > 0 && sp.max_multiplicity() - 1 > f.max_order)
    throw DomainError("matrix_function_confluent: derivatives up to order " +
                      std::to_string(sp.max_multiplicity() - 1) + " are required");
  const auto nodes = interpolation_nodes(sp);
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd rhs(n, 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Complex v = f(nodes[static_cast<std::size_t>(r)].x, nodes[static_cast<std::size_t>(r)].d);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("matrix_function: function undefined at an eigenvalue");
    rhs(r, 0) = v;
  }
  const Interpolator ip = build_interpolator(a, sp);
  const Eigen::MatrixXcd c = checked_solve(ip, rhs);
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) out += c(k, 0) * ip.basis[static_cast<std::size_t>(k)];
  return out;
}

Matrix matrix_function(const Matrix& a, const FunctionDescriptor& f) {
  const Spectrum sp = spectrum_of_relative(a, kNearDegenerate);
  if (!sp.is_simple()) return matrix_function_confluent(a, sp, f);
  const Eigen::Index n = a.rows();
  Matrix out = Matrix::Zero(n, n);
  for (const Projector& p : projectors_product_form(a, sp)) {
    const Complex v = f(p.eigenvalue, 0);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("matrix_function: function undefined at an eigenvalue");
    out += v * p.z;
  }
  return out;
}

Matrix matrix_exp(const Matrix& a) { return matrix_function(a, FunctionDescriptor::exp()); }

}  // namespace lieclosed
