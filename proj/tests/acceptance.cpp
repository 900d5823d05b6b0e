// Acceptance run: each criterion prints one PASS/FAIL line followed by the
// measured quantities. Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lieclosed/bell.hpp"
#include "lieclosed/chern.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/invariants.hpp"
#include "lieclosed/oracle.hpp"
#include "lieclosed/symfun.hpp"
#include "lieclosed/zmethod.hpp"

using namespace lieclosed;
using testing::max_diff;
using Q = ExactRational;

namespace {

// Tracks the largest observed value of one measured quantity against its bound.
struct Gauge {
  std::string name;
  double limit;
  double worst = 0.0;
  void see(double v) {
    if (!(v <= worst)) worst = v;  // NaN sticks
  }
  bool ok() const { return worst < limit; }
};

struct Outcome {
  std::deque<Gauge> gauges;  // stable references for add()
  std::vector<std::string> notes;
  long exact_failures = 0;
  long exact_checks = 0;
  Gauge& add(std::string name, double limit) {
    gauges.push_back({std::move(name), limit});
    return gauges.back();
  }
  void exact(bool good) {
    ++exact_checks;
    if (!good) ++exact_failures;
  }
  bool ok() const {
    for (const auto& g : gauges)
      if (!g.ok()) return false;
    return exact_failures == 0;
  }
};

Mat4 series4(const Mat4& a) { return oracle::series_exp(to_complex(a)).real(); }
Mat5 series5(const Mat5& a) { return oracle::series_exp(to_complex(a)).real(); }

LorentzParams lorentz_draw(testing::Rng& rng) {
  for (;;) {
    const LorentzParams p{rng.ball(2.0), rng.ball(2.0)};
    if (!lorentz_degenerate(lorentz_aux(p))) return p;
  }
}

// ---------------------------------------------------------------------------

Outcome lorentz_closed_form() {
  Outcome out;
  Gauge& err = out.add("max |closed - series|", 1e-10);
  Gauge& metric = out.add("max |L^T eta L - eta|", 1e-9);
  Gauge& det = out.add("max |det L - 1|", 1e-9);
  Gauge& time = out.add("runtime [s]", 5.0);
  testing::Rng rng(1001);
  const Mat4 eta = lorentz_metric();
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < 1000; ++t) {
    const LorentzParams p = lorentz_draw(rng);
    const Mat4 g = lorentz_exp_closed(p);
    err.see(max_diff(g, series4(lorentz_algebra(p))));
    metric.see(max_diff(Mat4(g.transpose() * eta * g), eta));
    det.see(std::abs(g.determinant() - 1.0));
  }
  time.see(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return out;
}

Outcome poincare_closed_form() {
  Outcome out;
  Gauge& err = out.add("max |closed - series|", 1e-9);
  Gauge& block = out.add("max |upper block - Lorentz|", 1e-9);
  testing::Rng rng(1002);
  for (int t = 0; t < 1000; ++t) {
    const LorentzParams l = lorentz_draw(rng);
    const PoincareParams p{l.omega, l.zeta, rng.vec3(2.0), rng.uniform(-2.0, 2.0)};
    const Mat5 g = poincare_exp_closed(p);
    err.see(max_diff(g, series5(poincare_algebra(p))));
    block.see(max_diff(Mat4(g.block<4, 4>(0, 0)), lorentz_exp_closed(l)));
    bool last_row = g(4, 4) == 1.0;
    for (int j = 0; j < 4; ++j) last_row = last_row && g(4, j) == 0.0;
    out.exact(last_row);
  }
  return out;
}

Outcome galilei_closed_form() {
  Outcome out;
  Gauge& err = out.add("max |closed - series|", 1e-10);
  Gauge& complete = out.add("max |Z10 + Z4 + Z5 - I|", 1e-10);
  Gauge& idem = out.add("max |Z10^2 - Z10|", 1e-10);
  Gauge& orth = out.add("max |Z4 Z5|", 1e-10);
  Gauge& nil = out.add("max |Z12^2|", 1e-10);
  testing::Rng rng(1003);
  double smallest = 10.0;
  for (int t = 0; t < 1000; ++t) {
    // log-uniform angle so that the small-angle branch is well represented
    const double w = std::pow(10.0, rng.uniform(-6.0, std::log10(3.0)));
    const Vec3 u = rng.ball(1.0).normalized();
    const GalileiParams p{w * u, rng.vec3(1.0), rng.vec3(1.0), rng.uniform(-1.0, 1.0)};
    smallest = std::min(smallest, w);
    err.see(max_diff(galilei_exp_closed(p), series5(galilei_algebra(p))));
  }
  // Z10 grows like 1/omega^2, so the floating-point residual of Z10^2 = Z10
  // grows like eps/omega^4; the relations are checked for omega >= 1e-2.
  for (int t = 0; t < 500; ++t) {
    const double w = std::pow(10.0, rng.uniform(-2.0, std::log10(3.0)));
    const GalileiParams p{w * rng.ball(1.0).normalized(), rng.vec3(1.0), rng.vec3(1.0), rng.uniform(-1.0, 1.0)};
    const auto z = galilei_quasi_projectors(p);
    complete.see(max_diff(Matrix(z.z10 + z.z4 + z.z5), Matrix(Matrix::Identity(5, 5))));
    idem.see(max_diff(Matrix(z.z10 * z.z10), z.z10));
    orth.see(testing::max_abs(z.z4 * z.z5));
    nil.see(testing::max_abs(z.z12 * z.z12));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "smallest angle drawn %.2e", smallest);
  out.notes.emplace_back(buf);
  return out;
}

Outcome degenerate_zmethod() {
  Outcome out;
  Gauge& gal = out.add("Galilei max |confluent - series|", 1e-8);
  Gauge& dbl = out.add("double root max |confluent - series|", 1e-8);
  Gauge& jor = out.add("Jordan block max |confluent - series|", 1e-8);
  testing::Rng rng(1004);
  const FunctionDescriptor f = FunctionDescriptor::exp();
  for (int t = 0; t < 100; ++t) {
    const GalileiParams p{rng.uniform(0.1, 3.0) * rng.ball(1.0).normalized(), rng.vec3(1.0), rng.vec3(1.0),
                          rng.uniform(-1.0, 1.0)};
    const Matrix a = to_complex(galilei_algebra(p));
    const Spectrum sp = spectrum_of_relative(a, kNearDegenerate);
    out.exact(!sp.is_simple());
    gal.see(max_diff(matrix_function_confluent(a, sp, f), oracle::series_exp(a)));
  }
  for (int t = 0; t < 200; ++t) {
    std::vector<Complex> lam = rng.separated(4, 1.5, 0.3);
    lam.push_back(lam[0]);
    const Matrix a = rng.with_spectrum(lam);
    const Spectrum sp = spectrum_of_relative(a, kNearDegenerate);
    out.exact(sp.max_multiplicity() == 2);
    dbl.see(max_diff(matrix_function_confluent(a, sp, f), oracle::series_exp(a)));

    // defective variant: a 2x2 Jordan block on the repeated value
    Matrix j = Matrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) j(i, i) = lam[static_cast<std::size_t>(i == 4 ? 0 : i)];
    j(0, 4) = 1.0;
    const Matrix s = Matrix::Identity(5, 5) + rng.complex_matrix(5, 0.3);
    const Matrix b = s * j * s.inverse();
    const Spectrum sb = spectrum_of_relative(b, kNearDegenerate);
    out.exact(sb.max_multiplicity() == 2);
    jor.see(max_diff(matrix_exp(b), oracle::series_exp(b)));
  }
  return out;
}

Outcome invariants_check() {
  Outcome out;
  Gauge& coeff = out.add("max |phi_j - sampled char poly|", 1e-9);
  Gauge& det = out.add("max relative |det_via_bell - brute|", 1e-10);
  Gauge& odd = out.add("max |odd phi| (pseudo-orthogonal)", 1e-12);
  testing::Rng rng(1005);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    const Matrix a = rng.complex_matrix(n, 1.0);
    const InvariantVector phi = char_poly_invariants(a);
    const std::vector<Complex> cp = oracle::char_poly_by_sampling(a);
    for (int j = 0; j <= n; ++j)
      coeff.see(std::abs(phi[static_cast<std::size_t>(j)] - cp[static_cast<std::size_t>(j)]));
    const Complex brute = oracle::brute_determinant(a);
    det.see(std::abs(det_via_bell(a) - brute) / std::max(1.0, std::abs(brute)));
  }
  for (int t = 0; t < 300; ++t) {
    // A = eta K with K antisymmetric satisfies A^T = -eta A eta^-1
    const int n = 2 + t % 5;
    Matrix eta = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) eta(i, i) = rng.integer(0, 1) ? 1.0 : -1.0;
    const Matrix r = rng.real_matrix(n, 1.0);
    const Matrix a = eta * (r - r.transpose());
    const InvariantVector phi = char_poly_invariants(a);
    for (int j = 1; j <= n; j += 2) odd.see(std::abs(phi[static_cast<std::size_t>(j)]));
  }
  return out;
}

Outcome su3_check() {
  Outcome out;
  Gauge& cube = out.add("max |tr W^3 - 3 det W|", 1e-10);
  Gauge& phi2 = out.add("max |phi2 + sum alpha^2|", 1e-10);
  Gauge& unit = out.add("max |U^H U - I|", 1e-9);
  Gauge& det = out.add("max |det U - 1|", 1e-9);
  testing::Rng rng(1006);
  for (int t = 0; t < 1000; ++t) {
    SU3Params p;
    for (int k = 0; k < 8; ++k) p.alpha(k) = rng.uniform(-1.0, 1.0);
    const Mat3c w = su3_element(p);
    cube.see(std::abs((w * w * w).trace() - 3.0 * w.determinant()));
    const InvariantVector phi = char_poly_invariants(Matrix(w));
    phi2.see(std::abs(phi[2] + p.alpha.squaredNorm()));
    const Mat3c u = su3_exp(p);
    unit.see(max_diff(Mat3c(u.adjoint() * u), Mat3c(Mat3c::Identity())));
    det.see(std::abs(u.determinant() - 1.0));
  }
  return out;
}

Outcome symmetric_function_suite() {
  Outcome out;
  testing::Rng rng(1007);
  int cases = 0;
  for (; cases < 240; ++cases) {
    const int n = 1 + cases % 8;
    std::vector<Q> x;
    for (int i = 0; i < n; ++i) x.push_back(rng.nonzero_rational());
    const unsigned un = static_cast<unsigned>(n);

    std::vector<Q> s, sigma;
    for (unsigned k = 1; k <= un; ++k) {
      s.push_back(power_sum(k, x));
      sigma.push_back(elementary(k, x));
    }
    // Newton roundtrips in both directions
    for (unsigned j = 0; j <= un; ++j) out.exact(sigma_from_power_sums(j, s) == elementary(j, x));
    std::vector<Q> padded = sigma;  // sigma_j = 0 beyond the alphabet size
    padded.resize(un + 2, Q(0));
    for (unsigned k = 1; k <= un + 2; ++k) out.exact(power_sum_from_sigmas(k, padded) == power_sum(k, x));
    std::vector<Q> sigma_back;
    for (unsigned j = 1; j <= un; ++j) sigma_back.push_back(sigma_from_power_sums(j, s));
    for (unsigned k = 1; k <= un; ++k) out.exact(power_sum_from_sigmas(k, sigma_back) == s[k - 1]);

    // missing letter against explicit deletion
    for (int i = 0; i < n; ++i) {
      std::vector<Q> del = x;
      del.erase(del.begin() + i);
      for (unsigned k = 0; k < un; ++k)
        out.exact(elementary_missing(k, static_cast<std::size_t>(i), x) == elementary(k, del));
    }

    // reciprocal alphabet: (-1)^j sigma_{N-j}[x] = sigma_N[x] sigma_j[x*]
    const std::vector<Q> xs = reciprocal_alphabet(x);
    for (unsigned j = 0; j <= un; ++j) {
      const Q lhs = (j % 2 == 0 ? Q(1) : Q(-1)) * elementary(un - j, x);
      out.exact(lhs == elementary(un, x) * elementary(j, xs));
    }

    // Vieta against subset enumeration
    const std::vector<Q> b = poly_coefficients(x);
    for (unsigned r = 0; r < b.size(); ++r)
      out.exact(b[r] == (r % 2 == 0 ? Q(1) : Q(-1)) * oracle::brute_symmetric(oracle::SymmetricKind::sigma, r, x));
  }
  out.notes.push_back(std::to_string(cases) + " alphabets, " + std::to_string(out.exact_checks) + " exact identities");
  return out;
}

Outcome bell_layer() {
  Outcome out;
  testing::Rng rng(1008);
  for (int trial = 0; trial < 5; ++trial)
    for (unsigned n = 0; n <= 10; ++n) {
      std::vector<Q> g;
      for (unsigned j = 0; j < std::max(n, 1u); ++j) g.push_back(rng.rational());
      const Q a = rng.nonzero_rational();
      std::vector<Q> scaled = g, flipped = g;
      Q aj = 1;
      for (std::size_t j = 0; j < g.size(); ++j) {
        aj *= a;
        scaled[j] = aj * g[j];
        if (j % 2 == 0) flipped[j] = -g[j];
      }
      Q an = 1;
      for (unsigned i = 0; i < n; ++i) an *= a;
      for (unsigned k = 0; k <= n; ++k) {
        const Q b = bell(n, k, g);
        out.exact(b == bell_oracle(n, k, g));
        out.exact(bell(n, k, scaled) == an * b);
        out.exact(bell(n, k, flipped) == (n % 2 == 0 ? b : -b));
      }
    }
  out.notes.push_back(std::to_string(out.exact_checks) + " exact identities");
  return out;
}

Outcome projector_suite() {
  Outcome out;
  Gauge& complete = out.add("completeness", 1e-9);
  Gauge& idem = out.add("idempotence", 1e-9);
  Gauge& orth = out.add("orthogonality", 1e-9);
  Gauge& trace = out.add("|tr Z_j - 1|", 1e-9);
  Gauge& moment = out.add("|tr A^k Z_j - lambda_j^k|", 1e-9);
  Gauge& forms = out.add("|invariant form - product form|", 1e-9);
  Gauge& zero = out.add("Poincare zero root |invariant - product|", 1e-9);
  testing::Rng rng(1009);
  for (int t = 0; t < 250; ++t) {
    const int n = 1 + t % 6;
    const Matrix a = rng.with_spectrum(rng.separated(n, 2.0, 0.4));
    const Spectrum sp = spectrum_of(a);
    out.exact(sp.is_simple());
    if (!sp.is_simple()) continue;
    const ProjectorBasis z = projectors_product_form(a, sp);
    const ProjectorBasis zi = projectors_from_invariants(a, sp, char_poly_invariants(a));
    Matrix sum = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < z.size(); ++i) {
      sum += z[i].z;
      idem.see(max_diff(Matrix(z[i].z * z[i].z), z[i].z));
      trace.see(std::abs(z[i].z.trace() - 1.0));
      Matrix ak = Matrix::Identity(n, n);
      for (int k = 0; k <= n; ++k) {
        moment.see(std::abs((ak * z[i].z).trace() - std::pow(z[i].eigenvalue, k)));
        ak = ak * a;
      }
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) orth.see(testing::max_abs(z[i].z * z[j].z));
      forms.see(max_diff(z[i].z, zi[i].z));
    }
    complete.see(max_diff(sum, Matrix(Matrix::Identity(n, n))));
  }
  for (int t = 0; t < 100; ++t) {
    const LorentzParams l = lorentz_draw(rng);
    const PoincareParams p{l.omega, l.zeta, rng.vec3(1.0), rng.uniform(-1.0, 1.0)};
    const Matrix a = to_complex(poincare_algebra(p));
    const Spectrum sp = spectrum_of(a);
    if (!sp.is_simple()) continue;
    const ProjectorBasis z = projectors_product_form(a, sp);
    const ProjectorBasis zi = projectors_from_invariants(a, sp, char_poly_invariants(a));
    // the root at zero is recovered to roundoff relative to the spectral radius
    double radius = 0.0;
    for (const auto& r : sp.roots) radius = std::max(radius, std::abs(r.value));
    bool has_zero = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      has_zero = has_zero || std::abs(z[i].eigenvalue) < 1e-12 * (1.0 + radius);
      zero.see(max_diff(z[i].z, zi[i].z));
    }
    out.exact(has_zero);
  }
  return out;
}

Outcome chern_check() {
  Outcome out;
  Gauge& numeric = out.add("max |c_k(F) - z^k sigma_k(eig)|", 1e-8);
  testing::Rng rng(1010);
  for (int t = 0; t < 100; ++t) {
    std::vector<Q> ch{Q(rng.integer(1, 8))};
    std::vector<Q> c{Q(1)};
    for (int k = 1; k <= 6; ++k) {
      ch.push_back(rng.rational());
      c.push_back(rng.rational());
    }
    out.exact(characters_from_classes(classes_from_characters(ch), ch[0]) == ch);
    out.exact(classes_from_characters(characters_from_classes(c, Q(rng.integer(1, 8)))) == c);
  }
  for (int t = 0; t < 50; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(t % 5);
    const unsigned gens = 3;
    FormMatrix f(n);
    for (auto& e : f.entries) {
      FormPolynomial acc;
      for (unsigned g = 0; g < gens; ++g)
        acc = acc + FormPolynomial::generator(g, FormPolynomial::kUnbounded,
                                              Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
      e = acc;
    }
    std::vector<Complex> vals;
    for (unsigned g = 0; g < gens; ++g) vals.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Matrix m = f.evaluate(vals);
    Eigen::ComplexEigenSolver<Matrix> es(m, false);
    const std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    const auto cls = chern_classes(f);
    Complex zk(1.0);
    for (unsigned k = 0; k <= n; ++k) {
      numeric.see(std::abs(cls[k].evaluate(vals) - zk * elementary(k, ev)));
      zk *= chern_factor();
    }
  }
  for (int t = 0; t < 20; ++t) {
    FormMatrix f(4);
    for (auto& e : f.entries) {
      FormPolynomial acc(Complex(0.0), 4);
      for (unsigned g = 0; g < 3; ++g)
        acc = acc + FormPolynomial::generator(g, 4, Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
      e = acc;
    }
    const auto cls = chern_classes(f);
    out.exact(cls[3].is_zero() && cls[4].is_zero() && !cls[2].is_zero());
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"Lorentz closed form", lorentz_closed_form},
      {"Poincare closed form", poincare_closed_form},
      {"Galilei closed form and quasi-projectors", galilei_closed_form},
      {"Degenerate spectra via confluent interpolation", degenerate_zmethod},
      {"Invariants from traces", invariants_check},
      {"SU(3) invariants and exponential", su3_check},
      {"Exact symmetric-function identities", symmetric_function_suite},
      {"Bell polynomial layer", bell_layer},
      {"Eigenprojector suite", projector_suite},
      {"Chern classes and characters", chern_check},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && o.ok();
    if (!ok) ++failed;
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", index, c.title);
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    for (const auto& g : o.gauges)
      std::printf("       %-42s %.3e (bound %.0e)%s\n", g.name.c_str(), g.worst, g.limit, g.ok() ? "" : "  <--");
    if (o.exact_checks > 0)
      std::printf("       exact checks: %ld, failures: %ld\n", o.exact_checks, o.exact_failures);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
