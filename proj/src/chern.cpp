#include "lieclosed/chern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lieclosed {

FormPolynomial::FormPolynomial(long long c) {
  if (c != 0) terms_[{}] = Complex(static_cast<double>(c));
}

FormPolynomial::FormPolynomial(Complex c, int max_degree) : max_degree_(max_degree) {
  if (max_degree < kUnbounded) throw InputError("FormPolynomial: invalid max_degree");
  if (c != Complex(0.0)) terms_[{}] = c;
}

FormPolynomial FormPolynomial::generator(unsigned index, int max_degree, Complex coefficient) {
  FormPolynomial p(Complex(0.0), max_degree);
  Monomial m(index + 1, 0);
  m[index] = 1;
  return p.add_term(m, coefficient);
}

int FormPolynomial::form_degree(const Monomial& m) {
  int d = 0;
  for (unsigned e : m) d += 2 * static_cast<int>(e);
  return d;
}

int FormPolynomial::combine(int a, int b) {
  if (a == kUnbounded) return b;
  if (b == kUnbounded) return a;
  return std::min(a, b);
}

bool FormPolynomial::fits(const Monomial& m) const {
  return max_degree_ == kUnbounded || form_degree(m) <= max_degree_;
}

void FormPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == Complex(0.0) || !fits(it->first))
      it = terms_.erase(it);
    else
      ++it;
  }
}

FormPolynomial& FormPolynomial::add_term(const Monomial& m, Complex c) {
  Monomial key = m;
  while (!key.empty() && key.back() == 0) key.pop_back();
  if (!fits(key)) return *this;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
  return *this;
}

bool FormPolynomial::is_zero(double tol) const {
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

bool FormPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Complex FormPolynomial::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Complex(0.0) : it->second;
}

int FormPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, form_degree(m));
  return d;
}

Complex FormPolynomial::evaluate(std::span<const Complex> values) const {
  Complex acc(0.0);
  for (const auto& [m, c] : terms_) {
    if (m.size() > values.size()) throw InputError("FormPolynomial::evaluate: too few generator values");
    Complex t = c;
    for (std::size_t g = 0; g < m.size(); ++g)
      for (unsigned e = 0; e < m[g]; ++e) t *= values[g];
    acc += t;
  }
  return acc;
}

FormPolynomial operator+(const FormPolynomial& a, const FormPolynomial& b) {
  FormPolynomial out(Complex(0.0), FormPolynomial::combine(a.max_degree_, b.max_degree_));
  for (const auto& [m, c] : a.terms_) out.add_term(m, c);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

FormPolynomial operator-(const FormPolynomial& a) {
  FormPolynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FormPolynomial operator-(const FormPolynomial& a, const FormPolynomial& b) { return a + (-b); }

FormPolynomial operator*(const FormPolynomial& a, const FormPolynomial& b) {
  FormPolynomial out(Complex(0.0), FormPolynomial::combine(a.max_degree_, b.max_degree_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FormPolynomial::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t g = 0; g < ma.size(); ++g) m[g] += ma[g];
      for (std::size_t g = 0; g < mb.size(); ++g) m[g] += mb[g];
      out.add_term(m, ca * cb);
    }
  return out;
}

FormPolynomial operator*(Complex s, const FormPolynomial& a) {
  FormPolynomial out = a;
  for (auto& [m, c] : out.terms_) c *= s;
  out.prune();
  return out;
}

FormPolynomial operator/(const FormPolynomial& a, const FormPolynomial& b) {
  if (!b.is_constant() || b.constant_term() == Complex(0.0))
    throw DomainError("FormPolynomial: division only by a nonzero constant");
  FormPolynomial out = (1.0 / b.constant_term()) * a;
  out.max_degree_ = FormPolynomial::combine(a.max_degree_, b.max_degree_);
  out.prune();
  return out;
}

bool operator==(const FormPolynomial& a, const FormPolynomial& b) { return a.terms_ == b.terms_; }

double FormPolynomial::distance(const FormPolynomial& a, const FormPolynomial& b) {
  double d = 0.0;
  for (const auto& [m, c] : (a - b).terms_) d = std::max(d, std::abs(c));
  return d;
}

std::string FormPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    for (std::size_t g = 0; g < m.size(); ++g)
      if (m[g] > 0) os << "*F" << g << (m[g] > 1 ? "^" + std::to_string(m[g]) : "");
  }
  return os.str();
}

FormMatrix::FormMatrix(unsigned dim) : n(dim), entries(static_cast<std::size_t>(dim) * dim) {}

FormMatrix FormMatrix::operator*(const FormMatrix& other) const {
  if (other.n != n) throw InputError("FormMatrix: dimension mismatch");
  FormMatrix out(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      FormPolynomial acc;
      for (unsigned k = 0; k < n; ++k) acc = acc + (*this)(i, k) * other(k, j);
      out(i, j) = acc;
    }
  return out;
}

FormPolynomial FormMatrix::trace() const {
  FormPolynomial acc;
  for (unsigned i = 0; i < n; ++i) acc = acc + (*this)(i, i);
  return acc;
}

Matrix FormMatrix::evaluate(std::span<const Complex> values) const {
  Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = (*this)(i, j).evaluate(values);
  return m;
}

Complex chern_factor() { return Complex(0.0, 0.5 / std::numbers::pi); }

namespace {

std::vector<FormPolynomial> trace_power_forms(const FormMatrix& f) {
  if (f.entries.size() != static_cast<std::size_t>(f.n) * f.n)
    throw InputError("FormMatrix: entry count does not match dimension");
  std::vector<FormPolynomial> tr;
  if (f.n == 0) return tr;
  FormMatrix p = f;
  for (unsigned k = 1; k <= f.n; ++k) {
    if (k > 1) p = p * f;
    tr.push_back(p.trace());
  }
  return tr;
}

}  // namespace

std::vector<FormPolynomial> chern_classes(const FormMatrix& f) {
  const auto tr = trace_power_forms(f);
  const Complex z = chern_factor();
  std::vector<FormPolynomial> c;
  Complex zk(1.0);
  for (unsigned k = 0; k <= f.n; ++k) {
    c.push_back(zk * sigma_from_power_sums(k, tr));
    zk *= z;
  }
  return c;
}

std::vector<FormPolynomial> chern_characters(const FormMatrix& f) {
  const auto tr = trace_power_forms(f);
  const Complex z = chern_factor();
  std::vector<FormPolynomial> ch;
  ch.push_back(FormPolynomial(static_cast<long long>(f.n)));
  Complex coef(1.0);
  for (unsigned k = 1; k <= f.n; ++k) {
    coef *= z / static_cast<double>(k);
    ch.push_back(coef * tr[k - 1]);
  }
  return ch;
}

}  // namespace lieclosed
