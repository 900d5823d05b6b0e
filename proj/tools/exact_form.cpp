#include "exact_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lieclosed/types.hpp"

namespace lieclosed::cli {

namespace {

int form_degree(const RationalForm::Monomial& m) { return FormPolynomial::form_degree(m); }

int combine(int a, int b) {
  if (a == FormPolynomial::kUnbounded) return b;
  if (b == FormPolynomial::kUnbounded) return a;
  return std::min(a, b);
}

void trim(RationalForm::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

// Terms are listed by ascending degree, then by monomial order.
template <class Map>
std::vector<typename Map::const_iterator> display_order(const Map& terms) {
  std::vector<typename Map::const_iterator> order;
  for (auto it = terms.begin(); it != terms.end(); ++it) order.push_back(it);
  std::stable_sort(order.begin(), order.end(),
                   [](auto a, auto b) { return form_degree(a->first) < form_degree(b->first); });
  return order;
}

std::string monomial_text(const RationalForm::Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += g < names.size() ? names[g] : "g" + std::to_string(g);
    if (m[g] > 1) out += "^" + std::to_string(m[g]);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string>& names, int max_degree)
      : text_(text), names_(names), max_degree_(max_degree) {}

  RationalForm run() {
    RationalForm r = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("form expression \"" + std::string(text_) + "\": " + what + " at position " +
                     std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalForm sum() {
    skip();
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    RationalForm acc = product();
    if (negative) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + product();
      else if (eat('-'))
        acc = acc - product();
      else
        return acc;
    }
  }

  RationalForm product() {
    RationalForm acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        const RationalForm d = power();
        if (!d.is_constant() || d.constant_term() == 0) fail("division by a non-constant or zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalForm power() {
    RationalForm base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    RationalForm out(ExactRational(1), max_degree_);
    for (unsigned k = 0; k < e; ++k) out = out * base;
    return out;
  }

  RationalForm atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalForm inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return RationalForm(number(), max_degree_);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        names_.push_back(name);
        it = names_.end() - 1;
      }
      return RationalForm::generator(static_cast<unsigned>(it - names_.begin()), max_degree_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // integer, decimal or p/q, all kept exact
  ExactRational number() {
    std::string digits;
    int decimals = 0;
    bool dot = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++decimals;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) fail("malformed number");
    using Int = boost::multiprecision::cpp_int;
    Int den = 1;
    for (int k = 0; k < decimals; ++k) den *= 10;
    ExactRational value(Int(digits), den);
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Int q(std::string(text_.substr(start, pos_ - start)));
      if (q == 0) fail("zero denominator");
      value /= ExactRational(q);
    }
    return value;
  }

  std::string_view text_;
  std::vector<std::string>& names_;
  int max_degree_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalForm::RationalForm(long long c) : RationalForm(ExactRational(c)) {}

RationalForm::RationalForm(const ExactRational& c, int max_degree) : max_degree_(max_degree) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

RationalForm RationalForm::generator(unsigned index, int max_degree) {
  RationalForm r(ExactRational(0), max_degree);
  Monomial m(index + 1, 0);
  m[index] = 1;
  r.add_term(std::move(m), ExactRational(1));
  return r;
}

void RationalForm::add_term(Monomial m, const ExactRational& c) {
  trim(m);
  if (max_degree_ != FormPolynomial::kUnbounded && form_degree(m) > max_degree_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool RationalForm::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ExactRational RationalForm::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? ExactRational(0) : it->second;
}

FormPolynomial RationalForm::to_numeric() const {
  FormPolynomial out(Complex(0.0), max_degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, Complex(static_cast<double>(c)));
  return out;
}

RationalForm operator+(const RationalForm& a, const RationalForm& b) {
  RationalForm out(ExactRational(0), combine(a.max_degree_, b.max_degree_));
  for (const auto& [m, c] : a.terms_) out.add_term(m, c);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

RationalForm operator-(const RationalForm& a) {
  RationalForm out(ExactRational(0), a.max_degree_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, -c);
  return out;
}

RationalForm operator-(const RationalForm& a, const RationalForm& b) { return a + (-b); }

RationalForm operator*(const RationalForm& a, const RationalForm& b) {
  RationalForm out(ExactRational(0), combine(a.max_degree_, b.max_degree_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      RationalForm::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t g = 0; g < ma.size(); ++g) m[g] += ma[g];
      for (std::size_t g = 0; g < mb.size(); ++g) m[g] += mb[g];
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

RationalForm operator/(const RationalForm& a, const RationalForm& b) {
  if (!b.is_constant() || b.constant_term() == 0)
    throw DomainError("RationalForm: division is defined only by a nonzero constant");
  const ExactRational d = b.constant_term();
  RationalForm out(ExactRational(0), combine(a.max_degree_, b.max_degree_));
  for (const auto& [m, c] : a.terms_) out.add_term(m, c / d);
  return out;
}

std::string format_rational(const ExactRational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string RationalForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it : display_order(terms_)) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const ExactRational mag = negative ? ExactRational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = monomial_text(m, names);
    if (mono.empty())
      out += format_rational(mag);
    else if (mag == 1)
      out += mono;
    else
      out += format_rational(mag) + "*" + mono;
  }
  return out;
}

std::string format_numeric(const FormPolynomial& p, const std::vector<std::string>& names) {
  if (p.terms().empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (auto it : display_order(p.terms())) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    const std::string mono = monomial_text(m, names);
    if (!mono.empty()) os << "*" << mono;
  }
  return os.str();
}

RationalForm parse_form(std::string_view text, std::vector<std::string>& names, int max_degree) {
  return Parser(text, names, max_degree).run();
}

}  // namespace lieclosed::cli
