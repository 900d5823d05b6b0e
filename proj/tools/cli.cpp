#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exact_form.hpp"
#include "json_io.hpp"
#include "lieclosed/chern.hpp"
#include "lieclosed/groups.hpp"
#include "lieclosed/invariants.hpp"
#include "lieclosed/oracle.hpp"
#include "lieclosed/zmethod.hpp"

namespace lieclosed::cli {

namespace {

constexpr double kDefaultTol = 1e-8;
// brute_determinant is factorial in n
constexpr Eigen::Index kOracleMaxDim = 8;

struct Options {
  std::string matrix_path;
  std::string group;
  std::vector<double> omega, zeta, v, a, alpha;
  std::optional<double> a0;
  std::string method = "zmethod";
  bool check = false;
  std::optional<double> tol;
  std::string out_path;
  std::string input_path;
  std::string sequence_text;
  std::string direction;
  std::optional<long long> rank;
  std::optional<int> max_degree;
};

struct Result {
  Json doc;
  std::string breach;  // non-empty when a --check comparison failed
};

double resolve_tol(const Options& o) {
  double t = kDefaultTol;
  if (o.tol) {
    t = *o.tol;
  } else if (const char* env = std::getenv("LIECLOSED_TOL"); env && *env) {
    char* end = nullptr;
    t = std::strtod(env, &end);
    if (end == env || *end != '\0') throw InputError("LIECLOSED_TOL is not a number: " + std::string(env));
  }
  if (!(t > 0) || !std::isfinite(t)) throw InputError("tolerance must be a positive finite number");
  return t;
}

// ------------------------------------------------------------------ inputs

struct GroupInput {
  std::string name;
  LorentzParams lorentz;
  PoincareParams poincare;
  GalileiParams galilei;
  SU3Params su3;
};

Vec3 triple(const std::vector<double>& x, const char* flag) {
  if (x.empty()) return Vec3::Zero();
  if (x.size() != 3) throw InputError(std::string(flag) + " expects three comma-separated numbers");
  for (double c : x)
    if (!std::isfinite(c)) throw InputError(std::string(flag) + ": non-finite value");
  return {x[0], x[1], x[2]};
}

GroupInput group_from_options(const Options& o) {
  GroupInput g;
  g.name = o.group;
  auto reject = [&](bool present, const char* flag) {
    if (present) throw InputError(std::string(flag) + " does not apply to group " + o.group);
  };
  const Vec3 omega = triple(o.omega, "--omega");
  if (o.group == "lorentz" || o.group == "poincare") {
    reject(!o.v.empty(), "--v");
    reject(!o.alpha.empty(), "--alpha");
    g.lorentz = {omega, triple(o.zeta, "--zeta")};
    if (o.group == "lorentz") {
      reject(!o.a.empty(), "--a");
      reject(o.a0.has_value(), "--a0");
    }
    g.poincare = {g.lorentz.omega, g.lorentz.zeta, triple(o.a, "--a"), o.a0.value_or(0.0)};
  } else if (o.group == "galilei") {
    reject(!o.zeta.empty(), "--zeta");
    reject(!o.alpha.empty(), "--alpha");
    g.galilei = {omega, triple(o.v, "--v"), triple(o.a, "--a"), o.a0.value_or(0.0)};
  } else if (o.group == "su3") {
    reject(!o.omega.empty(), "--omega");
    reject(!o.zeta.empty(), "--zeta");
    reject(!o.v.empty(), "--v");
    reject(!o.a.empty(), "--a");
    reject(o.a0.has_value(), "--a0");
    if (o.alpha.size() != 8) throw InputError("--alpha expects eight comma-separated numbers");
    for (int k = 0; k < 8; ++k) g.su3.alpha(k) = o.alpha[static_cast<std::size_t>(k)];
    if (!g.su3.alpha.allFinite()) throw InputError("--alpha: non-finite value");
  } else {
    throw InputError("unknown group '" + o.group + "' (expected lorentz, poincare, galilei or su3)");
  }
  return g;
}

Json group_echo(const GroupInput& g) {
  Json e;
  e["group"] = g.name;
  auto vec = [](const Vec3& x) { return Json::array({x(0), x(1), x(2)}); };
  if (g.name == "lorentz" || g.name == "poincare") {
    e["omega"] = vec(g.lorentz.omega);
    e["zeta"] = vec(g.lorentz.zeta);
    if (g.name == "poincare") {
      e["a"] = vec(g.poincare.a);
      e["a0"] = g.poincare.a0;
    }
  } else if (g.name == "galilei") {
    e["omega"] = vec(g.galilei.omega);
    e["v"] = vec(g.galilei.v);
    e["a"] = vec(g.galilei.a);
    e["a0"] = g.galilei.a0;
  } else {
    e["alpha"] = Json(std::vector<double>(g.su3.alpha.data(), g.su3.alpha.data() + 8));
  }
  return e;
}

// The algebra element; for SU(3) this is W = sum alpha_a lambda_a.
Matrix group_algebra(const GroupInput& g) {
  if (g.name == "lorentz") return to_complex(lorentz_algebra(g.lorentz));
  if (g.name == "poincare") return to_complex(poincare_algebra(g.poincare));
  if (g.name == "galilei") return to_complex(galilei_algebra(g.galilei));
  return su3_element(g.su3);
}

Matrix group_closed_exp(const GroupInput& g) {
  if (g.name == "lorentz") return to_complex(lorentz_exp_closed(g.lorentz));
  if (g.name == "poincare") return to_complex(poincare_exp_closed(g.poincare));
  if (g.name == "galilei") return to_complex(galilei_exp_closed(g.galilei));
  return su3_exp(g.su3);
}

struct MatrixInput {
  Matrix a;
  Json echo;
  std::optional<GroupInput> group;
};

MatrixInput matrix_input(const Options& o) {
  const bool have_params = !o.omega.empty() || !o.zeta.empty() || !o.v.empty() || !o.a.empty() ||
                           !o.alpha.empty() || o.a0.has_value();
  if (!o.matrix_path.empty() && !o.group.empty()) throw InputError("give either --matrix or --group, not both");
  MatrixInput in;
  if (!o.matrix_path.empty()) {
    if (have_params) throw InputError("group parameters require --group");
    const Json doc = read_json_file(o.matrix_path);
    in.a = matrix_from_json(doc, o.matrix_path);
    in.echo["matrix_file"] = o.matrix_path;
    in.echo["matrix"] = matrix_to_json(in.a);
    return in;
  }
  if (o.group.empty()) throw InputError("an input is required: --matrix <file.json> or --group <name>");
  in.group = group_from_options(o);
  in.a = group_algebra(*in.group);
  in.echo = group_echo(*in.group);
  return in;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Json spectrum_json(const Spectrum& sp) {
  Json roots = Json::array();
  for (const Root& r : sp.roots) {
    Json e;
    e["value"] = complex_to_json(r.value);
    e["multiplicity"] = r.multiplicity;
    roots.push_back(std::move(e));
  }
  Json s;
  s["roots"] = std::move(roots);
  s["cluster_tol"] = sp.cluster_tol;
  return s;
}

void breach_if(Result& r, double value, double bound, const std::string& what) {
  if (!(value <= bound) && r.breach.empty()) {
    std::ostringstream os;
    os << what << " " << value << " exceeds " << bound;
    r.breach = os.str();
  }
}

// --------------------------------------------------------------- commands

Result cmd_invariants(const Options& o) {
  const double tol = resolve_tol(o);
  const MatrixInput in = matrix_input(o);
  const unsigned n = static_cast<unsigned>(in.a.rows());
  const std::vector<Complex> traces = trace_powers(in.a, n);
  const InvariantVector phi = invariants_from_traces(traces);
  const Complex det = det_via_bell(in.a);

  Result r;
  r.doc["command"] = "invariants";
  r.doc["inputs"] = in.echo;
  Json out;
  Json jphi = Json::array(), jtr = Json::array();
  for (const Complex& c : phi) jphi.push_back(complex_to_json(c));
  for (const Complex& c : traces) jtr.push_back(complex_to_json(c));
  out["phi"] = std::move(jphi);
  out["det_via_bell"] = complex_to_json(det);
  out["traces"] = std::move(jtr);
  r.doc["outputs"] = std::move(out);

  Json diag = Json::object();
  if (o.check) {
    if (in.a.rows() <= kOracleMaxDim) {
      const std::vector<Complex> cp = oracle::char_poly_by_sampling(in.a);
      double dev = 0.0, size = 0.0;
      for (std::size_t j = 0; j < cp.size(); ++j) {
        dev = std::max(dev, std::abs(cp[j] - phi[j]));
        size = std::max(size, std::abs(cp[j]));
      }
      const Complex brute = oracle::brute_determinant(in.a);
      const double det_dev = std::abs(brute - det);
      diag["phi_vs_sampled_char_poly"] = dev;
      diag["det_vs_brute_determinant"] = det_dev;
      breach_if(r, dev, tol * (1.0 + size), "invariant deviation");
      breach_if(r, det_dev, tol * (1.0 + std::abs(brute)), "determinant deviation");
    } else {
      diag["note"] = "oracle comparison skipped above dimension 8";
    }
  }
  r.doc["diagnostics"] = std::move(diag);
  return r;
}

Result cmd_exp(const Options& o) {
  const double tol = resolve_tol(o);
  if (o.method != "zmethod" && o.method != "oracle" && o.method != "closed")
    throw InputError("--method must be zmethod, oracle or closed");
  const MatrixInput in = matrix_input(o);
  if (o.method == "closed" && !in.group) throw InputError("--method closed requires --group");
  const bool su3 = in.group && in.group->name == "su3";
  // SU(3) elements are exp(i W / 2)
  const Matrix x = su3 ? Matrix(Complex(0.0, 0.5) * in.a) : in.a;

  auto compute = [&](const std::string& method) -> Matrix {
    if (method == "oracle") return oracle::series_exp(x);
    if (method == "closed") return group_closed_exp(*in.group);
    return matrix_exp(x);
  };
  const Matrix e = compute(o.method);

  Result r;
  r.doc["command"] = "exp";
  Json echo = in.echo;
  echo["method"] = o.method;
  if (su3) echo["exponent"] = "i W / 2";
  r.doc["inputs"] = std::move(echo);
  Json out;
  out["exp"] = matrix_to_json(e);
  r.doc["outputs"] = std::move(out);

  Json diag = Json::object();
  if (o.method == "zmethod") diag["spectrum"] = spectrum_json(spectrum_of_relative(x, kNearDegenerate));
  if (o.check) {
    Json dev = Json::object();
    std::vector<std::string> others{"zmethod", "oracle"};
    if (in.group) others.push_back("closed");
    for (const std::string& m : others) {
      if (m == o.method) continue;
      const double d = max_abs(compute(m) - e);
      dev[m] = d;
      breach_if(r, d, tol * (1.0 + max_abs(e)), "deviation from " + m);
    }
    diag["max_abs_deviation"] = std::move(dev);
  }
  r.doc["diagnostics"] = std::move(diag);
  return r;
}

Result cmd_projectors(const Options& o) {
  const double tol = resolve_tol(o);
  if (o.method != "zmethod" && o.method != "closed")
    throw InputError("--method for projectors must be zmethod or closed");
  const MatrixInput in = matrix_input(o);
  if (o.method == "closed" && !(in.group && in.group->name == "lorentz"))
    throw InputError("closed-form projectors are available for --group lorentz only");
  const Matrix& a = in.a;
  const Eigen::Index n = a.rows();
  const Matrix I = Matrix::Identity(n, n);
  const Spectrum sp = spectrum_of_relative(a, tol);

  Result r;
  r.doc["command"] = "projectors";
  Json echo = in.echo;
  echo["method"] = o.method;
  r.doc["inputs"] = std::move(echo);
  Json out;
  out["spectrum"] = spectrum_json(sp);
  out["degenerate"] = !sp.is_simple();
  Json res;
  const double bound = tol * (1.0 + max_abs(a));

  if (sp.is_simple()) {
    ProjectorBasis z;
    if (o.method == "closed") {
      const auto c = lorentz_projectors(in.group->lorentz);
      const LorentzAux x = lorentz_aux(in.group->lorentz);
      const Complex lam[4] = {x.U, -x.U, x.V, -x.V};
      for (int k = 0; k < 4; ++k) z.push_back({lam[k], c[static_cast<std::size_t>(k)]});
    } else {
      z = projectors_product_form(a, sp);
    }
    Json list = Json::array();
    Matrix sum = Matrix::Zero(n, n);
    double idem = 0.0, orth = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Json e;
      e["eigenvalue"] = complex_to_json(z[i].eigenvalue);
      e["matrix"] = matrix_to_json(z[i].z);
      list.push_back(std::move(e));
      sum += z[i].z;
      idem = std::max(idem, max_abs(z[i].z * z[i].z - z[i].z));
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) orth = std::max(orth, max_abs(z[i].z * z[j].z));
    }
    out["projectors"] = std::move(list);
    res["idempotence"] = idem;
    res["completeness"] = max_abs(sum - I);
    res["orthogonality"] = orth;
    if (o.check) {
      breach_if(r, idem, bound, "idempotence residual");
      breach_if(r, max_abs(sum - I), bound, "completeness residual");
      breach_if(r, orth, bound, "orthogonality residual");
      if (o.method == "zmethod") {
        const ProjectorBasis zi = projectors_from_invariants(a, sp, char_poly_invariants(a));
        double d = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) d = std::max(d, max_abs(zi[i].z - z[i].z));
        res["invariant_form_deviation"] = d;
        breach_if(r, d, bound, "invariant-form deviation");
      }
    }
  } else {
    if (o.method == "closed") throw DegenerateSpectrum("closed-form projectors need four distinct roots");
    const std::vector<ConfluentTerm> basis = confluent_basis(a, sp);
    Json list = Json::array();
    Matrix sum = Matrix::Zero(n, n), recon = Matrix::Zero(n, n);
    for (const ConfluentTerm& t : basis) {
      Json e;
      e["root"] = complex_to_json(t.root);
      e["order"] = t.order;
      e["matrix"] = matrix_to_json(t.z);
      list.push_back(std::move(e));
      // f = 1 and f = identity reproduce I and A
      if (t.order == 0) {
        sum += t.z;
        recon += t.root * t.z;
      } else if (t.order == 1) {
        recon += t.z;
      }
    }
    out["confluent_basis"] = std::move(list);
    res["completeness"] = max_abs(sum - I);
    res["reconstruction"] = max_abs(recon - a);
    if (o.check) {
      breach_if(r, max_abs(sum - I), bound, "completeness residual");
      breach_if(r, max_abs(recon - a), bound, "reconstruction residual");
    }
  }
  r.doc["outputs"] = std::move(out);
  Json diag;
  diag["residuals"] = std::move(res);
  r.doc["diagnostics"] = std::move(diag);
  return r;
}

Result cmd_group(const Options& o) {
  const double tol = resolve_tol(o);
  if (o.group.empty()) throw InputError("group requires --group <lorentz|poincare|galilei|su3>");
  if (!o.matrix_path.empty()) throw InputError("group takes parameters, not --matrix");
  const GroupInput g = group_from_options(o);
  const Matrix a = group_algebra(g);
  const Matrix e = group_closed_exp(g);

  Result r;
  r.doc["command"] = "group";
  r.doc["inputs"] = group_echo(g);
  Json out;
  out["algebra"] = matrix_to_json(a);
  Json jphi = Json::array();
  for (const Complex& c : char_poly_invariants(a)) jphi.push_back(complex_to_json(c));
  out["invariants"] = std::move(jphi);

  auto vec = [](const auto& x) {
    Json j = Json::array();
    for (Eigen::Index k = 0; k < x.size(); ++k) j.push_back(x(k));
    return j;
  };
  if (g.name == "lorentz" || g.name == "poincare") {
    const LorentzAux x = lorentz_aux(g.lorentz);
    out["f1"] = x.f1;
    out["f2"] = x.f2;
    out["U"] = complex_to_json(x.U);
    out["V"] = complex_to_json(x.V);
    out["degenerate"] = lorentz_degenerate(x);
  }
  out["element"] = matrix_to_json(e);
  if (g.name == "poincare") {
    const PoincareSplit s = poincare_reparametrize(e.real());
    out["lambda"] = matrix_to_json(to_complex(s.lambda));
    out["translation"] = vec(s.a);
  } else if (g.name == "galilei") {
    const GalileiSplit s = galilei_reparametrize(e.real());
    out["angle"] = g.galilei.omega.norm();
    out["rotation"] = matrix_to_json(to_complex(s.r));
    out["velocity"] = vec(s.vprime);
    out["translation"] = vec(s.aprime);
    out["time_translation"] = s.a0;
  } else if (g.name == "su3") {
    const SU3Invariants inv = su3_invariants(g.su3);
    out["W_squared"] = matrix_to_json(su3_square_closed(g.su3));
    out["phi2"] = inv.phi2;
    out["phi3"] = inv.phi3;
  }
  r.doc["outputs"] = std::move(out);

  Json diag = Json::object();
  if (o.check) {
    const Matrix x = g.name == "su3" ? Matrix(Complex(0.0, 0.5) * a) : a;
    const double d = max_abs(oracle::series_exp(x) - e);
    diag["element_vs_series"] = d;
    breach_if(r, d, tol * (1.0 + max_abs(e)), "closed-form deviation");
  }
  r.doc["diagnostics"] = std::move(diag);
  return r;
}

// ------------------------------------------------------------------- chern

enum class Direction { to_characters, to_classes };

template <class S>
std::vector<S> convert(const std::vector<S>& seq, Direction d, const S& rank) {
  return d == Direction::to_characters ? characters_from_classes(seq, rank) : classes_from_characters(seq);
}

Result cmd_chern(const Options& o) {
  const double tol = resolve_tol(o);
  Json doc;
  std::string origin;
  if (!o.input_path.empty() && !o.sequence_text.empty()) throw InputError("give either --input or --sequence");
  if (!o.input_path.empty()) {
    doc = read_json_file(o.input_path);
    origin = o.input_path;
  } else if (!o.sequence_text.empty()) {
    doc = parse_json(o.sequence_text, "--sequence");
    origin = "--sequence";
  } else {
    throw InputError("chern requires --input <file.json> or --sequence <json array>");
  }
  if (doc.is_array()) doc = Json{{"sequence", doc}};
  if (!doc.is_object() || !doc.contains("sequence") || !doc["sequence"].is_array())
    throw InputError(origin + ": expected a \"sequence\" array");
  const Json& seq = doc["sequence"];
  if (seq.empty()) throw InsufficientCoefficients(origin + ": empty sequence");

  std::string dir = o.direction;
  if (dir.empty() && doc.contains("direction") && doc["direction"].is_string()) dir = doc["direction"].get<std::string>();
  Direction d;
  if (dir == "classes-to-characters")
    d = Direction::to_characters;
  else if (dir == "characters-to-classes")
    d = Direction::to_classes;
  else
    throw InputError("--direction must be classes-to-characters or characters-to-classes");

  int max_degree = FormPolynomial::kUnbounded;
  if (o.max_degree)
    max_degree = *o.max_degree;
  else if (doc.contains("max_degree"))
    max_degree = doc["max_degree"].get<int>();
  if (max_degree < FormPolynomial::kUnbounded) throw InputError("max_degree must be >= 0");

  const long long top = static_cast<long long>(seq.size()) - 1;
  long long rank = top;
  bool rank_assumed = false;
  if (o.rank)
    rank = *o.rank;
  else if (doc.contains("rank"))
    rank = doc["rank"].get<long long>();
  else
    rank_assumed = d == Direction::to_characters;
  if (rank < 0) throw InputError("rank must be non-negative");

  // Exact entries are integers or strings; floats and [re, im] pairs switch
  // to complex arithmetic.
  std::vector<std::string> names;
  bool exact = true;
  for (const Json& v : seq)
    if (!(v.is_number_integer() || v.is_string())) exact = false;

  Result r;
  r.doc["command"] = "chern";
  Json echo;
  echo["direction"] = dir;
  echo["sequence"] = seq;
  if (d == Direction::to_characters) echo["rank"] = rank;
  if (max_degree != FormPolynomial::kUnbounded) echo["max_degree"] = max_degree;
  r.doc["inputs"] = std::move(echo);
  Json out;
  Json diag = Json::object();
  out["arithmetic"] = exact ? "exact" : "complex";

  if (exact) {
    std::vector<RationalForm> in;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const Json& v = seq[k];
      if (v.is_number_integer())
        in.push_back(RationalForm(ExactRational(v.get<long long>()), max_degree));
      else
        in.push_back(parse_form(v.get<std::string>(), names, max_degree));
    }
    const RationalForm rk(ExactRational(rank), max_degree);
    const std::vector<RationalForm> res = convert(in, d, rk);
    Json list = Json::array();
    for (const RationalForm& f : res) list.push_back(f.to_string(names));
    out["sequence"] = std::move(list);
    if (o.check) {
      const Direction back = d == Direction::to_characters ? Direction::to_classes : Direction::to_characters;
      std::vector<RationalForm> again = convert(res, back, rk);
      // c_0 = 1 and ch_0 = rank are fixed by convention, not by the input
      again[0] = in[0];
      const bool same = again == in;
      diag["roundtrip_exact"] = same;
      if (!same) r.breach = "exact roundtrip does not reproduce the input";
    }
  } else {
    std::vector<FormPolynomial> in;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const Json& v = seq[k];
      if (v.is_string())
        in.push_back(parse_form(v.get<std::string>(), names, max_degree).to_numeric());
      else
        in.push_back(FormPolynomial(complex_from_json(v, origin + ": sequence[" + std::to_string(k) + "]"),
                                    max_degree));
    }
    const FormPolynomial rk(Complex(static_cast<double>(rank)), max_degree);
    const std::vector<FormPolynomial> res = convert(in, d, rk);
    Json list = Json::array();
    for (const FormPolynomial& f : res) {
      if (f.is_constant())
        list.push_back(complex_to_json(f.constant_term()));
      else
        list.push_back(format_numeric(f, names));
    }
    out["sequence"] = std::move(list);
    if (o.check) {
      const Direction back = d == Direction::to_characters ? Direction::to_classes : Direction::to_characters;
      const std::vector<FormPolynomial> again = convert(res, back, rk);
      double dev = 0.0, size = 0.0;
      for (std::size_t k = 1; k < in.size(); ++k) {
        dev = std::max(dev, FormPolynomial::distance(again[k], in[k]));
        size = std::max(size, FormPolynomial::distance(in[k], FormPolynomial()));
      }
      diag["roundtrip_residual"] = dev;
      breach_if(r, dev, tol * (1.0 + size), "roundtrip residual");
    }
  }
  if (!names.empty()) out["generators"] = names;
  if (rank_assumed) diag["note"] = "rank not given; ch_0 uses the sequence length minus one";
  r.doc["outputs"] = std::move(out);
  r.doc["diagnostics"] = std::move(diag);
  return r;
}

// ------------------------------------------------------------------ wiring

void add_matrix_options(CLI::App* sub, Options& o) {
  sub->add_option("--matrix", o.matrix_path, "Matrix document (JSON)");
  sub->add_option("--group", o.group, "lorentz, poincare, galilei or su3");
  sub->add_option("--omega", o.omega, "Rotation angles x,y,z")->delimiter(',');
  sub->add_option("--zeta", o.zeta, "Boost rapidities x,y,z")->delimiter(',');
  sub->add_option("--v", o.v, "Galilei boost velocity x,y,z")->delimiter(',');
  sub->add_option("--a", o.a, "Space translation x,y,z")->delimiter(',');
  sub->add_option("--a0", o.a0, "Time translation");
  sub->add_option("--alpha", o.alpha, "SU(3) coordinates a1,...,a8")->delimiter(',');
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_flag("--check", o.check, "Compare against independent evaluations");
  sub->add_option("--tol", o.tol, "Tolerance (overrides LIECLOSED_TOL, default 1e-8)");
  sub->add_option("--out", o.out_path, "Output file (default stdout)");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form invariants, eigenprojectors and exponentials for small Lie algebras"};
  app.require_subcommand(1);
  Options o;

  CLI::App* inv = app.add_subcommand("invariants", "Characteristic invariants, traces and determinant");
  add_matrix_options(inv, o);
  add_output_options(inv, o);

  CLI::App* ex = app.add_subcommand("exp", "Matrix exponential");
  add_matrix_options(ex, o);
  ex->add_option("--method", o.method, "zmethod, oracle or closed")->capture_default_str();
  add_output_options(ex, o);

  CLI::App* pr = app.add_subcommand("projectors", "Eigenprojectors or the confluent basis");
  add_matrix_options(pr, o);
  pr->add_option("--method", o.method, "zmethod or closed")->capture_default_str();
  add_output_options(pr, o);

  CLI::App* gr = app.add_subcommand("group", "Algebra element, invariants and closed-form group element");
  add_matrix_options(gr, o);
  add_output_options(gr, o);

  CLI::App* ch = app.add_subcommand("chern", "Convert between Chern classes and characters");
  ch->add_option("--input", o.input_path, "Sequence document (JSON)");
  ch->add_option("--sequence", o.sequence_text, "Inline JSON array of entries");
  ch->add_option("--direction", o.direction, "classes-to-characters or characters-to-classes");
  ch->add_option("--rank", o.rank, "Fiber dimension, ch_0");
  ch->add_option("--max-degree", o.max_degree, "Form degree above which products vanish");
  add_output_options(ch, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Result r;
    if (*inv)
      r = cmd_invariants(o);
    else if (*ex)
      r = cmd_exp(o);
    else if (*pr)
      r = cmd_projectors(o);
    else if (*gr)
      r = cmd_group(o);
    else
      r = cmd_chern(o);

    const std::string text = render(r.doc);
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw InputError("cannot write " + o.out_path);
      file << text;
    }
    if (!r.breach.empty()) {
      err << "check failed: " << r.breach << "\n";
      return 2;
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lieclosed::cli
