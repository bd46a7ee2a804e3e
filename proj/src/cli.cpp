#include "sparsetrace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sparsetrace/exponents.hpp"
#include "sparsetrace/oracle.hpp"
#include "sparsetrace/polytope.hpp"
#include "sparsetrace/random.hpp"
#include "sparsetrace/rational_matrix.hpp"
#include "sparsetrace/resultant.hpp"
#include "sparsetrace/univariate.hpp"

namespace sparsetrace {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- input

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // column of the first value character
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::pair<std::string, std::size_t>> split_items(const std::string& s, std::size_t column) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ',' && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start), column + start);
  }
  return out;
}

long parse_long(const std::string& s, std::size_t line, std::size_t column) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(line, column, "expected an integer, got '" + s + "'");
  }
}

Polynomial parse_entry_polynomial(const Entry& e, const std::vector<std::string>& vars) {
  try {
    return parse_polynomial(e.value, vars);
  } catch (const ParseError& err) {
    throw InputError(e.line, e.column + err.position(), std::string("invalid polynomial: ") + err.what());
  }
}

Point parse_point(const std::string& text, std::size_t line, std::size_t column, std::size_t n) {
  Point out;
  for (const auto& [item, col] : split_items(text, column)) out.push_back(parse_long(item, line, col));
  if (out.size() != n)
    throw InputError(line, column, "expected " + std::to_string(n) + " integers, got " + std::to_string(out.size()));
  return out;
}

RootSpec parse_root(const Entry& e, std::size_t n) {
  RootSpec r;
  std::string coords = e.value;
  std::size_t semi = coords.find(';');
  if (semi != std::string::npos) {
    std::string mult = trim(coords.substr(semi + 1));
    r.multiplicity = parse_long(mult, e.line, e.column + semi + 1);
    if (r.multiplicity < 1) throw InputError(e.line, e.column + semi + 1, "multiplicity must be positive");
    coords = coords.substr(0, semi);
  }
  for (const auto& [item, col] : split_items(coords, e.column)) {
    try {
      r.point.push_back(parse_rational(item));
    } catch (const ParseError&) {
      throw InputError(e.line, col, "invalid rational '" + item + "'");
    }
  }
  if (r.point.size() != n)
    throw InputError(e.line, e.column,
                     "root needs " + std::to_string(n) + " coordinates, got " + std::to_string(r.point.size()));
  return r;
}

// ---------------------------------------------------------------- json helpers

std::string frac(const Rational& r) { return to_fraction_string(r); }
std::string istr(const Integer& z) { return z.get_str(); }

json point_json(const Point& p) {
  json a = json::array();
  for (long v : p) a.push_back(v);
  return a;
}

json points_json(const std::vector<Point>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

json indices_json(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

json matrix_json(const IntegerMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(istr(m(i, j)));
    a.push_back(row);
  }
  return a;
}

bool up_to_sign(const Rational& a, const Rational& b) { return a == b || a == -b; }

// ---------------------------------------------------------------- job context

struct Job {
  const JobSpec& spec;
  const InputSystem& in;
  json doc;
  bool mismatch = false;

  Job(const JobSpec& s, const InputSystem& i) : spec(s), in(i) {}

  const std::string& backend() const { return spec.backend; }
  bool use_formula() const { return backend() != "oracle"; }
  bool use_oracle() const { return backend() == "auto" || backend() == "oracle"; }

  void reject_backend(const std::vector<std::string>& allowed) const {
    if (std::find(allowed.begin(), allowed.end(), backend()) == allowed.end())
      throw UsageError("backend '" + backend() + "' is not available for " + spec.command);
  }

  Polynomial flag_polynomial(const std::optional<std::string>& text, const std::optional<Polynomial>& from_file,
                             const char* name, std::optional<Polynomial> fallback = std::nullopt) const {
    if (text) {
      try {
        return parse_polynomial(*text, in.vars);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
      }
    }
    if (from_file) return *from_file;
    if (fallback) return *fallback;
    throw UsageError(std::string("missing '") + name + "' (use --" + name + " or a '" + name + ":' line)");
  }

  Polynomial p() const { return flag_polynomial(spec.p, in.p, "p"); }
  Polynomial q() const { return flag_polynomial(spec.q, in.q, "q", Polynomial::constant(in.vars.size(), 1)); }

  Point monomial() const {
    if (spec.monomial) {
      Point a;
      for (const auto& [item, col] : split_items(*spec.monomial, 1)) {
        try {
          std::size_t used = 0;
          a.push_back(std::stol(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw UsageError("--monomial: expected integers, got '" + item + "'");
        }
      }
      if (a.size() != in.vars.size()) throw UsageError("--monomial needs one exponent per variable");
      return a;
    }
    if (in.monomial) return *in.monomial;
    throw UsageError("missing monomial exponent (use --monomial or a 'monomial:' line)");
  }

  const std::vector<Polynomial>& system() const {
    if (in.f.empty()) throw UsageError("the input has no equations f1, f2, ...");
    if (in.f.size() != in.vars.size())
      throw UsageError("expected " + std::to_string(in.vars.size()) + " equations, got " + std::to_string(in.f.size()));
    return in.f;
  }

  bool polynomial_system() const {
    for (const auto& g : in.f)
      if (g.has_negative_exponents()) return false;
    return true;
  }

  std::string show(const Polynomial& g) const { return g.to_string(in.vars); }

  void record_check(const std::string& key, bool agrees) {
    doc[key] = agrees;
    if (!agrees) mismatch = true;
  }
};

// ---------------------------------------------------------------- formulas used by several commands

// X(T) = Res_{D,d}(q + T p, f); the trace is X'(0) / X(0).
TraceResult macaulay_trace(const Polynomial& p, const Polynomial& q, const std::vector<Polynomial>& f) {
  if (p.has_negative_exponents() || q.has_negative_exponents())
    throw DomainError("the macaulay backend needs polynomial p and q");
  long big_d = std::max<long>({p.is_zero() ? 0 : p.degree(), q.degree(), 0});
  long bezout = 1;
  for (const auto& g : f) {
    if (g.has_negative_exponents()) throw DomainError("the macaulay backend needs polynomial equations");
    bezout *= g.degree();
  }
  if (leading_forms_resultant(f) == 0) throw DegenerateError("the system has zeros at infinity");
  std::vector<Rational> nodes = interpolation_nodes(static_cast<std::size_t>(bezout) + 1), values;
  for (const auto& t : nodes) values.push_back(dense_resultant_with(q + p * t, big_d, f));
  TPencilPolynomial x = TPencilPolynomial::interpolate(nodes, values);
  TraceResult r;
  r.method = "macaulay";
  r.denominator = x.coefficient(0);
  r.numerator = x.coefficient(1);
  if (r.denominator == 0) throw ZeroDivisorError("q vanishes at a zero of the system");
  r.value = r.numerator / r.denominator;
  r.d = Integer(bezout);
  return r;
}

Rational dense_residue_of(const Polynomial& h, const std::vector<Polynomial>& f) {
  Rational total = 0;
  for (const auto& [e, c] : h.terms()) total += c * dense_residue(e, f).value;
  return total;
}

struct CheckOutcome {
  std::string status;  // agree, mismatch, skipped
  std::string detail;
  json values = json::object();
};

// ---------------------------------------------------------------- commands

void cmd_trace(Job& job) {
  job.reject_backend({"auto", "ce", "macaulay", "oracle"});
  const auto& f = job.system();
  Polynomial p = job.p(), q = job.q();
  job.doc["p"] = job.show(p);
  job.doc["q"] = job.show(q);
  std::optional<Rational> formula;
  std::optional<std::size_t> expected;
  if (job.backend() == "macaulay") {
    TraceResult r = macaulay_trace(p, q, f);
    formula = r.value;
    job.doc["method"] = r.method;
    job.doc["d"] = istr(*r.d);
  } else if (job.use_formula()) {
    TraceResult r = trace_sparse(p, q, f, {job.spec.seed, false});
    formula = r.value;
    job.doc["method"] = r.method;
    if (r.e) job.doc["e"] = istr(*r.e);
    if (r.d) {
      job.doc["d"] = istr(*r.d);
      expected = static_cast<std::size_t>(r.d->get_ui());
    }
    if (r.index) job.doc["index"] = istr(*r.index);
    job.doc["essential"] = indices_json(r.essential);
    job.doc["numerator"] = frac(r.numerator);
    job.doc["denominator"] = frac(r.denominator);
  }
  if (formula) job.doc["value"] = frac(*formula);
  if (job.use_oracle()) {
    OracleTrace o = trace_oracle_for_system(p, q, f, expected);
    job.doc["oracle_value"] = frac(o.value);
    job.doc["oracle_algebra"] = o.algebra;
    job.doc["oracle_dimension"] = o.dimension;
    if (!formula) {
      job.doc["method"] = "oracle";
      job.doc["value"] = frac(o.value);
    } else {
      job.record_check("oracle_agrees", o.value == *formula);
    }
  }
}

void cmd_chow_trace(Job& job) {
  job.reject_backend({"auto", "oracle"});
  if (job.in.roots.empty()) throw UsageError("chow-trace needs 'root:' lines");
  long degree = 1;
  Polynomial p = job.p(), q = job.q();
  if (job.in.degree) {
    degree = *job.in.degree;
  } else {
    degree = std::max<long>(p.is_zero() ? 0 : p.degree(), q.degree());
    degree = std::max<long>(degree, 1);
  }
  job.doc["p"] = job.show(p);
  job.doc["q"] = job.show(q);
  job.doc["degree"] = degree;
  Rational direct = 0;
  std::size_t total = 0;
  for (const auto& r : job.in.roots) {
    Rational qv = q.evaluate(r.point);
    if (qv == 0) throw ZeroDivisorError("q vanishes at a root");
    direct += r.multiplicity * p.evaluate(r.point) / qv;
    total += static_cast<std::size_t>(r.multiplicity);
  }
  job.doc["roots"] = total;
  if (job.backend() == "oracle") {
    job.doc["method"] = "root-sum";
    job.doc["value"] = frac(direct);
    return;
  }
  ChowForm ch = chowform_from_roots(job.in.roots, degree);
  TraceResult r = trace_from_chowform(ch, p, q);
  job.doc["method"] = r.method;
  job.doc["value"] = frac(r.value);
  job.doc["chow_variables"] = ch.alphas.size();
  job.doc["root_sum"] = frac(direct);
  job.record_check("oracle_agrees", r.value == direct);
}

void cmd_residue(Job& job) {
  job.reject_backend({"auto", "macaulay", "oracle"});
  const auto& f = job.system();
  Polynomial h = job.p();
  job.doc["h"] = job.show(h);
  std::optional<Rational> formula;
  if (job.use_formula()) {
    formula = dense_residue_of(h, f);
    job.doc["method"] = "dense-resultant";
    job.doc["value"] = frac(*formula);
  }
  if (job.use_oracle()) {
    Rational o = global_residue_oracle(h, f);
    job.doc["oracle_value"] = frac(o);
    if (!formula) {
      job.doc["method"] = "oracle";
      job.doc["value"] = frac(o);
    } else {
      job.record_check("oracle_agrees", o == *formula);
    }
  }
}

void cmd_torus_residue(Job& job) {
  job.reject_backend({"auto", "ce", "oracle"});
  const auto& f = job.system();
  Polynomial p = job.p();
  job.doc["p"] = job.show(p);
  std::optional<Rational> formula;
  if (job.use_formula()) {
    Polynomial jt = toric_jacobian(f);
    TraceResult r = trace_sparse(p, jt, f, {job.spec.seed, false});
    formula = r.value;
    job.doc["method"] = r.method;
    job.doc["toric_jacobian"] = job.show(jt);
    job.doc["value"] = frac(r.value);
  }
  if (job.use_oracle()) {
    Rational o = torus_residue_oracle(p, f);
    job.doc["oracle_value"] = frac(o);
    if (!formula) {
      job.doc["method"] = "oracle";
      job.doc["value"] = frac(o);
    } else {
      job.record_check("oracle_agrees", o == *formula);
    }
  }
}

std::vector<Polynomial> resultant_polys(const Job& job) {
  if (!job.in.f0) throw UsageError("resultant needs an 'f0:' line");
  if (job.in.f.size() != job.in.vars.size())
    throw UsageError("resultant needs f0 and " + std::to_string(job.in.vars.size()) + " further equations");
  std::vector<Polynomial> polys{*job.in.f0};
  polys.insert(polys.end(), job.in.f.begin(), job.in.f.end());
  return polys;
}

void cmd_resultant(Job& job) {
  job.reject_backend({"auto", "ce", "macaulay"});
  std::vector<Polynomial> polys = resultant_polys(job);
  bool polynomial = true;
  std::vector<long> degrees;
  for (const auto& g : polys) {
    if (g.has_negative_exponents()) polynomial = false;
    degrees.push_back(g.is_zero() ? 0 : g.degree());
  }
  json deg = json::array();
  for (long d : degrees) deg.push_back(d);
  if (job.backend() == "macaulay") {
    if (!polynomial) throw DomainError("the macaulay backend needs polynomial equations");
    job.doc["method"] = "macaulay";
    job.doc["degrees"] = deg;
    job.doc["value"] = frac(macaulay_resultant(degrees, polys));
    return;
  }
  ResultantProblem pr = problem_from_polynomials(polys);
  Rational value = ce_resultant(pr, job.spec.seed);
  job.doc["method"] = "canny-emiris";
  job.doc["value"] = frac(value);
  EssentialResult ess = essential_subfamily(pr.supports);
  if (ess.status == EssentialStatus::unique) job.doc["essential"] = indices_json(ess.indices);
  if (job.backend() == "auto" && polynomial) {
    // Cross-check the sparse construction against Macaulay on full simplices of the same degrees.
    ResultantProblem dense;
    const std::size_t k = job.in.vars.size();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      Support simplex;
      for (const auto& e : monomials_up_to(k, degrees[i]))
        if (total_degree(e) <= degrees[i]) simplex.push_back(e);
      dense.supports.push_back(make_support(simplex));
      dense.polys.push_back(polys[i]);
    }
    Rational sparse_dense = ce_resultant(dense, job.spec.seed);
    Rational mac = macaulay_resultant(degrees, polys);
    job.doc["degrees"] = deg;
    job.doc["dense_sparse_value"] = frac(sparse_dense);
    job.doc["macaulay_value"] = frac(mac);
    job.record_check("macaulay_agrees", up_to_sign(sparse_dense, mac));
  }
}

void cmd_mixed_volume(Job& job) {
  job.reject_backend({"auto", "ce", "oracle"});
  const auto& f = job.system();
  std::vector<Support> supports;
  for (const auto& g : f) supports.push_back(g.support());
  Integer mv = mixed_volume(supports);
  job.doc["method"] = "mixed-subdivision";
  job.doc["value"] = istr(mv);
  if (!job.use_oracle()) return;
  // Bernstein: a system with generic coefficients on these supports has MV zeros in the torus.
  std::mt19937_64 rng(job.spec.seed);
  std::string last_error;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Polynomial> generic;
    for (const auto& s : supports) generic.push_back(random_polynomial(s, rng));
    try {
      QuotientAlgebra a = torus_algebra(generic);
      job.doc["oracle_dimension"] = a.dimension();
      job.record_check("oracle_agrees", Integer(static_cast<unsigned long>(a.dimension())) == mv);
      return;
    } catch (const DegenerateError& e) {
      last_error = e.what();
    }
  }
  if (mv == 0) {
    job.doc["oracle_dimension"] = 0;
    job.record_check("oracle_agrees", true);
    return;
  }
  throw DegenerateError("oracle: " + last_error);
}

void cmd_facets(Job& job) {
  job.reject_backend({"auto", "ce"});
  const auto& f = job.system();
  std::vector<Support> supports;
  for (const auto& g : f) supports.push_back(g.support());
  Support sum = minkowski_sum(supports);
  Hull hull = convex_hull(sum);
  job.doc["vertices"] = points_json(hull.vertices);
  json facets = json::array();
  for (const auto& facet : facets_of_sum(supports)) {
    json row;
    row["normal"] = point_json(facet.normal);
    row["offset"] = facet.offset;
    json faces = json::array();
    for (const auto& s : supports) faces.push_back(points_json(face_data(s, facet.normal).first));
    row["faces"] = faces;
    try {
      row["resultant"] = frac(facet_resultant(supports, f, facet.normal, job.spec.seed));
    } catch (const DegenerateError& e) {
      row["resultant_error"] = e.what();
    }
    facets.push_back(row);
  }
  job.doc["method"] = "minkowski-facets";
  job.doc["facets"] = facets;
}

void cmd_denominator(Job& job) {
  job.reject_backend({"auto", "ce"});
  const auto& f = job.system();
  Point a = job.monomial();
  Polynomial q = job.q();
  DenominatorFactorization df = denominator_factorization(a, q, f, job.spec.seed);
  job.doc["method"] = "facet-factorization";
  job.doc["a"] = point_json(df.a);
  job.doc["q"] = job.show(q);
  job.doc["a_prime"] = points_json(df.a_prime);
  job.doc["essential"] = indices_json(df.essential);
  job.doc["base_value"] = frac(df.base_value);
  job.doc["base_exponent"] = istr(df.base_exponent);
  json facets = json::array();
  for (const auto& ff : df.facets) {
    json row;
    row["normal"] = point_json(ff.normal);
    row["mu"] = ff.mu;
    row["exponent"] = istr(ff.exponent);
    row["exponent_ambient"] = istr(ff.exponent_ambient);
    row["trivial_face"] = ff.trivial_face;
    if (ff.mu > 0) row["value"] = frac(ff.value);
    facets.push_back(row);
  }
  job.doc["facets"] = facets;
  job.doc["chart_basis"] = matrix_json(df.chart_basis);
  job.doc["chart_is_ambient"] = df.chart_is_ambient;
  job.doc["product"] = frac(df.product);
  job.doc["product_ambient"] = frac(df.product_ambient);
  job.doc["resultant"] = frac(df.resultant);
  job.doc["matches_ambient"] = df.matches_ambient;
  if (job.backend() == "auto") job.record_check("matches", df.matches);
  else job.doc["matches"] = df.matches;
}

void cmd_compare_denominators(Job& job) {
  job.reject_backend({"auto"});
  const auto& f = job.system();
  Point a = job.monomial();
  DenominatorComparison cmp = compare_denominators(a, f);
  ResidueDenominator classical = residue_denominator_classical(a, f);
  job.doc["method"] = "exponent-comparison";
  job.doc["a"] = point_json(a);
  json rows = json::array();
  for (const auto& r : cmp.rows) {
    json row;
    row["normal"] = point_json(r.normal);
    row["a_dot_omega"] = r.a_dot_omega;
    row["refined"] = istr(r.refined);
    row["classical"] = istr(r.classical);
    rows.push_back(row);
  }
  job.doc["rows"] = rows;
  job.doc["shifts"] = points_json(classical.shifts);
  job.doc["lattice_point_supports"] = classical.lattice_point_supports;
  job.doc["total_refined"] = istr(cmp.total_refined);
  job.doc["total_classical"] = istr(cmp.total_classical);
  job.doc["refined_le_classical"] = cmp.refined_le_classical;
  job.doc["strict_where_expected"] = cmp.strict_where_expected;
}

// Hermite: the trace form on the quotient algebra is nondegenerate iff the algebra is reduced.
Rational trace_form_determinant(const QuotientAlgebra& a) {
  const auto& basis = a.monomial_basis();
  const std::size_t n = basis.size();
  std::map<Exponent, Rational> cache;
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Exponent e = basis[i];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[j][v];
      auto it = cache.find(e);
      if (it == cache.end()) it = cache.emplace(e, a.mult_matrix(Polynomial::monomial(e)).trace()).first;
      m(i, j) = m(j, i) = it->second;
    }
  return determinant(m);
}

void cmd_discriminant(Job& job) {
  job.reject_backend({"auto", "macaulay"});
  const auto& f = job.system();
  Rational disc = discriminant_dense(f);
  job.doc["method"] = "jacobian-resultant";
  job.doc["value"] = frac(disc);
  job.doc["leading_forms_resultant"] = frac(leading_forms_resultant(f));
  if (job.backend() != "auto") return;
  try {
    QuotientAlgebra a = affine_algebra(f);
    Rational det = trace_form_determinant(a);
    job.doc["oracle_dimension"] = a.dimension();
    job.doc["trace_form_determinant"] = frac(det);
    job.record_check("oracle_agrees", (disc == 0) == (det == 0));
  } catch (const DegenerateError& e) {
    // No affine zeros: nothing to compare.
    job.doc["oracle_note"] = e.what();
  }
}

void cmd_euler_jacobi(Job& job) {
  job.reject_backend({"auto", "oracle"});
  const auto& f = job.system();
  EulerJacobiReport r = euler_jacobi_check(f);
  job.doc["method"] = "oracle";
  job.doc["rho"] = std::to_string(r.rho);
  job.doc["all_below_rho_zero"] = r.all_below_rho_zero;
  bool all_agree = true;
  auto entries = [&](const std::vector<EulerJacobiReport::Entry>& list) {
    json a = json::array();
    for (const auto& e : list) {
      json row;
      row["beta"] = point_json(e.beta);
      row["residue"] = frac(e.residue);
      if (job.backend() == "auto") {
        Rational dense = dense_residue(e.beta, f).value;
        row["dense_residue"] = frac(dense);
        if (dense != e.residue) all_agree = false;
      }
      a.push_back(row);
    }
    return a;
  };
  job.doc["below_rho"] = entries(r.below_rho);
  job.doc["at_rho"] = entries(r.at_rho);
  if (job.backend() == "auto") job.record_check("oracle_agrees", all_agree);
}

void cmd_verify(Job& job) {
  job.reject_backend({"auto"});
  const auto& f = job.system();
  json checks = json::array();
  bool any_mismatch = false;
  auto run = [&](const std::string& name, const std::function<CheckOutcome()>& body) {
    json row;
    row["name"] = name;
    CheckOutcome out;
    try {
      out = body();
    } catch (const DegenerateError& e) {
      out.status = "skipped";
      out.detail = std::string("degenerate: ") + e.what();
    } catch (const DomainError& e) {
      out.status = "skipped";
      out.detail = std::string("not applicable: ") + e.what();
    } catch (const UnsupportedError& e) {
      out.status = "skipped";
      out.detail = std::string("unsupported: ") + e.what();
    }
    row["status"] = out.status;
    if (!out.detail.empty()) row["detail"] = out.detail;
    for (auto it = out.values.begin(); it != out.values.end(); ++it) row[it.key()] = it.value();
    if (out.status == "mismatch") any_mismatch = true;
    checks.push_back(row);
  };
  Polynomial p = job.in.p ? job.p() : Polynomial::constant(job.in.vars.size(), 1);
  Polynomial q = job.q();
  std::vector<Support> supports;
  for (const auto& g : f) supports.push_back(g.support());
  Integer mv = mixed_volume(supports);

  run("trace", [&] {
    TraceResult r = trace_sparse(p, q, f, {job.spec.seed, false});
    std::optional<std::size_t> expected;
    if (r.d) expected = static_cast<std::size_t>(r.d->get_ui());
    OracleTrace o = trace_oracle_for_system(p, q, f, expected);
    CheckOutcome c{o.value == r.value ? "agree" : "mismatch", "", json::object()};
    c.values["formula"] = frac(r.value);
    c.values["oracle"] = frac(o.value);
    return c;
  });
  run("trace-macaulay", [&] {
    TraceResult r = macaulay_trace(p, q, f);
    Rational o = trace_oracle(p, q, affine_algebra(f));
    CheckOutcome c{o == r.value ? "agree" : "mismatch", "", json::object()};
    c.values["formula"] = frac(r.value);
    c.values["oracle"] = frac(o);
    return c;
  });
  run("torus-residue", [&] {
    TraceResult r = trace_sparse(p, toric_jacobian(f), f, {job.spec.seed, false});
    Rational o = torus_residue_oracle(p, f);
    CheckOutcome c{o == r.value ? "agree" : "mismatch", "", json::object()};
    c.values["formula"] = frac(r.value);
    c.values["oracle"] = frac(o);
    return c;
  });
  run("residue", [&] {
    if (!job.polynomial_system() || p.has_negative_exponents()) throw DomainError("needs polynomial input");
    Rational r = dense_residue_of(p, f);
    Rational o = global_residue_oracle(p, f);
    CheckOutcome c{o == r ? "agree" : "mismatch", "", json::object()};
    c.values["formula"] = frac(r);
    c.values["oracle"] = frac(o);
    return c;
  });
  run("bernstein", [&] {
    std::mt19937_64 rng(job.spec.seed);
    std::vector<Polynomial> generic;
    for (const auto& s : supports) generic.push_back(random_polynomial(s, rng));
    QuotientAlgebra a = torus_algebra(generic);
    bool ok = Integer(static_cast<unsigned long>(a.dimension())) == mv;
    CheckOutcome c{ok ? "agree" : "mismatch", "", json::object()};
    c.values["mixed_volume"] = istr(mv);
    c.values["oracle_dimension"] = a.dimension();
    return c;
  });
  run("euler-jacobi", [&] {
    if (!job.polynomial_system()) throw DomainError("needs polynomial equations");
    EulerJacobiReport r = euler_jacobi_check(f);
    bool ok = r.all_below_rho_zero;
    for (const auto& e : r.at_rho) ok = ok && dense_residue(e.beta, f).value == e.residue;
    CheckOutcome c{ok ? "agree" : "mismatch", "", json::object()};
    c.values["rho"] = std::to_string(r.rho);
    return c;
  });
  run("discriminant", [&] {
    if (!job.polynomial_system()) throw DomainError("needs polynomial equations");
    Rational disc = discriminant_dense(f);
    Rational det = trace_form_determinant(affine_algebra(f));
    CheckOutcome c{(disc == 0) == (det == 0) ? "agree" : "mismatch", "", json::object()};
    c.values["discriminant"] = frac(disc);
    c.values["trace_form_determinant"] = frac(det);
    return c;
  });
  job.doc["method"] = "verify";
  job.doc["mixed_volume"] = istr(mv);
  job.doc["checks"] = checks;
  job.record_check("all_agree", !any_mismatch);
}

using Handler = void (*)(Job&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"trace", cmd_trace},
      {"chow-trace", cmd_chow_trace},
      {"residue", cmd_residue},
      {"torus-residue", cmd_torus_residue},
      {"resultant", cmd_resultant},
      {"mixed-volume", cmd_mixed_volume},
      {"facets", cmd_facets},
      {"denominator", cmd_denominator},
      {"compare-denominators", cmd_compare_denominators},
      {"discriminant", cmd_discriminant},
      {"euler-jacobi", cmd_euler_jacobi},
      {"verify", cmd_verify},
  };
  return table;
}

json error_document(const JobSpec& spec, const std::string& kind, const std::string& message) {
  json doc;
  doc["command"] = spec.command;
  doc["error"] = {{"kind", kind}, {"message", message}};
  return doc;
}

}  // namespace

InputSystem parse_input(std::string_view text) {
  std::vector<Entry> entries;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = line.find(':');
    std::size_t first = line.find_first_not_of(" \t");
    if (colon == std::string::npos) throw InputError(line_no, first + 1, "expected 'key: value'");
    Entry e;
    e.key = trim(line.substr(0, colon));
    std::size_t vstart = colon + 1;
    while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
    e.value = trim(line.substr(vstart));
    e.line = line_no;
    e.column = vstart + 1;
    if (e.key.empty()) throw InputError(line_no, first + 1, "missing key before ':'");
    entries.push_back(std::move(e));
    if (end == text.size()) break;
  }

  InputSystem out;
  const Entry* vars = nullptr;
  for (const auto& e : entries)
    if (e.key == "vars") {
      if (vars) throw InputError(e.line, 1, "duplicate 'vars' line");
      vars = &e;
    }
  if (!vars) throw InputError(entries.empty() ? 1 : entries.front().line, 1, "missing 'vars:' line");
  for (const auto& [name, col] : split_items(vars->value, vars->column)) {
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
      throw InputError(vars->line, col, "invalid variable name '" + name + "'");
    if (std::find(out.vars.begin(), out.vars.end(), name) != out.vars.end())
      throw InputError(vars->line, col, "duplicate variable '" + name + "'");
    out.vars.push_back(name);
  }
  if (out.vars.empty()) throw InputError(vars->line, vars->column, "no variables given");
  const std::size_t n = out.vars.size();

  std::map<std::size_t, Polynomial> fs;
  std::set<std::string> seen;
  for (const auto& e : entries) {
    if (e.key == "vars") continue;
    bool repeatable = e.key == "root";
    if (!repeatable && !seen.insert(e.key).second) throw InputError(e.line, 1, "duplicate key '" + e.key + "'");
    if (e.key == "p") {
      out.p = parse_entry_polynomial(e, out.vars);
    } else if (e.key == "q") {
      out.q = parse_entry_polynomial(e, out.vars);
    } else if (e.key == "root") {
      out.roots.push_back(parse_root(e, n));
    } else if (e.key == "degree") {
      out.degree = parse_long(e.value, e.line, e.column);
      if (*out.degree < 1) throw InputError(e.line, e.column, "degree must be positive");
    } else if (e.key == "monomial") {
      out.monomial = parse_point(e.value, e.line, e.column, n);
    } else if (e.key.size() >= 2 && e.key[0] == 'f' &&
               std::all_of(e.key.begin() + 1, e.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t idx = std::stoul(e.key.substr(1));
      Polynomial g = parse_entry_polynomial(e, out.vars);
      if (idx == 0) out.f0 = g;
      else fs.emplace(idx, g);
    } else {
      throw InputError(e.line, 1, "unknown key '" + e.key + "'");
    }
  }
  std::size_t expect = 1;
  for (auto& [idx, g] : fs) {
    if (idx != expect) throw InputError(1, 1, "equations must be numbered f1, f2, ... without gaps (missing f" +
                                                  std::to_string(expect) + ")");
    out.f.push_back(std::move(g));
    ++expect;
  }
  return out;
}

InputSystem load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

JobResult run_job(const JobSpec& spec, const InputSystem& input) {
  auto it = handlers().find(spec.command);
  if (it == handlers().end()) throw UsageError("unknown command '" + spec.command + "'");
  static const std::vector<std::string> backends = {"auto", "macaulay", "ce", "oracle"};
  if (std::find(backends.begin(), backends.end(), spec.backend) == backends.end())
    throw UsageError("unknown backend '" + spec.backend + "'");
  Job job(spec, input);
  job.doc["command"] = spec.command;
  job.doc["backend"] = spec.backend;
  job.doc["seed"] = spec.seed;
  job.doc["vars"] = input.vars;
  it->second(job);
  return {job.doc, job.mismatch ? kExitMismatch : kExitOk};
}

JobResult run_job(const JobSpec& spec) {
  if (spec.input.empty()) throw UsageError("--input is required");
  return run_job(spec, load_input(spec.input));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact traces, residues and sparse resultants of polynomial systems", "sparsetrace"};
  JobSpec spec;
  app.add_option("command", spec.command, "Computation to run")->required()->check(CLI::IsMember(cli_commands()));
  app.add_option("--input,-i", spec.input, "System description file")->required();
  app.add_option("--seed", spec.seed, "Seed for the random choices (lifting, perturbations)");
  app.add_option("--backend", spec.backend, "Computation backend")
      ->check(CLI::IsMember({"auto", "macaulay", "ce", "oracle"}));
  app.add_flag("--json", "Emit JSON (the only output format)");
  std::string p, q, monomial;
  auto* p_opt = app.add_option("--p", p, "Numerator polynomial p");
  auto* q_opt = app.add_option("--q", q, "Denominator polynomial q");
  auto* m_opt = app.add_option("--monomial", monomial, "Monomial exponent a1,...,ak");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (*p_opt) spec.p = p;
  if (*q_opt) spec.q = q;
  if (*m_opt) spec.monomial = monomial;

  json doc;
  int code = kExitOk;
  try {
    JobResult r = run_job(spec);
    doc = std::move(r.document);
    code = r.exit_code;
    if (code == kExitMismatch) err << "sparsetrace: formula and oracle disagree\n";
  } catch (const DegenerateError& e) {
    doc = error_document(spec, "degenerate", e.what());
    code = kExitDegenerate;
  } catch (const InputError& e) {
    doc = error_document(spec, "parse", e.what());
    doc["error"]["line"] = e.line();
    doc["error"]["column"] = e.column();
    code = kExitUsage;
  } catch (const Error& e) {
    doc = error_document(spec, "usage", e.what());
    code = kExitUsage;
  }
  if (code == kExitDegenerate || code == kExitUsage) err << "sparsetrace: " << doc["error"]["message"].get<std::string>() << "\n";
  out << doc.dump(2) << "\n";
  return code;
}

}  // namespace sparsetrace
