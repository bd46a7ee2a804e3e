#include "sparsetrace/traceform.hpp"

#include <algorithm>
#include <random>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/polytope.hpp"
#include "sparsetrace/resultant.hpp"

namespace sparsetrace {

namespace {

Rational power(const Rational& x, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

Rational power(const Rational& x, const Integer& e) {
  if (e < 0) throw DomainError("negative exponent");
  if (x == 0) return e == 0 ? Rational(1) : Rational(0);
  Rational out = 1, base = x;
  Integer n = e;
  while (n > 0) {
    if (n % 2 == 1) out *= base;
    n /= 2;
    if (n > 0) base *= base;
  }
  return out;
}

Point translate(const Point& p, const Point& by) {
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - by[i];
  return r;
}

void check_square_system(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("empty system");
  const std::size_t k = f.size();
  for (const auto& g : f) {
    if (g.arity() != k) throw DomainError("a system of k polynomials in k variables is required");
    if (g.is_zero()) throw DegenerateError("zero polynomial in the system");
  }
}

std::vector<Support> supports_of(const std::vector<Polynomial>& f) {
  std::vector<Support> out;
  for (const auto& g : f) out.push_back(g.support());
  return out;
}

Polynomial power(const Polynomial& f, long e) {
  Polynomial r = Polynomial::constant(f.arity(), 1);
  for (long i = 0; i < e; ++i) r *= f;
  return r;
}

}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t n, long d) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto& self, std::size_t i, long left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (long a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::size_t ChowForm::variable_index(const Exponent& alpha) const {
  auto it = std::lower_bound(alphas.begin(), alphas.end(), alpha, GrlexLess{});
  if (it == alphas.end() || *it != alpha) throw DomainError("monomial degree exceeds the Chow form degree bound");
  return static_cast<std::size_t>(it - alphas.begin());
}

std::vector<Rational> ChowForm::coefficients_of(const Polynomial& g) const {
  if (!g.is_zero() && g.arity() != arity) throw DomainError("polynomial arity does not match the Chow form");
  std::vector<Rational> u(alphas.size(), Rational(0));
  for (const auto& [e, c] : g.terms()) {
    for (long x : e)
      if (x < 0) throw DomainError("Chow forms take polynomials, not Laurent polynomials");
    u[variable_index(e)] = c;
  }
  return u;
}

Rational ChowForm::evaluate(const Polynomial& g) const { return form.evaluate(coefficients_of(g)); }

ChowForm chowform_from_roots(const std::vector<RootSpec>& roots, long d) {
  if (d < 1) throw DomainError("Chow form degree bound must be positive");
  if (roots.empty()) throw DomainError("no roots given");
  ChowForm ch;
  ch.degree_bound = d;
  ch.arity = roots.front().point.size();
  ch.alphas = monomials_up_to(ch.arity, d);
  const std::size_t nu = ch.alphas.size();
  ch.form = Polynomial::constant(nu, 1);
  for (const auto& r : roots) {
    if (r.point.size() != ch.arity) throw DomainError("roots must share one dimension");
    if (r.multiplicity < 1) throw DomainError("multiplicities must be positive");
    Polynomial lin(nu);
    for (std::size_t j = 0; j < nu; ++j) {
      Rational v = 1;
      for (std::size_t i = 0; i < ch.arity; ++i) v *= power(r.point[i], ch.alphas[j][i]);
      Exponent u(nu, 0);
      u[j] = 1;
      lin.add_term(u, v);
    }
    ch.form *= power(lin, r.multiplicity);
  }
  return ch;
}

std::vector<Polynomial> ideal_from_roots(const std::vector<RootSpec>& roots) {
  if (roots.empty()) throw DomainError("no roots given");
  const std::size_t n = roots.front().point.size();
  if (n != 1 && n != 2) throw UnsupportedError("ideals from roots are built for one or two variables");
  Polynomial x = Polynomial::variable(n, 0);
  Polynomial f1 = Polynomial::constant(n, 1);
  for (const auto& r : roots) {
    if (r.point.size() != n) throw DomainError("roots must share one dimension");
    f1 *= power(x - Polynomial::constant(n, r.point[0]), r.multiplicity);
  }
  if (n == 1) return {f1};
  Polynomial h(n);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Polynomial term = Polynomial::constant(n, roots[i].point[1]);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      Rational gap = roots[i].point[0] - roots[j].point[0];
      if (gap == 0) throw DomainError("roots must have distinct first coordinates");
      term *= (x - Polynomial::constant(n, roots[j].point[0])) * (1 / gap);
    }
    h += term;
  }
  return {f1, Polynomial::variable(n, 1) - h};
}

TraceResult trace_from_chowform(const ChowForm& ch, const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> u = ch.coefficients_of(q);
  TraceResult r;
  r.method = "chowform";
  r.denominator = ch.form.evaluate(u);
  if (r.denominator == 0) throw ZeroDivisorError("Chow form vanishes at q: q is a zero divisor");
  ch.coefficients_of(p);  // validates p
  for (const auto& [e, c] : p.terms())
    r.numerator += c * ch.form.derivative(ch.variable_index(e)).evaluate(u);
  r.value = r.numerator / r.denominator;
  return r;
}

TraceResult trace_sparse(const Polynomial& p, const Polynomial& q, const std::vector<Polynomial>& f,
                         const TraceOptions& options) {
  check_square_system(f);
  const std::size_t k = f.size();
  if (q.is_zero()) throw ZeroDivisorError("q = 0");
  if (q.arity() != k || (!p.is_zero() && p.arity() != k)) throw DomainError("p and q must have the system's arity");
  ResultantProblem pr;
  pr.supports.push_back(support_union(p.support(), q.support()));
  pr.polys.push_back(Polynomial(k));
  for (const auto& g : f) {
    pr.supports.push_back(g.support());
    pr.polys.push_back(g);
  }
  EssentialResult ess = essential_subfamily(pr.supports);
  if (ess.status != EssentialStatus::unique) throw DegenerateError("the supports have no unique essential subfamily");
  TraceResult r;
  r.method = "sparse-resultant";
  r.essential = ess.indices;
  LatticeIndex idx = lattice_index(IntegerLattice::full(k), difference_lattice(pr.supports));
  if (idx.infinite) throw DegenerateError("L(A_0, ..., A_k) is not of full rank");
  r.e = exponent_e(pr.supports);
  r.index = idx.value;
  r.d = idx.value * *r.e;
  std::mt19937_64 rng(options.seed);
  TPencilPolynomial x = resultant_pencil(pr, q, p, rng, options.normalize);
  r.denominator = x.coefficient(0);
  if (r.denominator == 0) throw ZeroDivisorError("Res(q, f) = 0: q vanishes at a zero of the system");
  r.numerator = Rational(*r.d) * x.coefficient(1);
  r.value = r.numerator / r.denominator;
  return r;
}

OracleTrace trace_oracle_for_system(const Polynomial& p, const Polynomial& q, const std::vector<Polynomial>& f,
                                    std::optional<std::size_t> expected_dimension) {
  std::optional<QuotientAlgebra> torus;
  std::string torus_error;
  try {
    torus.emplace(torus_algebra(f));
  } catch (const DegenerateError& e) {
    torus_error = e.what();
  }
  bool torus_ok = torus && (!expected_dimension || torus->dimension() >= *expected_dimension);
  auto from = [&](const QuotientAlgebra& a) {
    return OracleTrace{trace_oracle(p, q, a), a.kind_name(), a.dimension()};
  };
  if (torus_ok) return from(*torus);
  bool polynomial = !p.has_negative_exponents() && !q.has_negative_exponents();
  for (const auto& g : f) polynomial = polynomial && !g.has_negative_exponents();
  if (polynomial && (expected_dimension || !torus)) {
    try {
      QuotientAlgebra affine = affine_algebra(f);
      if (!expected_dimension || affine.dimension() == *expected_dimension) return from(affine);
    } catch (const DegenerateError&) {
    }
  }
  if (torus) return from(*torus);
  throw DegenerateError("oracle: " + torus_error);
}

DenominatorFactorization denominator_factorization(const Point& a, const Polynomial& q,
                                                   const std::vector<Polynomial>& f, std::uint64_t seed) {
  check_square_system(f);
  const std::size_t k = f.size();
  if (a.size() != k) throw DomainError("monomial exponent has the wrong length");
  if (q.is_zero()) throw ZeroDivisorError("q = 0");
  std::vector<Support> supports = supports_of(f);
  DenominatorFactorization out;
  out.a = a;
  out.a_prime = q.support();
  DeltaExponents dx = delta_exponents(out.a_prime, a, supports);
  out.essential = dx.essential;
  out.base_exponent = dx.delta_base;
  out.chart_basis = dx.chart_basis;
  out.chart_is_ambient = dx.chart_is_ambient;
  std::mt19937_64 rng(seed);

  std::vector<Support> base_sets = {out.a_prime};
  std::vector<Polynomial> base_polys = {q};
  base_sets.insert(base_sets.end(), supports.begin(), supports.end());
  base_polys.insert(base_polys.end(), f.begin(), f.end());
  out.base_value = sparse_resultant(ResultantProblem{base_sets, base_polys}, rng);

  // the essential f_i in the coordinates used for the facet normals
  std::vector<Support> csets;
  std::vector<Polynomial> cpolys;
  std::optional<LatticeChart> chart;
  if (!dx.chart_is_ambient && dx.chart_basis.rows() > 0)
    chart.emplace(IntegerLattice(k, dx.chart_basis.row_list()));
  for (std::size_t pos = 1; pos < dx.essential.size(); ++pos) {
    const std::size_t i = dx.essential[pos] - 1;
    if (!chart) {
      csets.push_back(supports[i]);
      cpolys.push_back(f[i]);
      continue;
    }
    const Point& base = supports[i].front();
    std::vector<Point> pts;
    Polynomial g(chart->rank());
    for (const auto& pt : supports[i]) pts.push_back(chart->to_chart(translate(pt, base)));
    for (const auto& [e, c] : f[i].terms()) g.add_term(chart->to_chart(translate(e, base)), c);
    csets.push_back(make_support(pts));
    cpolys.push_back(g);
  }
  out.product = power(out.base_value, out.base_exponent);
  out.product_ambient = out.product;
  for (const auto& fe : dx.facets) {
    FacetFactor ff;
    ff.normal = fe.normal;
    ff.mu = fe.mu;
    ff.exponent = fe.delta;
    ff.exponent_ambient = fe.delta_ambient;
    ff.trivial_face = fe.trivial_face;
    if (!fe.trivial_face && fe.mu > 0) ff.value = facet_resultant(csets, cpolys, fe.normal, rng);
    out.product *= power(ff.value, ff.exponent);
    out.product_ambient *= power(ff.value, ff.exponent_ambient);
    out.facets.push_back(ff);
  }
  Support a0 = support_union(out.a_prime, {a});
  std::vector<Support> full_sets = {a0};
  full_sets.insert(full_sets.end(), supports.begin(), supports.end());
  out.resultant = sparse_resultant(ResultantProblem{full_sets, base_polys}, rng);
  out.matches = out.product == out.resultant || out.product == -out.resultant;
  out.matches_ambient = out.product_ambient == out.resultant || out.product_ambient == -out.resultant;
  return out;
}

namespace {

enum class Reading { classical, refined };

ResidueDenominator residue_denominator(const Point& a, const std::vector<Polynomial>& f, Reading reading,
                                       bool evaluate, std::uint64_t seed) {
  check_square_system(f);
  const std::size_t k = f.size();
  if (a.size() != k) throw DomainError("monomial exponent has the wrong length");
  ResidueDenominator out;
  std::vector<Support> sets;
  std::vector<Polynomial> polys;
  for (const auto& g : f) {
    Support s = g.support();
    if (lattice_points(s) != s) out.lattice_point_supports = false;
    Point shift(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      long lo = s.front()[j];
      for (const auto& p : s) lo = std::min(lo, p[j]);
      if (lo < 1) shift[j] = 1 - lo;
    }
    out.shifts.push_back(shift);
    std::vector<Point> pts;
    for (const auto& p : s) {
      Point moved = p;
      for (std::size_t j = 0; j < k; ++j) moved[j] += shift[j];
      pts.push_back(moved);
    }
    sets.push_back(make_support(pts));
    polys.push_back(g.shifted(shift));
  }
  Support delta_points;
  if (reading == Reading::classical) delta_points = lattice_points(minkowski_sum(sets));
  IntegerLattice full = IntegerLattice::full(k);
  std::mt19937_64 rng(seed);
  for (const auto& facet : facets_of_sum(sets)) {
    ResidueFactor rf;
    rf.normal = facet.normal;
    rf.a_omega = facet.offset;
    rf.a_dot_omega = inner(a, facet.normal);
    std::vector<Support> faces;
    for (const auto& s : sets) faces.push_back(face_data(s, facet.normal).first);
    LatticeIndex idx = lattice_index(orthogonal_sublattice(full, to_int_vector(facet.normal)), difference_lattice(faces));
    if (idx.infinite) throw DomainError("face lattice has lower rank than the facet");
    rf.index = idx.value;
    if (reading == Reading::classical) {
      rf.exponent = rf.a_dot_omega <= 0 ? Integer((1 - rf.a_dot_omega) * rf.index) : Integer(0);
      long best = 0;
      for (const auto& m : delta_points) {
        long v = inner(m, facet.normal) + rf.a_dot_omega + rf.a_omega - 1;
        best = std::max(best, -std::min(0L, v));
      }
      rf.enumerated = Integer(best) * rf.index;
    } else {
      rf.exponent = rf.a_dot_omega <= 0 ? Integer(-rf.a_dot_omega * rf.index) : Integer(0);
    }
    if (evaluate && rf.exponent > 0) rf.value = facet_resultant(sets, polys, facet.normal, rng);
    out.total_degree += rf.exponent;
    out.factors.push_back(rf);
  }
  return out;
}

}  // namespace

ResidueDenominator residue_denominator_classical(const Point& a, const std::vector<Polynomial>& f, bool evaluate,
                                           std::uint64_t seed) {
  return residue_denominator(a, f, Reading::classical, evaluate, seed);
}

ResidueDenominator residue_denominator_refined(const Point& a, const std::vector<Polynomial>& f, bool evaluate,
                                            std::uint64_t seed) {
  return residue_denominator(a, f, Reading::refined, evaluate, seed);
}

DenominatorComparison compare_denominators(const Point& a, const std::vector<Polynomial>& f) {
  ResidueDenominator refined = residue_denominator_refined(a, f);
  ResidueDenominator classical = residue_denominator_classical(a, f);
  DenominatorComparison out;
  for (std::size_t i = 0; i < refined.factors.size(); ++i) {
    DenominatorComparison::Row row;
    row.normal = refined.factors[i].normal;
    row.a_dot_omega = refined.factors[i].a_dot_omega;
    row.refined = refined.factors[i].exponent;
    row.classical = classical.factors[i].exponent;
    if (row.refined > row.classical) out.refined_le_classical = false;
    if (row.a_dot_omega <= 0 && !(row.refined < row.classical)) out.strict_where_expected = false;
    out.rows.push_back(row);
  }
  out.total_refined = refined.total_degree;
  out.total_classical = classical.total_degree;
  return out;
}

TraceResult dense_residue(const Exponent& beta, const std::vector<Polynomial>& f) {
  check_square_system(f);
  const std::size_t n = f.size();
  if (beta.size() != n) throw DomainError("beta has the wrong length");
  for (long b : beta)
    if (b < 0) throw DomainError("beta must be nonnegative");
  long rho = 0;
  long bezout = 1;
  for (const auto& g : f) {
    if (g.has_negative_exponents()) throw DomainError("dense residues need polynomial equations");
    if (g.degree() < 1) throw DegenerateError("constant polynomial in the system");
    rho += g.degree() - 1;
    bezout *= g.degree();
  }
  if (leading_forms_resultant(f) == 0) throw DegenerateError("the system has zeros at infinity");
  const long big_d = std::max(total_degree(beta), rho);
  Polynomial jac = jacobian(f);
  Polynomial mono = Polynomial::monomial(beta);
  std::vector<Rational> nodes = interpolation_nodes(static_cast<std::size_t>(bezout) + 1), values;
  for (const auto& t : nodes) values.push_back(dense_resultant_with(jac + mono * t, big_d, f));
  TPencilPolynomial x = TPencilPolynomial::interpolate(nodes, values);
  TraceResult r;
  r.method = "dense-resultant";
  r.denominator = x.coefficient(0);
  if (r.denominator == 0) throw ZeroDivisorError("the Jacobian vanishes at a zero of the system");
  r.numerator = x.coefficient(1);
  r.value = r.numerator / r.denominator;
  return r;
}

EulerJacobiReport euler_jacobi_check(const std::vector<Polynomial>& f) {
  check_square_system(f);
  EulerJacobiReport out;
  for (const auto& g : f) out.rho += g.degree() - 1;
  QuotientAlgebra a = affine_algebra(f);
  RationalMatrix inv = inverse(a.mult_matrix(jacobian(f)));
  for (const auto& beta : monomials_up_to(f.size(), out.rho)) {
    Rational res = (inv * a.mult_matrix(Polynomial::monomial(beta))).trace();
    if (total_degree(beta) < out.rho) {
      out.below_rho.push_back({beta, res});
      if (res != 0) out.all_below_rho_zero = false;
    } else {
      out.at_rho.push_back({beta, res});
    }
  }
  return out;
}

}  // namespace sparsetrace
