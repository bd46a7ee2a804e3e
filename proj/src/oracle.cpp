#include "sparsetrace/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

namespace {

bool divisible_by_any(const Exponent& m, const std::vector<Exponent>& leads) {
  for (const auto& l : leads) {
    bool div = true;
    for (std::size_t i = 0; i < m.size() && div; ++i)
      if (l[i] > m[i]) div = false;
    if (div) return true;
  }
  return false;
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(std::vector<Polynomial> generators, Kind kind, std::size_t original_vars,
                                 const GroebnerOptions& options)
    : generators_(std::move(generators)), kind_(kind), original_vars_(original_vars) {
  const std::size_t n = kind_ == Kind::torus ? original_vars_ + 1 : original_vars_;
  for (const auto& g : generators_)
    if (!g.is_zero() && g.arity() != n) throw DomainError("generator arity does not match the algebra");
  basis_ = sparsetrace::groebner_basis(generators_, options);
  if (basis_.size() == 1 && basis_.front().degree() == 0 && !basis_.front().is_zero())
    throw DegenerateError("the ideal is the unit ideal: the system has no zeros");
  std::vector<Exponent> leads;
  for (const auto& g : basis_) leads.push_back(leading_exponent(g));
  // zero-dimensional iff every variable has a pure power among the leading terms
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& l : leads) {
      bool ok = l[v] > 0;
      for (std::size_t w = 0; w < n && ok; ++w)
        if (w != v && l[w] != 0) ok = false;
      if (ok) pure = true;
    }
    if (!pure) throw DegenerateError("the ideal is not zero-dimensional");
  }
  std::set<Exponent> seen;
  std::vector<Exponent> frontier{Exponent(n, 0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Exponent m = frontier.back();
    frontier.pop_back();
    monomials_.push_back(m);
    for (std::size_t v = 0; v < n; ++v) {
      Exponent next = m;
      ++next[v];
      if (seen.count(next) || divisible_by_any(next, leads)) continue;
      seen.insert(next);
      frontier.push_back(next);
    }
  }
  std::sort(monomials_.begin(), monomials_.end(), DegRevLexLess{});
}

Polynomial QuotientAlgebra::lift(const Polynomial& g) const {
  if (!g.is_zero() && g.arity() != original_vars_) throw DomainError("polynomial arity does not match the algebra");
  if (kind_ == Kind::affine) {
    if (g.has_negative_exponents()) throw DomainError("Laurent polynomial in an affine algebra");
    return g.is_zero() ? Polynomial(original_vars_) : g;
  }
  Polynomial out(original_vars_ + 1);
  for (const auto& [e, c] : g.terms()) {
    long shift = 0;
    for (long x : e) shift = std::max(shift, -x);
    Exponent m = e;
    for (auto& x : m) x += shift;
    m.push_back(shift);
    out.add_term(m, c);
  }
  return out;
}

Polynomial QuotientAlgebra::normal_form(const Polynomial& g) const {
  return sparsetrace::normal_form(g, basis_);
}

RationalMatrix QuotientAlgebra::mult_matrix(const Polynomial& g) const {
  Polynomial lifted = lift(g);
  const std::size_t n = dimension();
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monomials_[i]] = i;
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial prod = sparsetrace::normal_form(lifted.shifted(monomials_[j]), basis_);
    for (const auto& [e, c] : prod.terms()) m(index.at(e), j) = c;
  }
  return m;
}

QuotientAlgebra affine_algebra(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("empty system");
  const std::size_t n = f.front().arity();
  for (const auto& g : f)
    if (g.has_negative_exponents()) throw DomainError("affine algebra needs polynomial equations");
  return QuotientAlgebra(f, QuotientAlgebra::Kind::affine, n);
}

QuotientAlgebra torus_algebra(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("empty system");
  const std::size_t k = f.front().arity();
  std::vector<Polynomial> gens;
  for (const auto& g : f) {
    if (g.arity() != k) throw DomainError("system polynomials must share one arity");
    if (g.is_zero()) throw DegenerateError("zero polynomial in the system");
    Exponent lo = g.terms().begin()->first;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < k; ++i) lo[i] = std::min(lo[i], e[i]);
    for (auto& x : lo) x = -x;
    Polynomial shifted = g.shifted(lo);
    Polynomial ext(k + 1);
    for (const auto& [e, c] : shifted.terms()) {
      Exponent m = e;
      m.push_back(0);
      ext.add_term(m, c);
    }
    gens.push_back(ext);
  }
  Polynomial inv(k + 1);
  inv.add_term(Exponent(k + 1, 1), 1);
  inv.add_term(Exponent(k + 1, 0), -1);
  gens.push_back(inv);
  return QuotientAlgebra(gens, QuotientAlgebra::Kind::torus, k);
}

RationalMatrix mult_matrix(const Polynomial& g, const QuotientAlgebra& a) { return a.mult_matrix(g); }

Rational trace_oracle(const Polynomial& p, const Polynomial& q, const QuotientAlgebra& a) {
  RationalMatrix mq = a.mult_matrix(q);
  RationalMatrix mp = a.mult_matrix(p);
  try {
    return solve(mq, mp).trace();
  } catch (const ZeroDivisorError&) {
    throw ZeroDivisorError("q is a zero divisor in the quotient algebra");
  }
}

Rational global_residue_oracle(const Polynomial& h, const std::vector<Polynomial>& f) {
  QuotientAlgebra a = affine_algebra(f);
  return trace_oracle(h, jacobian(f), a);
}

Rational torus_residue_oracle(const Polynomial& p, const std::vector<Polynomial>& f) {
  QuotientAlgebra a = torus_algebra(f);
  return trace_oracle(p, toric_jacobian(f), a);
}

}  // namespace sparsetrace
