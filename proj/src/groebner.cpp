#include "sparsetrace/groebner.hpp"

#include <algorithm>
#include <set>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

namespace {

// Terms stored in increasing degrevlex order, so the leading term is last.
template <class C>
using Terms = std::vector<std::pair<Exponent, C>>;

using IntTerms = Terms<Integer>;
using RatTerms = Terms<Rational>;

const DegRevLexLess kLess{};

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// x * f - y * t^shift * g
template <class C>
Terms<C> combine(const C& x, const Terms<C>& f, const C& y, const Exponent& shift, const Terms<C>& g) {
  Terms<C> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Exponent gj;
  auto shifted = [&](std::size_t k) {
    Exponent e = g[k].first;
    for (std::size_t l = 0; l < e.size(); ++l) e[l] += shift[l];
    return e;
  };
  if (j < g.size()) gj = shifted(j);
  while (i < f.size() || j < g.size()) {
    if (j == g.size() || (i < f.size() && kLess(f[i].first, gj))) {
      out.emplace_back(f[i].first, x * f[i].second);
      ++i;
    } else if (i == f.size() || kLess(gj, f[i].first)) {
      out.emplace_back(gj, -(y * g[j].second));
      if (++j < g.size()) gj = shifted(j);
    } else {
      C c = x * f[i].second - y * g[j].second;
      if (c != 0) out.emplace_back(f[i].first, c);
      ++i;
      if (++j < g.size()) gj = shifted(j);
    }
  }
  return out;
}

void make_primitive(IntTerms& f) {
  if (f.empty()) return;
  Integer g = 0;
  for (const auto& [e, c] : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (f.back().second < 0) g = -g;
  if (g != 1)
    for (auto& [e, c] : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntTerms to_int_terms(const Polynomial& f) {
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntTerms out;
  for (const auto& [e, c] : f.terms()) {
    for (long x : e)
      if (x < 0) throw DomainError("Groebner bases need polynomial (non-Laurent) generators");
    Rational s = c * den;
    out.emplace_back(e, Integer(s.get_num()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return kLess(a.first, b.first); });
  make_primitive(out);
  return out;
}

// Fully reduced remainder, up to a nonzero scalar, kept primitive.
IntTerms reduce(IntTerms p, const std::vector<IntTerms>& basis) {
  IntTerms rem;  // collected in decreasing order
  int steps = 0;
  while (!p.empty()) {
    const auto [m, c] = p.back();
    const IntTerms* div = nullptr;
    for (const auto& g : basis)
      if (divides(g.back().first, m)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back(p.back());
      p.pop_back();
      continue;
    }
    const Integer& lc = div->back().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), lc.get_mpz_t(), c.get_mpz_t());
    Integer x = lc / g, y = c / g;
    p = combine<Integer>(x, p, y, quotient(m, div->back().first), *div);
    if (x != 1)
      for (auto& t : rem) t.second *= x;
    if (++steps % 8 == 0) {
      IntTerms all = rem;
      all.insert(all.end(), p.begin(), p.end());
      Integer gg = 0;
      for (const auto& t : all) mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), t.second.get_mpz_t());
      if (gg > 1) {
        for (auto& t : rem) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), gg.get_mpz_t());
        for (auto& t : p) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), gg.get_mpz_t());
      }
    }
  }
  std::reverse(rem.begin(), rem.end());
  make_primitive(rem);
  return rem;
}

Polynomial to_polynomial(const RatTerms& f, std::size_t arity) {
  Polynomial out(arity);
  for (const auto& [e, c] : f) out.add_term(e, c);
  return out;
}

RatTerms to_rat_terms(const Polynomial& f) {
  RatTerms out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e, c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return kLess(a.first, b.first); });
  return out;
}

}  // namespace

bool DegRevLexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Exponent leading_exponent(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading term");
  Exponent best = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    if (kLess(best, e)) best = e;
  return best;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  std::size_t arity = 0;
  std::vector<IntTerms> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    arity = f.arity();
    IntTerms t = reduce(to_int_terms(f), g);
    if (!t.empty()) g.push_back(std::move(t));
  }
  auto unit = [&](const IntTerms& t) { return total_degree(t.back().first) == 0; };
  for (const auto& t : g)
    if (unit(t)) return {Polynomial::constant(arity, 1)};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  std::size_t processed = 0;
  while (!pending.empty()) {
    // normal strategy: smallest lcm first
    auto best = pending.begin();
    Exponent best_lcm = lcm(g[best->first].back().first, g[best->second].back().first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = lcm(g[it->first].back().first, g[it->second].back().first);
      if (kLess(l, best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Exponent& li = g[i].back().first;
    const Exponent& lj = g[j].back().first;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].back().first, best_lcm)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) && !pending.count({std::min(j, k), std::max(j, k)}))
        chain = true;
    }
    if (chain) continue;
    if (++processed > options.max_pairs) throw UnsupportedError("Groebner basis pair limit exceeded");
    const Integer& ci = g[i].back().second;
    const Integer& cj = g[j].back().second;
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
    // (cj/gg) * (L/li) * f_i - (ci/gg) * (L/lj) * f_j
    IntTerms fi = combine<Integer>(0, {}, -(cj / gg), quotient(best_lcm, li), g[i]);
    IntTerms s = combine<Integer>(1, fi, ci / gg, quotient(best_lcm, lj), g[j]);
    IntTerms r = reduce(std::move(s), g);
    if (r.empty()) continue;
    if (unit(r)) return {Polynomial::constant(arity, 1)};
    std::size_t n = g.size();
    g.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // minimize, then interreduce
  std::vector<IntTerms> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !divides(g[b].back().first, g[a].back().first)) continue;
      // equal leading monomials: keep the earlier one
      redundant = g[b].back().first != g[a].back().first || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<IntTerms> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    // the leading term is irreducible by the others, so only the tail changes
    IntTerms red = reduce(minimal[a], others);
    Rational lc = red.back().second;
    RatTerms monic;
    for (const auto& [e, c] : red) monic.emplace_back(e, Rational(c) / lc);
    out.push_back(to_polynomial(monic, arity));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return kLess(leading_exponent(a), leading_exponent(b));
  });
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<RatTerms> g;
  for (const auto& b : basis) g.push_back(to_rat_terms(b));
  RatTerms p = to_rat_terms(f);
  RatTerms rem;
  while (!p.empty()) {
    const auto [m, c] = p.back();
    const RatTerms* div = nullptr;
    for (const auto& t : g)
      if (divides(t.back().first, m)) {
        div = &t;
        break;
      }
    if (!div) {
      rem.push_back(p.back());
      p.pop_back();
      continue;
    }
    p = combine<Rational>(1, p, c / div->back().second, quotient(m, div->back().first), *div);
  }
  return to_polynomial(rem, f.arity());
}

}  // namespace sparsetrace
