#include "sparsetrace/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/lattice.hpp"
#include "sparsetrace/polytope.hpp"
#include "sparsetrace/simplex.hpp"

namespace sparsetrace {

namespace {

Point minus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point plus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool contains_point(const Support& s, const Point& p) { return std::binary_search(s.begin(), s.end(), p); }

Polynomial restrict_to(const Polynomial& f, const Support& face) {
  Polynomial out(f.arity());
  for (const auto& [e, c] : f.terms())
    if (contains_point(face, e)) out.add_term(e, c);
  return out;
}

Rational power(const Rational& x, const Integer& n) {
  if (n < 0) throw DomainError("negative exponent in resultant product");
  if (x == 0) return n == 0 ? Rational(1) : Rational(0);
  Rational out = 1;
  Rational base = x;
  Integer e = n;
  while (e > 0) {
    if (e % 2 == 1) out *= base;
    e /= 2;
    if (e > 0) base *= base;
  }
  return out;
}

// Essential subfamily moved to coordinates of its own difference lattice;
// each set is translated by its first point.
struct Charted {
  std::vector<std::size_t> indices;
  std::vector<Support> sets;
  std::vector<Polynomial> polys;
  std::vector<Point> bases;
  LatticeChart chart{IntegerLattice()};
};

Charted to_chart(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                 const std::vector<std::size_t>& indices) {
  std::vector<Support> chosen;
  for (auto i : indices) chosen.push_back(sets[i]);
  Charted out;
  out.indices = indices;
  out.chart = LatticeChart(difference_lattice(chosen));
  for (auto i : indices) {
    const Point& base = sets[i].front();
    out.bases.push_back(base);
    std::vector<Point> pts;
    for (const auto& p : sets[i]) pts.push_back(out.chart.to_chart(minus(p, base)));
    out.sets.push_back(make_support(pts));
    Polynomial g(out.chart.rank());
    for (const auto& [e, c] : polys[i].terms()) g.add_term(out.chart.to_chart(minus(e, base)), c);
    out.polys.push_back(std::move(g));
  }
  return out;
}

Polynomial map_to_chart(const Charted& ch, std::size_t pos, const Polynomial& f) {
  Polynomial g(ch.chart.rank());
  for (const auto& [e, c] : f.terms()) g.add_term(ch.chart.to_chart(minus(e, ch.bases[pos])), c);
  return g;
}

Rational essential_resultant(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                             std::mt19937_64& rng);

// Res of an arbitrary family (1 without a unique essential subfamily).
Rational family_resultant(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                          std::mt19937_64& rng) {
  EssentialResult ess = essential_subfamily(sets);
  if (ess.status != EssentialStatus::unique) return 1;
  Charted ch = to_chart(sets, polys, ess.indices);
  return essential_resultant(ch.sets, ch.polys, rng);
}

// Res(t^b, f_1, ..., f_r) for an essential family in Z^r, r >= 1.
Rational essential_monomial_resultant(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                                      const Point& b, std::mt19937_64& rng) {
  const std::size_t r = sets.size() - 1;
  std::vector<Support> rest(sets.begin() + 1, sets.end());
  std::vector<Polynomial> rest_polys(polys.begin() + 1, polys.end());
  IntegerLattice full = IntegerLattice::full(r);
  Rational out = 1;
  for (const auto& facet : facets_of_sum(rest)) {
    const Point& w = facet.normal;
    long base = -support_min(sets[0], w) + inner(b, w);
    if (base < 0) throw DomainError("monomial lies outside its support polytope");
    if (base == 0) continue;
    std::vector<Support> faces;
    std::vector<Polynomial> face_polys;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      faces.push_back(face_data(rest[i], w).first);
      face_polys.push_back(restrict_to(rest_polys[i], faces.back()));
    }
    if (essential_subfamily(faces).status != EssentialStatus::unique) continue;
    Integer e = exponent_e(faces);
    LatticeIndex idx = lattice_index(orthogonal_sublattice(full, to_int_vector(w)), difference_lattice(faces));
    if (idx.infinite) throw DomainError("face lattice has lower rank than the facet");
    Rational rw = family_resultant(faces, face_polys, rng);
    out *= power(rw, e * base * idx.value);
    if (out == 0) return 0;
  }
  return out;
}

// Finds Res(f) = Res(t^b, f) det S(f_0) / det S(t^b) on a Canny-Emiris
// matrix; returns Res(t^b, f) / det S(t^b) for the first usable b.
Rational ce_normalizer(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                       const CannyEmirisMatrix& ce, std::mt19937_64& rng, bool& found) {
  // vertices first: their facet products touch fewer facets
  Support order = polytope_vertices(sets[0]);
  for (const auto& b : sets[0])
    if (!contains_point(order, b)) order.push_back(b);
  for (const auto& b : order) {
    Rational det_b = determinant(ce.schur(Polynomial::monomial(b)));
    if (det_b == 0) continue;
    found = true;
    return essential_monomial_resultant(sets, polys, b, rng) / det_b;
  }
  found = false;
  return 0;
}

Rational essential_resultant(const std::vector<Support>& sets, const std::vector<Polynomial>& polys,
                             std::mt19937_64& rng) {
  const std::size_t r = sets.size() - 1;
  if (r == 0) return polys[0].coefficient(Point{});
  if (r == 1) return sylvester_resultant(sets[0], polys[0], sets[1], polys[1]);
  std::vector<Polynomial> others(polys.begin() + 1, polys.end());
  for (int attempt = 0; attempt < 3; ++attempt) {
    CannyEmirisMatrix ce(sets, others, rng);
    bool found = false;
    Rational factor = ce_normalizer(sets, polys, ce, rng, found);
    if (!found) continue;
    return factor * determinant(ce.schur(polys[0]));
  }
  throw DegenerateError("every monomial specialization of the Canny-Emiris determinant vanishes");
}

void check_family(const std::vector<Support>& sets) {
  if (sets.empty()) throw DomainError("empty family of supports");
  const std::size_t k = sets.front().empty() ? 0 : sets.front().front().size();
  for (const auto& s : sets) {
    if (s.empty()) throw DomainError("empty support");
    for (const auto& p : s)
      if (p.size() != k) throw DomainError("support points have inconsistent dimension");
  }
}

// All exponent vectors of total degree d in n variables.
void monomials_of_degree(std::size_t n, long d, Point& cur, std::size_t pos, std::vector<Point>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (long a = d; a >= 0; --a) {
    cur[pos] = a;
    monomials_of_degree(n, d - a, cur, pos + 1, out);
  }
}

}  // namespace

std::size_t ResultantProblem::ambient_dim() const {
  if (supports.empty() || supports.front().empty()) return 0;
  return supports.front().front().size();
}

void ResultantProblem::validate(bool require_f0) const {
  check_family(supports);
  const std::size_t k = ambient_dim();
  if (supports.size() != k + 1)
    throw DomainError("expected " + std::to_string(k + 1) + " supports in dimension " + std::to_string(k));
  if (polys.size() != supports.size()) throw DomainError("one polynomial per support is required");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i == 0 && !require_f0) continue;
    if (polys[i].arity() != k) throw DomainError("polynomial arity does not match the supports");
    for (const auto& [e, c] : polys[i].terms())
      if (!contains_point(supports[i], e))
        throw DomainError("polynomial " + std::to_string(i) + " has a term outside its support");
  }
}

ResultantProblem problem_from_polynomials(const std::vector<Polynomial>& polys) {
  ResultantProblem pr;
  for (const auto& f : polys) {
    if (f.is_zero()) throw DomainError("zero polynomial has empty support");
    pr.supports.push_back(f.support());
  }
  pr.polys = polys;
  return pr;
}

Rational sylvester_resultant(const Support& a, const Polynomial& f, const Support& b, const Polynomial& g) {
  if (a.empty() || b.empty() || a.front().size() != 1 || b.front().size() != 1)
    throw DomainError("Sylvester resultant needs nonempty univariate supports");
  const long a_lo = a.front()[0], b_lo = b.front()[0];
  const std::size_t m = static_cast<std::size_t>(a.back()[0] - a_lo);
  const std::size_t n = static_cast<std::size_t>(b.back()[0] - b_lo);
  RationalMatrix s(m + n, m + n);
  for (const auto& [e, c] : f.terms()) {
    long j = e[0] - a_lo;
    if (j < 0 || j > static_cast<long>(m)) throw DomainError("term outside the Sylvester support");
    for (std::size_t i = 0; i < n; ++i) s(i, i + static_cast<std::size_t>(j)) = c;
  }
  for (const auto& [e, c] : g.terms()) {
    long j = e[0] - b_lo;
    if (j < 0 || j > static_cast<long>(n)) throw DomainError("term outside the Sylvester support");
    for (std::size_t i = 0; i < m; ++i) s(n + i, i + static_cast<std::size_t>(j)) = c;
  }
  return determinant(s);
}

Rational macaulay_resultant_forms(const std::vector<Polynomial>& forms, const std::vector<long>& degrees) {
  const std::size_t n = forms.size();
  if (n == 0 || degrees.size() != n) throw DomainError("Macaulay resultant needs one degree per form");
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < 0) throw DomainError("form degrees must be nonnegative");
    if (degrees[i] == 0) {
      // Res(c, f_1, ...) = c^(product of the other degrees)
      Integer e = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) e *= degrees[j];
      return power(forms[i].is_zero() ? Rational(0) : forms[i].terms().begin()->second, e);
    }
    if (!forms[i].is_zero() && forms[i].arity() != n) throw DomainError("N forms in N variables are required");
    for (const auto& [e, c] : forms[i].terms()) {
      for (long x : e)
        if (x < 0) throw DomainError("forms must be polynomials");
      if (total_degree(e) != degrees[i]) throw DomainError("form is not homogeneous of the stated degree");
    }
  }
  long big_d = 1;
  for (long d : degrees) big_d += d - 1;
  std::vector<Point> mons;
  Point cur(n);
  monomials_of_degree(n, big_d, cur, 0, mons);
  std::map<Point, std::size_t> col;
  for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
  std::vector<std::size_t> nonreduced;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    int divisible = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mons[i][v] >= degrees[v]) ++divisible;
    if (divisible >= 2) nonreduced.push_back(i);
  }

  // det M / det M' for one variable order; nullopt when the extraneous minor vanishes.
  auto ratio = [&](const std::vector<Polynomial>& fs, const std::vector<std::size_t>& perm) -> std::optional<Rational> {
    RationalMatrix m(mons.size(), mons.size());
    for (std::size_t row = 0; row < mons.size(); ++row) {
      const Point& alpha = mons[row];
      std::size_t which = n;
      for (std::size_t j = 0; j < n; ++j)
        if (alpha[perm[j]] >= degrees[perm[j]]) {
          which = perm[j];
          break;
        }
      Point shift = alpha;
      shift[which] -= degrees[which];
      for (const auto& [e, c] : fs[which].terms()) m(row, col.at(plus(e, shift))) += c;
    }
    RationalMatrix minor(nonreduced.size(), nonreduced.size());
    for (std::size_t i = 0; i < nonreduced.size(); ++i)
      for (std::size_t j = 0; j < nonreduced.size(); ++j) minor(i, j) = m(nonreduced[i], nonreduced[j]);
    Rational den = determinant(minor);
    if (den == 0) return std::nullopt;
    return determinant(m) / den;
  };

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int tries = 0;
  do {
    if (++tries > 120) break;
    if (auto r = ratio(forms, perm)) return *r;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Perturb F_i + eps x_i^(d_i): the minor becomes M' + eps I, so R(eps) is defined at all but
  // finitely many eps; R is a polynomial of degree at most sum_i prod_{j != i} d_j and R(0) = Res(F).
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t prod = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= static_cast<std::size_t>(degrees[j]);
    bound += prod;
  }
  std::vector<Rational> nodes, values;
  for (const Rational& eps : interpolation_nodes(bound + nonreduced.size() + 2)) {
    if (nodes.size() == bound + 1) break;
    if (eps == 0) continue;
    std::vector<Polynomial> perturbed = forms;
    for (std::size_t i = 0; i < n; ++i) {
      Point e(n, 0);
      e[i] = degrees[i];
      Polynomial extra(n);
      extra.add_term(e, eps);
      perturbed[i] += extra;
    }
    if (auto r = ratio(perturbed, perm)) {
      nodes.push_back(eps);
      values.push_back(*r);
    }
  }
  if (nodes.size() < bound + 1) throw DegenerateError("Macaulay extraneous minor vanishes for every perturbation");
  return TPencilPolynomial::interpolate(nodes, values).coefficient(0);
}

Polynomial homogenize(const Polynomial& f, long d) {
  Polynomial out(f.arity() + 1);
  for (const auto& [e, c] : f.terms()) {
    for (long x : e)
      if (x < 0) throw DomainError("cannot homogenize a Laurent polynomial");
    long t = total_degree(e);
    if (t > d) throw DomainError("polynomial degree exceeds the stated degree");
    Point h{d - t};
    h.insert(h.end(), e.begin(), e.end());
    out.add_term(h, c);
  }
  return out;
}

Rational macaulay_resultant(const std::vector<long>& degrees, const std::vector<Polynomial>& polys) {
  if (polys.size() != degrees.size() || polys.empty()) throw DomainError("one degree per polynomial is required");
  const std::size_t n = polys.size() - 1;
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].is_zero() && polys[i].arity() != n) throw DomainError("n+1 polynomials in n variables are required");
    Polynomial h = polys[i].is_zero() ? Polynomial(n + 1) : homogenize(polys[i], degrees[i]);
    forms.push_back(h);
  }
  return macaulay_resultant_forms(forms, degrees);
}

CannyEmirisMatrix::CannyEmirisMatrix(std::vector<Support> supports, std::vector<Polynomial> others,
                                     std::mt19937_64& rng, int max_retries)
    : supports_(std::move(supports)), others_(std::move(others)) {
  check_family(supports_);
  const std::size_t r = supports_.front().front().size();
  if (r == 0 || supports_.size() != r + 1 || others_.size() != r)
    throw DomainError("Canny-Emiris matrix needs r+1 supports in Z^r (r >= 1) and r polynomials");
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& [e, c] : others_[i].terms())
      if (!contains_point(supports_[i + 1], e)) throw DomainError("polynomial has a term outside its support");
  for (attempts_ = 1; attempts_ <= max_retries; ++attempts_)
    if (build(rng)) return;
  attempts_ = max_retries;
  throw DegenerateError("no generic lifting found for the Canny-Emiris construction");
}

bool CannyEmirisMatrix::build(std::mt19937_64& rng) {
  const std::size_t r = supports_.front().front().size();
  const std::size_t nsets = supports_.size();
  std::uniform_int_distribution<long> lift(1, 1L << 16);
  std::uniform_int_distribution<long> shift(1, (1L << 16) - 1);
  lifting_.assign(nsets, {});
  for (std::size_t i = 0; i < nsets; ++i)
    for (std::size_t a = 0; a < supports_[i].size(); ++a) lifting_[i].push_back(lift(rng));
  delta_.clear();
  for (std::size_t j = 0; j < r; ++j) delta_.push_back(make_rational(shift(rng), 1L << 20));
  columns_.clear();
  column_index_.clear();
  row_labels_.clear();
  f0_shifts_.clear();
  pivot_rows_.clear();
  pivot_cols_.clear();
  free_cols_.clear();

  // LP: variables lambda_{i,a}; rows: r coordinates, then one convexity row per set
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < nsets; ++i)
    for (std::size_t a = 0; a < supports_[i].size(); ++a) vars.emplace_back(i, a);
  const std::size_t nrows = r + nsets;
  RationalMatrix lp(nrows, vars.size());
  std::vector<Rational> cost;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto [i, a] = vars[v];
    for (std::size_t j = 0; j < r; ++j) lp(j, v) = supports_[i][a][j];
    lp(r + i, v) = 1;
    cost.push_back(lifting_[i][a]);
  }
  struct Cell {
    std::vector<std::size_t> basis;
    RationalMatrix inv;
  };
  std::vector<Cell> cells;

  std::vector<Facet> facets = facets_of_sum(supports_);
  Point lo(r, 0), hi(r, 0);
  for (const auto& s : supports_)
    for (std::size_t j = 0; j < r; ++j) {
      long mn = s.front()[j], mx = s.front()[j];
      for (const auto& p : s) {
        mn = std::min(mn, p[j]);
        mx = std::max(mx, p[j]);
      }
      lo[j] += mn;
      hi[j] += mx;
    }
  // 0 < delta_j < 1, so p - delta in Q forces lo_j < p_j <= hi_j
  std::vector<Point> points;
  Point p(r);
  for (std::size_t j = 0; j < r; ++j) {
    if (lo[j] + 1 > hi[j]) return false;
    p[j] = lo[j] + 1;
  }
  while (true) {
    points.push_back(p);
    std::size_t j = 0;
    while (j < r && p[j] == hi[j]) {
      p[j] = lo[j] + 1;
      ++j;
    }
    if (j == r) break;
    ++p[j];
  }

  std::vector<std::pair<std::size_t, Point>> labels;
  for (const auto& pt : points) {
    std::vector<Rational> x(r);
    for (std::size_t j = 0; j < r; ++j) x[j] = Rational(pt[j]) - delta_[j];
    bool inside = true;
    for (const auto& f : facets) {
      Rational v = f.offset;
      for (std::size_t j = 0; j < r; ++j) v += f.normal[j] * x[j];
      if (v == 0) return false;
      if (v < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    std::vector<Rational> rhs(x);
    rhs.resize(nrows, Rational(1));
    const Cell* cell = nullptr;
    for (const auto& c : cells) {
      bool all_pos = true, boundary = false;
      for (std::size_t i = 0; i < nrows; ++i) {
        Rational lam = 0;
        for (std::size_t j = 0; j < nrows; ++j) lam += c.inv(i, j) * rhs[j];
        if (lam < 0) all_pos = false;
        if (lam == 0) boundary = true;
      }
      if (all_pos && boundary) return false;
      if (all_pos) {
        cell = &c;
        break;
      }
    }
    if (!cell) {
      LpResult res = solve_lp(lp, rhs, cost);
      if (res.status != LpResult::Status::optimal) return false;
      if (res.degenerate || !res.unique || res.basis.size() != nrows) return false;
      Cell c;
      c.basis = res.basis;
      RationalMatrix bm(nrows, nrows);
      for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < nrows; ++j) bm(i, j) = lp(i, c.basis[j]);
      c.inv = inverse(bm);
      cells.push_back(std::move(c));
      cell = &cells.back();
    }
    // row content: the largest i whose cell summand is a single vertex
    std::vector<std::size_t> count(nsets, 0);
    std::vector<std::size_t> single(nsets, 0);
    for (auto v : cell->basis) {
      ++count[vars[v].first];
      single[vars[v].first] = vars[v].second;
    }
    std::size_t which = nsets;
    for (std::size_t i = nsets; i-- > 0;)
      if (count[i] == 1) {
        which = i;
        break;
      }
    if (which == nsets) return false;
    labels.emplace_back(which, minus(pt, supports_[which][single[which]]));
    column_index_[pt] = columns_.size();
    columns_.push_back(pt);
  }

  const std::size_t ncols = columns_.size();
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& [which, sh] : labels) {
    if (which == 0) {
      f0_shifts_.push_back(sh);
      continue;
    }
    SparseRow row;
    for (const auto& [e, c] : others_[which - 1].terms()) {
      auto it = column_index_.find(plus(e, sh));
      if (it == column_index_.end()) return false;
      row.entries.emplace_back(it->second, c);
    }
    std::vector<Rational> w(ncols, Rational(0));
    for (const auto& [j, c] : row.entries) w[j] = c;
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
      Rational f = w[pivot_cols_[k]];
      if (f == 0) continue;
      for (const auto& [j, c] : pivot_rows_[k].entries) w[j] -= f * c;
    }
    std::size_t pc = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (w[j] != 0) {
        pc = j;
        break;
      }
    if (pc == ncols) return false;
    Rational inv = 1 / w[pc];
    SparseRow piv;
    for (std::size_t j = 0; j < ncols; ++j)
      if (w[j] != 0) piv.entries.emplace_back(j, w[j] * inv);
    pivot_rows_.push_back(std::move(piv));
    pivot_cols_.push_back(pc);
    is_pivot[pc] = true;
  }
  for (std::size_t j = 0; j < ncols; ++j)
    if (!is_pivot[j]) free_cols_.push_back(j);
  if (free_cols_.size() != f0_shifts_.size()) return false;
  for (const auto& [which, sh] : labels) row_labels_.emplace_back(which, sh);
  return true;
}

CannyEmirisMatrix::SparseRow CannyEmirisMatrix::row_of(const Polynomial& f, const Point& shift) const {
  SparseRow row;
  for (const auto& [e, c] : f.terms()) {
    if (!contains_point(supports_[0], e)) throw DomainError("first-slot polynomial has a term outside A_0");
    row.entries.emplace_back(column_index_.at(plus(e, shift)), c);
  }
  return row;
}

RationalMatrix CannyEmirisMatrix::schur(const Polynomial& f0) const {
  const std::size_t m = f0_shifts_.size();
  const std::size_t ncols = columns_.size();
  std::vector<std::size_t> free_pos(ncols, ncols);
  for (std::size_t j = 0; j < free_cols_.size(); ++j) free_pos[free_cols_[j]] = j;
  RationalMatrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> w(ncols, Rational(0));
    for (const auto& [j, c] : row_of(f0, f0_shifts_[i]).entries) w[j] = c;
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
      Rational f = w[pivot_cols_[k]];
      if (f == 0) continue;
      for (const auto& [j, c] : pivot_rows_[k].entries) w[j] -= f * c;
    }
    for (std::size_t j = 0; j < ncols; ++j)
      if (free_pos[j] != ncols) s(i, free_pos[j]) = w[j];
  }
  return s;
}

std::string CannyEmirisMatrix::dump(const Polynomial& f0) const {
  auto point_str = [](const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  std::ostringstream out;
  out << "lifting:";
  for (std::size_t i = 0; i < supports_.size(); ++i)
    for (std::size_t a = 0; a < supports_[i].size(); ++a)
      out << ' ' << i << ':' << point_str(supports_[i][a]) << '=' << lifting_[i][a];
  out << "\ndelta:";
  for (const auto& d : delta_) out << ' ' << to_fraction_string(d);
  out << "\ncolumns:";
  for (const auto& c : columns_) out << ' ' << point_str(c);
  out << "\nrows: " << row_labels_.size() << " (f0 rows: " << f0_shifts_.size() << ")\n";
  for (const auto& [which, sh] : row_labels_) {
    const Polynomial& f = which == 0 ? f0 : others_[which - 1];
    out << "f" << which << "*t^" << point_str(sh) << ":";
    for (const auto& [e, c] : f.terms())
      out << ' ' << column_index_.at(plus(e, sh)) << '=' << to_fraction_string(c);
    out << '\n';
  }
  return out.str();
}

Rational sparse_resultant(const ResultantProblem& problem, std::mt19937_64& rng) {
  problem.validate(true);
  return family_resultant(problem.supports, problem.polys, rng);
}

Rational ce_resultant(const ResultantProblem& problem, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sparse_resultant(problem, rng);
}

Rational monomial_resultant(const ResultantProblem& problem, const Point& b, std::mt19937_64& rng) {
  problem.validate(false);
  if (!contains_point(problem.supports[0], b)) throw DomainError("monomial exponent is not in A_0");
  std::vector<Polynomial> polys = problem.polys;
  polys[0] = Polynomial::monomial(b);
  EssentialResult ess = essential_subfamily(problem.supports);
  if (ess.status != EssentialStatus::unique) return 1;
  Charted ch = to_chart(problem.supports, polys, ess.indices);
  if (ess.indices.front() != 0 || ch.sets.size() == 1) return essential_resultant(ch.sets, ch.polys, rng);
  return essential_monomial_resultant(ch.sets, ch.polys, ch.chart.to_chart(minus(b, ch.bases[0])), rng);
}

TPencilPolynomial resultant_pencil(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                   std::mt19937_64& rng, bool normalized) {
  problem.validate(false);
  const std::size_t k = problem.ambient_dim();
  for (const Polynomial* f : {&q, &p}) {
    if (!f->is_zero() && f->arity() != k) throw DomainError("pencil polynomial arity does not match");
    for (const auto& [e, c] : f->terms())
      if (!contains_point(problem.supports[0], e)) throw DomainError("pencil polynomial has a term outside A_0");
  }
  EssentialResult ess = essential_subfamily(problem.supports);
  if (ess.status != EssentialStatus::unique) return TPencilPolynomial({Rational(1)});
  std::vector<Polynomial> polys = problem.polys;
  polys[0] = q;
  Charted ch = to_chart(problem.supports, polys, ess.indices);
  if (ess.indices.front() != 0) {
    Rational c = normalized ? essential_resultant(ch.sets, ch.polys, rng) : Rational(1);
    return TPencilPolynomial({c});
  }
  Polynomial cq = map_to_chart(ch, 0, q);
  Polynomial cp = map_to_chart(ch, 0, p);
  const std::size_t r = ch.sets.size() - 1;
  if (r == 0) return TPencilPolynomial({cq.coefficient(Point{}), cp.coefficient(Point{})});
  if (r == 1) {
    const std::size_t deg = static_cast<std::size_t>(ch.sets[1].back()[0] - ch.sets[1].front()[0]);
    std::vector<Rational> nodes = interpolation_nodes(deg + 1), values;
    for (const auto& t : nodes)
      values.push_back(sylvester_resultant(ch.sets[0], cq + cp * t, ch.sets[1], ch.polys[1]));
    return TPencilPolynomial::interpolate(nodes, values);
  }
  std::vector<Polynomial> others(ch.polys.begin() + 1, ch.polys.end());
  TPencilPolynomial x;
  for (int attempt = 0; attempt < 3; ++attempt) {
    CannyEmirisMatrix ce(ch.sets, others, rng);
    Rational factor = 1;
    if (normalized) {
      bool found = false;
      factor = ce_normalizer(ch.sets, ch.polys, ce, rng, found);
      if (!found) continue;
    }
    RationalMatrix s0 = ce.schur(cq), s1 = ce.schur(cp);
    std::vector<Rational> nodes = interpolation_nodes(s0.rows() + 1), values;
    for (const auto& t : nodes) values.push_back(factor * determinant(s0 + s1 * t));
    x = TPencilPolynomial::interpolate(nodes, values);
    if (!x.is_zero() || normalized) return x;
  }
  if (normalized) throw DegenerateError("every monomial specialization of the Canny-Emiris determinant vanishes");
  return x;
}

TPencilPolynomial resultant_pencil(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                   std::uint64_t seed, bool normalized) {
  std::mt19937_64 rng(seed);
  return resultant_pencil(problem, q, p, rng, normalized);
}

Rational log_derivative_at_zero(const TPencilPolynomial& x) {
  Rational x0 = x.coefficient(0);
  if (x0 == 0) throw ZeroDivisorError("X(0) = 0: the base polynomial vanishes at a common root");
  return x.coefficient(1) / x0;
}

Rational directional_derivative(const ResultantProblem& problem, const Polynomial& q, const Polynomial& p,
                                std::uint64_t seed) {
  return resultant_pencil(problem, q, p, seed, true).coefficient(1);
}

Rational facet_resultant(const std::vector<Support>& supports, const std::vector<Polynomial>& polys,
                         const Point& omega, std::mt19937_64& rng) {
  check_family(supports);
  if (polys.size() != supports.size()) throw DomainError("one polynomial per support is required");
  if (omega.size() != supports.front().front().size()) throw DomainError("normal has the wrong dimension");
  std::vector<Support> faces;
  std::vector<Polynomial> face_polys;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    faces.push_back(face_data(supports[i], omega).first);
    face_polys.push_back(restrict_to(polys[i], faces.back()));
  }
  return family_resultant(faces, face_polys, rng);
}

Rational facet_resultant(const std::vector<Support>& supports, const std::vector<Polynomial>& polys,
                         const Point& omega, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return facet_resultant(supports, polys, omega, rng);
}

Rational dense_resultant_with(const Polynomial& g, long big_d, const std::vector<Polynomial>& f) {
  std::vector<long> degrees{big_d};
  std::vector<Polynomial> polys{g};
  for (const auto& fi : f) {
    degrees.push_back(fi.degree());
    polys.push_back(fi);
  }
  return macaulay_resultant(degrees, polys);
}

Rational leading_forms_resultant(const std::vector<Polynomial>& f) {
  std::vector<long> degrees;
  std::vector<Polynomial> forms;
  for (const auto& fi : f) {
    degrees.push_back(fi.degree());
    forms.push_back(fi.homogeneous_part(fi.degree()));
  }
  return macaulay_resultant_forms(forms, degrees);
}

Rational discriminant_dense(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("empty system");
  long rho = 0;
  for (const auto& fi : f) {
    if (fi.degree() < 1) throw DomainError("discriminant needs positive degrees");
    rho += fi.degree() - 1;
  }
  Rational lead = leading_forms_resultant(f);
  if (lead == 0) throw DegenerateError("leading forms have a common zero at infinity");
  Polynomial jac = jacobian(f);
  return dense_resultant_with(jac, rho, f) / lead;
}

}  // namespace sparsetrace
