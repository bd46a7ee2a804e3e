#include "sparsetrace/exponents.hpp"

#include <algorithm>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

namespace {

std::vector<Support> pick(const std::vector<Support>& sets, const std::vector<std::size_t>& idx) {
  std::vector<Support> out;
  for (auto i : idx) out.push_back(sets[i]);
  return out;
}

std::size_t rank_of(const std::vector<Support>& sets, unsigned mask) {
  std::vector<Support> sub;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (mask & (1u << i)) sub.push_back(sets[i]);
  if (sub.empty()) return 0;
  return difference_lattice(sub).rank();
}

Point translate(const Point& p, const Point& by) {
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - by[i];
  return r;
}

Integer exact_quotient(const Integer& num, const Integer& den, const char* what) {
  if (den == 0 || num % den != 0) throw DomainError(std::string("non-integer exponent: ") + what);
  return num / den;
}

}  // namespace

std::vector<std::vector<std::size_t>> essential_subfamilies(const std::vector<Support>& sets) {
  const std::size_t n = sets.size();
  if (n > 16) throw UnsupportedError("too many supports for essential-subfamily search");
  std::vector<std::size_t> rank(1u << n);
  for (unsigned m = 0; m < (1u << n); ++m) rank[m] = rank_of(sets, m);
  std::vector<std::vector<std::size_t>> out;
  for (unsigned m = 1; m < (1u << n); ++m) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(m));
    if (rank[m] + 1 != size) continue;
    bool ok = true;
    // proper nonempty submasks
    for (unsigned s = (m - 1) & m; s && ok; s = (s - 1) & m)
      if (rank[s] < static_cast<std::size_t>(__builtin_popcount(s))) ok = false;
    if (!ok) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) idx.push_back(i);
    out.push_back(idx);
  }
  return out;
}

EssentialResult essential_subfamily(const std::vector<Support>& sets) {
  auto all = essential_subfamilies(sets);
  if (all.empty()) return {EssentialStatus::none, {}};
  if (all.size() > 1) return {EssentialStatus::not_unique, {}};
  return {EssentialStatus::unique, all.front()};
}

EssentialResult essential_subfamily_containing(const std::vector<Support>& sets, std::size_t index) {
  EssentialResult r;
  for (auto& s : essential_subfamilies(sets)) {
    if (std::find(s.begin(), s.end(), index) == s.end()) continue;
    if (r.status == EssentialStatus::unique) return {EssentialStatus::not_unique, {}};
    r = {EssentialStatus::unique, s};
  }
  return r;
}

Integer exponent_e(const std::vector<Support>& sets) {
  EssentialResult ess = essential_subfamily(sets);
  if (ess.status != EssentialStatus::unique)
    throw DegenerateError("family has no unique essential subfamily");
  IntegerLattice total = difference_lattice(sets);
  IntegerLattice sat = saturate(difference_lattice(pick(sets, ess.indices)), total);
  const std::size_t R = total.rank(), s = sat.rank();
  if (R == s) return 1;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (std::find(ess.indices.begin(), ess.indices.end(), i) == ess.indices.end()) rest.push_back(i);
  if (rest.size() != R - s)
    throw DomainError("complement rank does not match the number of remaining supports");
  // coordinates in a basis of `total` whose first s rows span `sat`
  IntegerMatrix basis = complete_basis(sat, total);
  IntegerMatrix inv_rows(R, R);
  {
    // chart coordinates (w.r.t. total's HNF basis) of the completed basis
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < R; ++i) rows.push_back(*total.coordinates(basis.row(i)));
    inv_rows = unimodular_inverse(IntegerMatrix::from_rows(rows, R));
  }
  std::vector<Support> projected;
  for (auto i : rest) {
    std::vector<Point> pts;
    for (const auto& p : sets[i]) {
      IntVector c = *total.coordinates(to_int_vector(translate(p, sets[i].front())));
      IntegerMatrix row = IntegerMatrix::from_rows({c}, R) * inv_rows;
      Point q;
      for (std::size_t j = s; j < R; ++j) q.push_back(row(0, j).get_si());
      pts.push_back(q);
    }
    projected.push_back(make_support(pts));
  }
  return mixed_volume(projected);
}

Integer exponent_d(const std::vector<Support>& sets) {
  if (sets.empty()) throw DomainError("empty family");
  const std::size_t k = sets.front().front().size();
  IntegerLattice l = difference_lattice(sets);
  LatticeIndex idx = lattice_index(IntegerLattice::full(k), l);
  if (idx.infinite) throw DegenerateError("L(A_0, ..., A_k) is not of full rank");
  return idx.value * exponent_e(sets);
}

DeltaExponents delta_exponents(const Support& a_prime, const Point& a, const std::vector<Support>& supports) {
  if (a_prime.empty()) throw DomainError("empty A'");
  const std::size_t k = a.size();
  Support a0 = support_union(a_prime, {a});
  std::vector<Support> family = {a0};
  family.insert(family.end(), supports.begin(), supports.end());
  EssentialResult ess = essential_subfamily_containing(family, 0);
  if (ess.status != EssentialStatus::unique)
    throw DegenerateError("no unique essential subfamily containing A_0");
  DeltaExponents out;
  out.essential = ess.indices;
  std::vector<Support> ess_sets = pick(family, ess.indices);
  Integer e0 = exponent_e(ess_sets);

  std::vector<Support> prime_sets = ess_sets;
  prime_sets[0] = a_prime;
  IntegerLattice l0 = difference_lattice(ess_sets);
  IntegerLattice l_prime = difference_lattice(prime_sets);
  LatticeIndex base_idx = lattice_index(l0, l_prime);
  if (base_idx.infinite) throw DegenerateError("L(A', A_1, ..., A_j) has lower rank");
  Integer e_prime;
  try {
    e_prime = exponent_e(prime_sets);
  } catch (const DegenerateError&) {
    e_prime = 0;
  }
  out.delta_base = exact_quotient(e_prime * base_idx.value, e0, "delta_A'");

  // work in the chart of sat(L(A_0, ..., A_j)) so the sum P_1 + ... + P_j is
  // full-dimensional; the translation origin is a point of A_0
  const std::size_t j = ess_sets.size() - 1;
  if (j == 0) return out;
  IntegerLattice sat = saturate(l0, IntegerLattice::full(k));
  LatticeChart chart(sat);
  out.chart_basis = sat.basis();
  out.chart_is_ambient = sat.rank() == k && sat == IntegerLattice::full(k);
  const Point origin = a0.front();
  auto to_chart_set = [&](const Support& s, const Point& base) {
    std::vector<Point> pts;
    for (const auto& p : s) pts.push_back(chart.to_chart(translate(p, base)));
    return make_support(pts);
  };
  Support c_a0 = to_chart_set(a0, origin);
  Support c_prime = to_chart_set(a_prime, origin);
  std::vector<Support> c_rest;
  for (std::size_t i = 1; i < ess_sets.size(); ++i) c_rest.push_back(to_chart_set(ess_sets[i], ess_sets[i].front()));
  // l0 in chart coordinates
  std::vector<IntVector> l0_chart;
  for (std::size_t i = 0; i < l0.rank(); ++i) l0_chart.push_back(chart.to_chart(l0.basis().row(i)));
  IntegerLattice l0c(j, l0_chart);
  Integer l0_index = lattice_index(IntegerLattice::full(j), l0c).value;

  for (const auto& f : facets_of_sum(c_rest)) {
    FacetExponent fe;
    fe.normal = f.normal;
    fe.mu = support_min(c_prime, f.normal) - support_min(c_a0, f.normal);
    if (fe.mu < 0) throw DomainError("negative mu");
    std::vector<Support> faces;
    for (const auto& s : c_rest) faces.push_back(face_data(s, f.normal).first);
    IntVector w = to_int_vector(f.normal);
    IntegerLattice lface = difference_lattice(faces);
    IntegerLattice perp_l0 = orthogonal_sublattice(l0c, w);
    IntegerLattice perp_full = orthogonal_sublattice(IntegerLattice::full(j), w);
    Integer e_face;
    try {
      // e of the face family is intrinsic to its own lattice
      e_face = exponent_e(faces);
    } catch (const DegenerateError&) {
      fe.trivial_face = true;
      out.facets.push_back(fe);
      continue;
    } catch (const DomainError&) {
      fe.trivial_face = true;
      out.facets.push_back(fe);
      continue;
    }
    LatticeIndex idx_l0 = perp_l0.contains(lface) ? lattice_index(perp_l0, lface) : LatticeIndex{true, 0};
    LatticeIndex idx_full = lattice_index(perp_full, lface);
    if (idx_l0.infinite || idx_full.infinite) {
      fe.trivial_face = true;
      out.facets.push_back(fe);
      continue;
    }
    fe.delta = exact_quotient(fe.mu * e_face * idx_l0.value, e0, "delta_omega");
    fe.delta_ambient = exact_quotient(fe.mu * e_face * idx_full.value, e0 * l0_index, "delta_omega (ambient)");
    out.facets.push_back(fe);
  }
  return out;
}

}  // namespace sparsetrace
