#include "sparsetrace/simplex.hpp"

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

namespace {

struct Tableau {
  // rows_ x (cols + 1); last column is the right-hand side
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> d(cost.begin(), cost.end());
    d.resize(cols, Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (t[i][j] != 0) d[j] -= cb * t[i][j];
    }
    return d;
  }

  // Runs Bland's rule over columns < active; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t active) {
    while (true) {
      std::vector<Rational> d = reduced_costs(cost);
      std::size_t enter = active;
      for (std::size_t j = 0; j < active; ++j)
        if (d[j] < 0) {
          enter = j;
          break;
        }
      if (enter == active) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw DomainError("LP dimension mismatch");
  Tableau tab;
  tab.cols = n + m;
  tab.t.assign(m, std::vector<Rational>(n + m + 1, Rational(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -a(i, j) : a(i, j);
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }
  // phase I: minimize the sum of artificials
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, n + m);
  LpResult res;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n && tab.t[i][n + m] != 0) return res;
  // drive zero-level artificials out of the basis; drop redundant rows
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && tab.t[i][j] == 0) ++j;
    if (j < n) {
      tab.pivot(i, j);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<long>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
    }
  }
  std::vector<Rational> cost(c);
  cost.resize(n + m, Rational(0));
  if (!tab.optimize(cost, n)) {
    res.status = LpResult::Status::unbounded;
    return res;
  }
  res.status = LpResult::Status::optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    res.x[tab.basis[i]] = tab.t[i][n + m];
    if (tab.t[i][n + m] == 0) res.degenerate = true;
  }
  res.basis = tab.basis;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  std::vector<Rational> d = tab.reduced_costs(cost);
  res.unique = true;
  std::vector<bool> is_basic(n, false);
  for (auto j : tab.basis) is_basic[j] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_basic[j] && d[j] == 0) res.unique = false;
  return res;
}

}  // namespace sparsetrace
