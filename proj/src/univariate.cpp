#include "sparsetrace/univariate.hpp"

#include <sstream>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

TPencilPolynomial::TPencilPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPencilPolynomial TPencilPolynomial::interpolate(const std::vector<Rational>& nodes,
                                                 const std::vector<Rational>& values) {
  if (nodes.size() != values.size()) throw DomainError("interpolation needs one value per node");
  const std::size_t n = nodes.size();
  std::vector<Rational> dd = values;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational gap = nodes[i] - nodes[i - j];
      if (gap == 0) throw DomainError("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
      if (i == j) break;
    }
  // expand the Newton form by Horner steps
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t step = n; step-- > 0;) {
    std::vector<Rational> next(n, Rational(0));
    // c <- c * (T - nodes[step]) + dd[step]
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      if (i + 1 < n) next[i + 1] += c[i];
      next[i] -= c[i] * nodes[step];
    }
    next[0] += dd[step];
    c = std::move(next);
  }
  return TPencilPolynomial(std::move(c));
}

Rational TPencilPolynomial::evaluate(const Rational& t) const {
  Rational v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

std::string TPencilPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].get_str() << ")";
    if (i > 0) out << "*T" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.str();
}

std::vector<Rational> interpolation_nodes(std::size_t count) {
  std::vector<Rational> nodes;
  for (long i = 0; nodes.size() < count; ++i) {
    if (i == 0) {
      nodes.emplace_back(0);
      continue;
    }
    nodes.emplace_back(i);
    if (nodes.size() < count) nodes.emplace_back(-i);
  }
  return nodes;
}

}  // namespace sparsetrace
