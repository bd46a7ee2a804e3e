#include "sparsetrace/random.hpp"

#include <set>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

Rational random_rational(std::mt19937_64& rng, const CoefficientRange& range) {
  if (range.numerator_bound < 1 || range.denominator_bound < 1) throw DomainError("empty coefficient range");
  std::uniform_int_distribution<long> num(-range.numerator_bound, range.numerator_bound - 1);
  std::uniform_int_distribution<long> den(1, range.denominator_bound);
  long n = num(rng);
  if (n >= 0) ++n;  // skip zero
  return make_rational(n, den(rng));
}

Polynomial random_polynomial(const Support& support, std::mt19937_64& rng, const CoefficientRange& range) {
  if (support.empty()) throw DomainError("empty support");
  Polynomial f(support.front().size());
  for (const auto& p : support) f.add_term(p, random_rational(rng, range));
  return f;
}

Support random_support(std::size_t k, std::size_t size, long box, std::mt19937_64& rng) {
  long total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= box + 1;
  if (static_cast<long>(size) > total) size = static_cast<std::size_t>(total);
  std::uniform_int_distribution<long> coord(0, box);
  std::set<Point> pts;
  while (pts.size() < size) {
    Point p(k);
    for (auto& x : p) x = coord(rng);
    pts.insert(p);
  }
  return Support(pts.begin(), pts.end());
}

}  // namespace sparsetrace
