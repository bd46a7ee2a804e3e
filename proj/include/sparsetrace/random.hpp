#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sparsetrace/polynomial.hpp"

namespace sparsetrace {

/// Numerators drawn from [-numerator_bound, numerator_bound] \ {0},
/// denominators from [1, denominator_bound].
struct CoefficientRange {
  long numerator_bound = 1000;
  long denominator_bound = 1000;
};

Rational random_rational(std::mt19937_64& rng, const CoefficientRange& range = {});

/// Polynomial with a nonzero random coefficient on every point of `support`.
Polynomial random_polynomial(const Support& support, std::mt19937_64& rng, const CoefficientRange& range = {});

/// `size` distinct points of [0, box]^k (size is clamped to the box size).
Support random_support(std::size_t k, std::size_t size, long box, std::mt19937_64& rng);

}  // namespace sparsetrace
