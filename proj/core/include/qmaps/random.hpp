#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmaps/algebra.hpp"

namespace qmaps {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20100101;

/// Nonzero rational a/b with 1 <= |a| <= max_num, 1 <= b <= max_den; with
/// `complex` the imaginary part is drawn the same way (possibly zero).
Scalar random_scalar(Rng& rng, int max_num = 4, int max_den = 8, bool complex = false);

/// Up to `max_terms` distinct basis words of length <= max_length with
/// random_scalar coefficients. At least one term.
Element random_element(const AlgebraPtr& algebra, Rng& rng, std::size_t max_terms, std::size_t max_length,
                       bool complex = true);

/// Random expression over `names` with rational and imaginary
/// coefficients, products, sums, parentheses and adjoints.
NCExpr random_expression(const std::vector<std::string>& names, Rng& rng, std::size_t max_terms = 4,
                         std::size_t max_length = 3);

}  // namespace qmaps
