#pragma once

// Seeded generators of small random elements for property checks.

#include <random>

#include "gwa/ambient.hpp"
#include "gwa/poly.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

/// Numerator in [-9, 9], denominator in [1, 4].
Rational random_rational(std::mt19937& rng);
/// Degree <= max_degree, each coefficient non-zero with probability 2/3.
UniPoly random_poly(std::mt19937& rng, int max_degree);
/// Up to three terms X^d f with |d| <= max_power and deg f <= max_degree.
GwaElem random_gwa_elem(const GwaAlgebra& alg, std::mt19937& rng, int max_power, int max_degree);
/// Up to three terms x(-/+)^|m| f with |m| <= max_power, f of total degree <= max_degree.
AmbElem random_amb_elem(const AmbAlgebra& alg, std::mt19937& rng, int max_power, int max_degree);
/// A random homogeneous element of Z-degree d built from at most three monomials.
AmbElem random_homogeneous(const AmbAlgebra& alg, std::mt19937& rng, int d, int max_size);

}  // namespace gwa
