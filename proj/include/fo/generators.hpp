#pragma once

#include <utility>
#include <vector>

#include "fo/multivector.hpp"
#include "fo/pencil.hpp"
#include "fo/polynomial.hpp"
#include "fo/prng.hpp"

namespace fo {

/// Random homogeneous quadric in 4 variables, integer coefficients in
/// [-9, 9].
Poly random_quadric(SplitMix64& rng);

/// Random quadric vanishing at the given point (the x4^2 coefficient is
/// solved for; the point must have a nonzero last coordinate).
Poly random_quadric_through(SplitMix64& rng, const std::vector<Rational>& point);

/// Draws until is_generic_pencil passes (throws after max_tries).
QuadricPencil random_generic_pencil(SplitMix64& rng, int max_tries = 200);

/// Generic pencil with four rational vertices: a diagonal pencil with
/// distinct entries pushed through a random integer congruence x -> g x.
QuadricPencil random_transformed_diagonal_pencil(SplitMix64& rng);

/// Two generic pencils spanning rank 4 together (incompatible side).
std::pair<QuadricPencil, QuadricPencil> random_rank4_generic_pair(SplitMix64& rng);

/// Two generic pencils inside a common 3-dim subspace of quadrics
/// (compatible side of the pencil-geometry criterion).
std::pair<QuadricPencil, QuadricPencil> random_rank3_generic_pair(SplitMix64& rng);

/// Random multivector of the given degree on 4 variables; coefficients of
/// degree <= 2 with small integer coefficients.
Multivector random_multivector(SplitMix64& rng, int degree);

/// Random bivector with homogeneous quadratic coefficients (descends to P^3).
Multivector random_weight0_bivector(SplitMix64& rng);

/// Random invertible linear substitution as 4 linear forms (images of the
/// variables), plus its matrix determinant.
std::pair<std::vector<Poly>, Rational> random_linear_substitution(SplitMix64& rng);

} // namespace fo
