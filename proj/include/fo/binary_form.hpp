#pragma once

#include <vector>

#include "fo/polynomial.hpp"

namespace fo {

struct SquarefreeResult {
    bool squarefree = false;
    Poly part; // product of the distinct projective linear factors, monic-normalized
};

/// Squarefree test for a nonzero homogeneous binary form f(x1,x2):
/// true iff f has no repeated projective root. The repeated part is
/// gcd(f, df/dx1, df/dx2); the returned part is f divided by it.
SquarefreeResult binary_form_squarefree(const Poly& f);

struct ProjRoot {
    Rational lambda, mu; // normalized: (t, 1) affine, (1, 0) at infinity
    int multiplicity = 1;
};

/// All rational projective roots of a homogeneous binary form, with
/// multiplicities. Complete: divisor enumeration over the integer-primitive
/// coefficients (trial division + Pollard rho).
std::vector<ProjRoot> rational_projective_roots(const Poly& f);

/// gcd of two homogeneous binary forms, normalized with leading coefficient 1
/// (gcd(f, 0) = monic f). Degree-0 result means coprime.
Poly binary_gcd(const Poly& f, const Poly& g);

/// Exact division of homogeneous binary forms; throws if not divisible.
Poly binary_divide_exact(const Poly& f, const Poly& g);

} // namespace fo
