#pragma once

#include <array>

#include "fo/errors.hpp"
#include "fo/polynomial.hpp"

namespace fo {

/// Rational point of P^3, normalized so the first nonzero coordinate is 1;
/// equality is coordinate equality.
struct ProjPoint {
    std::array<Rational, 4> x;

    explicit ProjPoint(std::array<Rational, 4> coords) : x(std::move(coords)) {
        int lead = -1;
        for (int i = 0; i < 4; ++i)
            if (!x[static_cast<size_t>(i)].is_zero()) { lead = i; break; }
        if (lead < 0) throw InputError("projective point needs a nonzero coordinate");
        Rational inv = Rational(1) / x[static_cast<size_t>(lead)];
        for (auto& c : x) c *= inv;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x; }
};

/// Line in P^3 as the common zero locus of two independent linear forms.
struct ProjLine {
    Poly f1, f2; // independent linear forms in 4 variables

    /// Dual Pluecker coordinates w_ij = a_i b_j - a_j b_i for i<j in the
    /// order (12,13,14,23,24,34); they satisfy the Pluecker relation
    /// w12*w34 - w13*w24 + w14*w23 = 0 exactly.
    std::array<Rational, 6> plucker_dual() const;
};

} // namespace fo
