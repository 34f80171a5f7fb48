#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fo/multivector.hpp"
#include "fo/polynomial.hpp"
#include "fo/proj.hpp"

namespace fo {

/// The Jacobian Poisson bivector of an ordered pair of quadrics on P^3:
/// {x_i, x_j} is the coefficient of vol in dx_i^dx_j^dQ1^dQ2, i.e. the
/// complementary 2x2 Jacobian minor with the permutation sign of {i,j,k,l}.
struct FOBivector {
    Poly q1, q2;
    Multivector pi; // degree 2, homogeneous quadratic coefficients
};

FOBivector fo_bivector(const Poly& q1, const Poly& q2);

/// The quartic det[d_j Q_i(x)] (rows = gradients); alternating multilinear
/// in the four quadrics.
Poly phi_quartic(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4);

/// quartic_from_trivector(schouten(Pi(q1,q2), Pi(q3,q4))).
Poly schouten_quartic(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4);

struct BracketIdentityReport {
    Poly lhs, rhs;
    bool equal = false;
};

/// Checks the identity  [Pi_{Q1=Q2=0}, Pi_{Q3=Q4=0}] = 4 * Phi(Q1^Q2^Q3^Q4)
/// as an exact polynomial equality.
BracketIdentityReport verify_bracket_identity(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4);

struct JacobiReport {
    Multivector jacobiator; // schouten(pi, pi)
    bool is_poisson = false;
};

JacobiReport verify_jacobi(const FOBivector& b);
JacobiReport verify_jacobi(const Multivector& bivector);

/// Full Schouten bracket trivector of the two pencils' bivectors. The
/// brackets are compatible on P^3 iff this descends to zero, i.e. iff its
/// quartic vanishes (Euler-degenerate terms do not obstruct).
Multivector compatibility_bracket(const Poly& qa1, const Poly& qa2,
                                  const Poly& qb1, const Poly& qb2);

/// True when the trivector pushes forward to zero on P^3.
bool descends_to_zero(const Multivector& trivector);

/// Exact certificate that E^Pi has all four cubic components in the ideal
/// (Q1, Q2): component = l1*Q1 + l2*Q2 with linear forms l1, l2.
struct VanishingCertificate {
    struct Entry {
        IdxTuple indices;  // the trivector component (0-based, increasing)
        Poly cubic;        // coefficient of E^Pi
        Poly l1, l2;       // cubic == l1*q1 + l2*q2, exactly
        bool verified = false;
    };
    std::array<Entry, 4> entries;
    bool all_verified = false;
};

VanishingCertificate vanishing_certificate(const Poly& q1, const Poly& q2);

/// Lie algebra structure on the 3-dim conormal space at a vanishing point
/// p of the bivector, read off in the chart where the largest coordinate of
/// p is 1 (ties: smallest index), after translating p to the origin.
struct ConormalStructure {
    int chart = 1;                      // 1-based chart variable
    std::array<int, 3> axis_vars{};     // original 1-based labels of chart axes
    std::vector<Rational> chart_point;  // p in chart coordinates (3 entries)

    // [z_i, z_j] = sum_m c[(i,j)][m] z_m over 0-based chart axis pairs i<j
    std::vector<std::pair<std::pair<int, int>, std::vector<Rational>>> brackets;

    // rows span (T_pE)^perp: images of the two quadric gradients at p
    std::array<std::vector<Rational>, 2> plane;

    bool constant_part_zero = false; // (a) the bivector vanishes at p
    bool plane_abelian = false;      // (b)
    bool ad_scalar_ok = false;       // (c) ad(y)|plane = ad_scalar * id, nonzero
    int complement_axis = -1;        // 0-based chart axis chosen as y
    Rational ad_scalar;

    bool jacobi_ok = false; // the linearized bracket is a Lie bracket
};

struct LinearizeResult {
    enum class Status { ok, singular_point };
    Status status = Status::ok;
    std::string message;
    std::optional<ConormalStructure> structure;
};

/// Requires q1(p) = q2(p) = 0 (else PreconditionError). Reports
/// singular_point when the two gradients at p are dependent.
LinearizeResult linearize_at(const Poly& q1, const Poly& q2, const ProjPoint& p);

/// Conormal extraction from an affine bivector (3 variables, p already at
/// the origin) and the distinguished 2-dim plane of covectors. linearize_at
/// is chart + shift + this.
ConormalStructure conormal_from_affine(const Multivector& affine,
                                       const std::array<std::vector<Rational>, 2>& plane);

} // namespace fo
