#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fo/linalg.hpp"
#include "fo/polynomial.hpp"
#include "fo/proj.hpp"

namespace fo {

/// Symmetric Gram matrix of a quadratic form: Q(x) = x^T M x, so the
/// off-diagonal entries carry 1/2 factors and B_Q(u,v) = u^T M v.
struct GramMatrix {
    std::array<std::array<Rational, 4>, 4> m{};

    static GramMatrix from_quadric(const Poly& q);
    Poly to_quadric() const;
    std::array<std::array<double, 4>, 4> to_double() const;

    QVec times(const QVec& v) const;        // M v
    Rational bilinear(const QVec& u, const QVec& v) const; // u^T M v
};

/// Ordered pair of independent quadratic forms with their Gram matrices;
/// the line they span in the P^9 of quadrics.
struct QuadricPencil {
    Poly q1, q2;
    GramMatrix m1, m2;

    QuadricPencil(Poly q1_, Poly q2_);
};

/// det(lambda*M1 + mu*M2) as an exact binary quartic (variables x1 = lambda,
/// x2 = mu). Identically zero for pencils with a common kernel.
Poly discriminant_form(const QuadricPencil& p);

struct GenericityReport {
    bool generic = false;
    enum class Diagnosis { ok, zero_discriminant, repeated_root } diagnosis = Diagnosis::ok;
    Poly discriminant;
    std::optional<Poly> squarefree_part; // present for repeated_root
    std::string message;
};

/// Generic <=> the discriminant is a squarefree binary quartic, i.e. the
/// base curve is a smooth elliptic quartic.
GenericityReport is_generic_pencil(const QuadricPencil& p);

struct SingularMember {
    Rational lambda, mu; // projective root of the discriminant, (t,1) or (1,0)
    ProjPoint vertex;    // kernel of lambda*M1 + mu*M2
};

struct SingularMembersReport {
    std::vector<SingularMember> rational_members;
    int irrational_count = 0; // 4 - #rational, certified by the discriminant
    Poly discriminant;
};

/// Requires a generic pencil. Rational singular members come with exact
/// vertices; irrational ones are reported by count with the discriminant as
/// the exact certificate.
SingularMembersReport rational_singular_members(const QuadricPencil& p);

/// Rank of the coefficient vectors in the 10-dimensional space of quadrics.
int span_rank(const std::vector<Poly>& quadrics);

/// The two pencil lines meet in the P^9 of quadrics <=> the four quadrics
/// span rank <= 3 <=> the brackets are compatible (for generic pencils).
bool pairwise_compatible(const QuadricPencil& a, const QuadricPencil& b);

struct CollectionClassification {
    enum class Kind { concurrent, coplanar, incompatible };
    Kind kind;
    std::optional<Poly> shared_quadric;       // concurrent
    std::vector<Poly> subspace_basis;         // coplanar: basis of W
    std::optional<std::pair<int, int>> witness; // incompatible pair, 0-based
    bool smooth_curve_semantics = true; // false when some pencil is non-generic:
                                        // the result is linear-algebra only
    std::vector<bool> generic;          // per-pencil genericity
};

/// Classifies a collection of >= 2 pencils: pairwise-intersecting lines are
/// either concurrent (a shared quadric) or coplanar (a common 3-dim W).
CollectionClassification classify_collection(const std::vector<QuadricPencil>& pencils);

/// Coordinates of a quadric in the canonical (grlex-descending) degree-2
/// monomial basis of the 10-dim quadric space.
QVec quadric_coords(const Poly& q);
Poly quadric_from_coords(const QVec& coords);

} // namespace fo
