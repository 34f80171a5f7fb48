#pragma once

#include "fo/pencil.hpp"
#include "fo/proj.hpp"

namespace fo {

/// The linear form x -> B_Q(p, x) = (1/2) sum_i d_iQ(p) x_i. Throws
/// VertexError when the form vanishes identically (p is the vertex of a
/// singular Q).
Poly polar_plane(const Poly& q, const ProjPoint& p);

/// Intersection of the two polar planes over the pencil. Independent of the
/// chosen pencil basis (same 2-dim span of forms). Throws VertexError /
/// PreconditionError when the planes degenerate.
ProjLine polar_line(const QuadricPencil& pencil, const ProjPoint& p);

/// The quartic cutting out the surface of points whose two polar lines meet:
/// det of the 4x4 matrix with rows B_{Qa1}(p,.), B_{Qa2}(p,.), B_{Qb1}(p,.),
/// B_{Qb2}(p,.) as linear forms in p. Equals phi_quartic / 16 exactly (each
/// row is half a gradient).
Poly intersection_quartic(const QuadricPencil& a, const QuadricPencil& b);

} // namespace fo
