#include "fo/polar.hpp"

#include "fo/errors.hpp"
#include "fo/linalg.hpp"

namespace fo {

std::array<Rational, 6> ProjLine::plucker_dual() const {
    auto coeff_of = [](const Poly& f, int i) {
        Monomial m(4);
        m.e[static_cast<size_t>(i)] = 1;
        return f.coeff(m);
    };
    std::array<Rational, 4> a, b;
    for (int i = 0; i < 4; ++i) {
        a[static_cast<size_t>(i)] = coeff_of(f1, i);
        b[static_cast<size_t>(i)] = coeff_of(f2, i);
    }
    std::array<Rational, 6> w;
    int t = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            w[static_cast<size_t>(t++)] = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]
                                        - a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)];
    return w;
}

Poly polar_plane(const Poly& q, const ProjPoint& p) {
    GramMatrix m = GramMatrix::from_quadric(q);
    QVec pv(p.x.begin(), p.x.end());
    QVec row = m.times(pv); // (M p)_j = coefficient of x_j in B_Q(p, .)
    Poly form(4);
    for (int j = 0; j < 4; ++j)
        form += row[static_cast<size_t>(j)] * Poly::variable(4, j);
    if (form.is_zero())
        throw VertexError("polar plane undefined: p is the vertex of the quadric");
    return form;
}

ProjLine polar_line(const QuadricPencil& pencil, const ProjPoint& p) {
    QVec pv(p.x.begin(), p.x.end());
    QVec r1 = pencil.m1.times(pv);
    QVec r2 = pencil.m2.times(pv);
    auto is_zero = [](const QVec& v) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    if (is_zero(r1) || is_zero(r2))
        throw VertexError("polar line undefined: p is the vertex of a pencil member");
    if (rank({r1, r2}) < 2)
        throw PreconditionError(
            "polar line undefined: the two polar planes are proportional "
            "(p is the vertex of a singular member of the pencil)");
    Poly f1(4), f2(4);
    for (int j = 0; j < 4; ++j) {
        f1 += r1[static_cast<size_t>(j)] * Poly::variable(4, j);
        f2 += r2[static_cast<size_t>(j)] * Poly::variable(4, j);
    }
    return ProjLine{f1, f2};
}

Poly intersection_quartic(const QuadricPencil& a, const QuadricPencil& b) {
    const GramMatrix* grams[4] = {&a.m1, &a.m2, &b.m1, &b.m2};
    std::vector<std::vector<Poly>> rows(4, std::vector<Poly>(4, Poly(4)));
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 4; ++j) {
            Poly entry(4); // (p^T M)_j as a linear form in p
            for (int i = 0; i < 4; ++i)
                entry += grams[r]->m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         Poly::variable(4, i);
            rows[static_cast<size_t>(r)][static_cast<size_t>(j)] = entry;
        }
    return poly_det(rows);
}

} // namespace fo
