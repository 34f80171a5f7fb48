#include "fo/fo_bracket.hpp"

#include <algorithm>

#include "fo/errors.hpp"
#include "fo/linalg.hpp"

namespace fo {

namespace {

void require_quadric(const Poly& q, const char* what) {
    if (q.nvars() != 4) throw InputError(std::string(what) + " must be a polynomial in 4 variables");
    if (!q.is_zero() && !q.is_homogeneous(2))
        throw InputError(std::string(what) + " must be homogeneous of degree 2");
}

// complementary pairs and the sign of the permutation (i, j, k, l)
struct MinorRule {
    int i, j, k, l, sign;
};
constexpr MinorRule kMinorTable[6] = {
    {0, 1, 2, 3, +1},
    {0, 2, 1, 3, -1},
    {0, 3, 1, 2, +1},
    {1, 2, 0, 3, +1},
    {1, 3, 0, 2, -1},
    {2, 3, 0, 1, +1},
};

// 20 cubic monomials in 4 variables, grlex-descending
std::vector<Monomial> cubic_basis() {
    std::vector<Monomial> basis;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b)
            for (int c = 3 - a - b; c >= 0; --c) {
                Monomial m(4);
                m.e = {static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                       static_cast<uint32_t>(c), static_cast<uint32_t>(3 - a - b - c)};
                basis.push_back(m);
            }
    std::sort(basis.begin(), basis.end(), [](const Monomial& x, const Monomial& y) {
        return GrlexDesc{}(x, y);
    });
    return basis;
}

} // namespace

FOBivector fo_bivector(const Poly& q1, const Poly& q2) {
    require_quadric(q1, "Q1");
    require_quadric(q2, "Q2");
    std::array<Poly, 4> d1{q1.derivative(0), q1.derivative(1), q1.derivative(2), q1.derivative(3)};
    std::array<Poly, 4> d2{q2.derivative(0), q2.derivative(1), q2.derivative(2), q2.derivative(3)};
    Multivector pi(4, 2);
    for (const MinorRule& r : kMinorTable) {
        Poly minor = d1[static_cast<size_t>(r.k)] * d2[static_cast<size_t>(r.l)]
                   - d1[static_cast<size_t>(r.l)] * d2[static_cast<size_t>(r.k)];
        if (r.sign < 0) minor = -minor;
        pi.add_term({r.i, r.j}, minor);
    }
    return FOBivector{q1, q2, std::move(pi)};
}

Poly phi_quartic(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4) {
    const Poly* qs[4] = {&q1, &q2, &q3, &q4};
    std::vector<std::vector<Poly>> grad(4, std::vector<Poly>(4, Poly(4)));
    for (int r = 0; r < 4; ++r) {
        require_quadric(*qs[r], "quadric");
        for (int c = 0; c < 4; ++c) grad[static_cast<size_t>(r)][static_cast<size_t>(c)] = qs[r]->derivative(c);
    }
    return poly_det(grad);
}

Poly schouten_quartic(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4) {
    Multivector t = schouten(fo_bivector(q1, q2).pi, fo_bivector(q3, q4).pi);
    return quartic_from_trivector(t);
}

BracketIdentityReport verify_bracket_identity(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4) {
    BracketIdentityReport r{schouten_quartic(q1, q2, q3, q4),
                     Rational(4) * phi_quartic(q1, q2, q3, q4), false};
    r.equal = r.lhs == r.rhs;
    return r;
}

JacobiReport verify_jacobi(const Multivector& bivector) {
    if (bivector.degree() != 2) throw InputError("jacobi check expects a bivector");
    JacobiReport r{schouten(bivector, bivector), false};
    r.is_poisson = r.jacobiator.is_zero();
    return r;
}

JacobiReport verify_jacobi(const FOBivector& b) { return verify_jacobi(b.pi); }

Multivector compatibility_bracket(const Poly& qa1, const Poly& qa2,
                                  const Poly& qb1, const Poly& qb2) {
    return schouten(fo_bivector(qa1, qa2).pi, fo_bivector(qb1, qb2).pi);
}

bool descends_to_zero(const Multivector& trivector) {
    return quartic_from_trivector(trivector).is_zero();
}

VanishingCertificate vanishing_certificate(const Poly& q1, const Poly& q2) {
    require_quadric(q1, "Q1");
    require_quadric(q2, "Q2");
    Multivector ewedge = wedge(euler_field(4), fo_bivector(q1, q2).pi);

    std::vector<Monomial> basis = cubic_basis();
    auto row_of = [&](const Monomial& m) {
        for (size_t r = 0; r < basis.size(); ++r)
            if (basis[r] == m) return r;
        throw InputError("unexpected monomial degree in certificate solve");
    };

    // columns: coefficients of x_i*Q1 (i = 0..3) then x_i*Q2
    QMat sys(basis.size(), QVec(8, Rational(0)));
    for (int i = 0; i < 4; ++i) {
        Poly c1 = Poly::variable(4, i) * q1;
        Poly c2 = Poly::variable(4, i) * q2;
        for (const auto& [m, c] : c1.terms()) sys[row_of(m)][static_cast<size_t>(i)] = c;
        for (const auto& [m, c] : c2.terms()) sys[row_of(m)][static_cast<size_t>(4 + i)] = c;
    }

    VanishingCertificate cert;
    const IdxTuple tuples[4] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    cert.all_verified = true;
    for (int t = 0; t < 4; ++t) {
        auto& entry = cert.entries[static_cast<size_t>(t)];
        entry.indices = tuples[t];
        entry.cubic = ewedge.component(tuples[t]);
        entry.l1 = Poly::zero(4);
        entry.l2 = Poly::zero(4);

        QVec rhs(basis.size(), Rational(0));
        for (const auto& [m, c] : entry.cubic.terms()) rhs[row_of(m)] = c;
        LinSolveResult sol = solve_linear(sys, rhs);
        if (sol.consistent) {
            for (int i = 0; i < 4; ++i) {
                entry.l1 += sol.solution[static_cast<size_t>(i)] * Poly::variable(4, i);
                entry.l2 += sol.solution[static_cast<size_t>(4 + i)] * Poly::variable(4, i);
            }
            entry.verified = entry.l1 * q1 + entry.l2 * q2 == entry.cubic;
        }
        cert.all_verified = cert.all_verified && entry.verified;
    }
    return cert;
}

namespace {

std::vector<Rational> conormal_bracket(
    const std::vector<std::pair<std::pair<int, int>, std::vector<Rational>>>& table,
    const std::vector<Rational>& u, const std::vector<Rational>& v) {
    std::vector<Rational> w(3, Rational(0));
    for (const auto& [pair, c] : table) {
        auto [i, j] = pair;
        Rational f = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)]
                   - u[static_cast<size_t>(j)] * v[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        for (int m = 0; m < 3; ++m) w[static_cast<size_t>(m)] += f * c[static_cast<size_t>(m)];
    }
    return w;
}

bool is_zero_vec(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

// w == alpha * u for some exact alpha?
std::optional<Rational> proportionality(const std::vector<Rational>& w,
                                        const std::vector<Rational>& u) {
    size_t lead = u.size();
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) { lead = i; break; }
    if (lead == u.size()) return std::nullopt;
    Rational alpha = w[lead] / u[lead];
    for (size_t i = 0; i < u.size(); ++i)
        if (w[i] != alpha * u[i]) return std::nullopt;
    return alpha;
}

} // namespace

ConormalStructure conormal_from_affine(const Multivector& affine,
                                       const std::array<std::vector<Rational>, 2>& plane) {
    if (affine.nvars() != 3 || affine.degree() != 2)
        throw InputError("conormal extraction expects an affine bivector in 3 variables");
    ConormalStructure cs;
    cs.plane = plane;

    cs.constant_part_zero = true;
    const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        Poly comp = affine.component({i, j});
        if (!comp.coeff(Monomial(3)).is_zero()) cs.constant_part_zero = false;
        std::vector<Rational> lin(3, Rational(0));
        for (int m = 0; m < 3; ++m) {
            Monomial mono(3);
            mono.e[static_cast<size_t>(m)] = 1;
            lin[static_cast<size_t>(m)] = comp.coeff(mono);
        }
        cs.brackets.push_back({{i, j}, std::move(lin)});
    }

    cs.plane_abelian = is_zero_vec(conormal_bracket(cs.brackets, cs.plane[0], cs.plane[1]));

    // smallest standard covector completing the plane to a basis
    for (int m = 0; m < 3; ++m) {
        QMat probe{cs.plane[0], cs.plane[1], QVec(3, Rational(0))};
        probe[2][static_cast<size_t>(m)] = Rational(1);
        if (rank(probe) == 3) { cs.complement_axis = m; break; }
    }

    if (cs.complement_axis >= 0) {
        QVec y(3, Rational(0));
        y[static_cast<size_t>(cs.complement_axis)] = Rational(1);
        auto a1 = proportionality(conormal_bracket(cs.brackets, y, cs.plane[0]), cs.plane[0]);
        auto a2 = proportionality(conormal_bracket(cs.brackets, y, cs.plane[1]), cs.plane[1]);
        if (a1 && a2 && *a1 == *a2 && !a1->is_zero()) {
            cs.ad_scalar_ok = true;
            cs.ad_scalar = *a1;
        }
    }

    // Jacobi for the linearized bracket: one independent triple in dim 3
    {
        QVec e0(3, Rational(0)), e1(3, Rational(0)), e2(3, Rational(0));
        e0[0] = e1[1] = e2[2] = Rational(1);
        auto br = [&](const QVec& u, const QVec& v) { return conormal_bracket(cs.brackets, u, v); };
        QVec jac = br(br(e0, e1), e2);
        QVec t2 = br(br(e1, e2), e0);
        QVec t3 = br(br(e2, e0), e1);
        for (int m = 0; m < 3; ++m)
            jac[static_cast<size_t>(m)] += t2[static_cast<size_t>(m)] + t3[static_cast<size_t>(m)];
        cs.jacobi_ok = is_zero_vec(jac);
    }
    return cs;
}

LinearizeResult linearize_at(const Poly& q1, const Poly& q2, const ProjPoint& p) {
    require_quadric(q1, "Q1");
    require_quadric(q2, "Q2");
    std::span<const Rational> pt(p.x.data(), 4);
    if (!q1.evaluate(pt).is_zero() || !q2.evaluate(pt).is_zero())
        throw PreconditionError("point does not lie on the base curve (Q1(p) and Q2(p) must vanish)");

    // gradients at p
    QMat grads(2, QVec(4, Rational(0)));
    for (int i = 0; i < 4; ++i) {
        grads[0][static_cast<size_t>(i)] = q1.derivative(i).evaluate(pt);
        grads[1][static_cast<size_t>(i)] = q2.derivative(i).evaluate(pt);
    }
    if (rank(grads) < 2) {
        LinearizeResult r;
        r.status = LinearizeResult::Status::singular_point;
        r.message = "p is a singular point of the base locus (dependent gradients)";
        return r;
    }

    // chart: largest |coordinate|, ties to the smallest index
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (p.x[static_cast<size_t>(i)].abs() > p.x[static_cast<size_t>(k)].abs()) k = i;

    std::vector<Rational> chart_point;
    Rational pk_inv = Rational(1) / p.x[static_cast<size_t>(k)];
    for (int i = 0; i < 4; ++i)
        if (i != k) chart_point.push_back(p.x[static_cast<size_t>(i)] * pk_inv);

    Multivector affine = dehomogenize(fo_bivector(q1, q2).pi, k + 1);

    // translate p to the origin
    std::vector<Poly> shift;
    for (int j = 0; j < 3; ++j)
        shift.push_back(Poly::variable(3, j) + Poly::constant(3, chart_point[static_cast<size_t>(j)]));
    Multivector shifted(3, 2);
    for (const auto& [idx, c] : affine.components()) shifted.add_term(idx, c.substitute(shift));

    // (T_pE)^perp: chart gradients of the quadrics at the chart point
    std::vector<Poly> chart_images;
    {
        int pos = 0;
        for (int i = 0; i < 4; ++i) {
            if (i == k) chart_images.push_back(Poly::constant(3, Rational(1)));
            else chart_images.push_back(Poly::variable(3, pos++));
        }
    }
    std::array<std::vector<Rational>, 2> plane;
    const Poly* qs[2] = {&q1, &q2};
    for (int a = 0; a < 2; ++a) {
        Poly qc = qs[a]->substitute(chart_images);
        std::vector<Rational> g(3, Rational(0));
        for (int j = 0; j < 3; ++j)
            g[static_cast<size_t>(j)] = qc.derivative(j).evaluate(
                std::span<const Rational>(chart_point.data(), 3));
        plane[static_cast<size_t>(a)] = std::move(g);
    }

    ConormalStructure cs = conormal_from_affine(shifted, plane);
    cs.chart = k + 1;
    {
        int pos = 0;
        for (int i = 0; i < 4; ++i)
            if (i != k) cs.axis_vars[static_cast<size_t>(pos++)] = i + 1;
    }
    cs.chart_point = std::move(chart_point);

    LinearizeResult res;
    res.status = LinearizeResult::Status::ok;
    res.structure = std::move(cs);
    return res;
}

} // namespace fo
