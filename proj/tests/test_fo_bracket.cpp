#include <doctest.h>

#include "fo/fo_bracket.hpp"
#include "fo/generators.hpp"
#include "fo/linalg.hpp"
#include "fo/prng.hpp"

#include "test_util.hpp"

using namespace fo;

namespace {

// Independent oracle for the bivector: expand dx_i^dx_j^dQ1^dQ2 as a full
// Levi-Civita sum over the remaining index pairs.
int eps4(int a, int b, int c, int d) {
    int perm[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (perm[i] == perm[j]) return 0;
            if (perm[i] > perm[j]) sign = -sign;
        }
    return sign;
}

Poly bivector_component_oracle(const Poly& q1, const Poly& q2, int i, int j) {
    Poly acc(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int s = eps4(i, j, a, b);
            if (s == 0) continue;
            Poly term = q1.derivative(a) * q2.derivative(b);
            acc += s > 0 ? term : -term;
        }
    return acc;
}

// Independent oracle for phi: signed sum over all permutations of the
// gradient matrix.
Poly phi_oracle(const Poly& q1, const Poly& q2, const Poly& q3, const Poly& q4) {
    const Poly* qs[4] = {&q1, &q2, &q3, &q4};
    Poly acc(4);
    int perm[4] = {0, 1, 2, 3};
    do {
        int s = eps4(perm[0], perm[1], perm[2], perm[3]);
        Poly term = Poly::constant(4, Q(s));
        for (int r = 0; r < 4; ++r) term = term * qs[r]->derivative(perm[static_cast<size_t>(r)]);
        acc += term;
    } while (std::next_permutation(perm, perm + 4));
    return acc;
}

// Direct Jacobi-identity evaluation on coordinate functions for a bivector:
// J(f,g,h) = {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Poly poisson_bracket(const Multivector& pi, const Poly& f, const Poly& g) {
    Poly acc(4);
    for (const auto& [idx, c] : pi.components()) {
        int a = idx[0], b = idx[1];
        acc += c * (f.derivative(a) * g.derivative(b) - f.derivative(b) * g.derivative(a));
    }
    return acc;
}

Poly jacobiator_oracle(const Multivector& pi, int i, int j, int k) {
    Poly xi = Poly::variable(4, i), xj = Poly::variable(4, j), xk = Poly::variable(4, k);
    return poisson_bracket(pi, xi, poisson_bracket(pi, xj, xk)) +
           poisson_bracket(pi, xj, poisson_bracket(pi, xk, xi)) +
           poisson_bracket(pi, xk, poisson_bracket(pi, xi, xj));
}

} // namespace

TEST_CASE("fo_bivector worked examples") {
    // (x1^2, x1*x2): only {x3,x4} = 2*x1^2
    Multivector pi1 = fo_bivector(P4("x1^2"), P4("x1*x2")).pi;
    Multivector expect1(4, 2);
    expect1.add_term({2, 3}, P4("2*x1^2"));
    CHECK(pi1 == expect1);

    // (x1*x3, x1*x4): {x1,x2} = x1^2, {x2,x3} = x1*x3, {x2,x4} = x1*x4
    Multivector pi2 = fo_bivector(P4("x1*x3"), P4("x1*x4")).pi;
    Multivector expect2(4, 2);
    expect2.add_term({0, 1}, P4("x1^2"));
    expect2.add_term({1, 2}, P4("x1*x3"));
    expect2.add_term({1, 3}, P4("x1*x4"));
    CHECK(pi2 == expect2);
}

TEST_CASE("fo_bivector diagonal closed form") {
    // (sum x_i^2, sum a_i x_i^2): {x_i,x_j} = 4*sgn(ijkl)*(a_l - a_k)*x_k*x_l
    long a[4] = {1, 2, 3, 4};
    Poly q1 = P4("x1^2+x2^2+x3^2+x4^2");
    Poly q2 = P4("x1^2+2*x2^2+3*x3^2+4*x4^2");
    Multivector pi = fo_bivector(q1, q2).pi;
    CHECK(pi.component({0, 1}) == Q(4 * (a[3] - a[2])) * P4("x3*x4"));
    CHECK(pi.component({0, 2}) == Q(-4 * (a[3] - a[1])) * P4("x2*x4"));
    CHECK(pi.component({0, 3}) == Q(4 * (a[2] - a[1])) * P4("x2*x3"));
    CHECK(pi.component({1, 2}) == Q(4 * (a[3] - a[0])) * P4("x1*x4"));
    CHECK(pi.component({1, 3}) == Q(-4 * (a[2] - a[0])) * P4("x1*x3"));
    CHECK(pi.component({2, 3}) == Q(4 * (a[1] - a[0])) * P4("x1*x2"));
}

TEST_CASE("fo_bivector matches the 4-form expansion oracle") {
    SplitMix64 rng(101);
    for (int t = 0; t < 20; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        Multivector pi = fo_bivector(q1, q2).pi;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(pi.component({i, j}) == bivector_component_oracle(q1, q2, i, j));
    }
}

TEST_CASE("fo_bivector is bilinear, alternating and pencil-dependent") {
    SplitMix64 rng(103);
    for (int t = 0; t < 15; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng), q3 = random_quadric(rng);
        Rational c(rng.range(-9, 9));
        CHECK(fo_bivector(q2, q1).pi == -fo_bivector(q1, q2).pi);
        CHECK(fo_bivector(q1, q2 + c * q1).pi == fo_bivector(q1, q2).pi);
        CHECK(fo_bivector(q1, q2 + q3).pi == fo_bivector(q1, q2).pi + fo_bivector(q1, q3).pi);
        CHECK(fo_bivector(q1, c * q2).pi == c * fo_bivector(q1, q2).pi);
    }
}

TEST_CASE("phi worked examples") {
    CHECK(phi_quartic(P4("x1^2"), P4("x1*x2"), P4("x1*x3"), P4("x1*x4")) == P4("2*x1^4"));
    // repeated quadric kills phi
    CHECK(phi_quartic(P4("x1^2"), P4("x1^2"), P4("x1*x3"), P4("x1*x4")).is_zero());
}

TEST_CASE("phi diagonal closed form and permutation oracle") {
    SplitMix64 rng(107);
    for (int t = 0; t < 10; ++t) {
        QMat a(4, QVec(4));
        std::vector<Poly> qs;
        for (int k = 0; k < 4; ++k) {
            Poly q(4);
            for (int i = 0; i < 4; ++i) {
                a[static_cast<size_t>(k)][static_cast<size_t>(i)] = Q(rng.range(-5, 5));
                Monomial m(4);
                m.e[static_cast<size_t>(i)] = 2;
                q.add_term(m, a[static_cast<size_t>(k)][static_cast<size_t>(i)]);
            }
            qs.push_back(q);
        }
        Poly phi = phi_quartic(qs[0], qs[1], qs[2], qs[3]);
        CHECK(phi == Q(16) * det(a) * P4("x1*x2*x3*x4"));
        CHECK(phi == phi_oracle(qs[0], qs[1], qs[2], qs[3]));
    }
    for (int t = 0; t < 10; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        Poly q3 = random_quadric(rng), q4 = random_quadric(rng);
        CHECK(phi_quartic(q1, q2, q3, q4) == phi_oracle(q1, q2, q3, q4));
    }
}

TEST_CASE("phi equivariance under linear substitution") {
    SplitMix64 rng(109);
    for (int t = 0; t < 8; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        Poly q3 = random_quadric(rng), q4 = random_quadric(rng);
        auto [images, detg] = random_linear_substitution(rng);
        Poly lhs = phi_quartic(q1.substitute(images), q2.substitute(images),
                               q3.substitute(images), q4.substitute(images));
        Poly rhs = detg * phi_quartic(q1, q2, q3, q4).substitute(images);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("schouten_quartic anchor and degeneracies") {
    CHECK(schouten_quartic(P4("x1^2"), P4("x1*x2"), P4("x1*x3"), P4("x1*x4")) == P4("8*x1^4"));

    SplitMix64 rng(113);
    for (int t = 0; t < 5; ++t) {
        Poly q = random_quadric(rng), qp = random_quadric(rng);
        CHECK(schouten_quartic(q, qp, q, qp).is_zero());
    }
}

TEST_CASE("bracket quartic equals 4*phi on random quadruples") {
    SplitMix64 rng(127);
    for (int t = 0; t < 30; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        Poly q3 = random_quadric(rng), q4 = random_quadric(rng);
        BracketIdentityReport rep = verify_bracket_identity(q1, q2, q3, q4);
        CHECK(rep.equal);
        CHECK(rep.lhs == Q(4) * phi_quartic(q1, q2, q3, q4));
    }
    // rank <= 3 quadruple: both sides vanish
    SplitMix64 rng2(131);
    for (int t = 0; t < 10; ++t) {
        Poly q1 = random_quadric(rng2), q2 = random_quadric(rng2);
        Poly q4 = q1 + q2;
        BracketIdentityReport rep = verify_bracket_identity(q1, q2, random_quadric(rng2), q4);
        CHECK(rep.equal);
        CHECK(rep.lhs.is_zero());
        CHECK(rep.rhs.is_zero());
    }
}

TEST_CASE("jacobi: FO bivectors are Poisson, the control is not") {
    CHECK(verify_jacobi(fo_bivector(P4("x1^2"), P4("x1*x2"))).is_poisson);

    SplitMix64 rng(137);
    for (int t = 0; t < 15; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        CHECK(verify_jacobi(fo_bivector(q1, q2)).is_poisson);
    }

    // x3 d1^d2 + x1 d1^d3 genuinely fails Jacobi: jacobiator 2*x3 d1^d2^d3
    Multivector control(4, 2);
    control.add_term({0, 1}, P4("x3"));
    control.add_term({0, 2}, P4("x1"));
    JacobiReport rep = verify_jacobi(control);
    CHECK(!rep.is_poisson);
    Multivector expect(4, 3);
    expect.add_term({0, 1, 2}, P4("2*x3"));
    CHECK(rep.jacobiator == expect);
}

TEST_CASE("jacobiator components match the coordinate-function oracle") {
    // frozen convention: schouten(pi,pi)_{ijk} = 2 * J(x_i, x_j, x_k)
    SplitMix64 rng(139);
    for (int t = 0; t < 12; ++t) {
        Multivector pi = random_multivector(rng, 2);
        Multivector jac = schouten(pi, pi);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    CHECK(jac.component({i, j, k}) == Q(2) * jacobiator_oracle(pi, i, j, k));
    }
}

TEST_CASE("compatibility bracket examples") {
    // shared quadric: quartic vanishes
    SplitMix64 rng(149);
    for (int t = 0; t < 8; ++t) {
        Poly q = random_quadric(rng), a = random_quadric(rng), b = random_quadric(rng);
        Multivector tv = compatibility_bracket(q, a, q, b);
        CHECK(descends_to_zero(tv));
    }
    // the incompatible pair
    Multivector tv = compatibility_bracket(P4("x1^2"), P4("x1*x2"), P4("x1*x3"), P4("x1*x4"));
    CHECK(quartic_from_trivector(tv) == P4("8*x1^4"));
    CHECK(!descends_to_zero(tv));
}

TEST_CASE("vanishing certificates exist and verify") {
    // (x1^2, x1*x2): E^Pi = 2*x1^3 d1^d3^d4 + 2*x1^2*x2 d2^d3^d4
    VanishingCertificate c = vanishing_certificate(P4("x1^2"), P4("x1*x2"));
    CHECK(c.all_verified);
    for (const auto& e : c.entries) {
        if (e.indices == IdxTuple{0, 2, 3}) CHECK(e.cubic == P4("2*x1^3"));
        if (e.indices == IdxTuple{1, 2, 3}) CHECK(e.cubic == P4("2*x1^2*x2"));
    }

    SplitMix64 rng(151);
    for (int t = 0; t < 15; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        VanishingCertificate cert = vanishing_certificate(q1, q2);
        CHECK(cert.all_verified);
        for (const auto& e : cert.entries)
            CHECK(e.l1 * q1 + e.l2 * q2 == e.cubic);
    }

    // degenerate input: Q2 = Q1 gives the zero bivector and trivial certificates
    Poly q = P4("x1*x2+x3^2");
    VanishingCertificate cz = vanishing_certificate(q, q);
    CHECK(cz.all_verified);
    for (const auto& e : cz.entries) CHECK(e.cubic.is_zero());
}

TEST_CASE("E^Pi components match the closed-form identity") {
    // (E^Pi)_{complement m} = (-1)^m * 2 * (d_mQ1 * Q2 - d_mQ2 * Q1), 0-based m
    SplitMix64 rng(157);
    for (int t = 0; t < 15; ++t) {
        Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
        Multivector ew = wedge(euler_field(4), fo_bivector(q1, q2).pi);
        const IdxTuple tuples[4] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
        for (int m = 0; m < 4; ++m) {
            Poly expect = Q(2) * (q1.derivative(m) * q2 - q2.derivative(m) * q1);
            if (m % 2 == 1) expect = -expect;
            CHECK(ew.component(tuples[static_cast<size_t>(m)]) == expect);
        }
    }
}

TEST_CASE("conormal extraction on the model bivector") {
    // z1 d1^d3 + z2 d2^d3 with plane span(dz1, dz2): abelian plane,
    // ad(e3) = -id on it (y = -e3 realizes [y, x_i] = x_i)
    Multivector model(3, 2);
    model.add_term({0, 2}, Poly::variable(3, 0));
    model.add_term({1, 2}, Poly::variable(3, 1));
    std::array<std::vector<Rational>, 2> plane{
        std::vector<Rational>{Q(1), Q(0), Q(0)},
        std::vector<Rational>{Q(0), Q(1), Q(0)}};
    ConormalStructure cs = conormal_from_affine(model, plane);
    CHECK(cs.constant_part_zero);
    CHECK(cs.plane_abelian);
    CHECK(cs.ad_scalar_ok);
    CHECK(cs.complement_axis == 2);
    CHECK(cs.ad_scalar == Q(-1));
    CHECK(cs.jacobi_ok);
}

TEST_CASE("linearize_at on fixtures through a rational point") {
    std::vector<Rational> p{Q(1), Q(1), Q(1), Q(1)};
    ProjPoint pp({Q(1), Q(1), Q(1), Q(1)});
    SplitMix64 rng(163);
    int done = 0;
    for (int t = 0; t < 100 && done < 5; ++t) {
        Poly q1 = random_quadric_through(rng, p);
        Poly q2 = random_quadric_through(rng, p);
        if (span_rank({q1, q2}) < 2) continue;
        QuadricPencil pencil(q1, q2);
        if (!is_generic_pencil(pencil).generic) continue;
        LinearizeResult res = linearize_at(q1, q2, pp);
        if (res.status != LinearizeResult::Status::ok) continue;
        const ConormalStructure& cs = *res.structure;
        CHECK(cs.constant_part_zero);
        CHECK(cs.plane_abelian);
        CHECK(cs.ad_scalar_ok);
        CHECK(cs.jacobi_ok);
        ++done;
    }
    CHECK(done == 5);
}

TEST_CASE("linearize_at preconditions") {
    // e1 is not on the diagonal base curve
    ProjPoint e1({Q(1), Q(0), Q(0), Q(0)});
    CHECK_THROWS_AS(linearize_at(P4("x1^2+x2^2+x3^2+x4^2"),
                                 P4("x1^2+2*x2^2+3*x3^2+4*x4^2"), e1),
                    PreconditionError);

    // singular point: the vertex of a rank-3 member of a degenerate pencil
    // base locus of (x1*x2, x1*x3) contains (0,0,0,1) with dependent gradients
    ProjPoint s({Q(0), Q(0), Q(0), Q(1)});
    LinearizeResult res = linearize_at(P4("x1*x2"), P4("x1*x3"), s);
    CHECK(res.status == LinearizeResult::Status::singular_point);
}
