#include <doctest.h>

#include <cmath>

#include "fo/errors.hpp"
#include "fo/fo_bracket.hpp"
#include "fo/generators.hpp"
#include "fo/harmonic.hpp"
#include "fo/polar.hpp"
#include "fo/prng.hpp"

#include "test_util.hpp"

using namespace fo;

namespace {

ProjPoint point(long a, long b, long c, long d) {
    return ProjPoint({Q(a), Q(b), Q(c), Q(d)});
}

} // namespace

TEST_CASE("polar plane examples") {
    CHECK(polar_plane(P4("x1^2+x2^2+x3^2+x4^2"), point(1, 1, 1, 1)) == P4("x1+x2+x3+x4"));
    CHECK_THROWS_AS(polar_plane(P4("x1^2"), point(0, 1, 0, 0)), VertexError);
    CHECK(polar_plane(P4("x1*x2"), point(1, 0, 0, 0)) == Q(1, 2) * P4("x2"));
}

TEST_CASE("polar line of the diagonal pencil") {
    QuadricPencil p(P4("x1^2+x2^2+x3^2+x4^2"), P4("x1^2+2*x2^2+3*x3^2+4*x4^2"));
    ProjLine line = polar_line(p, point(1, 1, 1, 1));
    CHECK(line.f1 == P4("x1+x2+x3+x4"));
    CHECK(line.f2 == P4("x1+2*x2+3*x3+4*x4"));

    // the vertex of the member lambda = -1 is e1
    CHECK_THROWS_AS(polar_line(p, point(1, 0, 0, 0)), PreconditionError);
}

TEST_CASE("polar line is basis-independent") {
    SplitMix64 rng(301);
    for (int t = 0; t < 10; ++t) {
        QuadricPencil p(random_quadric(rng), random_quadric(rng));
        ProjPoint pt = point(rng.range(1, 5), rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5));
        ProjLine l1, l2;
        try {
            l1 = polar_line(p, pt);
            QuadricPencil p2(p.q1 + p.q2, p.q2);
            l2 = polar_line(p2, pt);
        } catch (const PreconditionError&) {
            continue; // degenerate draw
        }
        // same 2-dim span of forms
        auto coeffs = [](const Poly& f) {
            QVec v(4, Q(0));
            for (int i = 0; i < 4; ++i) {
                Monomial m(4);
                m.e[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i)] = f.coeff(m);
            }
            return v;
        };
        QMat a{coeffs(l1.f1), coeffs(l1.f2)};
        QMat b{coeffs(l2.f1), coeffs(l2.f2)};
        CHECK(row_space_basis(a) == row_space_basis(b));
    }
}

TEST_CASE("plucker coordinates satisfy the quadric relation") {
    SplitMix64 rng(307);
    for (int t = 0; t < 10; ++t) {
        QuadricPencil p(random_quadric(rng), random_quadric(rng));
        ProjPoint pt = point(1, rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5));
        try {
            auto w = polar_line(p, pt).plucker_dual();
            // w12*w34 - w13*w24 + w14*w23 = 0
            CHECK(w[0] * w[5] - w[1] * w[4] + w[2] * w[3] == Q(0));
        } catch (const PreconditionError&) {
            continue;
        }
    }
}

TEST_CASE("intersection quartic equals phi/16") {
    QuadricPencil a(P4("x1^2"), P4("x1*x2"));
    QuadricPencil b(P4("x1*x3"), P4("x1*x4"));
    Poly q = intersection_quartic(a, b);
    CHECK(q == Q(1, 8) * P4("x1^4"));
    CHECK(Q(16) * q == phi_quartic(a.q1, a.q2, b.q1, b.q2));

    SplitMix64 rng(311);
    for (int t = 0; t < 15; ++t) {
        QuadricPencil pa(random_quadric(rng), random_quadric(rng));
        QuadricPencil pb(random_quadric(rng), random_quadric(rng));
        CHECK(Q(16) * intersection_quartic(pa, pb) ==
              phi_quartic(pa.q1, pa.q2, pb.q1, pb.q2));
        // swapping the pencils permutes rows evenly
        CHECK(intersection_quartic(pb, pa) == intersection_quartic(pa, pb));
    }
}

TEST_CASE("intersection quartic vanishes when the pencils coincide") {
    QuadricPencil a(P4("x1^2+x2*x3"), P4("x2^2-x3*x4"));
    CHECK(intersection_quartic(a, a).is_zero());
}

TEST_CASE("rational vertices lie on the quartic surface") {
    SplitMix64 rng(313);
    for (int t = 0; t < 6; ++t) {
        QuadricPencil pa = random_transformed_diagonal_pencil(rng);
        QuadricPencil pb = random_transformed_diagonal_pencil(rng);
        Poly q = intersection_quartic(pa, pb);
        for (const QuadricPencil* p : {&pa, &pb}) {
            for (const SingularMember& m : rational_singular_members(*p).rational_members) {
                std::span<const Rational> v(m.vertex.x.data(), 4);
                CHECK(q.evaluate(v) == Q(0));
            }
        }
    }
}

TEST_CASE("points on the quartic have meeting polar lines") {
    // build P_b so that its row at p is a combination of P_a's rows: then p
    // lies on the quartic and the two polar lines intersect
    SplitMix64 rng(317);
    int done = 0;
    for (int t = 0; t < 60 && done < 8; ++t) {
        QuadricPencil pa(random_quadric(rng), random_quadric(rng));
        ProjPoint p = point(1, rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
        QVec pv(p.x.begin(), p.x.end());
        QVec r1 = pa.m1.times(pv), r2 = pa.m2.times(pv);

        Poly qb1 = random_quadric(rng);
        QVec r3 = GramMatrix::from_quadric(qb1).times(pv);
        // desired fourth row: a combination of r1, r2, r3
        QVec want(4, Q(0));
        long c1 = rng.range(-3, 3), c2 = rng.range(-3, 3), c3 = rng.range(-3, 3);
        for (int i = 0; i < 4; ++i)
            want[static_cast<size_t>(i)] =
                Q(c1) * r1[static_cast<size_t>(i)] + Q(c2) * r2[static_cast<size_t>(i)] +
                Q(c3) * r3[static_cast<size_t>(i)];
        // symmetric M with M p = want:  M = (w p^T + p w^T)/(p.p) - (w.p)/(p.p)^2 p p^T
        Rational pp(0), wp(0);
        for (int i = 0; i < 4; ++i) {
            pp += pv[static_cast<size_t>(i)] * pv[static_cast<size_t>(i)];
            wp += want[static_cast<size_t>(i)] * pv[static_cast<size_t>(i)];
        }
        if (pp.is_zero()) continue;
        GramMatrix mb2;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                mb2.m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (want[static_cast<size_t>(i)] * pv[static_cast<size_t>(j)] +
                     pv[static_cast<size_t>(i)] * want[static_cast<size_t>(j)]) / pp -
                    wp / (pp * pp) * pv[static_cast<size_t>(i)] * pv[static_cast<size_t>(j)];
        Poly qb2 = mb2.to_quadric();
        if (qb2.is_zero() || span_rank({qb1, qb2}) < 2) continue;
        QuadricPencil pb(qb1, qb2);

        std::span<const Rational> pspan(p.x.data(), 4);
        CHECK(intersection_quartic(pa, pb).evaluate(pspan) == Q(0));

        ProjLine la, lb;
        try {
            la = polar_line(pa, p);
            lb = polar_line(pb, p);
        } catch (const PreconditionError&) {
            continue;
        }
        auto coeffs = [](const Poly& f) {
            QVec v(4, Q(0));
            for (int i = 0; i < 4; ++i) {
                Monomial m(4);
                m.e[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i)] = f.coeff(m);
            }
            return v;
        };
        QMat four{coeffs(la.f1), coeffs(la.f2), coeffs(lb.f1), coeffs(lb.f2)};
        CHECK(rank(four) <= 3);
        ++done;
    }
    CHECK(done >= 8);
}

TEST_CASE("harmonic conjugate cross-ratio in isolation") {
    using Cx = std::complex<double>;
    using H = std::array<Cx, 2>;
    // the midpoint 0 is the harmonic conjugate of infinity w.r.t. {1, -1}
    Cx cr = cross_ratio(H{1.0, 0.0}, H{1.0, 1.0}, H{-1.0, 1.0}, H{0.0, 1.0});
    CHECK(cr == Cx(-1.0));
    // and the harmonic mean 2ab/(a+b) is the conjugate of 0 w.r.t. {a, b}
    double a = 3.0, b = 5.0;
    Cx cr2 = cross_ratio(H{0.0, 1.0}, H{a, 1.0}, H{b, 1.0}, H{2 * a * b, a + b});
    CHECK(std::abs(cr2 + 1.0) < 1e-15);
}

TEST_CASE("harmonic check verifies random well-conditioned points") {
    QuadricPencil p(P4("x1^2+x2^2-x3^2-x4^2"), P4("x1*x3-x2*x4"));
    SplitMix64 rng(331);
    int verified = 0;
    for (int t = 0; t < 40; ++t) {
        std::array<double, 4> pt{};
        for (auto& c : pt) c = static_cast<double>(rng.range(-400, 400)) / 100.0;
        HarmonicReport r = harmonic_check(p, pt, 1e-9);
        if (r.status == HarmonicReport::Status::verified) {
            CHECK(r.max_polar_residual <= 1e-9);
            CHECK(r.max_cross_ratio_residual <= 1e-9);
            ++verified;
        } else {
            CHECK(r.status == HarmonicReport::Status::inconclusive);
        }
    }
    CHECK(verified >= 20);
}

TEST_CASE("harmonic check reports degeneracies as inconclusive") {
    // p on the base curve: (1,1,1,1) lies on both quadrics
    QuadricPencil p(P4("x1^2-x2*x3"), P4("x2^2-x1*x4"));
    HarmonicReport on_curve = harmonic_check(p, {1.0, 1.0, 1.0, 1.0}, 1e-9);
    CHECK(on_curve.status == HarmonicReport::Status::inconclusive);

    // p at a vertex of a singular member of the diagonal pencil
    QuadricPencil d(P4("x1^2+x2^2+x3^2+x4^2"), P4("x1^2+2*x2^2+3*x3^2+4*x4^2"));
    HarmonicReport at_vertex = harmonic_check(d, {1.0, 0.0, 0.0, 0.0}, 1e-9);
    CHECK(at_vertex.status == HarmonicReport::Status::inconclusive);
}
