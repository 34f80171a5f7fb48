#include "fo/generators.hpp"

#include "fo/errors.hpp"
#include "fo/linalg.hpp"

namespace fo {

namespace {

const std::vector<Monomial>& degree2_monomials() {
    static const std::vector<Monomial> ms = [] {
        std::vector<Monomial> v;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                Monomial m(4);
                m.e[static_cast<size_t>(i)] += 1;
                m.e[static_cast<size_t>(j)] += 1;
                v.push_back(m);
            }
        return v;
    }();
    return ms;
}

} // namespace

Poly random_quadric(SplitMix64& rng) {
    Poly q(4);
    for (const Monomial& m : degree2_monomials())
        q.add_term(m, Rational(rng.range(-9, 9)));
    return q;
}

Poly random_quadric_through(SplitMix64& rng, const std::vector<Rational>& point) {
    if (point.size() != 4 || point[3].is_zero())
        throw InputError("random_quadric_through needs a point with nonzero last coordinate");
    Poly q(4);
    Monomial x4sq(4);
    x4sq.e[3] = 2;
    for (const Monomial& m : degree2_monomials())
        if (!(m == x4sq)) q.add_term(m, Rational(rng.range(-9, 9)));
    Rational val = q.evaluate(std::span<const Rational>(point.data(), 4));
    q.add_term(x4sq, -val / (point[3] * point[3]));
    return q;
}

QuadricPencil random_generic_pencil(SplitMix64& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Poly q1 = random_quadric(rng);
        Poly q2 = random_quadric(rng);
        if (span_rank({q1, q2}) < 2) continue;
        QuadricPencil p(q1, q2);
        if (is_generic_pencil(p).generic) return p;
    }
    throw PreconditionError("failed to draw a generic pencil");
}

QuadricPencil random_transformed_diagonal_pencil(SplitMix64& rng) {
    for (int t = 0; t < 200; ++t) {
        // distinct diagonal entries
        std::vector<long> a;
        while (a.size() < 4) {
            long c = rng.range(-9, 9);
            bool dup = false;
            for (long x : a) dup = dup || x == c;
            if (!dup) a.push_back(c);
        }
        // invertible integer substitution
        QMat g(4, QVec(4, Rational(0)));
        for (auto& row : g)
            for (auto& e : row) e = Rational(rng.range(-3, 3));
        if (det(g).is_zero()) continue;

        std::vector<Poly> images;
        for (int i = 0; i < 4; ++i) {
            Poly f(4);
            for (int j = 0; j < 4; ++j)
                f += g[static_cast<size_t>(i)][static_cast<size_t>(j)] * Poly::variable(4, j);
            images.push_back(f);
        }
        Poly d1(4), d2(4);
        for (int i = 0; i < 4; ++i) {
            Monomial m(4);
            m.e[static_cast<size_t>(i)] = 2;
            d1.add_term(m, Rational(1));
            d2.add_term(m, Rational(a[static_cast<size_t>(i)]));
        }
        Poly q1 = d1.substitute(images);
        Poly q2 = d2.substitute(images);
        if (span_rank({q1, q2}) < 2) continue;
        QuadricPencil p(q1, q2);
        if (is_generic_pencil(p).generic) return p;
    }
    throw PreconditionError("failed to draw a transformed diagonal pencil");
}

std::pair<QuadricPencil, QuadricPencil> random_rank4_generic_pair(SplitMix64& rng) {
    for (int t = 0; t < 200; ++t) {
        QuadricPencil a = random_generic_pencil(rng);
        QuadricPencil b = random_generic_pencil(rng);
        if (span_rank({a.q1, a.q2, b.q1, b.q2}) == 4) return {a, b};
    }
    throw PreconditionError("failed to draw a rank-4 generic pair");
}

std::pair<QuadricPencil, QuadricPencil> random_rank3_generic_pair(SplitMix64& rng) {
    for (int t = 0; t < 500; ++t) {
        Poly w1 = random_quadric(rng);
        Poly w2 = random_quadric(rng);
        Poly w3 = random_quadric(rng);
        if (span_rank({w1, w2, w3}) < 3) continue;
        auto combo = [&](long c1, long c2, long c3) {
            return Rational(c1) * w1 + Rational(c2) * w2 + Rational(c3) * w3;
        };
        Poly a1 = combo(1, rng.range(-3, 3), rng.range(-3, 3));
        Poly a2 = combo(0, 1 + 2 * rng.range(0, 2), rng.range(-3, 3));
        Poly b1 = combo(1, rng.range(-3, 3), 1 + rng.range(0, 3));
        Poly b2 = combo(rng.range(-3, 3), 1, rng.range(-3, 3));
        if (span_rank({a1, a2}) < 2 || span_rank({b1, b2}) < 2) continue;
        if (span_rank({a1, a2, b1, b2}) > 3) continue;
        QuadricPencil pa(a1, a2), pb(b1, b2);
        if (!is_generic_pencil(pa).generic || !is_generic_pencil(pb).generic) continue;
        return {pa, pb};
    }
    throw PreconditionError("failed to draw a rank-3 generic pair");
}

Multivector random_multivector(SplitMix64& rng, int degree) {
    Multivector mv(4, degree);
    // iterate strictly increasing tuples of the given length
    std::vector<int> idx(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) idx[static_cast<size_t>(i)] = i;
    auto advance = [&]() {
        int p = degree - 1;
        while (p >= 0 && idx[static_cast<size_t>(p)] == 4 - degree + p) --p;
        if (p < 0) return false;
        ++idx[static_cast<size_t>(p)];
        for (int j = p + 1; j < degree; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    while (true) {
        if (rng.range(0, 1) == 1) {
            Poly c(4);
            int nterms = static_cast<int>(rng.range(1, 3));
            for (int t = 0; t < nterms; ++t) {
                Monomial m(4);
                int d = static_cast<int>(rng.range(0, 2));
                for (int k = 0; k < d; ++k)
                    m.e[static_cast<size_t>(rng.range(0, 3))] += 1;
                c.add_term(m, Rational(rng.range(-5, 5)));
            }
            mv.add_term(idx, c);
        }
        if (degree == 0 || !advance()) break;
    }
    return mv;
}

Multivector random_weight0_bivector(SplitMix64& rng) {
    Multivector mv(4, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Poly c(4);
            for (const Monomial& m : degree2_monomials())
                if (rng.range(0, 2) == 0) c.add_term(m, Rational(rng.range(-4, 4)));
            mv.add_term({i, j}, c);
        }
    return mv;
}

std::pair<std::vector<Poly>, Rational> random_linear_substitution(SplitMix64& rng) {
    while (true) {
        QMat g(4, QVec(4, Rational(0)));
        for (auto& row : g)
            for (auto& e : row) e = Rational(rng.range(-4, 4));
        Rational d = det(g);
        if (d.is_zero()) continue;
        std::vector<Poly> images;
        for (int i = 0; i < 4; ++i) {
            Poly f(4);
            for (int j = 0; j < 4; ++j)
                f += g[static_cast<size_t>(i)][static_cast<size_t>(j)] * Poly::variable(4, j);
            images.push_back(f);
        }
        return {images, d};
    }
}

} // namespace fo
