#include "fo/harmonic.hpp"

#include <cmath>
#include <complex>

namespace fo {

namespace {

using Cx = std::complex<double>;
using C4 = std::array<Cx, 4>;
using D4 = std::array<double, 4>;
using M4 = std::array<std::array<double, 4>, 4>;

D4 mat_vec(const M4& m, const D4& v) {
    D4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[static_cast<size_t>(i)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    return r;
}

Cx bilinear(const M4& m, const C4& u, const C4& v) {
    Cx acc = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            acc += u[static_cast<size_t>(i)] * m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    return acc;
}

double dot(const D4& a, const D4& b) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    return s;
}

double norm(const D4& a) { return std::sqrt(dot(a, a)); }

double cnorm(const C4& a) {
    double s = 0;
    for (const Cx& c : a) s += std::norm(c);
    return std::sqrt(s);
}

double frobenius(const M4& m) {
    double s = 0;
    for (const auto& row : m)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

C4 to_complex(const D4& v) {
    return {Cx(v[0]), Cx(v[1]), Cx(v[2]), Cx(v[3])};
}

// [x y] for homogeneous parameters on a line
Cx hbracket(const std::array<Cx, 2>& x, const std::array<Cx, 2>& y) {
    return x[0] * y[1] - x[1] * y[0];
}

} // namespace

std::complex<double> cross_ratio(const std::array<Cx, 2>& a, const std::array<Cx, 2>& b,
                                 const std::array<Cx, 2>& c, const std::array<Cx, 2>& d) {
    return (hbracket(a, b) * hbracket(d, c)) / (hbracket(a, c) * hbracket(d, b));
}

HarmonicReport harmonic_check(const QuadricPencil& pencil,
                              const std::array<double, 4>& p, double tol) {
    HarmonicReport rep;
    M4 m1 = pencil.m1.to_double();
    M4 m2 = pencil.m2.to_double();
    double pn = norm(p);
    double s1 = frobenius(m1) * pn * pn;
    double s2 = frobenius(m2) * pn * pn;

    double q1p = dot(p, mat_vec(m1, p));
    double q2p = dot(p, mat_vec(m2, p));
    if (std::abs(q1p) <= tol * s1 && std::abs(q2p) <= tol * s2) {
        rep.reason = "p lies on the base curve (both quadrics vanish at p)";
        return rep;
    }

    // the member quadric through p
    double lam = q2p, mu = -q1p;
    double ln = std::hypot(lam, mu);
    lam /= ln;
    mu /= ln;
    rep.lambda = lam;
    rep.mu = mu;
    M4 n{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            n[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                lam * m1[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                mu * m2[static_cast<size_t>(i)][static_cast<size_t>(j)];

    // tangent plane at p
    D4 w = mat_vec(n, p);
    double nf = frobenius(n);
    if (norm(w) <= tol * nf * pn) {
        rep.reason = "p is (numerically) the vertex of the member quadric through it";
        return rep;
    }

    // orthonormal u, v spanning the tangent plane directions transverse to p
    D4 what = w;
    for (auto& c : what) c /= norm(w);
    D4 phat = p;
    {
        double a = dot(phat, what);
        for (int i = 0; i < 4; ++i) phat[static_cast<size_t>(i)] -= a * what[static_cast<size_t>(i)];
        double nn = norm(phat);
        if (nn <= tol * pn) {
            rep.reason = "p degenerates against the tangent plane";
            return rep;
        }
        for (auto& c : phat) c /= nn;
    }
    std::array<D4, 2> uv{};
    int found = 0;
    for (int e = 0; e < 4 && found < 2; ++e) {
        D4 cand{};
        cand[static_cast<size_t>(e)] = 1.0;
        double a = dot(cand, what);
        double b = dot(cand, phat);
        for (int i = 0; i < 4; ++i)
            cand[static_cast<size_t>(i)] -= a * what[static_cast<size_t>(i)] + b * phat[static_cast<size_t>(i)];
        for (int k = 0; k < found; ++k) {
            double c = dot(cand, uv[static_cast<size_t>(k)]);
            for (int i = 0; i < 4; ++i)
                cand[static_cast<size_t>(i)] -= c * uv[static_cast<size_t>(k)][static_cast<size_t>(i)];
        }
        double nn = norm(cand);
        if (nn > 0.25) { // plenty of slack among 4 standard candidates
            for (auto& c : cand) c /= nn;
            uv[static_cast<size_t>(found++)] = cand;
        }
    }
    if (found < 2) {
        rep.reason = "could not build a well-conditioned tangent frame";
        return rep;
    }

    // split the degenerate conic: A a^2 + 2B ab + C b^2 = 0 on directions a*u + b*v
    C4 uc = to_complex(uv[0]), vc = to_complex(uv[1]);
    Cx ca = bilinear(n, uc, uc);
    Cx cb = bilinear(n, uc, vc);
    Cx cc = bilinear(n, vc, vc);
    double conic_scale = std::max({std::abs(ca), std::abs(cb), std::abs(cc)});
    if (conic_scale <= tol * nf) {
        rep.reason = "tangent conic vanishes (degenerate member)";
        return rep;
    }
    Cx disc = cb * cb - ca * cc;
    if (std::abs(disc) <= tol * conic_scale * conic_scale) {
        rep.reason = "the two lines through p coincide (tangential configuration)";
        return rep;
    }
    Cx sq = std::sqrt(disc);
    std::array<C4, 2> dirs{};
    for (int s = 0; s < 2; ++s) {
        Cx root = (s == 0) ? (-cb + sq) : (-cb - sq);
        C4 d{};
        if (std::abs(ca) >= std::abs(cc)) {
            Cx t = root / ca; // direction t*u + v
            for (int i = 0; i < 4; ++i) d[static_cast<size_t>(i)] = t * uc[static_cast<size_t>(i)] + vc[static_cast<size_t>(i)];
        } else {
            Cx t = root / cc; // direction u + t*v
            for (int i = 0; i < 4; ++i) d[static_cast<size_t>(i)] = uc[static_cast<size_t>(i)] + t * vc[static_cast<size_t>(i)];
        }
        double dn = cnorm(d);
        for (auto& c : d) c /= dn;
        dirs[static_cast<size_t>(s)] = d;
    }

    // complementary member cuts the base curve on each line
    M4 nalt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            nalt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                -mu * m1[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                lam * m2[static_cast<size_t>(i)][static_cast<size_t>(j)];

    C4 pc = to_complex(p);
    D4 l1 = mat_vec(m1, p); // the two exact polar planes of p, in floats
    D4 l2 = mat_vec(m2, p);
    double l1n = norm(l1), l2n = norm(l2);
    if (l1n <= tol * frobenius(m1) * pn || l2n <= tol * frobenius(m2) * pn) {
        rep.reason = "a polar plane of p degenerates (p near a vertex)";
        return rep;
    }

    for (const C4& d : dirs) {
        Cx a2 = bilinear(nalt, d, d);
        Cx a1 = bilinear(nalt, pc, d);
        Cx a0 = bilinear(nalt, pc, pc);
        double scale = std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
        if (std::abs(a2) <= tol * scale) {
            rep.reason = "secant line nearly contained in the complementary member";
            return rep;
        }
        Cx d2 = a1 * a1 - a2 * a0;
        Cx sq2 = std::sqrt(d2);
        Cx s1r = (-a1 + sq2) / a2;
        Cx s2r = (-a1 - sq2) / a2;
        double smag = std::abs(s1r) + std::abs(s2r);
        if (std::abs(s1r) <= tol * smag || std::abs(s2r) <= tol * smag) {
            rep.reason = "p collides with an intersection point on the base curve";
            return rep;
        }
        if (std::abs(s1r - s2r) <= tol * smag) {
            rep.reason = "secant line tangent to the base curve";
            return rep;
        }

        // harmonic conjugate of p w.r.t. (p_i, q_i), homogeneously
        Cx rnum = 2.0 * s1r * s2r;
        Cx rden = s1r + s2r;
        C4 r{};
        for (int i = 0; i < 4; ++i)
            r[static_cast<size_t>(i)] = rden * pc[static_cast<size_t>(i)] + rnum * d[static_cast<size_t>(i)];
        double rn = cnorm(r);
        if (rn <= tol * smag * (pn + 1.0)) {
            rep.reason = "harmonic conjugate degenerates";
            return rep;
        }

        // cross-ratio(p, p_i, q_i, r_i) with homogeneous line parameters
        std::array<Cx, 2> ha{0.0, 1.0}, hb{s1r, 1.0}, hc{s2r, 1.0}, hd{rnum, rden};
        Cx cr = cross_ratio(ha, hb, hc, hd);
        rep.max_cross_ratio_residual =
            std::max(rep.max_cross_ratio_residual, std::abs(cr + 1.0));

        for (const D4* form : {&l1, &l2}) {
            Cx val = 0.0;
            for (int i = 0; i < 4; ++i) val += (*form)[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
            double res = std::abs(val) / (norm(*form) * rn);
            rep.max_polar_residual = std::max(rep.max_polar_residual, res);
        }
        ++rep.lines_checked;
    }

    bool ok = rep.max_polar_residual <= tol && rep.max_cross_ratio_residual <= tol;
    rep.status = ok ? HarmonicReport::Status::verified : HarmonicReport::Status::failed;
    if (!ok) rep.reason = "residuals exceed tolerance";
    return rep;
}

} // namespace fo
