#include "fo/pencil.hpp"

#include <algorithm>

#include "fo/binary_form.hpp"
#include "fo/errors.hpp"

namespace fo {

namespace {

void require_quadric(const Poly& q, const char* what) {
    if (q.nvars() != 4) throw InputError(std::string(what) + " must be a polynomial in 4 variables");
    if (!q.is_zero() && !q.is_homogeneous(2))
        throw InputError(std::string(what) + " must be homogeneous of degree 2");
}

const std::vector<Monomial>& degree2_basis() {
    static const std::vector<Monomial> basis = [] {
        std::vector<Monomial> b;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                Monomial m(4);
                m.e[static_cast<size_t>(i)] += 1;
                m.e[static_cast<size_t>(j)] += 1;
                b.push_back(m);
            }
        std::sort(b.begin(), b.end(), [](const Monomial& x, const Monomial& y) {
            return GrlexDesc{}(x, y);
        });
        return b;
    }();
    return basis;
}

} // namespace

GramMatrix GramMatrix::from_quadric(const Poly& q) {
    require_quadric(q, "quadric");
    GramMatrix g;
    for (const auto& [mono, c] : q.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < 4; ++v) {
            for (uint32_t r = 0; r < mono.e[static_cast<size_t>(v)]; ++r) {
                if (i < 0) i = v;
                else j = v;
            }
        }
        if (i == j || j < 0) { // x_i^2
            g.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = c;
        } else {
            Rational half = c / Rational(2);
            g.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = half;
            g.m[static_cast<size_t>(j)][static_cast<size_t>(i)] = half;
        }
    }
    return g;
}

Poly GramMatrix::to_quadric() const {
    Poly q(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) continue;
            Monomial mono(4);
            mono.e[static_cast<size_t>(i)] += 1;
            mono.e[static_cast<size_t>(j)] += 1;
            q.add_term(mono, m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
    return q;
}

std::array<std::array<double, 4>, 4> GramMatrix::to_double() const {
    std::array<std::array<double, 4>, 4> d{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(i)][static_cast<size_t>(j)].to_double();
    return d;
}

QVec GramMatrix::times(const QVec& v) const {
    QVec r(4, Rational(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[static_cast<size_t>(i)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    return r;
}

Rational GramMatrix::bilinear(const QVec& u, const QVec& v) const {
    QVec mv = times(v);
    Rational r(0);
    for (int i = 0; i < 4; ++i) r += u[static_cast<size_t>(i)] * mv[static_cast<size_t>(i)];
    return r;
}

QuadricPencil::QuadricPencil(Poly q1_, Poly q2_) : q1(std::move(q1_)), q2(std::move(q2_)) {
    require_quadric(q1, "Q1");
    require_quadric(q2, "Q2");
    if (span_rank({q1, q2}) < 2)
        throw InputError("pencil requires two linearly independent quadrics");
    m1 = GramMatrix::from_quadric(q1);
    m2 = GramMatrix::from_quadric(q2);
}

Poly discriminant_form(const QuadricPencil& p) {
    Poly lambda = Poly::variable(2, 0), mu = Poly::variable(2, 1);
    std::vector<std::vector<Poly>> entries(4, std::vector<Poly>(4, Poly(2)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                p.m1.m[static_cast<size_t>(i)][static_cast<size_t>(j)] * lambda +
                p.m2.m[static_cast<size_t>(i)][static_cast<size_t>(j)] * mu;
    return poly_det(entries);
}

GenericityReport is_generic_pencil(const QuadricPencil& p) {
    GenericityReport r;
    r.discriminant = discriminant_form(p);
    if (r.discriminant.is_zero()) {
        r.generic = false;
        r.diagnosis = GenericityReport::Diagnosis::zero_discriminant;
        r.message = "discriminant vanishes identically (common kernel or degenerate pencil)";
        return r;
    }
    SquarefreeResult sf = binary_form_squarefree(r.discriminant);
    if (!sf.squarefree) {
        r.generic = false;
        r.diagnosis = GenericityReport::Diagnosis::repeated_root;
        r.squarefree_part = sf.part;
        r.message = "discriminant has a repeated root (base curve singular)";
        return r;
    }
    r.generic = true;
    r.message = "discriminant is a squarefree binary quartic";
    return r;
}

SingularMembersReport rational_singular_members(const QuadricPencil& p) {
    GenericityReport g = is_generic_pencil(p);
    if (!g.generic) throw PreconditionError("singular members require a generic pencil: " + g.message);

    SingularMembersReport report;
    report.discriminant = g.discriminant;
    for (const ProjRoot& root : rational_projective_roots(g.discriminant)) {
        QMat n(4, QVec(4, Rational(0)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                n[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    root.lambda * p.m1.m[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                    root.mu * p.m2.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        std::vector<QVec> ker = null_space(n);
        if (ker.size() != 1)
            throw PreconditionError("singular member with kernel dimension != 1 on a generic pencil");
        std::array<Rational, 4> coords{ker[0][0], ker[0][1], ker[0][2], ker[0][3]};
        report.rational_members.push_back({root.lambda, root.mu, ProjPoint(coords)});
    }
    report.irrational_count = 4 - static_cast<int>(report.rational_members.size());
    return report;
}

QVec quadric_coords(const Poly& q) {
    require_quadric(q, "quadric");
    const auto& basis = degree2_basis();
    QVec v(basis.size(), Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) v[i] = q.coeff(basis[i]);
    return v;
}

Poly quadric_from_coords(const QVec& coords) {
    const auto& basis = degree2_basis();
    if (coords.size() != basis.size()) throw InputError("quadric coordinate length mismatch");
    Poly q(4);
    for (size_t i = 0; i < basis.size(); ++i) q.add_term(basis[i], coords[i]);
    return q;
}

int span_rank(const std::vector<Poly>& quadrics) {
    QMat m;
    for (const Poly& q : quadrics) m.push_back(quadric_coords(q));
    return rank(m);
}

bool pairwise_compatible(const QuadricPencil& a, const QuadricPencil& b) {
    return span_rank({a.q1, a.q2, b.q1, b.q2}) <= 3;
}

CollectionClassification classify_collection(const std::vector<QuadricPencil>& pencils) {
    if (pencils.size() < 2) throw InputError("classification needs at least 2 pencils");

    CollectionClassification out;
    for (const QuadricPencil& p : pencils) out.generic.push_back(is_generic_pencil(p).generic);
    out.smooth_curve_semantics =
        std::all_of(out.generic.begin(), out.generic.end(), [](bool b) { return b; });

    for (size_t i = 0; i < pencils.size(); ++i)
        for (size_t j = i + 1; j < pencils.size(); ++j)
            if (!pairwise_compatible(pencils[i], pencils[j])) {
                out.kind = CollectionClassification::Kind::incompatible;
                out.witness = {static_cast<int>(i), static_cast<int>(j)};
                return out;
            }

    // common member: intersect the 2-dim spans
    QMat common{quadric_coords(pencils[0].q1), quadric_coords(pencils[0].q2)};
    for (size_t i = 1; i < pencils.size() && !common.empty(); ++i)
        common = intersect_row_spans(common, {quadric_coords(pencils[i].q1),
                                              quadric_coords(pencils[i].q2)});
    if (!common.empty()) {
        out.kind = CollectionClassification::Kind::concurrent;
        Poly rep = quadric_from_coords(common[0]);
        out.shared_quadric = Rational(1) / rep.leading_coeff() * rep;
        return out;
    }

    QMat all;
    for (const QuadricPencil& p : pencils) {
        all.push_back(quadric_coords(p.q1));
        all.push_back(quadric_coords(p.q2));
    }
    QMat basis = row_space_basis(all);
    if (basis.size() <= 3) {
        out.kind = CollectionClassification::Kind::coplanar;
        for (const QVec& row : basis) out.subspace_basis.push_back(quadric_from_coords(row));
        return out;
    }

    // pairwise-intersecting lines are concurrent or coplanar; reaching here
    // means an internal inconsistency
    throw std::logic_error("pairwise-compatible pencils failed both the concurrent and coplanar tests");
}

} // namespace fo
