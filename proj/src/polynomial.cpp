#include "fo/polynomial.hpp"

#include "fo/errors.hpp"

namespace fo {

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw InputError("variable index out of range");
    Monomial m(nvars);
    m.e[static_cast<size_t>(i)] = 1;
    return term(nvars, m, Rational(1));
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree(); // grlex-leading term has max degree
}

bool Poly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || is_homogeneous(degree());
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw InputError("monomial variable count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw InputError("polynomial variable count mismatch");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly Poly::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw InputError("derivative index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        uint32_t k = m.e[static_cast<size_t>(i)];
        if (k == 0) continue;
        Monomial dm = m;
        dm.e[static_cast<size_t>(i)] = k - 1;
        r.add_term(dm, Rational(static_cast<long>(k)) * c);
    }
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw InputError("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (uint32_t k = 0; k < m.e[static_cast<size_t>(i)]; ++k)
                t *= point[static_cast<size_t>(i)];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw InputError("substitution image count mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const Poly& im : images)
        if (im.nvars() != out_vars) throw InputError("substitution images disagree on variable count");
    Poly acc(out_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (uint32_t k = 0; k < m.e[static_cast<size_t>(i)]; ++k)
                t = t * images[static_cast<size_t>(i)];
        acc += t;
    }
    return acc;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) throw InputError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    int nv = m[0][0].nvars();
    Poly acc(nv);
    // expand along the first row
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly cof = m[0][j] * poly_det(minor);
        if (j % 2 == 0) acc += cof; else acc -= cof;
    }
    return acc;
}

} // namespace fo
