#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fo/rational.hpp"

namespace fo {

/// Exponent vector of a power product; one entry per variable.
struct Monomial {
    std::vector<uint32_t> e;

    explicit Monomial(int nvars) : e(static_cast<size_t>(nvars), 0u) {}
    Monomial(std::initializer_list<uint32_t> init) : e(init) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const {
        int d = 0;
        for (auto x : e) d += static_cast<int>(x);
        return d;
    }
    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic with x1 > x2 > ... : higher total degree first, ties
// broken by the first differing exponent. Used as the canonical term order,
// so map iteration prints leading terms first.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

/// Sparse multivariate polynomial over Rational in a fixed number of
/// variables. Zero coefficients are never stored, so operator== is
/// canonical-form equality.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    /// x_{i+1} for 0-based index i.
    static Poly variable(int nvars, int i);
    static Poly term(int nvars, const Monomial& m, const Rational& c) {
        Poly p(nvars);
        p.add_term(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    /// True when all terms share one total degree (or the poly is zero).
    bool is_homogeneous() const;

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Coefficient of the grlex-leading monomial (0 for the zero poly).
    Rational leading_coeff() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative d/dx_{i+1}, 0-based i.
    Poly derivative(int i) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Substitutes images[i] for variable i; all images must share one
    /// variable count, which becomes the result's.
    Poly substitute(std::span<const Poly> images) const;

private:
    int nvars_;
    TermMap terms_;
};

/// Determinant of a square matrix of polynomials (Laplace expansion; the
/// matrices here are at most 4x4).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

} // namespace fo
