#pragma once

#include <map>
#include <string>
#include <vector>

#include "fo/polynomial.hpp"

namespace fo {

/// Strictly increasing 0-based variable indices; the canonical key of an
/// antisymmetric component.
using IdxTuple = std::vector<int>;

/// Orientation marker for vol = dx1^...^dxn; all quartic extractions in one
/// session share it.
struct VolumeForm {
    int nvars = 4;
    int sign = 1;
};

/// Polynomial multivector field of pure degree p on affine n-space.
/// Components are indexed by strictly increasing tuples only; signs from
/// reordering are absorbed at construction, so equality is canonical-form
/// equality and zero coefficients are never stored.
class Multivector {
public:
    Multivector(int nvars, int degree);

    static Multivector zero(int nvars, int degree) { return Multivector(nvars, degree); }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }

    const std::map<IdxTuple, Poly>& components() const { return comps_; }
    Poly component(const IdxTuple& sorted_indices) const;

    /// Adds c * d_{i1}^...^d_{ip} with indices in any order; repeated index
    /// kills the term, odd permutations flip the sign.
    void add_term(IdxTuple indices, const Poly& c);

    /// True when every coefficient is homogeneous of the given degree.
    bool coefficients_homogeneous(int d) const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { a += b; return a; }
    friend Multivector operator-(Multivector a, const Multivector& b) { a -= b; return a; }
    friend Multivector operator*(const Poly& f, const Multivector& a);
    friend Multivector operator*(const Rational& c, const Multivector& a);

    /// Zero multivectors are equal regardless of their degree tag.
    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.nvars_ != b.nvars_) return false;
        if (a.comps_.empty() && b.comps_.empty()) return true;
        return a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    int nvars_;
    int degree_;
    std::map<IdxTuple, Poly> comps_;
};

/// Exterior product. Degrees add; deg > nvars gives the zero multivector.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Schouten-Nijenhuis bracket via the odd-variable calculus: writing a
/// p-vector as a superfunction in odd generators t_i (d_i <-> t_i),
///   a • b := sum_i (da/dt_i) ^ (db/dx_i)   (right t-derivative),
///   [a,b] := a • b - (-1)^{(|a|-1)(|b|-1)} b • a.
/// On vector fields this is the Lie bracket; [a,-] is a degree-(|a|-1)
/// derivation of the wedge and the shifted grading satisfies graded Jacobi.
/// The sign convention this fixes is
/// [sum_i x_i d_i^d_n, d_i^d_j] = +2 d_i^d_j^d_n (see tests).
Multivector schouten(const Multivector& a, const Multivector& b);

/// E = sum_i x_i d_i.
Multivector euler_field(int nvars);

/// For a trivector T on 4 variables with homogeneous cubic coefficients,
/// E^T = f * d1^d2^d3^d4; returns f (a quartic) scaled by vol.sign and the
/// calibration constant below. Euler-degenerate terms E^(bivector) map to 0.
Poly quartic_from_trivector(const Multivector& t, const VolumeForm& vol = {});

/// Universal scalar relating E^T to the quartic. Solved once from the anchor
/// quadruple (x1^2, x1*x2, x1*x3, x1*x4): the bracket of its two bivectors is
/// -8*x1^3 d2^d3^d4 in our sign convention, E^ reads off -8*x1^4 against
/// vol, and the required output is +8*x1^4 -- hence exactly -1. Kept named
/// so every extraction shares it.
inline const Rational kQuarticCalibration(-1);

/// Pushforward to the affine chart x_k = 1 (k is 1-based) of a multivector
/// that descends to projective space (coefficients homogeneous of degree =
/// multivector degree). Chart coordinates are y_i = x_i / x_k, i != k, kept
/// in increasing original order; coefficients come out with degree <= nvars-1.
Multivector dehomogenize(const Multivector& a, int chart);

/// Text form, e.g. "2*x1^2 d3^d4"; multi-term coefficients are wrapped in
/// parentheses. Variable/axis names default to x1..xn / d1..dn.
std::string multivector_to_string(const Multivector& a);
std::string multivector_to_string(const Multivector& a,
                                  const std::vector<std::string>& var_names,
                                  const std::vector<std::string>& axis_names);

} // namespace fo
