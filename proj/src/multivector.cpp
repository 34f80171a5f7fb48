#include "fo/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "fo/errors.hpp"
#include "fo/io.hpp"

namespace fo {

namespace {

// sorts into strictly increasing order; returns 0 on repeated index, else the
// permutation sign
int sort_sign(IdxTuple& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

// sign of merging two disjoint increasing tuples by concatenation a++b
int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged) {
    merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    return sort_sign(merged);
}

} // namespace

Multivector::Multivector(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (degree < 0 || degree > nvars)
        throw InputError("multivector degree out of range");
}

Poly Multivector::component(const IdxTuple& sorted_indices) const {
    auto it = comps_.find(sorted_indices);
    return it == comps_.end() ? Poly::zero(nvars_) : it->second;
}

void Multivector::add_term(IdxTuple indices, const Poly& c) {
    if (static_cast<int>(indices.size()) != degree_)
        throw InputError("index tuple length does not match multivector degree");
    for (int i : indices)
        if (i < 0 || i >= nvars_) throw InputError("multivector index out of range");
    if (c.nvars() != nvars_) throw InputError("coefficient variable count mismatch");
    if (c.is_zero()) return;
    int sign = sort_sign(indices);
    if (sign == 0) return;
    Poly add = sign < 0 ? -c : c;
    auto [it, inserted] = comps_.emplace(std::move(indices), add);
    if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

bool Multivector::coefficients_homogeneous(int d) const {
    for (const auto& [idx, c] : comps_)
        if (!c.is_homogeneous(d)) return false;
    return true;
}

Multivector Multivector::operator-() const {
    Multivector r(nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, -c);
    return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (nvars_ != o.nvars_) throw InputError("multivector variable count mismatch in addition");
    if (o.comps_.empty()) return *this;
    if (comps_.empty()) degree_ = o.degree_; // identically-zero values are degree-agnostic
    if (degree_ != o.degree_) throw InputError("multivector degree mismatch in addition");
    for (const auto& [idx, c] : o.comps_) add_term(idx, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (nvars_ != o.nvars_) throw InputError("multivector variable count mismatch in subtraction");
    if (o.comps_.empty()) return *this;
    if (comps_.empty()) degree_ = o.degree_;
    if (degree_ != o.degree_) throw InputError("multivector degree mismatch in subtraction");
    for (const auto& [idx, c] : o.comps_) add_term(idx, -c);
    return *this;
}

Multivector operator*(const Poly& f, const Multivector& a) {
    Multivector r(a.nvars_, a.degree_);
    for (const auto& [idx, c] : a.comps_) r.add_term(idx, f * c);
    return r;
}

Multivector operator*(const Rational& c, const Multivector& a) {
    return Poly::constant(a.nvars(), c) * a;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.nvars() != b.nvars()) throw InputError("wedge variable count mismatch");
    int n = a.nvars();
    int d = a.degree() + b.degree();
    if (d > n) return Multivector::zero(n, n); // zero of top degree as canonical sink
    Multivector r(n, d);
    for (const auto& [ia, ca] : a.components()) {
        for (const auto& [ib, cb] : b.components()) {
            IdxTuple merged;
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            Poly prod = ca * cb;
            r.add_term(std::move(merged), sign < 0 ? -prod : prod);
        }
    }
    return r;
}

namespace {

// right derivative d/dt_i of a single odd monomial: removes i from the tuple
// with sign (-1)^{#generators after i}; zero when i is absent. The right
// derivative (not the left one) makes the bracket below satisfy the graded
// Leibniz and Jacobi identities in their standard form.
bool theta_derivative(const IdxTuple& idx, int i, IdxTuple& out, int& sign) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) return false;
    auto after = std::distance(it, idx.end()) - 1;
    sign = (after % 2 == 0) ? 1 : -1;
    out.clear();
    out.reserve(idx.size() - 1);
    for (int v : idx)
        if (v != i) out.push_back(v);
    return true;
}

// a • b = sum_i (da/dt_i) ^ (db/dx_i)
Multivector schouten_dot(const Multivector& a, const Multivector& b) {
    int n = a.nvars();
    int dega = a.degree(), degb = b.degree();
    int degr = dega + degb - 1;
    if (degr > n) return Multivector::zero(n, n);
    if (dega == 0 || degr < 0)
        return Multivector::zero(n, std::max(degr, 0));
    Multivector r(n, degr);
    for (const auto& [ia, ca] : a.components()) {
        for (int i = 0; i < n; ++i) {
            IdxTuple da;
            int sa;
            if (!theta_derivative(ia, i, da, sa)) continue;
            for (const auto& [ib, cb] : b.components()) {
                Poly dcb = cb.derivative(i);
                if (dcb.is_zero()) continue;
                IdxTuple merged;
                int sm = merge_sign(da, ib, merged);
                if (sm == 0) continue;
                Poly prod = ca * dcb;
                int sign = sa * sm;
                r.add_term(std::move(merged), sign < 0 ? -prod : prod);
            }
        }
    }
    return r;
}

} // namespace

Multivector schouten(const Multivector& a, const Multivector& b) {
    if (a.nvars() != b.nvars()) throw InputError("schouten variable count mismatch");
    int n = a.nvars();
    int degr = a.degree() + b.degree() - 1;
    if (degr < 0) return Multivector::zero(n, 0);
    if (degr > n) return Multivector::zero(n, n);
    Multivector ab = schouten_dot(a, b);
    Multivector ba = schouten_dot(b, a);
    bool flip = ((a.degree() - 1) * (b.degree() - 1)) % 2 != 0;
    return flip ? ab + ba : ab - ba;
}

Multivector euler_field(int nvars) {
    Multivector e(nvars, 1);
    for (int i = 0; i < nvars; ++i)
        e.add_term({i}, Poly::variable(nvars, i));
    return e;
}

Poly quartic_from_trivector(const Multivector& t, const VolumeForm& vol) {
    if (t.nvars() != 4 || vol.nvars != 4)
        throw InputError("quartic extraction needs 4 variables");
    if (!t.is_zero() && t.degree() != 3)
        throw InputError("quartic extraction needs a trivector");
    Poly f = wedge(euler_field(4), t).component({0, 1, 2, 3});
    // Euler-degenerate input maps to 0 regardless of coefficient degrees;
    // anything surviving must descend, i.e. have homogeneous cubic coefficients.
    if (!f.is_zero() && !t.coefficients_homogeneous(3))
        throw InputError("trivector coefficients must be homogeneous cubics");
    Rational scale = kQuarticCalibration * Rational(vol.sign);
    return scale * f;
}

Multivector dehomogenize(const Multivector& a, int chart) {
    int n = a.nvars();
    if (chart < 1 || chart > n) throw InputError("chart index out of range");
    if (!a.coefficients_homogeneous(a.degree()))
        throw PreconditionError("multivector does not descend to projective space "
                                "(coefficients not homogeneous of degree equal to its degree)");
    int k = chart - 1;
    int m = n - 1;

    // x_i -> y_pos(i) for i != k, x_k -> 1
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(n));
    {
        int pos = 0;
        for (int i = 0; i < n; ++i) {
            if (i == k) images.push_back(Poly::constant(m, Rational(1)));
            else images.push_back(Poly::variable(m, pos++));
        }
    }

    // pushforward of the coordinate frame along the chart section:
    // d_i -> d_pos(i), d_k -> -sum_j y_j d_j
    std::vector<Multivector> frame;
    frame.reserve(static_cast<size_t>(n));
    {
        int pos = 0;
        for (int i = 0; i < n; ++i) {
            Multivector v(m, 1);
            if (i == k) {
                for (int j = 0; j < m; ++j) v.add_term({j}, -Poly::variable(m, j));
            } else {
                v.add_term({pos}, Poly::constant(m, Rational(1)));
                ++pos;
            }
            frame.push_back(std::move(v));
        }
    }

    Multivector r(m, a.degree());
    for (const auto& [idx, c] : a.components()) {
        Multivector w(m, 0);
        w.add_term({}, c.substitute(images));
        for (int i : idx) w = wedge(w, frame[static_cast<size_t>(i)]);
        r += w;
    }
    return r;
}

std::string multivector_to_string(const Multivector& a,
                                  const std::vector<std::string>& var_names,
                                  const std::vector<std::string>& axis_names) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : a.components()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = poly_to_string(c, var_names);
        if (c.term_count() > 1) os << '(' << cs << ')';
        else os << cs;
        if (!idx.empty()) {
            os << ' ';
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) os << '^';
                os << axis_names[static_cast<size_t>(idx[i])];
            }
        }
    }
    return os.str();
}

std::string multivector_to_string(const Multivector& a) {
    std::vector<std::string> vars, axes;
    for (int i = 1; i <= a.nvars(); ++i) {
        vars.push_back("x" + std::to_string(i));
        axes.push_back("d" + std::to_string(i));
    }
    return multivector_to_string(a, vars, axes);
}

} // namespace fo
