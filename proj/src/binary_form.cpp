#include "fo/binary_form.hpp"

#include <algorithm>
#include <map>

#include "fo/errors.hpp"

namespace fo {

namespace {

// --- dense univariate polynomials over Q, ascending coefficients ---

using UniPoly = std::vector<Rational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

// remainder of a by b (b nonzero)
UniPoly rem(UniPoly a, const UniPoly& b) {
    trim(a);
    while (deg(a) >= deg(b)) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

UniPoly monic(UniPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational inv = Rational(1) / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
    trim(a);
    if (b.empty()) throw InputError("division by zero polynomial");
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (deg(a) >= deg(b)) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) throw InputError("inexact polynomial division");
    trim(q);
    return q;
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
    Rational acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
    return acc;
}

// --- binary form <-> univariate ---

struct BinView {
    UniPoly p;   // f(t, 1)
    int degree;  // homogeneous degree of the form
    int mu_mult; // multiplicity of the factor x2 (root at infinity)
};

BinView view(const Poly& f) {
    if (f.nvars() != 2) throw InputError("binary form must have 2 variables");
    if (f.is_zero()) throw InputError("zero polynomial");
    int d = f.degree();
    if (!f.is_homogeneous(d)) throw InputError("binary form must be homogeneous");
    BinView v;
    v.degree = d;
    v.p.assign(static_cast<size_t>(d) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) v.p[m.e[0]] = c;
    trim(v.p);
    v.mu_mult = d - deg(v.p);
    return v;
}

Poly homogenize(const UniPoly& p, int target_degree) {
    Poly f(2);
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        Monomial m(2);
        m.e[0] = static_cast<uint32_t>(k);
        m.e[1] = static_cast<uint32_t>(target_degree) - static_cast<uint32_t>(k);
        f.add_term(m, p[k]);
    }
    return f;
}

// --- integer factorization for rational root candidates ---

mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    return (a * b) % n;
}

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xF0F0F0F0UL);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    long q = 41;
    while (n > 1 && mpz_class(q) * q <= n && q < 100000) {
        while (n % q == 0) {
            ++out[mpz_class(q)];
            n /= q;
        }
        q += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> f;
    factor_into(n, f);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

Poly binary_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero forms");
    if (f.is_zero()) return Rational(1) / g.leading_coeff() * g;
    if (g.is_zero()) return Rational(1) / f.leading_coeff() * f;
    BinView vf = view(f), vg = view(g);
    UniPoly h = uni_gcd(vf.p, vg.p);
    int mu = std::min(vf.mu_mult, vg.mu_mult);
    return homogenize(h, deg(h) + mu);
}

Poly binary_divide_exact(const Poly& f, const Poly& g) {
    BinView vf = view(f), vg = view(g);
    if (vg.mu_mult > vf.mu_mult) throw InputError("inexact binary form division");
    UniPoly q = uni_div_exact(vf.p, vg.p);
    return homogenize(q, vf.degree - vg.degree);
}

SquarefreeResult binary_form_squarefree(const Poly& f) {
    if (f.nvars() != 2) throw InputError("binary form must have 2 variables");
    if (f.is_zero()) throw InputError("squarefree test on the zero polynomial");
    view(f); // validates homogeneity
    Poly rep = binary_gcd(binary_gcd(f, f.derivative(0)), f.derivative(1));
    SquarefreeResult r;
    r.squarefree = rep.degree() == 0;
    r.part = r.squarefree ? Rational(1) / f.leading_coeff() * f
                          : binary_divide_exact(Rational(1) / f.leading_coeff() * f, rep);
    return r;
}

std::vector<ProjRoot> rational_projective_roots(const Poly& f) {
    BinView v = view(f);

    std::vector<ProjRoot> roots;
    if (v.mu_mult > 0) roots.push_back({Rational(1), Rational(0), v.mu_mult});

    // strip t = 0 roots
    UniPoly p = v.p;
    int zero_mult = 0;
    while (!p.empty() && p.front().is_zero()) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational(0), Rational(1), zero_mult});
    if (p.size() <= 1) {
        std::sort(roots.begin(), roots.end(), [](const ProjRoot& a, const ProjRoot& b) {
            if (a.mu != b.mu) return a.mu > b.mu; // affine first, infinity last
            return a.lambda < b.lambda;
        });
        return roots;
    }

    // clear denominators to a primitive integer polynomial
    mpz_class lcm_den = 1;
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(c.num() * (lcm_den / c.den()));

    std::vector<mpz_class> ps = divisors(ip.front());
    std::vector<mpz_class> qs = divisors(ip.back());
    for (const mpz_class& q : qs) {
        for (const mpz_class& pz : ps) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                Rational t(s * pz, q);
                if (!uni_eval(p, t).is_zero()) continue;
                // multiplicity by repeated exact division by (q x - s p)
                mpz_class neg_sp = -s * pz;
                UniPoly lin{Rational(neg_sp), Rational(q)};
                UniPoly rest = p;
                int mult = 0;
                while (true) {
                    if (rest.size() < 2 || !uni_eval(rest, t).is_zero()) break;
                    rest = uni_div_exact(rest, lin);
                    ++mult;
                }
                roots.push_back({t, Rational(1), mult});
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const ProjRoot& a, const ProjRoot& b) {
        if (a.mu != b.mu) return a.mu > b.mu;
        return a.lambda < b.lambda;
    });
    return roots;
}

} // namespace fo
