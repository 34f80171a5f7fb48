#pragma once

#include <string>

#include "fo/io.hpp"
#include "fo/polynomial.hpp"
#include "fo/prng.hpp"

inline fo::Poly P4(const std::string& s) { return fo::parse_poly(s, 4); }
inline fo::Poly P2(const std::string& s) { return fo::parse_poly(s, 2); }

inline fo::Rational Q(long n, long d = 1) { return fo::Rational(n, d); }

/// Random polynomial in n variables, total degree <= maxdeg, small integer
/// coefficients.
inline fo::Poly random_poly(fo::SplitMix64& rng, int nvars, int maxdeg, int nterms = 4) {
    fo::Poly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        fo::Monomial m(nvars);
        int d = static_cast<int>(rng.range(0, maxdeg));
        for (int k = 0; k < d; ++k)
            m.e[static_cast<size_t>(rng.range(0, nvars - 1))] += 1;
        p.add_term(m, fo::Rational(rng.range(-9, 9)));
    }
    return p;
}
