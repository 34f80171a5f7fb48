#include "fo/selftest.hpp"

#include "fo/fo_bracket.hpp"
#include "fo/generators.hpp"
#include "fo/pencil.hpp"
#include "fo/polar.hpp"

namespace fo {

std::vector<SuiteResult> run_selftest(int trials, uint64_t seed) {
    std::vector<SuiteResult> out;

    {
        SuiteResult s{"bracket_equals_4_phi", trials, 0, 0};
        SplitMix64 rng(seed);
        for (int t = 0; t < trials; ++t) {
            Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
            Poly q3 = random_quadric(rng), q4 = random_quadric(rng);
            bool ok = verify_bracket_identity(q1, q2, q3, q4).equal;
            ok ? ++s.passed : ++s.failed;
        }
        out.push_back(s);
    }

    {
        SuiteResult s{"jacobi_identity", trials, 0, 0};
        SplitMix64 rng(seed + 1);
        for (int t = 0; t < trials; ++t) {
            Poly q1 = random_quadric(rng), q2 = random_quadric(rng);
            bool ok = verify_jacobi(fo_bivector(q1, q2)).is_poisson;
            ok ? ++s.passed : ++s.failed;
        }
        // control: a bivector that genuinely fails Jacobi must be flagged
        Multivector control(4, 2);
        control.add_term({0, 1}, Poly::variable(4, 2));
        control.add_term({0, 2}, Poly::variable(4, 0));
        ++s.trials;
        !verify_jacobi(control).is_poisson ? ++s.passed : ++s.failed;
        out.push_back(s);
    }

    {
        SuiteResult s{"pencil_compatibility_criterion", trials, 0, 0};
        SplitMix64 rng(seed + 2);
        for (int t = 0; t < trials; ++t) {
            bool want_compatible = t % 2 == 0;
            auto [pa, pb] = want_compatible ? random_rank3_generic_pair(rng)
                                            : random_rank4_generic_pair(rng);
            bool line_test = pairwise_compatible(pa, pb);
            bool bracket_zero =
                descends_to_zero(compatibility_bracket(pa.q1, pa.q2, pb.q1, pb.q2));
            bool ok = line_test == want_compatible && line_test == bracket_zero;
            ok ? ++s.passed : ++s.failed;
        }
        out.push_back(s);
    }

    {
        SuiteResult s{"polar_16_intersection_equals_phi", trials, 0, 0};
        SplitMix64 rng(seed + 3);
        for (int t = 0; t < trials; ++t) {
            QuadricPencil pa = random_generic_pencil(rng);
            QuadricPencil pb = random_generic_pencil(rng);
            Poly lhs = Rational(16) * intersection_quartic(pa, pb);
            Poly rhs = phi_quartic(pa.q1, pa.q2, pb.q1, pb.q2);
            bool ok = lhs == rhs;
            ok ? ++s.passed : ++s.failed;
        }
        out.push_back(s);
    }

    return out;
}

} // namespace fo
