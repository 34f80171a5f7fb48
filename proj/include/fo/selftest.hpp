#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fo {

struct SuiteResult {
    std::string name;
    int trials = 0;
    int passed = 0;
    int failed = 0;
};

/// Seeded randomized property suites: the bracket/quartic determinant
/// identity, the Poisson property of the Jacobian bivectors, the
/// pencil-geometry compatibility criterion cross-validation, and the polar
/// identification 16 * intersection_quartic == phi. Deterministic for a
/// fixed (trials, seed).
std::vector<SuiteResult> run_selftest(int trials, uint64_t seed);

} // namespace fo
