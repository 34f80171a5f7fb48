#pragma once

#include <array>
#include <complex>
#include <string>

#include "fo/pencil.hpp"

namespace fo {

/// Cross-ratio of four points of a projective line given by homogeneous
/// parameters (num : den). The convention is fixed so that the harmonic
/// conjugate r of a w.r.t. the pair (b, c) gives cross_ratio(a,b,c,r) = -1;
/// e.g. cross_ratio(inf, 1, -1, 0) = -1.
std::complex<double> cross_ratio(const std::array<std::complex<double>, 2>& a,
                                 const std::array<std::complex<double>, 2>& b,
                                 const std::array<std::complex<double>, 2>& c,
                                 const std::array<std::complex<double>, 2>& d);

/// Floating-point verification of the harmonic description of the polar
/// line. Works over complex doubles (the two lines through p on the member
/// quadric may be complex-conjugate for real input); an outcome is either a
/// verified residual bound or an explicit "inconclusive", never a false
/// verdict.
struct HarmonicReport {
    enum class Status { verified, inconclusive, failed };
    Status status = Status::inconclusive;
    std::string reason;              // set for inconclusive
    double lambda = 0.0, mu = 0.0;   // member of the pencil through p
    double max_cross_ratio_residual = 0.0; // |CR - (-1)|
    double max_polar_residual = 0.0;       // polar-plane equations at r1, r2
    int lines_checked = 0;
};

/// For a generic p: finds the member quadric through p, the two lines
/// through p on it, the intersections p_i, q_i of each line with the base
/// curve, and the harmonic conjugates r_i of p w.r.t. (p_i, q_i); verifies
/// cross-ratio(p, p_i, q_i, r_i) = -1 and that r_1, r_2 satisfy both polar
/// plane equations of p, all within tol.
HarmonicReport harmonic_check(const QuadricPencil& pencil,
                              const std::array<double, 4>& p, double tol = 1e-9);

} // namespace fo
