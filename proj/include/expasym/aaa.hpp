#ifndef EXPASYM_AAA_HPP
#define EXPASYM_AAA_HPP

#include "expasym/sample_grid.hpp"

#include <utility>
#include <vector>

namespace expasym {

// Convergence test used by the greedy iteration. Both are measured relative
// to max_j |f_j|.
//
//   ScaledLinearized : ||f d - n||_2 / (#non-support points)  <= tol * max|f|
//   MaxPointwise     : max |f - n/d| over non-support points  <= tol * max|f|
//
// ScaledLinearized is the default and reproduces the 15-pole reference fit at
// tol 1e-12; MaxPointwise reproduces the pair-count ladder used by the
// tolerance sweeps. See README for the calibration details.
enum class ResidualNorm { ScaledLinearized, MaxPointwise };

// Barycentric rational approximant n(z)/d(z) with
//   n(z) = sum_j w_j f_j / (z - x_j),   d(z) = sum_j w_j / (z - x_j).
struct BarycentricApproximant {
    Eigen::VectorXcd support_points;  // drawn from the originating grid
    Eigen::VectorXcd support_values;  // f at each support point
    Eigen::VectorXcd weights;         // ||w||_2 = 1
    double tolerance_used = 0.0;
    int iterations = 0;               // greedy steps taken (= #support points)
    bool converged = false;
    ResidualNorm norm_used = ResidualNorm::ScaledLinearized;
};

// Greedy AAA fit. First support point maximizes |f - mean(f)|; subsequent
// points maximize the true residual |f - n/d| over the remaining grid; ties
// pick the smallest index. Weights are the smallest right singular vector of
// the Loewner matrix, with the phase canonicalized (largest-magnitude entry
// made real positive) so runs are deterministic. For real-valued data the
// weights are projected onto the reals, which makes conjugate symmetry of the
// approximant exact.
//
// Throws std::invalid_argument for fewer than 2 samples, non-finite values,
// or tolerance outside (0,1). Failure to converge within max_support is
// reported through the converged flag, not an error.
BarycentricApproximant aaa_fit(const SampleGrid &grid, double rel_tolerance,
                               int max_support = 150,
                               ResidualNorm norm = ResidualNorm::ScaledLinearized);

// Barycentric evaluation; at a support point returns the stored value
// exactly. At a pole of the quotient returns an infinite sentinel, never NaN.
Complex evaluate(const BarycentricApproximant &approx, Complex z);

// Poles as finite generalized eigenvalues of the (m+1)x(m+1) arrowhead
// pencil of the denominator; residues analytically as n(p)/d'(p). Sorted by
// (Im, Re). Eigenvalues with |value| > 1e13 * max(1, max|support|) are the
// spurious infinite ones and are dropped.
std::vector<std::pair<Complex, Complex>>
poles_and_residues(const BarycentricApproximant &approx);

} // namespace expasym

#endif
