#ifndef EXPASYM_NONLINEAR_HPP
#define EXPASYM_NONLINEAR_HPP

#include "expasym/approx_asymptotics.hpp"

namespace expasym {

// Nonlinear model problem: eps^2 u'' + u^2 = (81/1024)(1/sqrt(x-i) +
// 1/sqrt(x+i))^2, handled by squaring the sampled leading order, fitting the
// square (which has honest simple poles at +/-i), and taking the square root
// of the fit.

// (9/32)(1/sqrt(x-i) + 1/sqrt(x+i)).
Complex nonlinear_leading_order(Complex x);

// Square root of a rational fit of squared samples.
struct SqrtApproximant {
    BarycentricApproximant inner;  // fit of u0^2 samples
    bool real_axis_positive = true;  // branch: positive where samples are
};

// Squares each (real) sample and fits with MaxPointwise termination.
// Throws std::invalid_argument if the sampled values are not real.
SqrtApproximant fit_squared(const SampleGrid &grid, double tolerance = 1e-13);

// Principal square root of the inner rational value; real positive on the
// sample interval by the branch choice.
Complex evaluate_sqrt(const SqrtApproximant &sa, Complex z);

enum class ResiduePattern { DominantFirst, Uniform };

// DominantFirst when |a_1| >= 1.5 * median(|a_r|, r >= 2); Uniform
// otherwise. Requires >= 3 pairs.
ResiduePattern residue_pattern(const PoleSet &ps);

struct NonlinearExpEstimate {
    double value = 0.0;        // 2 Re(amplitude)
    Complex amplitude;         // lambda (2 f(x))^{-1/4} e^{-chi/eps}
    Complex chi;               // singulant at x
    Complex p1;                // singulant anchor (nearest upper pole)
    double lambda = 0.0;       // normalization used (free; default 1/eps)
    double epsilon = 0.0;
};

// WKB-type estimate of the exponentially small term for the nonlinear
// problem. Singulant chi(x) = integral over the straight path from p1 to x
// of i sqrt(2 f(t)) dt with f the square-root approximant, computed by
// adaptive quadrature after the substitution t = p1 + (x-p1) s^2 that tames
// the inverse-fourth-root endpoint. The amplitude normalization lambda is
// free (the source analysis gives no prefactor); the default 1/eps mirrors
// the eps-scaling of the linear per-pole jump. Contractual outputs are the
// oscillation wavelength and the exponential eps-scaling, not the absolute
// amplitude.
//
// Requires eps > 0 and x right of all Stokes crossings of the inner fit.
// Throws std::runtime_error if the quadrature fails to converge.
NonlinearExpEstimate nonlinear_exp_estimate(const SqrtApproximant &sa,
                                            double x, double epsilon,
                                            double lambda = 0.0 /* 0 -> 1/eps */);

} // namespace expasym

#endif
