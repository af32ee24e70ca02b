#ifndef EXPASYM_APPROX_ASYMPTOTICS_HPP
#define EXPASYM_APPROX_ASYMPTOTICS_HPP

#include "expasym/exact_asymptotics.hpp"
#include "expasym/pole_set.hpp"

#include <functional>
#include <vector>

namespace expasym {

// One exponentially small term generated by pole pair r: switched on for
// x > Re(p_r), where it contributes 2 Re[prefactor e^{-i(x-p_r)/eps}].
struct ExpContribution {
    int pair_index = 0;
    Complex prefactor;          // 2 pi a_r / eps
    Complex exponent_anchor;    // p_r
    double activation_threshold = 0.0;  // Re(p_r)
};

std::vector<ExpContribution> exp_contributions(const PoleSet &ps, double epsilon);

// Value of a single contribution at real x (0 at x <= threshold).
double contribution_value(const ExpContribution &c, double x, double epsilon);

// u_hat_n(x) = sum_r a_r (2n)! / (x - p_r)^{2n+1} over both members of every
// pair, in log-Gamma arithmetic. Throws std::domain_error at a pole.
Complex approx_series_term(const PoleSet &ps, int n, Complex x);

// One downward curve per upper pole plus the conjugate upward curve.
std::vector<StokesCurve> approx_stokes_curves(const PoleSet &ps);

// u_hat_exp: sum over pairs of 2 Re[(2 pi a_r/eps) e^{-i(x-p_r)/eps}]
// H(x - Re p_r), sharp Heaviside activation.
double approx_exp_contribution(const PoleSet &ps, double x, double epsilon);

// Least-squares fit of A cos(x/eps) + B sin(x/eps) over 200 uniform samples
// of [lo, hi]; returns sqrt(A^2 + B^2). Requires hi - lo >= 2 pi eps.
double measure_amplitude(const std::function<double(double)> &signal,
                         double epsilon, double lo, double hi);

// measure_amplitude(u_hat_exp) / measure_amplitude(u_exp) over window [1,3].
double amplitude_ratio(const PoleSet &ps, double epsilon);

struct SweepRecord {
    double tolerance = 0.0;
    int n_pairs = 0;
    double epsilon = 0.0;
    double amplitude_ratio = 0.0;
    double p1_distance = 0.0;      // |p_1 - i|
    double relative_error = 0.0;   // 1 - amplitude_ratio
};

// For each tolerance: one MaxPointwise fit + filter, then one record per eps.
// eps_values must be positive and descending. Records sorted by
// (tolerance, epsilon) ascending. A fit that fails for one tolerance is
// skipped without aborting the others.
std::vector<SweepRecord> eps_sweep(const SampleGrid &grid,
                                   const std::vector<double> &tolerances,
                                   const std::vector<double> &eps_values);

// Logarithmic eps grid, 60 points per decade over [0.005, 0.15] by default.
std::vector<double> log_eps_grid(double lo = 0.005, double hi = 0.15,
                                 int per_decade = 60);

} // namespace expasym

#endif
