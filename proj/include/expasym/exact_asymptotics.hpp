#ifndef EXPASYM_EXACT_ASYMPTOTICS_HPP
#define EXPASYM_EXACT_ASYMPTOTICS_HPP

#include "expasym/sample_grid.hpp"

#include <vector>

namespace expasym {

// Model problem: eps^2 u'' + u = 1/sqrt(x+i) + 1/sqrt(x-i), u -> 0 as
// x -> -inf. Branch cuts run vertically away from the real axis: down from
// -i and up from +i, so the forcing is analytic in a neighbourhood of the
// real line and agrees with the principal branches there.

// 1/sqrt(x+i) with the cut {iy : y <= -1}.
Complex inv_sqrt_plus_i(Complex x);
// 1/sqrt(x-i) with the cut {iy : y >= 1}.
Complex inv_sqrt_minus_i(Complex x);

// Leading order u0(x) = 1/sqrt(x+i) + 1/sqrt(x-i).
// Throws std::domain_error on the cuts {iy : |y| >= 1}.
Complex exact_leading_order(Complex x);

struct SeriesTerm {
    int n = 0;
    Complex value;            // u_n(x); +/-inf when not representable
    double magnitude_log10 = 0.0;  // log10 |eps^{2n} u_n(x)|
};

// u_n(x) = (4n)! (-1)^n / (2^{4n} (2n)! (x-i)^{2n+1/2}) + c.c. branch term,
// evaluated in log-Gamma arithmetic so (4n)! never overflows internally.
Complex series_term(int n, Complex x);

// Same term with the scaled magnitude log10|eps^{2n} u_n| computed fully in
// log space (valid even when the unscaled value overflows a double).
SeriesTerm series_term_scaled(int n, Complex x, double epsilon);

// N_opt = ceil(|x - i| / (2 eps)).
int optimal_truncation(Complex x, double epsilon);

// sum_{n=0}^{N-1} eps^{2n} u_n(x).
Complex truncated_series(Complex x, double epsilon, int N);

// d/dx of the truncated series (closed form, used to initialize the ODE
// reference solution).
Complex truncated_series_derivative(Complex x, double epsilon, int N);

// Sharp-switch exponentially small contribution:
//   4 sqrt(pi/eps) e^{-1/eps} cos(x/eps + pi/4)  for x > 0, else 0.
double exact_exp_contribution(double x, double epsilon);

// Fraction of the Stokes jump switched on at inner variable theta_scaled:
// (1/2)(1 + erf(theta_scaled sqrt(r/2))).
double stokes_multiplier_profile(double theta_scaled, double r, double epsilon);

struct StokesCurve {
    Complex anchor;            // generating singularity
    double real_axis_crossing = 0.0;  // = Re(anchor)
    enum class Direction { Upward, Downward } direction;
};

// Two curves: anchor +i downward and anchor -i upward, both crossing x = 0.
std::vector<StokesCurve> exact_stokes_curves();

} // namespace expasym

#endif
