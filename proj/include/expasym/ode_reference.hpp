#ifndef EXPASYM_ODE_REFERENCE_HPP
#define EXPASYM_ODE_REFERENCE_HPP

#include "expasym/sample_grid.hpp"

namespace expasym {

struct ReferenceSolution {
    double epsilon = 0.0;
    double start = 0.0;        // x0
    Eigen::VectorXd grid;      // dense abscissae, x0 .. x1
    Eigen::VectorXd values;    // u(x)
    double step = 0.0;
    int order = 4;
};

// Classical fixed-step RK4 for eps^2 u'' + u = forcing(x).
ReferenceSolution integrate_rk4(const std::function<double(double)> &forcing,
                                double epsilon, double x0, double x1,
                                double step, double u0, double du0);

// Reference solution of the linear model problem, initialized at x0 from the
// optimally truncated series and its derivative so the homogeneous mode is
// suppressed. Requires x0 <= -10, x1 >= 5, step <= eps/20 (throws
// std::invalid_argument otherwise). Valid as an exponential-term oracle for
// eps >= 0.15; below that the e^{-1/eps} signal falls under the integrator
// error.
ReferenceSolution numeric_reference_solution(double epsilon, double x0,
                                             double x1, double step);

} // namespace expasym

#endif
