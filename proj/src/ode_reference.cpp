#include "expasym/ode_reference.hpp"
#include "expasym/exact_asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace expasym {

ReferenceSolution integrate_rk4(const std::function<double(double)> &forcing,
                                double epsilon, double x0, double x1,
                                double step, double u0, double du0) {
    if (!(epsilon > 0.0) || !(step > 0.0) || !(x1 > x0))
        throw std::invalid_argument("integrate_rk4: bad arguments");
    const int n = static_cast<int>(std::ceil((x1 - x0) / step));
    const double h = (x1 - x0) / n;
    const double ie2 = 1.0 / (epsilon * epsilon);

    ReferenceSolution out;
    out.epsilon = epsilon;
    out.start = x0;
    out.step = h;
    out.order = 4;
    out.grid.resize(n + 1);
    out.values.resize(n + 1);

    double x = x0, u = u0, v = du0;
    out.grid[0] = x;
    out.values[0] = u;
    auto fu = [](double /*x*/, double /*u*/, double v) { return v; };
    auto fv = [&](double x, double u, double /*v*/) { return (forcing(x) - u) * ie2; };
    for (int i = 1; i <= n; ++i) {
        double k1u = fu(x, u, v), k1v = fv(x, u, v);
        double k2u = fu(x + h / 2, u + h / 2 * k1u, v + h / 2 * k1v);
        double k2v = fv(x + h / 2, u + h / 2 * k1u, v + h / 2 * k1v);
        double k3u = fu(x + h / 2, u + h / 2 * k2u, v + h / 2 * k2v);
        double k3v = fv(x + h / 2, u + h / 2 * k2u, v + h / 2 * k2v);
        double k4u = fu(x + h, u + h * k3u, v + h * k3v);
        double k4v = fv(x + h, u + h * k3u, v + h * k3v);
        u += h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
        v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        x = x0 + i * h;
        out.grid[i] = x;
        out.values[i] = u;
    }
    return out;
}

ReferenceSolution numeric_reference_solution(double epsilon, double x0,
                                             double x1, double step) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("numeric_reference_solution: epsilon must be > 0");
    if (!(x0 <= -10.0) || !(x1 >= 5.0))
        throw std::invalid_argument("numeric_reference_solution: need x0 <= -10, x1 >= 5");
    if (!(step <= epsilon / 20.0))
        throw std::invalid_argument(
            "numeric_reference_solution: step must be <= eps/20 to resolve the oscillation");

    const int N = optimal_truncation(Complex(x0, 0.0), epsilon);
    const double u0 = truncated_series(Complex(x0, 0.0), epsilon, N).real();
    const double du0 = truncated_series_derivative(Complex(x0, 0.0), epsilon, N).real();
    auto forcing = [](double x) { return exact_leading_order(Complex(x, 0.0)).real(); };
    return integrate_rk4(forcing, epsilon, x0, x1, step, u0, du0);
}

} // namespace expasym
