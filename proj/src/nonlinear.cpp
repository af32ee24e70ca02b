#include "expasym/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace expasym {

namespace {

const Complex kI(0.0, 1.0);

struct SimpsonState {
    int evals = 0;
    double leftover = 0.0;  // |delta| surrendered at depth-capped panels
};

Complex adaptive_simpson(const std::function<Complex(double)> &f, double a,
                         double b, Complex fa, Complex fm, Complex fb,
                         double tol, int depth, SimpsonState &st) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    Complex flm = f(lm), frm = f(rm);
    st.evals += 2;
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    Complex delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth > 30) {
        if (depth > 30) st.leftover += std::abs(delta);
        return left + right + delta / 15.0;
    }
    // floor the halved tolerance: the evaluation noise in delta scales with
    // the interval length just like the halving does, so without a floor the
    // refinement near steep regions never terminates
    double child_tol = std::max(tol / 2.0, 1e-15);
    return adaptive_simpson(f, a, m, fa, flm, fm, child_tol, depth + 1, st) +
           adaptive_simpson(f, m, b, fm, frm, fb, child_tol, depth + 1, st);
}

Complex integrate(const std::function<Complex(double)> &f, double a, double b,
                  double tol) {
    SimpsonState st;
    Complex fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    st.evals = 3;
    Complex v = adaptive_simpson(f, a, b, fa, fm, fb, tol, 0, st);
    // panels that hit the depth cap carry evaluation noise, not quadrature
    // error; fail only if their combined contribution is significant
    if (st.leftover > 1e-8)
        throw std::runtime_error(
            "nonlinear quadrature did not converge (unresolved residual " +
            std::to_string(st.leftover) + " after " +
            std::to_string(st.evals) + " evaluations)");
    return v;
}

} // namespace

Complex nonlinear_leading_order(Complex x) {
    return (9.0 / 32.0) * exact_leading_order(x);
}

SqrtApproximant fit_squared(const SampleGrid &grid, double tolerance) {
    validate(grid);
    double scale = grid.values.cwiseAbs().maxCoeff();
    for (int i = 0; i < grid.size(); ++i)
        if (std::abs(grid.values[i].imag()) > 1e-12 * std::max(scale, 1.0))
            throw std::invalid_argument("fit_squared: sampled values must be real");
    SampleGrid squared = grid;
    for (int i = 0; i < grid.size(); ++i)
        squared.values[i] = grid.values[i] * grid.values[i];
    SqrtApproximant sa;
    sa.inner = aaa_fit(squared, tolerance, 150, ResidualNorm::MaxPointwise);
    sa.real_axis_positive = true;
    return sa;
}

Complex evaluate_sqrt(const SqrtApproximant &sa, Complex z) {
    return std::sqrt(evaluate(sa.inner, z));
}

ResiduePattern residue_pattern(const PoleSet &ps) {
    if (ps.pairs.size() < 3)
        throw std::invalid_argument("residue_pattern: need at least 3 pairs");
    std::vector<double> rest;
    for (size_t i = 1; i < ps.pairs.size(); ++i)
        rest.push_back(std::abs(ps.pairs[i].residue));
    std::sort(rest.begin(), rest.end());
    double median = (rest.size() % 2 == 1)
                        ? rest[rest.size() / 2]
                        : 0.5 * (rest[rest.size() / 2 - 1] + rest[rest.size() / 2]);
    double a1 = std::abs(ps.pairs.front().residue);
    return (a1 >= 1.5 * median) ? ResiduePattern::DominantFirst
                                : ResiduePattern::Uniform;
}

NonlinearExpEstimate nonlinear_exp_estimate(const SqrtApproximant &sa,
                                            double x, double epsilon,
                                            double lambda) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("nonlinear_exp_estimate: epsilon must be > 0");
    PoleSet ps = filter_and_pair(poles_and_residues(sa.inner), SampleGrid{});
    if (ps.pairs.empty())
        throw std::runtime_error("nonlinear_exp_estimate: no pole pairs in fit");
    for (const PolePair &pp : ps.pairs)
        if (!(x > pp.pole.real()))
            throw std::invalid_argument(
                "nonlinear_exp_estimate: x must lie right of all Stokes crossings");
    Complex p1 = ps.pairs.front().pole;

    // chi(x) = int_{p1}^{x} i sqrt(2 f(t)) dt along the straight path, with
    // t = p1 + (x - p1) s^4 so the (t - p1)^{-1/4} endpoint singularity turns
    // into a smooth integrand ~ s^2.
    Complex span = Complex(x, 0.0) - p1;
    auto integrand = [&](double s) -> Complex {
        // the limit at the pole end is 0; evaluating there gives inf * 0
        if (s == 0.0) return Complex(0.0);
        Complex t = p1 + span * (s * s * s * s);
        Complex f = std::sqrt(evaluate(sa.inner, t));  // u0_sqrt(t)
        return kI * std::sqrt(2.0 * f) * 4.0 * span * (s * s * s);
    };
    Complex chi = integrate(integrand, 0.0, 1.0, 1e-10);

    NonlinearExpEstimate out;
    out.chi = chi;
    out.p1 = p1;
    out.epsilon = epsilon;
    out.lambda = (lambda > 0.0) ? lambda : 1.0 / epsilon;
    Complex fx = std::sqrt(evaluate(sa.inner, Complex(x, 0.0)));
    out.amplitude = out.lambda * std::pow(2.0 * fx, -0.25) * std::exp(-chi / epsilon);
    out.value = 2.0 * out.amplitude.real();
    return out;
}

} // namespace expasym
