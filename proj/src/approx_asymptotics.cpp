#include "expasym/approx_asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace expasym {

namespace {
const double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);
} // namespace

std::vector<ExpContribution> exp_contributions(const PoleSet &ps, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("exp_contributions: epsilon must be > 0");
    std::vector<ExpContribution> out;
    out.reserve(ps.pairs.size());
    for (const PolePair &pp : ps.pairs)
        out.push_back({pp.pair_index, 2.0 * kPi * pp.residue / epsilon, pp.pole,
                       pp.pole.real()});
    return out;
}

double contribution_value(const ExpContribution &c, double x, double epsilon) {
    if (x <= c.activation_threshold) return 0.0;
    return 2.0 * (c.prefactor *
                  std::exp(-kI * (x - c.exponent_anchor) / epsilon))
                     .real();
}

Complex approx_series_term(const PoleSet &ps, int n, Complex x) {
    if (n < 0) throw std::invalid_argument("approx_series_term: n must be >= 0");
    const double lgam = std::lgamma(2.0 * n + 1.0);
    Complex sum = 0.0;
    for (const PolePair &pp : ps.pairs) {
        for (Complex p : {pp.pole, std::conj(pp.pole)}) {
            Complex a = (p == pp.pole) ? pp.residue : std::conj(pp.residue);
            Complex dz = x - p;
            if (std::abs(dz) < 1e-13)
                throw std::domain_error("approx_series_term: x at a pole");
            // a (-1)^n (2n)! / (x-p)^{2n+1} in log space; the sign comes from
            // solving the recurrence u_n = -u_{n-1}''
            double sign = (n % 2 == 0) ? 1.0 : -1.0;
            sum += sign * std::exp(lgam + std::log(a) - (2.0 * n + 1.0) * std::log(dz));
        }
    }
    return sum;
}

std::vector<StokesCurve> approx_stokes_curves(const PoleSet &ps) {
    std::vector<StokesCurve> out;
    for (const PolePair &pp : ps.pairs) {
        out.push_back({pp.pole, pp.pole.real(), StokesCurve::Direction::Downward});
        out.push_back({std::conj(pp.pole), pp.pole.real(), StokesCurve::Direction::Upward});
    }
    return out;
}

double approx_exp_contribution(const PoleSet &ps, double x, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("approx_exp_contribution: epsilon must be > 0");
    double sum = 0.0;
    for (const PolePair &pp : ps.pairs) {
        if (x <= pp.pole.real()) continue;
        sum += 2.0 * (2.0 * kPi * pp.residue / epsilon *
                      std::exp(-kI * (x - pp.pole) / epsilon))
                         .real();
    }
    return sum;
}

double measure_amplitude(const std::function<double(double)> &signal,
                         double epsilon, double lo, double hi) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("measure_amplitude: epsilon must be > 0");
    if (!(hi - lo >= 2.0 * kPi * epsilon))
        throw std::invalid_argument("measure_amplitude: window shorter than one period");
    const int n = 200;
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * i / (n - 1);
        A(i, 0) = std::cos(x / epsilon);
        A(i, 1) = std::sin(x / epsilon);
        b[i] = signal(x);
    }
    Eigen::Vector2d c = A.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    return std::hypot(c[0], c[1]);
}

double amplitude_ratio(const PoleSet &ps, double epsilon) {
    double exact = measure_amplitude(
        [epsilon](double x) { return exact_exp_contribution(x, epsilon); },
        epsilon, 1.0, 3.0);
    if (exact == 0.0)
        throw std::runtime_error("amplitude_ratio: zero exact amplitude");
    double approx = measure_amplitude(
        [&ps, epsilon](double x) { return approx_exp_contribution(ps, x, epsilon); },
        epsilon, 1.0, 3.0);
    return approx / exact;
}

std::vector<SweepRecord> eps_sweep(const SampleGrid &grid,
                                   const std::vector<double> &tolerances,
                                   const std::vector<double> &eps_values) {
    for (size_t i = 0; i < eps_values.size(); ++i) {
        if (!(eps_values[i] > 0.0))
            throw std::invalid_argument("eps_sweep: eps values must be positive");
        if (i > 0 && eps_values[i] >= eps_values[i - 1])
            throw std::invalid_argument("eps_sweep: eps values must be descending");
    }
    std::vector<SweepRecord> out;
    for (double tol : tolerances) {
        PoleSet ps;
        double p1d = 0.0;
        try {
            auto fit = aaa_fit(grid, tol, 150, ResidualNorm::MaxPointwise);
            ps = filter_and_pair(poles_and_residues(fit), grid);
            if (ps.pairs.empty()) continue;
            p1d = std::abs(ps.pairs.front().pole - kI);
        } catch (const std::exception &) {
            continue;  // a failed tolerance must not abort the others
        }
        for (double eps : eps_values) {
            double ratio = amplitude_ratio(ps, eps);
            out.push_back({tol, static_cast<int>(ps.pairs.size()), eps, ratio,
                           p1d, 1.0 - ratio});
        }
    }
    std::sort(out.begin(), out.end(), [](const SweepRecord &a, const SweepRecord &b) {
        if (a.tolerance != b.tolerance) return a.tolerance < b.tolerance;
        return a.epsilon < b.epsilon;
    });
    return out;
}

std::vector<double> log_eps_grid(double lo, double hi, int per_decade) {
    if (!(lo > 0.0) || !(hi > lo) || per_decade < 1)
        throw std::invalid_argument("log_eps_grid: bad range");
    std::vector<double> out;
    double llo = std::log10(lo), lhi = std::log10(hi);
    int n = static_cast<int>(std::ceil((lhi - llo) * per_decade)) + 1;
    for (int i = 0; i < n; ++i)
        out.push_back(std::pow(10.0, llo + (lhi - llo) * i / (n - 1)));
    return out;
}

} // namespace expasym
