#include "expasym/exact_asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace expasym {

namespace {

const double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

// log of the series coefficient (4n)! / (2^{4n} (2n)!); sign is (-1)^n.
double log_coeff(int n) {
    return std::lgamma(4.0 * n + 1.0) - std::lgamma(2.0 * n + 1.0) -
           4.0 * n * std::log(2.0);
}

void check_cut(Complex x) {
    if (x.real() == 0.0 && std::abs(x.imag()) >= 1.0)
        throw std::domain_error("evaluation on a branch cut of u0");
}

} // namespace

Complex inv_sqrt_plus_i(Complex x) {
    // cut {iy : y <= -1}: rotate so the cut lands on the negative real axis
    return std::exp(Complex(0.0, -kPi / 4.0)) / std::sqrt(-kI * (x + kI));
}

Complex inv_sqrt_minus_i(Complex x) {
    // cut {iy : y >= 1}
    return std::exp(Complex(0.0, kPi / 4.0)) / std::sqrt(kI * (x - kI));
}

Complex exact_leading_order(Complex x) {
    check_cut(x);
    return inv_sqrt_plus_i(x) + inv_sqrt_minus_i(x);
}

namespace {

// log of (x -+ i)^{-(2n+1/2)} under the vertical-cut branch, returned as a
// complex exponent. The branch value of sqrt(x-i) is
// e^{-i pi/4} sqrt(i(x-i)), whose argument stays inside (-3pi/4, pi/4], so
// its principal log is safe; powers are taken through that log.
Complex log_power_minus_i(Complex x, double half_exponent /* 2n + 1/2 */) {
    Complex root = std::exp(Complex(0.0, -kPi / 4.0)) * std::sqrt(kI * (x - kI));
    return -2.0 * half_exponent * std::log(root);
}

Complex log_power_plus_i(Complex x, double half_exponent) {
    Complex root = std::exp(Complex(0.0, kPi / 4.0)) * std::sqrt(-kI * (x + kI));
    return -2.0 * half_exponent * std::log(root);
}

Complex exp_or_inf(Complex log_value) {
    if (log_value.real() > 709.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return std::exp(log_value);
}

} // namespace

Complex series_term(int n, Complex x) {
    if (n < 0) throw std::invalid_argument("series_term: n must be >= 0");
    check_cut(x);
    const double lc = log_coeff(n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    Complex t1 = exp_or_inf(lc + log_power_minus_i(x, 2.0 * n + 0.5));
    Complex t2 = exp_or_inf(lc + log_power_plus_i(x, 2.0 * n + 0.5));
    return sign * (t1 + t2);
}

SeriesTerm series_term_scaled(int n, Complex x, double epsilon) {
    if (n < 0) throw std::invalid_argument("series_term_scaled: n must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("series_term_scaled: epsilon must be > 0");
    check_cut(x);
    const double lc = log_coeff(n);
    Complex e1 = lc + log_power_minus_i(x, 2.0 * n + 0.5);
    Complex e2 = lc + log_power_plus_i(x, 2.0 * n + 0.5);
    // |t1 + t2| in log space: factor out the larger magnitude
    double L = std::max(e1.real(), e2.real());
    Complex s = std::exp(e1 - L) + std::exp(e2 - L);
    SeriesTerm out;
    out.n = n;
    out.value = series_term(n, x);
    out.magnitude_log10 =
        (L + std::log(std::abs(s))) / std::log(10.0) +
        2.0 * n * std::log10(epsilon);
    return out;
}

int optimal_truncation(Complex x, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("optimal_truncation: epsilon must be > 0");
    if (x == kI) throw std::invalid_argument("optimal_truncation: x = i is singular");
    return static_cast<int>(std::ceil(std::abs(x - kI) / (2.0 * epsilon)));
}

Complex truncated_series(Complex x, double epsilon, int N) {
    if (N < 1) throw std::invalid_argument("truncated_series: N must be >= 1");
    Complex sum = 0.0;
    double e2n = 1.0;
    for (int n = 0; n < N; ++n) {
        sum += e2n * series_term(n, x);
        e2n *= epsilon * epsilon;
    }
    return sum;
}

Complex truncated_series_derivative(Complex x, double epsilon, int N) {
    if (N < 1) throw std::invalid_argument("truncated_series_derivative: N must be >= 1");
    check_cut(x);
    Complex sum = 0.0;
    double e2n = 1.0;
    for (int n = 0; n < N; ++n) {
        const double lc = log_coeff(n);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double h = 2.0 * n + 0.5;
        // d/dx (x -+ i)^{-h} = -h (x -+ i)^{-(h+1)}
        Complex t1 = exp_or_inf(lc + log_power_minus_i(x, h + 1.0));
        Complex t2 = exp_or_inf(lc + log_power_plus_i(x, h + 1.0));
        sum += e2n * sign * (-h) * (t1 + t2);
        e2n *= epsilon * epsilon;
    }
    return sum;
}

double exact_exp_contribution(double x, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("exact_exp_contribution: epsilon must be > 0");
    if (x <= 0.0) return 0.0;
    return 4.0 * std::sqrt(kPi / epsilon) * std::exp(-1.0 / epsilon) *
           std::cos(x / epsilon + kPi / 4.0);
}

double stokes_multiplier_profile(double theta_scaled, double r, double /*epsilon*/) {
    if (!(r > 0.0)) throw std::invalid_argument("stokes_multiplier_profile: r must be > 0");
    return 0.5 * (1.0 + std::erf(theta_scaled * std::sqrt(r / 2.0)));
}

std::vector<StokesCurve> exact_stokes_curves() {
    return {
        {kI, 0.0, StokesCurve::Direction::Downward},
        {-kI, 0.0, StokesCurve::Direction::Upward},
    };
}

} // namespace expasym
