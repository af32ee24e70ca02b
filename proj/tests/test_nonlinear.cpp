#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expasym/nonlinear.hpp"

#include <cmath>

using namespace expasym;

namespace {
const Complex kI(0.0, 1.0);
const double kPi = 3.14159265358979323846;

SampleGrid nonlinear_grid() {
    return make_grid(-10.0, 10.0, 0.1, [](double x) {
        return nonlinear_leading_order(Complex(x, 0.0));
    });
}

SqrtApproximant &shared_sqrt_fit() {
    static SqrtApproximant sa = fit_squared(nonlinear_grid(), 1e-13);
    return sa;
}
} // namespace

TEST_CASE("nonlinear leading order values") {
    Complex v0 = nonlinear_leading_order(Complex(0.0));
    CHECK(v0.real() == doctest::Approx(0.397748).epsilon(1e-5));
    CHECK(std::abs(v0.imag()) <= 1e-15);
    for (double x : {-7.3, -0.2, 4.1})
        CHECK(std::abs(nonlinear_leading_order(Complex(x)).imag()) <= 1e-15);
    // square matches the closed form of u0^2 at 0: (81/1024)*2
    CHECK(std::abs(v0 * v0 - Complex(81.0 / 1024.0 * 2.0)) <= 1e-14);
}

TEST_CASE("squaring identity on the grid") {
    SampleGrid g = nonlinear_grid();
    for (int i = 0; i < g.size(); ++i) {
        Complex sq = nonlinear_leading_order(Complex(g.points[i])) *
                     nonlinear_leading_order(Complex(g.points[i]));
        CHECK(std::abs(g.values[i] * g.values[i] - sq) <= 1e-16);
    }
}

TEST_CASE("square-root approximant is real positive on the sample interval") {
    SqrtApproximant &sa = shared_sqrt_fit();
    for (double x = -9.9; x <= 9.9; x += 0.37) {
        Complex v = evaluate_sqrt(sa, Complex(x));
        CHECK(std::abs(v.imag()) <= 1e-10);
        CHECK(v.real() > 0.0);
    }
    // square of the wrapper equals the inner fit by construction
    Complex z(0.0);
    Complex s = evaluate_sqrt(sa, z);
    CHECK(std::abs(s * s - evaluate(sa.inner, z)) <= 1e-15);
    // and tracks the true leading order closely on the axis
    CHECK(std::abs(evaluate_sqrt(sa, z) - nonlinear_leading_order(z)) <= 1e-8);
}

TEST_CASE("fit_squared rejects complex-valued samples") {
    SampleGrid g = make_grid(-1.0, 1.0, 0.1, [](double x) {
        return Complex(x, 0.5);
    });
    CHECK_THROWS_AS(fit_squared(g, 1e-12), std::invalid_argument);
}

TEST_CASE("published pole table for both fits") {
    // tolerance 1e-10 regenerates the reference table essentially exactly;
    // the tabulated magnitudes are sqrt(residue magnitude) for both fits
    SampleGrid g = nonlinear_grid();
    SqrtApproximant sa = fit_squared(g, 1e-10);
    PoleSet sq = filter_and_pair(poles_and_residues(sa.inner), g);
    auto direct_fit = aaa_fit(g, 1e-10, 150, ResidualNorm::MaxPointwise);
    PoleSet direct = filter_and_pair(poles_and_residues(direct_fit), g);

    REQUIRE(sq.pairs.size() >= 6);
    REQUIRE(direct.pairs.size() >= 6);
    const Complex ref_sq[6] = {{0.0018, 1.0004},  {-0.0067, 1.1204},
                               {-0.0207, 1.3724}, {-0.0381, 1.7959},
                               {-0.0550, 2.4573}, {-0.0665, 3.4701}};
    const double ref_sq_mag[6] = {0.2845, 0.1342, 0.1329, 0.1335, 0.1330, 0.1374};
    const Complex ref_dir[6] = {{0.0020, 1.0172}, {0.0180, 1.1582},
                                {0.0507, 1.4604}, {0.1014, 1.9686},
                                {0.1728, 2.7620}, {0.2726, 3.9795}};
    const double ref_dir_mag[6] = {0.2173, 0.2210, 0.2287, 0.2404, 0.2566, 0.2793};
    for (int i = 0; i < 6; ++i) {
        CHECK(std::abs(sq.pairs[i].pole - ref_sq[i]) <= 5e-3);
        CHECK(std::abs(direct.pairs[i].pole - ref_dir[i]) <= 5e-3);
        CHECK(std::sqrt(std::abs(sq.pairs[i].residue)) ==
              doctest::Approx(ref_sq_mag[i]).epsilon(0.02));
        CHECK(std::sqrt(std::abs(direct.pairs[i].residue)) ==
              doctest::Approx(ref_dir_mag[i]).epsilon(0.02));
    }
    // nearest-pole improvement
    CHECK(std::abs(sq.pairs.front().pole - kI) <=
          std::abs(direct.pairs.front().pole - kI));
}

TEST_CASE("residue pattern classification") {
    SampleGrid g = nonlinear_grid();
    SqrtApproximant &sa = shared_sqrt_fit();
    PoleSet sq = filter_and_pair(poles_and_residues(sa.inner), g);
    auto direct_fit = aaa_fit(g, 1e-13, 150, ResidualNorm::MaxPointwise);
    PoleSet direct = filter_and_pair(poles_and_residues(direct_fit), g);

    CHECK(residue_pattern(sq) == ResiduePattern::DominantFirst);
    CHECK(residue_pattern(direct) == ResiduePattern::Uniform);
    CHECK(residue_pattern(sq) != residue_pattern(direct));
    // direct fit residues cluster: max/min <= 2 over the first six pairs
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < 6; ++i) {
        double m = std::abs(direct.pairs[i].residue);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    CHECK(hi / lo <= 2.0);

    SUBCASE("synthetic equal residues are uniform") {
        SampleGrid dummy = make_grid(-1.0, 1.0, 0.5, [](double) { return Complex(1.0); });
        std::vector<std::pair<Complex, Complex>> raw;
        for (int k = 1; k <= 3; ++k) {
            raw.push_back({{0.0, 1.0 * k}, {1.0, 0.0}});
            raw.push_back({{0.0, -1.0 * k}, {1.0, 0.0}});
        }
        PoleSet ps = filter_and_pair(raw, dummy);
        CHECK(residue_pattern(ps) == ResiduePattern::Uniform);
    }
    SUBCASE("too few pairs is an error") {
        PoleSet ps;
        ps.pairs = {{kI, 1.0, 1}, {2.0 * kI, 1.0, 2}};
        CHECK_THROWS_AS(residue_pattern(ps), std::invalid_argument);
    }
}

TEST_CASE("exponential estimate: wavelength, scaling, and scale") {
    SqrtApproximant &sa = shared_sqrt_fit();
    double eps = 0.1, x = 5.0;
    NonlinearExpEstimate est = nonlinear_exp_estimate(sa, x, eps);

    // local wavelength from the numerical phase derivative of the amplitude
    double h = 1e-4;
    NonlinearExpEstimate ep = nonlinear_exp_estimate(sa, x + h, eps);
    NonlinearExpEstimate em = nonlinear_exp_estimate(sa, x - h, eps);
    double dphase = std::arg(ep.amplitude / em.amplitude) / (2.0 * h);
    double wavelength = 2.0 * kPi / std::abs(dphase);
    double predicted = 2.0 * kPi * eps /
                       std::sqrt(2.0 * evaluate_sqrt(sa, Complex(x)).real());
    CHECK(wavelength == doctest::Approx(predicted).epsilon(0.05));

    // log-linearity of the exponent in 1/eps: halving eps squares the
    // magnitude ratio e^{-Re chi/eps}
    NonlinearExpEstimate half = nonlinear_exp_estimate(sa, x, eps / 2.0);
    double r1 = std::abs(est.amplitude) / est.lambda;      // (2f)^{-1/4} e^{-Re chi/eps} scale
    double r2 = std::abs(half.amplitude) / half.lambda;
    double prefactor = std::pow(2.0 * evaluate_sqrt(sa, Complex(x)).real(), -0.25);
    double g1 = r1 / prefactor, g2 = r2 / prefactor;
    CHECK(std::log(g2) == doctest::Approx(2.0 * std::log(g1)).epsilon(0.02));

    // order of magnitude at eps = 0.1 (free normalization, default 1/eps)
    double scale = std::abs(est.amplitude) * 2.0;
    CHECK(scale > 1e-5);
    CHECK(scale < 1e-2);

    // x inside the pole crossings is rejected
    CHECK_THROWS_AS(nonlinear_exp_estimate(sa, -0.5, eps), std::invalid_argument);
}
