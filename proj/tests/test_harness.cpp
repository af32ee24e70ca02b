#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expasym/io.hpp"
#include "expasym/ode_reference.hpp"
#include "expasym/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace expasym;

namespace {
const double kPi = 3.14159265358979323846;

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// least-squares tone amplitude of (solution - truncated series) over [a, b]
double residual_amplitude(const ReferenceSolution &sol, double a, double b) {
    double eps = sol.epsilon;
    int N = optimal_truncation(Complex(0.5 * (a + b), 0.0), eps);
    double cc = 0.0, ss = 0.0, cs = 0.0, cv = 0.0, sv = 0.0;
    for (int i = 0; i < sol.grid.size(); ++i) {
        double x = sol.grid[i];
        if (x < a || x > b) continue;
        double r = sol.values[i] - truncated_series(Complex(x, 0.0), eps, N).real();
        double c = std::cos(x / eps), s = std::sin(x / eps);
        cc += c * c; ss += s * s; cs += c * s; cv += c * r; sv += s * r;
    }
    double det = cc * ss - cs * cs;
    return std::hypot((cv * ss - sv * cs) / det, (sv * cc - cv * cs) / det);
}
} // namespace

TEST_CASE("zero forcing with zero data stays identically zero") {
    auto sol = integrate_rk4([](double) { return 0.0; }, 0.2, -12.0, 5.0,
                             0.005, 0.0, 0.0);
    for (int i = 0; i < sol.values.size(); ++i)
        CHECK(sol.values[i] == 0.0);
}

TEST_CASE("reference solution argument validation") {
    CHECK_THROWS_AS(numeric_reference_solution(0.2, -5.0, 5.0, 0.005),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_reference_solution(0.2, -12.0, 3.0, 0.005),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_reference_solution(0.2, -12.0, 5.0, 0.05),
                    std::invalid_argument);
}

TEST_CASE("reference solution is quiet left of the Stokes curve") {
    auto sol = numeric_reference_solution(0.2, -12.0, 5.0, 0.005);
    CHECK(residual_amplitude(sol, -8.0, -4.0) <= 1e-4);
}

TEST_CASE("optimally truncated series leaves an exponentially small residual") {
    double eps = 0.2;
    auto sol = numeric_reference_solution(eps, -12.0, 5.0, eps / 40.0);
    // residual at x = 1 is of order e^{-1/eps}
    double amp_bound = 10.0 * 4.0 * std::sqrt(kPi / eps) * std::exp(-1.0 / eps);
    int N = optimal_truncation(Complex(1.0, 0.0), eps);
    for (int i = 0; i < sol.grid.size(); ++i) {
        if (std::abs(sol.grid[i] - 1.0) < sol.step) {
            double r = sol.values[i] -
                       truncated_series(Complex(sol.grid[i], 0.0), eps, N).real();
            CHECK(std::abs(r) <= amp_bound);
        }
    }
    // the residual tone on [1,3] is a clean oscillation at frequency 1/eps
    double amp = residual_amplitude(sol, 1.0, 3.0);
    CHECK(amp > 1e-3);       // far above integrator error
    CHECK(amp < amp_bound);  // and exponentially small
}

TEST_CASE("sample grid CSV round-trip") {
    SampleGrid g = make_grid(-2.0, 2.0, 0.25, [](double x) {
        return Complex(std::sin(x), std::cos(x));
    });
    const std::string path = "test_grid_roundtrip.csv";
    write_grid_csv(g, path);
    SampleGrid h = read_grid_csv(path);
    REQUIRE(h.size() == g.size());
    for (int i = 0; i < g.size(); ++i) {
        CHECK(h.points[i] == g.points[i]);
        CHECK(h.values[i] == g.values[i]);
    }
    std::remove(path.c_str());
}

TEST_CASE("17 significant digit formatting round-trips doubles") {
    for (double v : {1.0 / 3.0, 0.1, 1e-13, -123456.789, 4.0 * std::sqrt(kPi)}) {
        CHECK(std::stod(fmt17(v)) == v);
    }
}

TEST_CASE("reproduction outputs are byte-identical across runs") {
    ReproduceResult a = reproduce_table1("repro_a");
    ReproduceResult b = reproduce_table1("repro_b");
    CHECK(a.pass);
    CHECK(b.pass);
    std::string fa = slurp("repro_a/table1.json");
    std::string fb = slurp("repro_b/table1.json");
    CHECK(fa.size() > 0);
    // the embedded config echoes the output dir; normalize it before comparing
    size_t pa = fa.find("repro_a");
    while (pa != std::string::npos) { fa.replace(pa, 7, "repro_x"); pa = fa.find("repro_a"); }
    size_t pb = fb.find("repro_b");
    while (pb != std::string::npos) { fb.replace(pb, 7, "repro_x"); pb = fb.find("repro_b"); }
    CHECK(fa == fb);
}

TEST_CASE("sweep CSV has the documented schema") {
    SampleGrid g = make_grid(-4.0, 4.0, 0.1, [](double x) {
        return exact_leading_order(Complex(x, 0.0));
    });
    auto records = eps_sweep(g, {1e-9}, {0.1, 0.05});
    const std::string path = "test_sweep_schema.csv";
    write_sweep_csv(records, path, "{\"command\": \"sweep\"}");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# config:", 0) == 0);
    std::getline(in, line);
    CHECK(line == "tolerance,n_pairs,epsilon,amplitude_ratio,p1_distance,relative_error");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);
    std::remove(path.c_str());
}
