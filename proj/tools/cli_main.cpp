#include "expasym/io.hpp"
#include "expasym/nonlinear.hpp"
#include "expasym/reproduce.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace expasym;

const Complex kI(0.0, 1.0);

struct CommonOpts {
    std::string input;
    double lo = -4.0, hi = 4.0, dx = 0.1;
    std::vector<double> tols;
    std::vector<double> eps;
    std::vector<double> eps_range;  // lo hi n (log-spaced)
    std::string norm = "mean2";
    std::string out = ".";
    bool quiet = false;
};

void add_grid_opts(CLI::App *cmd, CommonOpts &o) {
    cmd->add_option("--input", o.input, "sample CSV (x,re_f,im_f); default: model problem samples");
    cmd->add_option("--interval", [&o](const std::vector<std::string> &v) {
        if (v.size() != 2) return false;
        o.lo = std::stod(v[0]); o.hi = std::stod(v[1]);
        return true;
    }, "sample interval a b")->expected(2);
    cmd->add_option("--dx", o.dx, "sample spacing");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_flag("--quiet", o.quiet, "suppress report output");
}

SampleGrid load_grid(const CommonOpts &o, bool nonlinear = false) {
    if (!o.input.empty()) return read_grid_csv(o.input);
    if (nonlinear)
        return make_grid(o.lo, o.hi, o.dx, [](double x) {
            return nonlinear_leading_order(Complex(x, 0.0));
        });
    return make_grid(o.lo, o.hi, o.dx, [](double x) {
        return exact_leading_order(Complex(x, 0.0));
    });
}

ResidualNorm parse_norm(const std::string &s) {
    if (s == "mean2") return ResidualNorm::ScaledLinearized;
    if (s == "max") return ResidualNorm::MaxPointwise;
    throw CLI::ValidationError("--norm must be mean2 or max");
}

std::string list_json(const std::vector<double> &v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << fmt17(v[i]);
    return os.str();
}

std::string echo_config(const std::string &command, const CommonOpts &o) {
    std::ostringstream os;
    os << "{\"command\": \"" << command << "\", \"sample_interval\": ["
       << fmt17(o.lo) << ", " << fmt17(o.hi) << "], \"dx\": " << fmt17(o.dx)
       << ", \"tolerances\": [" << list_json(o.tols) << "], \"epsilons\": ["
       << list_json(o.eps) << "], \"norm\": \"" << o.norm
       << "\", \"output_dir\": \"" << o.out << "\", \"seedless\": true}";
    return os.str();
}

std::vector<double> resolve_eps(const CommonOpts &o, bool descending) {
    std::vector<double> eps = o.eps;
    if (!o.eps_range.empty()) {
        if (o.eps_range.size() != 3)
            throw CLI::ValidationError("--eps-range takes lo hi n");
        int n = static_cast<int>(o.eps_range[2]);
        double llo = std::log10(o.eps_range[0]), lhi = std::log10(o.eps_range[1]);
        for (int i = 0; i < n; ++i)
            eps.push_back(std::pow(10.0, llo + (lhi - llo) * i / std::max(1, n - 1)));
    }
    if (eps.empty()) eps = log_eps_grid();
    std::sort(eps.begin(), eps.end());
    if (descending) std::reverse(eps.begin(), eps.end());
    return eps;
}

int run_fit(CommonOpts &o) {
    if (o.tols.empty()) o.tols = {1e-12};
    SampleGrid grid = load_grid(o);
    auto fit = aaa_fit(grid, o.tols[0], 150, parse_norm(o.norm));
    PoleSet ps = filter_and_pair(poles_and_residues(fit), grid);
    std::filesystem::create_directories(o.out);
    write_pole_set_json(ps, o.out + "/poles.json", echo_config("fit", o));
    if (!o.quiet)
        std::cout << "fit: " << fit.iterations << " support points, "
                  << ps.pairs.size() << " pairs, converged="
                  << (fit.converged ? "yes" : "no") << "\n"
                  << "wrote " << o.out << "/poles.json\n";
    return 0;
}

int run_analyze(CommonOpts &o) {
    if (o.tols.empty()) o.tols = {1e-12};
    if (o.eps.empty()) o.eps = {0.2};
    SampleGrid grid = load_grid(o);
    auto fit = aaa_fit(grid, o.tols[0], 150, parse_norm(o.norm));
    PoleSet ps = filter_and_pair(poles_and_residues(fit), grid);
    std::filesystem::create_directories(o.out);
    write_pole_set_json(ps, o.out + "/poles.json", echo_config("analyze", o));
    for (double eps : o.eps) {
        std::ostringstream name;
        name << o.out << "/trace_eps_" << fmt17(eps) << ".csv";
        write_trace_csv(ps, eps, 0.0, 5.0, 501, name.str(), echo_config("analyze", o));
        if (!o.quiet)
            std::cout << "eps " << fmt17(eps) << ": amplitude ratio "
                      << fmt17(amplitude_ratio(ps, eps)) << ", wrote "
                      << name.str() << "\n";
    }
    return 0;
}

int run_sweep(CommonOpts &o) {
    if (o.tols.empty())
        o.tols = {1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 1e-14};
    SampleGrid grid = load_grid(o);
    auto records = eps_sweep(grid, o.tols, resolve_eps(o, true));
    std::filesystem::create_directories(o.out);
    write_sweep_csv(records, o.out + "/sweep.csv", echo_config("sweep", o));
    if (!o.quiet)
        std::cout << "wrote " << records.size() << " records to " << o.out
                  << "/sweep.csv\n";
    return 0;
}

int run_nonlinear(CommonOpts &o, double x_eval) {
    if (o.tols.empty()) o.tols = {1e-13};
    if (o.eps.empty()) o.eps = {0.1};
    SampleGrid grid = load_grid(o, true);
    SqrtApproximant sa = fit_squared(grid, o.tols[0]);
    PoleSet sq = filter_and_pair(poles_and_residues(sa.inner), grid);
    auto direct_fit = aaa_fit(grid, o.tols[0], 150, ResidualNorm::MaxPointwise);
    PoleSet direct = filter_and_pair(poles_and_residues(direct_fit), grid);
    std::filesystem::create_directories(o.out);
    write_pole_set_json(sq, o.out + "/poles_squared.json", echo_config("nonlinear", o));
    write_pole_set_json(direct, o.out + "/poles_direct.json", echo_config("nonlinear", o));
    if (!o.quiet) {
        auto name = [](ResiduePattern p) {
            return p == ResiduePattern::DominantFirst ? "dominant_first" : "uniform";
        };
        std::cout << "direct fit: " << direct.pairs.size() << " pairs, pattern "
                  << name(residue_pattern(direct)) << "\n"
                  << "squared fit: " << sq.pairs.size() << " pairs, pattern "
                  << name(residue_pattern(sq)) << "\n";
        for (double eps : o.eps) {
            NonlinearExpEstimate est = nonlinear_exp_estimate(sa, x_eval, eps);
            std::cout << "estimate at x=" << fmt17(x_eval) << ", eps=" << fmt17(eps)
                      << ": value " << fmt17(est.value) << ", chi "
                      << fmt17(est.chi.real()) << " + " << fmt17(est.chi.imag())
                      << "i, lambda " << fmt17(est.lambda) << " (free normalization)\n";
        }
    }
    return 0;
}

int run_reproduce(const std::string &what, const std::string &out, bool quiet) {
    bool pass = true;
    std::ostringstream rep;
    auto run = [&](const std::string &name, ReproduceResult (*fn)(const std::string &)) {
        if (what != "all" && what != name) return;
        ReproduceResult r = fn(out);
        rep << "== " << name << " ==\n" << r.report;
        pass = pass && r.pass;
    };
    run("table1", reproduce_table1);
    run("table2", reproduce_table2);
    run("figures", reproduce_figures);
    run("table3", reproduce_table3);
    if (!quiet) std::cout << rep.str();
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rational-approximation exponential asymptotics toolkit"};
    app.require_subcommand(1);

    CommonOpts fit_o, ana_o, swp_o, nl_o;
    double nl_x = 5.0;
    std::string what = "all", rep_out = "reproduce_out";
    bool rep_quiet = false;

    auto *fit = app.add_subcommand("fit", "rational fit; writes poles.json");
    add_grid_opts(fit, fit_o);
    fit->add_option("--tol", fit_o.tols, "fit tolerance");
    fit->add_option("--norm", fit_o.norm, "termination norm: mean2 | max");

    auto *ana = app.add_subcommand("analyze", "fit + Stokes analysis traces");
    add_grid_opts(ana, ana_o);
    ana->add_option("--tol", ana_o.tols, "fit tolerance");
    ana->add_option("--eps", ana_o.eps, "epsilon values (repeatable)");
    ana->add_option("--norm", ana_o.norm, "termination norm: mean2 | max");

    auto *swp = app.add_subcommand("sweep", "amplitude-ratio sweep over eps");
    add_grid_opts(swp, swp_o);
    swp->add_option("--tol", swp_o.tols, "fit tolerances (repeatable)");
    swp->add_option("--eps", swp_o.eps, "epsilon values (repeatable)");
    swp->add_option("--eps-range", swp_o.eps_range, "lo hi n (log-spaced)")->expected(3);

    auto *nl = app.add_subcommand("nonlinear", "square-then-fit-then-sqrt diagnostics");
    add_grid_opts(nl, nl_o);
    nl_o.lo = -10.0; nl_o.hi = 10.0;
    nl->add_option("--tol", nl_o.tols, "fit tolerance");
    nl->add_option("--eps", nl_o.eps, "epsilon values (repeatable)");
    nl->add_option("--x", nl_x, "evaluation point for the exponential estimate");

    auto *rep = app.add_subcommand("reproduce", "reproduce published experiments");
    rep->add_option("--what", what, "table1 | table2 | figures | table3 | all")
        ->check(CLI::IsMember({"table1", "table2", "figures", "table3", "all"}));
    rep->add_option("--out", rep_out, "output directory");
    rep->add_flag("--quiet", rep_quiet, "suppress report output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        if (fit->parsed()) return run_fit(fit_o);
        if (ana->parsed()) return run_analyze(ana_o);
        if (swp->parsed()) return run_sweep(swp_o);
        if (nl->parsed()) return run_nonlinear(nl_o, nl_x);
        if (rep->parsed()) return run_reproduce(what, rep_out, rep_quiet);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
