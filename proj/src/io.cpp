#include "expasym/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace expasym {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

void write_sweep_csv(const std::vector<SweepRecord> &records,
                     const std::string &path, const std::string &config_json) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    if (!config_json.empty())
        out << "# config: " << config_json << "\n";
    out << "tolerance,n_pairs,epsilon,amplitude_ratio,p1_distance,relative_error\n";
    for (const SweepRecord &r : records)
        out << fmt17(r.tolerance) << ',' << r.n_pairs << ',' << fmt17(r.epsilon)
            << ',' << fmt17(r.amplitude_ratio) << ',' << fmt17(r.p1_distance)
            << ',' << fmt17(r.relative_error) << '\n';
}

void write_trace_csv(const PoleSet &ps, double epsilon, double x_lo,
                     double x_hi, int n_points, const std::string &path,
                     const std::string &config_json) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    if (!config_json.empty())
        out << "# config: " << config_json << "\n";
    out << "x,u_exp,u_hat_exp";
    for (const PolePair &pp : ps.pairs)
        out << ",pair_" << pp.pair_index;
    out << '\n';
    auto contribs = exp_contributions(ps, epsilon);
    for (int i = 0; i < n_points; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (n_points - 1);
        out << fmt17(x) << ',' << fmt17(exact_exp_contribution(x, epsilon))
            << ',' << fmt17(approx_exp_contribution(ps, x, epsilon));
        for (const ExpContribution &c : contribs)
            out << ',' << fmt17(contribution_value(c, x, epsilon));
        out << '\n';
    }
}

} // namespace expasym
