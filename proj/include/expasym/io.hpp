#ifndef EXPASYM_IO_HPP
#define EXPASYM_IO_HPP

#include "expasym/approx_asymptotics.hpp"

#include <string>
#include <vector>

namespace expasym {

// All numeric output uses 17 significant digits.
std::string fmt17(double v);

// CSV "tolerance,n_pairs,epsilon,amplitude_ratio,p1_distance,relative_error",
// preceded by a "# config: {...}" provenance line when config_json is given.
void write_sweep_csv(const std::vector<SweepRecord> &records,
                     const std::string &path,
                     const std::string &config_json = "");

// CSV "x,u_exp,u_hat_exp,pair_1,...,pair_k" over [x_lo, x_hi].
void write_trace_csv(const PoleSet &ps, double epsilon, double x_lo,
                     double x_hi, int n_points, const std::string &path,
                     const std::string &config_json = "");

void write_text_file(const std::string &path, const std::string &content);

} // namespace expasym

#endif
