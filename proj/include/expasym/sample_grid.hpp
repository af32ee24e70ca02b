#ifndef EXPASYM_SAMPLE_GRID_HPP
#define EXPASYM_SAMPLE_GRID_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

namespace expasym {

using Complex = std::complex<double>;

// Real sample abscissae with complex function values. The only input the
// asymptotics pipeline sees.
struct SampleGrid {
    Eigen::VectorXd points;    // strictly increasing
    Eigen::VectorXcd values;   // aligned with points, all finite

    int size() const { return static_cast<int>(points.size()); }
};

// Throws std::invalid_argument if the grid violates its invariants
// (mismatched lengths, non-increasing points, non-finite values).
void validate(const SampleGrid &grid);

// Uniform grid over [a, b] with spacing dx, values from f.
SampleGrid make_grid(double a, double b, double dx,
                     const std::function<Complex(double)> &f);

// CSV with header "x,re_f,im_f", one row per sample.
SampleGrid read_grid_csv(const std::string &path);
void write_grid_csv(const SampleGrid &grid, const std::string &path);

} // namespace expasym

#endif
