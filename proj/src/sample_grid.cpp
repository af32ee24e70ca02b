#include "expasym/sample_grid.hpp"
#include "expasym/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace expasym {

void validate(const SampleGrid &grid) {
    if (grid.points.size() != grid.values.size())
        throw std::invalid_argument("sample grid: points/values length mismatch");
    if (grid.points.size() < 2)
        throw std::invalid_argument("sample grid: need at least 2 samples");
    for (int i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid.points[i]))
            throw std::invalid_argument("sample grid: non-finite abscissa");
        if (!std::isfinite(grid.values[i].real()) || !std::isfinite(grid.values[i].imag()))
            throw std::invalid_argument("sample grid: non-finite value");
        if (i > 0 && grid.points[i] <= grid.points[i - 1])
            throw std::invalid_argument("sample grid: points must be strictly increasing");
    }
}

SampleGrid make_grid(double a, double b, double dx,
                     const std::function<Complex(double)> &f) {
    if (!(dx > 0.0) || !(b > a))
        throw std::invalid_argument("make_grid: need b > a and dx > 0");
    const int n = static_cast<int>(std::floor((b - a) / dx + 0.5)) + 1;
    SampleGrid g;
    g.points.resize(n);
    g.values.resize(n);
    for (int i = 0; i < n; ++i) {
        g.points[i] = a + i * dx;
        g.values[i] = f(g.points[i]);
    }
    validate(g);
    return g;
}

SampleGrid read_grid_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open sample CSV: " + path);
    std::string line;
    std::vector<double> xs;
    std::vector<Complex> fs;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true;  // "x,re_f,im_f"
            continue;
        }
        std::istringstream ss(line);
        std::string tok;
        double col[3];
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(ss, tok, ','))
                throw std::invalid_argument("malformed CSV row: " + line);
            col[c] = std::stod(tok);
        }
        xs.push_back(col[0]);
        fs.emplace_back(col[1], col[2]);
    }
    SampleGrid g;
    g.points = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<long>(xs.size()));
    g.values = Eigen::Map<Eigen::VectorXcd>(fs.data(), static_cast<long>(fs.size()));
    validate(g);
    return g;
}

void write_grid_csv(const SampleGrid &grid, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write sample CSV: " + path);
    out << "x,re_f,im_f\n";
    for (int i = 0; i < grid.size(); ++i)
        out << fmt17(grid.points[i]) << ',' << fmt17(grid.values[i].real())
            << ',' << fmt17(grid.values[i].imag()) << '\n';
}

} // namespace expasym
