#include "expasym/aaa.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace expasym {

namespace {

// Smallest right singular vector of A, phase-canonicalized so the
// largest-magnitude entry is real positive.
Eigen::VectorXcd smallest_singular_vector(const Eigen::MatrixXcd &A) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinV);
    Eigen::VectorXcd w = svd.matrixV().col(svd.matrixV().cols() - 1);
    int k = 0;
    for (int i = 1; i < w.size(); ++i)
        if (std::abs(w[i]) > std::abs(w[k])) k = i;
    if (std::abs(w[k]) > 0.0) w *= std::conj(w[k]) / std::abs(w[k]);
    double nrm = w.norm();
    if (nrm > 0.0) w /= nrm;
    return w;
}

bool values_are_real(const Eigen::VectorXcd &v, double scale) {
    for (int i = 0; i < v.size(); ++i)
        if (std::abs(v[i].imag()) > 1e-13 * scale) return false;
    return true;
}

} // namespace

BarycentricApproximant aaa_fit(const SampleGrid &grid, double rel_tolerance,
                               int max_support, ResidualNorm norm) {
    validate(grid);
    if (!(rel_tolerance > 0.0) || !(rel_tolerance < 1.0))
        throw std::invalid_argument("aaa_fit: tolerance must lie in (0,1)");
    if (max_support < 1)
        throw std::invalid_argument("aaa_fit: max_support must be >= 1");

    const int M = grid.size();
    const Eigen::VectorXd &X = grid.points;
    const Eigen::VectorXcd &F = grid.values;
    const double fmax = F.cwiseAbs().maxCoeff();
    const bool real_data = values_are_real(F, std::max(fmax, 1.0));
    max_support = std::min(max_support, M - 1);

    BarycentricApproximant out;
    out.tolerance_used = rel_tolerance;
    out.norm_used = norm;

    // First support point: argmax |f - mean(f)|, smallest index on ties.
    const Complex mean = F.mean();
    std::vector<int> support;
    {
        int j0 = 0;
        double best = -1.0;
        for (int i = 0; i < M; ++i) {
            double d = std::abs(F[i] - mean);
            if (d > best) { best = d; j0 = i; }
        }
        support.push_back(j0);
    }

    std::vector<char> is_support(M, 0);
    is_support[support[0]] = 1;

    Eigen::VectorXcd w;
    for (int m = 1; m <= max_support; ++m) {
        const int k = M - m;  // non-support count
        Eigen::VectorXd Xi(k);
        Eigen::VectorXcd Fi(k);
        for (int i = 0, r = 0; i < M; ++i)
            if (!is_support[i]) { Xi[r] = X[i]; Fi[r] = F[i]; ++r; }
        Eigen::VectorXcd xs(m), fs(m);
        for (int j = 0; j < m; ++j) { xs[j] = X[support[j]]; fs[j] = F[support[j]]; }

        // Loewner matrix A_ij = (F_i - f_j) / (X_i - x_j) and Cauchy matrix.
        Eigen::MatrixXcd C(k, m), A(k, m);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) {
                C(i, j) = 1.0 / (Xi[i] - xs[j]);
                A(i, j) = (Fi[i] - fs[j]) * C(i, j);
            }

        w = smallest_singular_vector(A);
        if (real_data) {
            // Real data => real weights; dropping the O(1e-16) imaginary dust
            // makes conjugate symmetry of the approximant exact.
            Eigen::VectorXd wr = w.real();
            double nrm = wr.norm();
            if (nrm > 0.0) wr /= nrm;
            w = wr.cast<Complex>();
        }

        Eigen::VectorXcd N = C * w.cwiseProduct(fs).matrix();
        Eigen::VectorXcd D = C * w;
        Eigen::VectorXcd lin = Fi.cwiseProduct(D) - N;
        Eigen::VectorXcd res(k);
        for (int i = 0; i < k; ++i)
            res[i] = (D[i] == Complex(0.0)) ? Fi[i] : Fi[i] - N[i] / D[i];

        double err = (norm == ResidualNorm::ScaledLinearized)
                         ? lin.norm() / static_cast<double>(k)
                         : res.cwiseAbs().maxCoeff();

        out.iterations = m;
        if (err <= rel_tolerance * fmax) {
            out.converged = true;
            break;
        }
        if (m == max_support)
            break;

        // Next support point: argmax of the true residual, smallest index on
        // ties (indices scanned in grid order).
        int pick = -1;
        double best = -1.0;
        for (int i = 0, r = 0; i < M; ++i)
            if (!is_support[i]) {
                double d = std::abs(res[r++]);
                if (d > best) { best = d; pick = i; }
            }
        support.push_back(pick);
        is_support[pick] = 1;
    }

    const int m = static_cast<int>(support.size());
    out.support_points.resize(m);
    out.support_values.resize(m);
    for (int j = 0; j < m; ++j) {
        out.support_points[j] = X[support[j]];
        out.support_values[j] = F[support[j]];
    }
    out.weights = w;
    return out;
}

Complex evaluate(const BarycentricApproximant &approx, Complex z) {
    const int m = static_cast<int>(approx.support_points.size());
    if (m < 1)
        throw std::invalid_argument("evaluate: empty approximant");
    Complex n = 0.0, d = 0.0;
    for (int j = 0; j < m; ++j) {
        Complex dz = z - approx.support_points[j];
        if (dz == Complex(0.0))
            return approx.support_values[j];  // interpolation limit
        Complex c = approx.weights[j] / dz;
        n += c * approx.support_values[j];
        d += c;
    }
    if (d == Complex(0.0)) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};  // pole sentinel, never a silent NaN
    }
    return n / d;
}

std::vector<std::pair<Complex, Complex>>
poles_and_residues(const BarycentricApproximant &approx) {
    const int m = static_cast<int>(approx.support_points.size());
    if (m < 2)
        throw std::invalid_argument("poles_and_residues: need >= 2 support points");
    const Eigen::VectorXcd &xs = approx.support_points;
    const Eigen::VectorXcd &fs = approx.support_values;
    const Eigen::VectorXcd &w = approx.weights;

    double xscale = std::max(1.0, xs.cwiseAbs().maxCoeff());
    const double huge = 1e13 * xscale;

    bool real_problem = values_are_real(xs, xscale) &&
                        values_are_real(w, 1.0);

    std::vector<Complex> poles;
    if (real_problem) {
        // Arrowhead pencil E v = lambda B v, B = diag(0,1,...,1); the two
        // infinite eigenvalues are filtered by magnitude.
        Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m + 1, m + 1);
        Eigen::MatrixXd B = Eigen::MatrixXd::Identity(m + 1, m + 1);
        B(0, 0) = 0.0;
        for (int j = 0; j < m; ++j) {
            E(0, j + 1) = w[j].real();
            E(j + 1, 0) = 1.0;
            E(j + 1, j + 1) = xs[j].real();
        }
        Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
        ges.compute(E, B, false);
        auto alphas = ges.alphas();
        auto betas = ges.betas();
        for (int i = 0; i <= m; ++i) {
            if (betas[i] == 0.0) continue;
            Complex lam = alphas[i] / betas[i];
            if (!std::isfinite(lam.real()) || !std::isfinite(lam.imag())) continue;
            if (std::abs(lam) > huge) continue;
            poles.push_back(lam);
        }
    } else {
        // Complex data: shift-invert the pencil so infinite eigenvalues map
        // to 0 and a standard complex eigensolver applies.
        double spread = std::abs(xs[m - 1] - xs[0]) + 1.0;
        Complex sigma = xs.mean() + Complex(0.3101, 0.5521) * spread;
        Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(m + 1, m + 1);
        Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(m + 1, m + 1);
        B(0, 0) = 0.0;
        for (int j = 0; j < m; ++j) {
            E(0, j + 1) = w[j];
            E(j + 1, 0) = 1.0;
            E(j + 1, j + 1) = xs[j];
        }
        Eigen::MatrixXcd S = (E - sigma * B).fullPivLu().solve(B);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(S, false);
        for (int i = 0; i <= m; ++i) {
            Complex mu = ces.eigenvalues()[i];
            if (std::abs(mu) < 1.0 / huge) continue;  // infinite eigenvalue
            Complex lam = sigma + 1.0 / mu;
            if (std::abs(lam) > huge) continue;
            poles.push_back(lam);
        }
    }

    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(poles.size());
    for (Complex p : poles) {
        Complex n = 0.0, dp = 0.0;
        for (int j = 0; j < m; ++j) {
            Complex c = 1.0 / (p - xs[j]);
            n += w[j] * fs[j] * c;
            dp -= w[j] * c * c;
        }
        out.emplace_back(p, n / dp);
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.first.imag() != b.first.imag()) return a.first.imag() < b.first.imag();
        return a.first.real() < b.first.real();
    });
    return out;
}

} // namespace expasym
