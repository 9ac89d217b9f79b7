#include "drumhead/grid.hpp"

#include <cmath>
#include <numbers>

#include "drumhead/errors.hpp"

namespace drumhead {

namespace {
constexpr double kPi = std::numbers::pi;
}

DiskGrid build_grid(int n_r, int n_theta) {
    if (n_r < 3 || n_r % 2 == 0) {
        throw InvalidParameterError("n_r must be an odd integer >= 3, got " +
                                    std::to_string(n_r));
    }
    if (n_theta < 4 || n_theta % 2 != 0) {
        throw InvalidParameterError("n_theta must be an even integer >= 4, got " +
                                    std::to_string(n_theta));
    }
    DiskGrid grid;
    grid.n_r = n_r;
    grid.n_theta = n_theta;
    const int m = (n_r - 1) / 2;
    grid.radii.resize(m);
    for (int j = 1; j <= m; ++j) {
        grid.radii[j - 1] = std::cos(j * kPi / n_r);
    }
    grid.angles.resize(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        grid.angles[i] = 2.0 * kPi * i / n_theta;
    }
    return grid;
}

Eigen::MatrixXd chebyshev_diff_matrix(int n) {
    if (n < 1) {
        throw InvalidParameterError("chebyshev_diff_matrix: n must be >= 1");
    }
    Eigen::VectorXd x(n + 1);
    for (int j = 0; j <= n; ++j) {
        x[j] = std::cos(j * kPi / n);
    }
    auto endpoint_weight = [n](int j) { return (j == 0 || j == n) ? 2.0 : 1.0; };

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            d(i, j) = endpoint_weight(i) / endpoint_weight(j) * sign / (x[i] - x[j]);
            row_sum += d(i, j);
        }
        d(i, i) = -row_sum;  // exact annihilation of constants
    }
    return d;
}

Eigen::MatrixXd fourier_diff2_matrix(int n) {
    if (n < 4 || n % 2 != 0) {
        throw InvalidParameterError("fourier_diff2_matrix: n must be even and >= 4");
    }
    const double h = 2.0 * kPi / n;
    Eigen::MatrixXd d(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) {
                d(j, k) = -kPi * kPi / (3.0 * h * h) - 1.0 / 6.0;
            } else {
                const int p = j - k;
                const double sign = (p % 2 == 0) ? 1.0 : -1.0;
                const double s = std::sin(0.5 * p * h);
                d(j, k) = -sign / (2.0 * s * s);
            }
        }
    }
    return d;
}

// L = (D1 + R E1) (x) I_l + (D2 + R E2) (x) I_r + R^2 (x) Dtt.
// D1/E1 are the interior rows of the Chebyshev second/first derivative
// matrices restricted to the positive radii, D2/E2 the same rows at the
// reflected negative radii taken in reversed column order, I_r the
// half-turn permutation identifying (-r, theta) with (r, theta + pi).
// Both boundary columns (r = +1 and r = -1) are omitted: that is the
// clamped condition.
Eigen::MatrixXd assemble_laplacian(const DiskGrid& grid) {
    const int n = grid.n_r;
    const int m = grid.radial_count();
    const int nt = grid.n_theta;
    if (m < 1 || nt < 4) {
        throw InvalidParameterError("assemble_laplacian: invalid grid");
    }

    const Eigen::MatrixXd d1cheb = chebyshev_diff_matrix(n);
    const Eigen::MatrixXd d2cheb = d1cheb * d1cheb;

    // Radial blocks: row a and column b run over positive interior radii
    // (node index 1 + a); the reflected column for b is node index n - 1 - b.
    Eigen::MatrixXd same(m, m);
    Eigen::MatrixXd refl(m, m);
    for (int a = 0; a < m; ++a) {
        const double inv_r = 1.0 / grid.radii[a];
        for (int b = 0; b < m; ++b) {
            same(a, b) = d2cheb(1 + a, 1 + b) + inv_r * d1cheb(1 + a, 1 + b);
            refl(a, b) = d2cheb(1 + a, n - 1 - b) + inv_r * d1cheb(1 + a, n - 1 - b);
        }
    }

    const Eigen::MatrixXd dtt = fourier_diff2_matrix(nt);
    const int half = nt / 2;

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m * nt, m * nt);
    for (int p = 0; p < m; ++p) {
        for (int q = 0; q < m; ++q) {
            for (int i = 0; i < nt; ++i) {
                lap(p * nt + i, q * nt + i) += same(p, q);
                lap(p * nt + i, q * nt + (i + half) % nt) += refl(p, q);
            }
        }
        const double inv_r2 = 1.0 / (grid.radii[p] * grid.radii[p]);
        lap.block(p * nt, p * nt, nt, nt) += inv_r2 * dtt;
    }
    return lap;
}

}  // namespace drumhead
