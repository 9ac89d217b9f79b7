#pragma once

#include <Eigen/Dense>
#include <vector>

namespace drumhead {

// Polar collocation grid on the unit disk: Chebyshev nodes in radius,
// equispaced Fourier nodes in angle.  The radial degree n_r must be odd so
// that the Chebyshev nodes cos(j*pi/n_r), j = 0..n_r, avoid r = 0 and split
// symmetrically about it; n_theta must be even so that the reflected node
// (-r, theta) coincides with the grid point (r, theta + pi).  Only the
// M = (n_r - 1)/2 positive interior radii carry unknowns; r = 1 is removed
// by the clamped (Dirichlet) boundary condition.
struct DiskGrid {
    int n_r = 0;
    int n_theta = 0;
    std::vector<double> radii;   // descending, strictly inside (0, 1)
    std::vector<double> angles;  // 2*pi*i/n_theta, i = 0..n_theta-1

    int radial_count() const { return static_cast<int>(radii.size()); }
    int size() const { return radial_count() * n_theta; }

    // Unknown ordering: radial index j (outer), angular index i (inner).
    int index(int j, int i) const { return j * n_theta + i; }
};

DiskGrid build_grid(int n_r, int n_theta);

// First-derivative collocation matrix on the n+1 Chebyshev points
// x_j = cos(j*pi/n).  Diagonal entries use the negative-sum trick.
Eigen::MatrixXd chebyshev_diff_matrix(int n);

// Second-derivative matrix for periodic functions sampled at n equispaced
// points on [0, 2*pi); n must be even.  Circulant and symmetric.
Eigen::MatrixXd fourier_diff2_matrix(int n);

// Dense discrete Laplacian on the disk grid with Dirichlet rows/columns
// eliminated.  Rows/columns are ordered per DiskGrid::index.
Eigen::MatrixXd assemble_laplacian(const DiskGrid& grid);

// Discrete operator pair of the generalized eigenproblem
// laplacian * psi = -lambda^2 * diag(mass) * psi.
struct DiscreteOperators {
    Eigen::MatrixXd laplacian;
    Eigen::VectorXd mass;  // diagonal of B, same ordering as the laplacian
    int n_radial = 0;
    int n_theta = 0;
};

}  // namespace drumhead
