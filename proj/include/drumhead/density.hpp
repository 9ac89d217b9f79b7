#pragma once

#include <Eigen/Dense>

#include "drumhead/grid.hpp"

namespace drumhead {

// Parameters of the smooth loading profile
//   rho(r, theta) = 1 + (sigma^2 - 1)/2 * [1 - tanh((R - k)/xi)],
//   R(r, theta)   = sqrt((r cos(theta) - epsilon)^2 + (r sin(theta))^2).
// Densities are measured in rim units (rho = 1 at the clamped edge), the
// membrane radius is 1.  sigma^2 is the center-to-rim density contrast,
// k the loaded-patch radius, xi the transition width, and epsilon the
// offset of the patch center along theta = 0.
struct LoadingParams {
    double sigma = 1.0;
    double k = 0.4;
    double xi = 0.091;
    double epsilon = 0.0;

    // Throws InvalidParameterError unless sigma >= 1, 0 < k < 1, xi > 0,
    // epsilon >= 0 and epsilon + k < 1 (patch contained in the membrane).
    void validate() const;
};

double density_at(const LoadingParams& params, double r, double theta);

// Diagonal of the mass matrix B: rho sampled at the grid nodes in
// DiskGrid::index order.
Eigen::VectorXd assemble_mass(const LoadingParams& params, const DiskGrid& grid);

DiscreteOperators make_operators(const DiskGrid& grid, const LoadingParams& params);

}  // namespace drumhead
