#include "drumhead/density.hpp"

#include <cmath>

#include "drumhead/errors.hpp"

namespace drumhead {

void LoadingParams::validate() const {
    if (!(sigma >= 1.0)) {
        throw InvalidParameterError("sigma must be >= 1");
    }
    if (!(k > 0.0 && k < 1.0)) {
        throw InvalidParameterError("k must lie in (0, 1)");
    }
    if (!(xi > 0.0)) {
        throw InvalidParameterError("xi must be > 0");
    }
    if (!(epsilon >= 0.0)) {
        throw InvalidParameterError("epsilon must be >= 0");
    }
    if (!(epsilon + k < 1.0)) {
        throw InvalidParameterError("loaded patch must stay inside the membrane (epsilon + k < 1)");
    }
}

double density_at(const LoadingParams& params, double r, double theta) {
    // Distance from the patch center; for a concentric patch this is just r,
    // which also keeps the profile exactly independent of theta.
    double dist;
    if (params.epsilon == 0.0) {
        dist = r;
    } else {
        const double dx = r * std::cos(theta) - params.epsilon;
        const double dy = r * std::sin(theta);
        dist = std::sqrt(dx * dx + dy * dy);
    }
    const double contrast = 0.5 * (params.sigma * params.sigma - 1.0);
    return 1.0 + contrast * (1.0 - std::tanh((dist - params.k) / params.xi));
}

Eigen::VectorXd assemble_mass(const LoadingParams& params, const DiskGrid& grid) {
    params.validate();
    const int m = grid.radial_count();
    const int nt = grid.n_theta;
    Eigen::VectorXd mass(m * nt);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < nt; ++i) {
            mass[grid.index(j, i)] = density_at(params, grid.radii[j], grid.angles[i]);
        }
    }
    return mass;
}

DiscreteOperators make_operators(const DiskGrid& grid, const LoadingParams& params) {
    DiscreteOperators ops;
    ops.laplacian = assemble_laplacian(grid);
    ops.mass = assemble_mass(params, grid);
    ops.n_radial = grid.radial_count();
    ops.n_theta = grid.n_theta;
    return ops;
}

}  // namespace drumhead
