#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "drumhead/density.hpp"
#include "drumhead/eigensolver.hpp"

namespace drumhead {

// Sum of squared deviations of the first n_max normalized frequencies from
// their nearest integer (ties at .5 round up).  Smaller is more harmonic.
double quality(const std::vector<double>& normalized, int n_max);

// The normalized frequencies entering the quality sum for a raw ascending
// spectrum: Table-style normalization with the first-overtone cluster
// mapped to 2, truncated to n_max entries (degenerate duplicates counted).
std::vector<double> quality_frequencies(const std::vector<double>& lambdas, int n_max);

double quality_from_lambdas(const std::vector<double>& lambdas, int n_max);

// 1200 * log2(value / reference): the musical interval in cents.
double cents_deviation(double value, double reference);

std::vector<double> linspace(double lo, double hi, int count);

// Q sampled over a rectangular (sigma, k) grid, with its minimizer.
struct QualityMap {
    std::vector<double> sigma_axis;
    std::vector<double> k_axis;
    Eigen::MatrixXd q_values;  // rows follow sigma_axis, columns k_axis
    int n_max = 0;
    double xi = 0.0;
    double epsilon = 0.0;
    double sigma_opt = 0.0;
    double k_opt = 0.0;
    double q_min = 0.0;
};

// Grid resolution and worker count for parameter scans.  Workers only
// partition the point list; results are keyed by grid index, so the output
// is identical for any worker count.
struct ScanSettings {
    int n_r = 49;
    int n_theta = 24;
    int workers = 1;
};

QualityMap scan_sigma_k(const std::vector<double>& sigma_axis,
                        const std::vector<double>& k_axis, double xi,
                        double epsilon, int n_max, const ScanSettings& settings);

// 1-D sweep over sigma at fixed k: Q plus the normalized frequencies per
// sigma (rows follow sigma_axis).
struct SigmaSweep {
    std::vector<double> sigma_axis;
    std::vector<double> q;
    Eigen::MatrixXd normalized;  // n_max columns
};

SigmaSweep scan_sigma(const std::vector<double>& sigma_axis, double k, double xi,
                      double epsilon, int n_max, const ScanSettings& settings);

// 1-D sweep over the smoothness width xi at fixed (sigma, k, epsilon).
struct XiScan {
    std::vector<double> xi_axis;
    std::vector<double> q;
    int best_index = 0;
};

XiScan optimize_xi(double sigma, double k, double epsilon,
                   const std::vector<double>& xi_axis, int n_max,
                   const ScanSettings& settings);

// Ascending eigenvalues per eccentricity, aligned by rank.
struct EccentricitySweep {
    std::vector<double> epsilon_axis;
    Eigen::MatrixXd lambdas;  // rows follow epsilon_axis, n_modes columns
};

EccentricitySweep scan_eccentricity(double sigma, double k, double xi,
                                    const std::vector<double>& epsilon_axis,
                                    int n_modes, const ScanSettings& settings);

// Coarse (sigma, k) scan followed by local refinement passes around the
// running minimizer.  Each pass re-scans a refine_points^2 sub-grid spanning
// one coarse cell (clamped to the original bounds) around the best point.
struct OptimumSearch {
    QualityMap coarse;
    double sigma_opt = 0.0;
    double k_opt = 0.0;
    double q_min = 0.0;
};

OptimumSearch locate_optimum(const std::vector<double>& sigma_axis,
                             const std::vector<double>& k_axis, double xi,
                             double epsilon, int n_max, const ScanSettings& settings,
                             int refine_passes = 2, int refine_points = 11);

}  // namespace drumhead
