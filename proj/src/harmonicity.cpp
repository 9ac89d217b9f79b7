#include "drumhead/harmonicity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "drumhead/errors.hpp"
#include "drumhead/grid.hpp"

namespace drumhead {

namespace {

double round_half_up(double x) { return std::floor(x + 0.5); }

// Runs task(i) for i in [0, count) on `workers` threads.  Tasks write into
// index-keyed slots, so scheduling cannot affect the result.  The first
// failure is rethrown on the calling thread, tagged by the point label.
void run_indexed(int count, int workers,
                 const std::function<void(int)>& task,
                 const std::function<std::string(int)>& point_label) {
    workers = std::clamp(workers, 1, 64);
    if (workers == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) {
            try {
                task(i);
            } catch (const std::exception& e) {
                throw SolverFailureError("scan point " + point_label(i) + ": " + e.what());
            }
        }
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::string first_error;
    bool failed = false;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed) {
                    failed = true;
                    first_error = "scan point " + point_label(i) + ": " + e.what();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed) throw SolverFailureError(first_error);
}

}  // namespace

double quality(const std::vector<double>& normalized, int n_max) {
    if (n_max < 1) {
        throw InvalidParameterError("quality: n_max must be >= 1");
    }
    if (static_cast<int>(normalized.size()) < n_max) {
        throw InvalidParameterError("quality: need " + std::to_string(n_max) +
                                    " modes, got " + std::to_string(normalized.size()));
    }
    double q = 0.0;
    for (int i = 0; i < n_max; ++i) {
        const double dev = normalized[i] - round_half_up(normalized[i]);
        q += dev * dev;
    }
    return q;
}

std::vector<double> quality_frequencies(const std::vector<double>& lambdas, int n_max) {
    if (static_cast<int>(lambdas.size()) < n_max) {
        throw InvalidParameterError("quality_frequencies: too few eigenvalues");
    }
    std::vector<double> normalized = normalize_spectrum(lambdas, Normalization::kOvertone2).values;
    normalized.resize(n_max);
    return normalized;
}

double quality_from_lambdas(const std::vector<double>& lambdas, int n_max) {
    return quality(quality_frequencies(lambdas, n_max), n_max);
}

double cents_deviation(double value, double reference) {
    if (!(value > 0.0) || !(reference > 0.0)) {
        throw InvalidParameterError("cents_deviation requires positive frequency ratios");
    }
    return 1200.0 * std::log2(value / reference);
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) {
        throw InvalidParameterError("linspace: count must be >= 1");
    }
    std::vector<double> axis(count);
    if (count == 1) {
        axis[0] = lo;
        return axis;
    }
    for (int i = 0; i < count; ++i) {
        axis[i] = lo + (hi - lo) * i / (count - 1);
    }
    return axis;
}

QualityMap scan_sigma_k(const std::vector<double>& sigma_axis,
                        const std::vector<double>& k_axis, double xi,
                        double epsilon, int n_max, const ScanSettings& settings) {
    if (sigma_axis.empty() || k_axis.empty()) {
        throw InvalidParameterError("scan_sigma_k: axes must be non-empty");
    }
    for (double sigma : sigma_axis) {
        for (double k : {k_axis.front(), k_axis.back()}) {
            LoadingParams{sigma, k, xi, epsilon}.validate();
        }
    }
    for (double k : k_axis) {
        LoadingParams{sigma_axis.front(), k, xi, epsilon}.validate();
    }
    const DiskGrid grid = build_grid(settings.n_r, settings.n_theta);
    const Eigen::MatrixXd laplacian = assemble_laplacian(grid);
    const int n_solve = std::max(n_max, 3);
    if (n_solve > grid.size()) {
        throw InvalidParameterError("scan grid too small for the requested n_max");
    }

    QualityMap map;
    map.sigma_axis = sigma_axis;
    map.k_axis = k_axis;
    map.n_max = n_max;
    map.xi = xi;
    map.epsilon = epsilon;
    const int ns = static_cast<int>(sigma_axis.size());
    const int nk = static_cast<int>(k_axis.size());
    map.q_values.resize(ns, nk);

    run_indexed(
        ns * nk, settings.workers,
        [&](int idx) {
            const int is = idx / nk;
            const int ik = idx % nk;
            LoadingParams params{sigma_axis[is], k_axis[ik], xi, epsilon};
            params.validate();
            const Eigen::VectorXd mass = assemble_mass(params, grid);
            const auto lambdas = solve_lambdas(laplacian, mass, n_solve);
            map.q_values(is, ik) = quality_from_lambdas(lambdas, n_max);
        },
        [&](int idx) {
            const int is = idx / nk;
            const int ik = idx % nk;
            return "(sigma=" + std::to_string(sigma_axis[is]) +
                   ", k=" + std::to_string(k_axis[ik]) + ")";
        });

    int best_is = 0, best_ik = 0;
    for (int is = 0; is < ns; ++is) {
        for (int ik = 0; ik < nk; ++ik) {
            if (map.q_values(is, ik) < map.q_values(best_is, best_ik)) {
                best_is = is;
                best_ik = ik;
            }
        }
    }
    map.sigma_opt = sigma_axis[best_is];
    map.k_opt = k_axis[best_ik];
    map.q_min = map.q_values(best_is, best_ik);
    return map;
}

SigmaSweep scan_sigma(const std::vector<double>& sigma_axis, double k, double xi,
                      double epsilon, int n_max, const ScanSettings& settings) {
    if (sigma_axis.empty()) {
        throw InvalidParameterError("scan_sigma: axis must be non-empty");
    }
    const DiskGrid grid = build_grid(settings.n_r, settings.n_theta);
    const Eigen::MatrixXd laplacian = assemble_laplacian(grid);
    const int n_solve = std::max(n_max, 3);

    SigmaSweep sweep;
    sweep.sigma_axis = sigma_axis;
    sweep.q.resize(sigma_axis.size());
    sweep.normalized.resize(static_cast<int>(sigma_axis.size()), n_max);

    run_indexed(
        static_cast<int>(sigma_axis.size()), settings.workers,
        [&](int is) {
            LoadingParams params{sigma_axis[is], k, xi, epsilon};
            params.validate();
            const Eigen::VectorXd mass = assemble_mass(params, grid);
            const auto lambdas = solve_lambdas(laplacian, mass, n_solve);
            const auto freq = quality_frequencies(lambdas, n_max);
            for (int c = 0; c < n_max; ++c) sweep.normalized(is, c) = freq[c];
            sweep.q[is] = quality(freq, n_max);
        },
        [&](int is) { return "(sigma=" + std::to_string(sigma_axis[is]) + ")"; });
    return sweep;
}

XiScan optimize_xi(double sigma, double k, double epsilon,
                   const std::vector<double>& xi_axis, int n_max,
                   const ScanSettings& settings) {
    if (xi_axis.empty()) {
        throw InvalidParameterError("optimize_xi: axis must be non-empty");
    }
    const DiskGrid grid = build_grid(settings.n_r, settings.n_theta);
    const Eigen::MatrixXd laplacian = assemble_laplacian(grid);
    const int n_solve = std::max(n_max, 3);

    XiScan scan;
    scan.xi_axis = xi_axis;
    scan.q.resize(xi_axis.size());

    run_indexed(
        static_cast<int>(xi_axis.size()), settings.workers,
        [&](int ix) {
            LoadingParams params{sigma, k, xi_axis[ix], epsilon};
            params.validate();
            const Eigen::VectorXd mass = assemble_mass(params, grid);
            const auto lambdas = solve_lambdas(laplacian, mass, n_solve);
            scan.q[ix] = quality_from_lambdas(lambdas, n_max);
        },
        [&](int ix) { return "(xi=" + std::to_string(xi_axis[ix]) + ")"; });

    scan.best_index = static_cast<int>(
        std::min_element(scan.q.begin(), scan.q.end()) - scan.q.begin());
    return scan;
}

EccentricitySweep scan_eccentricity(double sigma, double k, double xi,
                                    const std::vector<double>& epsilon_axis,
                                    int n_modes, const ScanSettings& settings) {
    if (epsilon_axis.empty()) {
        throw InvalidParameterError("scan_eccentricity: axis must be non-empty");
    }
    for (double eps : epsilon_axis) {
        LoadingParams{sigma, k, xi, eps}.validate();  // containment up front
    }
    const DiskGrid grid = build_grid(settings.n_r, settings.n_theta);
    const Eigen::MatrixXd laplacian = assemble_laplacian(grid);

    EccentricitySweep sweep;
    sweep.epsilon_axis = epsilon_axis;
    sweep.lambdas.resize(static_cast<int>(epsilon_axis.size()), n_modes);

    run_indexed(
        static_cast<int>(epsilon_axis.size()), settings.workers,
        [&](int ie) {
            LoadingParams params{sigma, k, xi, epsilon_axis[ie]};
            const Eigen::VectorXd mass = assemble_mass(params, grid);
            const auto lambdas = solve_lambdas(laplacian, mass, n_modes);
            for (int c = 0; c < n_modes; ++c) sweep.lambdas(ie, c) = lambdas[c];
        },
        [&](int ie) { return "(epsilon=" + std::to_string(epsilon_axis[ie]) + ")"; });
    return sweep;
}

OptimumSearch locate_optimum(const std::vector<double>& sigma_axis,
                             const std::vector<double>& k_axis, double xi,
                             double epsilon, int n_max, const ScanSettings& settings,
                             int refine_passes, int refine_points) {
    OptimumSearch search;
    search.coarse = scan_sigma_k(sigma_axis, k_axis, xi, epsilon, n_max, settings);
    search.sigma_opt = search.coarse.sigma_opt;
    search.k_opt = search.coarse.k_opt;
    search.q_min = search.coarse.q_min;

    const double sigma_lo = sigma_axis.front(), sigma_hi = sigma_axis.back();
    const double k_lo = k_axis.front(), k_hi = k_axis.back();
    double sigma_step = sigma_axis.size() > 1 ? (sigma_hi - sigma_lo) / (sigma_axis.size() - 1) : 0.0;
    double k_step = k_axis.size() > 1 ? (k_hi - k_lo) / (k_axis.size() - 1) : 0.0;

    for (int pass = 0; pass < refine_passes; ++pass) {
        if (sigma_step == 0.0 && k_step == 0.0) break;
        const auto sub_axis = [&](double center, double step, double lo, double hi) {
            return linspace(std::max(lo, center - step), std::min(hi, center + step),
                            refine_points);
        };
        const auto s_axis = sub_axis(search.sigma_opt, sigma_step, sigma_lo, sigma_hi);
        const auto kk_axis = sub_axis(search.k_opt, k_step, k_lo, k_hi);
        const QualityMap sub = scan_sigma_k(s_axis, kk_axis, xi, epsilon, n_max, settings);
        if (sub.q_min < search.q_min) {
            search.sigma_opt = sub.sigma_opt;
            search.k_opt = sub.k_opt;
            search.q_min = sub.q_min;
        }
        sigma_step = (s_axis.back() - s_axis.front()) / (refine_points - 1);
        k_step = (kk_axis.back() - kk_axis.front()) / (refine_points - 1);
    }
    return search;
}

}  // namespace drumhead
