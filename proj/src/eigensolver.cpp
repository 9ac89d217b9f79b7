#include "drumhead/eigensolver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "drumhead/errors.hpp"

namespace drumhead {

namespace {

struct RawSpectrum {
    std::vector<double> lambda2;  // ascending, real, positive
    Eigen::MatrixXd vectors;      // one column per retained eigenvalue (may be empty)
};

// Reduce L psi = -lambda^2 B psi (B diagonal, positive) to the standard
// problem (-B^{-1} L) psi = lambda^2 psi and hand it to dgeev.
RawSpectrum dense_spectrum(const Eigen::MatrixXd& laplacian, const Eigen::VectorXd& mass,
                           int n_modes, bool want_vectors) {
    const int n = static_cast<int>(laplacian.rows());
    if (laplacian.cols() != n) {
        throw InvalidParameterError("laplacian must be square");
    }
    if (mass.size() != n) {
        throw InvalidParameterError("mass diagonal size does not match the laplacian");
    }
    if ((mass.array() <= 0.0).any()) {
        throw InvalidParameterError("mass diagonal must be positive");
    }
    if (n_modes < 1 || n_modes > n) {
        throw InvalidParameterError("n_modes must lie in [1, " + std::to_string(n) + "]");
    }

    Eigen::MatrixXd a = (-mass.cwiseInverse()).asDiagonal() * laplacian;
    std::vector<double> wr(n), wi(n);
    Eigen::MatrixXd vr;
    double* vr_data = nullptr;
    int ldvr = 1;
    if (want_vectors) {
        vr.resize(n, n);
        vr_data = vr.data();
        ldvr = n;
    }
    const int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
                                   a.data(), n, wr.data(), wi.data(), nullptr, 1,
                                   vr_data, ldvr);
    if (info != 0) {
        throw SolverFailureError("dgeev failed with info = " + std::to_string(info));
    }

    // Keep real positive eigenvalues only; complex or non-positive ones are
    // collocation artifacts and never occur among the low modes.
    std::vector<int> keep;
    keep.reserve(n);
    for (int p = 0; p < n; ++p) {
        if (wr[p] > 0.0 && std::abs(wi[p]) <= kRealityTol * wr[p]) {
            keep.push_back(p);
        }
    }
    if (static_cast<int>(keep.size()) < n_modes) {
        throw SolverFailureError("reality check left only " + std::to_string(keep.size()) +
                                 " of " + std::to_string(n) + " eigenvalues, need " +
                                 std::to_string(n_modes));
    }
    std::sort(keep.begin(), keep.end(), [&](int a_, int b_) { return wr[a_] < wr[b_]; });
    keep.resize(n_modes);

    RawSpectrum out;
    out.lambda2.reserve(n_modes);
    for (int p : keep) {
        out.lambda2.push_back(wr[p]);
    }
    if (want_vectors) {
        out.vectors.resize(n, n_modes);
        for (int c = 0; c < n_modes; ++c) {
            out.vectors.col(c) = vr.col(keep[c]);  // real eigenvalue -> real column
        }
    }
    return out;
}

// Angular distance of a node's angle from theta = 0.
double phase_distance(int node_index, int n_theta) {
    const int i = node_index % n_theta;
    const double theta = 2.0 * std::numbers::pi * i / n_theta;
    return std::min(theta, 2.0 * std::numbers::pi - theta);
}

int argmax_abs(const Eigen::VectorXd& v) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            imax = i;
        }
    }
    return imax;
}

}  // namespace

std::vector<double> solve_lambdas(const Eigen::MatrixXd& laplacian,
                                  const Eigen::VectorXd& mass, int n_modes) {
    RawSpectrum raw = dense_spectrum(laplacian, mass, n_modes, false);
    std::vector<double> lambdas(raw.lambda2.size());
    std::transform(raw.lambda2.begin(), raw.lambda2.end(), lambdas.begin(),
                   [](double l2) { return std::sqrt(l2); });
    return lambdas;
}

std::vector<double> solve_lambdas(const DiscreteOperators& ops, int n_modes) {
    return solve_lambdas(ops.laplacian, ops.mass, n_modes);
}

std::vector<Mode> solve_modes(const DiscreteOperators& ops, int n_modes) {
    RawSpectrum raw = dense_spectrum(ops.laplacian, ops.mass, n_modes, true);

    std::vector<Mode> modes(raw.lambda2.size());
    for (size_t p = 0; p < raw.lambda2.size(); ++p) {
        modes[p].lambda = std::sqrt(raw.lambda2[p]);
        Eigen::VectorXd v = raw.vectors.col(static_cast<int>(p));
        v /= v[argmax_abs(v)];  // max-abs amplitude 1, first extremal node positive
        modes[p].values = std::move(v);
    }

    // Within a degenerate cluster the eigenvector basis is arbitrary; order
    // members by how close their absolute maximum sits to theta = 0 so that
    // repeated runs agree.
    std::vector<double> lambdas(modes.size());
    for (size_t p = 0; p < modes.size(); ++p) lambdas[p] = modes[p].lambda;
    for (auto [start, len] : cluster_spectrum(lambdas, kDegeneracyTol)) {
        if (len < 2) continue;
        std::stable_sort(modes.begin() + start, modes.begin() + start + len,
                         [&](const Mode& a, const Mode& b) {
                             return phase_distance(argmax_abs(a.values), ops.n_theta) <
                                    phase_distance(argmax_abs(b.values), ops.n_theta);
                         });
    }
    return modes;
}

std::vector<std::pair<int, int>> cluster_spectrum(const std::vector<double>& lambdas,
                                                  double rel_tol) {
    std::vector<std::pair<int, int>> clusters;
    const int n = static_cast<int>(lambdas.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        const bool close = i < n && lambdas[i] - lambdas[i - 1] < rel_tol * std::abs(lambdas[i - 1]);
        if (!close) {
            clusters.emplace_back(start, i - start);
            start = i;
        }
    }
    return clusters;
}

std::vector<std::optional<int>> detect_degenerate_pairs(const std::vector<double>& lambdas,
                                                        double rel_tol) {
    const int n = static_cast<int>(lambdas.size());
    std::vector<std::optional<int>> partner(n);
    for (int i = 0; i + 1 < n; ++i) {
        if (partner[i].has_value()) continue;
        if (std::abs(lambdas[i + 1] - lambdas[i]) < rel_tol * std::abs(lambdas[i])) {
            partner[i] = i + 1;
            partner[i + 1] = i;
        }
    }
    return partner;
}

void assign_degenerate_pairs(std::vector<Mode>& modes, double rel_tol) {
    std::vector<double> lambdas(modes.size());
    for (size_t i = 0; i < modes.size(); ++i) lambdas[i] = modes[i].lambda;
    const auto partner = detect_degenerate_pairs(lambdas, rel_tol);
    for (size_t i = 0; i < modes.size(); ++i) {
        modes[i].degeneracy_partner = partner[i];
    }
}

const char* normalization_name(Normalization n) {
    switch (n) {
        case Normalization::kOvertone2: return "overtone2";
        case Normalization::kOvertone1: return "overtone1";
        case Normalization::kFundamental: return "fundamental";
        case Normalization::kNone: return "none";
    }
    return "none";
}

std::optional<Normalization> parse_normalization(const std::string& name) {
    if (name == "overtone2") return Normalization::kOvertone2;
    if (name == "overtone1") return Normalization::kOvertone1;
    if (name == "fundamental") return Normalization::kFundamental;
    if (name == "none") return Normalization::kNone;
    return std::nullopt;
}

NormalizedSpectrum normalize_spectrum(const std::vector<double>& lambdas,
                                      Normalization convention) {
    NormalizedSpectrum out;
    double scale = 1.0;
    switch (convention) {
        case Normalization::kNone:
            out.reference_lambda = 1.0;
            break;
        case Normalization::kFundamental: {
            if (lambdas.empty()) {
                throw InvalidParameterError("fundamental normalization needs >= 1 eigenvalue");
            }
            out.reference_lambda = lambdas.front();
            break;
        }
        case Normalization::kOvertone1: {
            // The first overtone of the clamped membrane is the (possibly
            // split) pair at ranks 2 and 3; its upper member maps to 1.
            if (lambdas.size() < 3) {
                throw InvalidParameterError("overtone1 normalization needs >= 3 eigenvalues");
            }
            out.reference_lambda = lambdas[2];
            break;
        }
        case Normalization::kOvertone2: {
            const auto clusters = cluster_spectrum(lambdas, kDegeneracyTol);
            if (clusters.size() < 2) {
                throw InvalidParameterError("overtone2 normalization needs >= 2 distinct eigenvalue clusters");
            }
            const auto [start, len] = clusters[1];
            double mean = 0.0;
            for (int i = start; i < start + len; ++i) mean += lambdas[i];
            mean /= len;
            out.reference_lambda = mean;
            scale = 2.0;
            break;
        }
    }
    out.values.resize(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i) {
        out.values[i] = scale * lambdas[i] / out.reference_lambda;
    }
    return out;
}

}  // namespace drumhead
