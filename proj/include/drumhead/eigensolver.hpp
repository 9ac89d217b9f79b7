#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "drumhead/grid.hpp"

namespace drumhead {

// Relative tolerance |Im(lambda^2)| / Re(lambda^2) above which an eigenvalue
// is rejected as non-real.
inline constexpr double kRealityTol = 1e-8;

// Relative gap below which two adjacent eigenvalues are treated as a
// degenerate cluster (pair detection, normalization reference, tie-breaks).
inline constexpr double kDegeneracyTol = 1e-6;

// One eigenpair of the membrane: frequency lambda (units sqrt(T/rho_rim)/a)
// and the eigenfunction sampled on the grid, scaled to unit max-absolute
// amplitude with value +1 at the first extremal node.  label_m counts nodal
// lines, label_n nodal contours (clamped boundary included); both are 0
// until classify_mode has run.
struct Mode {
    double lambda = 0.0;
    Eigen::VectorXd values;
    int label_m = 0;
    int label_n = 0;
    bool label_certain = true;
    std::optional<int> degeneracy_partner;
};

// The n_modes smallest solutions of  L psi = -lambda^2 B psi,  ascending in
// lambda.  B is reduced into L (diagonal scaling) and the standard dense
// nonsymmetric problem is solved; eigenvalues whose relative imaginary part
// exceeds kRealityTol, or whose real part is not positive, are rejected.
// Throws SolverFailureError if the factorization fails or fewer than
// n_modes valid eigenvalues remain.
std::vector<Mode> solve_modes(const DiscreteOperators& ops, int n_modes);

// Eigenvalues only; same filtering and ordering as solve_modes.
std::vector<double> solve_lambdas(const DiscreteOperators& ops, int n_modes);
std::vector<double> solve_lambdas(const Eigen::MatrixXd& laplacian,
                                  const Eigen::VectorXd& mass, int n_modes);

enum class Normalization {
    kOvertone2,    // second distinct eigenvalue cluster maps to 2 (Table-style concentric reports)
    kOvertone1,    // upper member of the first-overtone pair (3rd smallest) maps to 1
    kFundamental,  // smallest eigenvalue maps to 1
    kNone,         // raw eigenvalues
};

const char* normalization_name(Normalization n);
std::optional<Normalization> parse_normalization(const std::string& name);

struct NormalizedSpectrum {
    std::vector<double> values;
    double reference_lambda = 1.0;  // raw eigenvalue mapped to the convention's anchor
};

NormalizedSpectrum normalize_spectrum(const std::vector<double>& lambdas,
                                      Normalization convention);

// Ascending eigenvalues -> cluster boundaries: indices [start, start+len)
// grouped while the relative gap stays below rel_tol.
std::vector<std::pair<int, int>> cluster_spectrum(const std::vector<double>& lambdas,
                                                  double rel_tol);

// Greedy adjacent pairing of near-equal eigenvalues; each mode belongs to at
// most one pair.  Returns the partner index (or nullopt) per mode.
std::vector<std::optional<int>> detect_degenerate_pairs(
    const std::vector<double>& lambdas, double rel_tol);

// Same pairing written into Mode::degeneracy_partner.
void assign_degenerate_pairs(std::vector<Mode>& modes, double rel_tol = kDegeneracyTol);

}  // namespace drumhead
