#include "drumhead/eigensolver.hpp"

#include <cmath>

#include "doctest.h"
#include "drumhead/density.hpp"
#include "drumhead/errors.hpp"
#include "drumhead/oracle.hpp"

using namespace drumhead;

namespace {

DiscreteOperators uniform_ops(int nr, int nt) {
    return make_operators(build_grid(nr, nt), LoadingParams{1.0, 0.4, 0.091, 0.0});
}

}  // namespace

TEST_CASE("uniform membrane spectrum matches the Bessel oracle") {
    const auto lambdas = solve_lambdas(uniform_ops(31, 20), 10);
    // frozen values from the bisection oracle
    CHECK(lambdas[0] == doctest::Approx(2.404825558).epsilon(1e-9));
    CHECK(lambdas[1] == doctest::Approx(3.831705970).epsilon(1e-9));
    CHECK(lambdas[2] == doctest::Approx(3.831705970).epsilon(1e-9));
    CHECK(lambdas[3] == doctest::Approx(5.135622302).epsilon(1e-9));
    CHECK(lambdas[4] == doctest::Approx(5.135622302).epsilon(1e-9));

    const auto reference = oracle::uniform_reference(10);
    for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(lambdas[i] - reference[i].lambda) / reference[i].lambda < 1e-8);
    }
}

TEST_CASE("solve_modes returns normalized eigenfunctions") {
    const auto modes = solve_modes(uniform_ops(17, 12), 6);
    REQUIRE(modes.size() == 6);
    for (const Mode& mode : modes) {
        CHECK(mode.lambda > 0.0);
        CHECK(mode.values.cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-14));
        int imax = 0;
        mode.values.cwiseAbs().maxCoeff(&imax);
        CHECK(mode.values[imax] > 0.0);
    }
    for (size_t i = 1; i < modes.size(); ++i) {
        CHECK(modes[i].lambda >= modes[i - 1].lambda * (1.0 - 1e-12));
    }
}

TEST_CASE("concentric spectra come in degenerate pairs") {
    const auto lambdas = solve_lambdas(uniform_ops(31, 20), 10);
    const auto partner = detect_degenerate_pairs(lambdas, 1e-6);
    CHECK(!partner[0].has_value());
    CHECK(partner[1] == 2);
    CHECK(partner[2] == 1);
    CHECK(partner[3] == 4);
    CHECK(partner[4] == 3);
    CHECK(!partner[5].has_value());
    CHECK(partner[6] == 7);
    CHECK(partner[8] == 9);
}

TEST_CASE("detect_degenerate_pairs trivial cases") {
    CHECK(detect_degenerate_pairs({2.4}, 1e-6).size() == 1);
    CHECK(!detect_degenerate_pairs({2.4}, 1e-6)[0].has_value());
    const auto split = detect_degenerate_pairs({1.0, 1.5, 2.0}, 1e-6);
    for (const auto& p : split) CHECK(!p.has_value());
    // triple cluster: only one pair forms
    const auto triple = detect_degenerate_pairs({1.0, 1.0, 1.0}, 1e-6);
    CHECK(triple[0] == 1);
    CHECK(triple[1] == 0);
    CHECK(!triple[2].has_value());
}

TEST_CASE("normalize_spectrum conventions") {
    SUBCASE("none is the identity") {
        const auto r = normalize_spectrum({2.40483, 3.83171}, Normalization::kNone);
        CHECK(r.values[0] == 2.40483);
        CHECK(r.values[1] == 3.83171);
        CHECK(r.reference_lambda == 1.0);
    }
    SUBCASE("fundamental maps the first eigenvalue to 1") {
        const auto r = normalize_spectrum({2.0, 3.0, 5.0}, Normalization::kFundamental);
        CHECK(r.values[0] == 1.0);
        CHECK(r.values[1] == doctest::Approx(1.5));
    }
    SUBCASE("overtone1 maps the third eigenvalue to 1") {
        const auto r = normalize_spectrum({1.0, 1.99, 2.0, 3.1}, Normalization::kOvertone1);
        CHECK(r.reference_lambda == 2.0);
        CHECK(r.values[2] == 1.0);
        CHECK(r.values[1] == doctest::Approx(0.995));
    }
    SUBCASE("overtone2 maps the second cluster to 2") {
        const auto lambdas = solve_lambdas(uniform_ops(31, 20), 6);
        const auto r = normalize_spectrum(lambdas, Normalization::kOvertone2);
        CHECK(r.values[1] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.values[2] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.values[0] == doctest::Approx(2.0 * lambdas[0] / lambdas[1]).epsilon(1e-9));
    }
    SUBCASE("too few modes") {
        CHECK_THROWS_AS(normalize_spectrum({}, Normalization::kFundamental),
                        InvalidParameterError);
        CHECK_THROWS_AS(normalize_spectrum({1.0, 2.0}, Normalization::kOvertone1),
                        InvalidParameterError);
        CHECK_THROWS_AS(normalize_spectrum({1.0, 1.0 + 1e-9}, Normalization::kOvertone2),
                        InvalidParameterError);
    }
}

TEST_CASE("eigenvalue scale covariance in the mass matrix") {
    const DiskGrid grid = build_grid(31, 20);
    DiscreteOperators ops = make_operators(grid, LoadingParams{2.57, 0.492, 0.091, 0.0});
    const auto base = solve_lambdas(ops, 8);
    ops.mass *= 4.0;  // c^2 with c = 2
    const auto scaled = solve_lambdas(ops, 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(scaled[i] == doctest::Approx(base[i] / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("eigenvalues decrease monotonically with loading") {
    const DiskGrid grid = build_grid(31, 20);
    const Eigen::MatrixXd lap = assemble_laplacian(grid);
    std::vector<double> previous;
    for (double sigma : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        const Eigen::VectorXd mass =
            assemble_mass(LoadingParams{sigma, 0.4, 0.091, 0.0}, grid);
        const auto lambdas = solve_lambdas(lap, mass, 10);
        if (!previous.empty()) {
            for (int i = 0; i < 10; ++i) {
                CHECK(lambdas[i] <= previous[i] * (1.0 + 1e-12));
            }
        }
        previous = lambdas;
    }
}

TEST_CASE("spectral convergence of the loaded spectrum") {
    const LoadingParams p{2.57, 0.492, 0.091, 0.0};
    const auto coarse = solve_lambdas(make_operators(build_grid(49, 24), p), 15);
    const auto fine = solve_lambdas(make_operators(build_grid(65, 30), p), 15);
    for (int i = 0; i < 15; ++i) {
        CHECK(std::abs(coarse[i] - fine[i]) / fine[i] < 1e-6);
    }
}

TEST_CASE("solver input validation") {
    const auto ops = uniform_ops(9, 8);
    CHECK_THROWS_AS(solve_lambdas(ops, 0), InvalidParameterError);
    CHECK_THROWS_AS(solve_lambdas(ops, ops.laplacian.rows() + 1), InvalidParameterError);
    DiscreteOperators bad = ops;
    bad.mass[0] = -1.0;
    CHECK_THROWS_AS(solve_lambdas(bad, 3), InvalidParameterError);
}
