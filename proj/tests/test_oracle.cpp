#include "drumhead/oracle.hpp"

#include <cmath>

#include "doctest.h"
#include "drumhead/errors.hpp"

using namespace drumhead;
using namespace drumhead::oracle;

TEST_CASE("bessel_j at the origin") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("bessel_j agrees with the standard library implementation") {
    // Cross-check only; the library evaluation is never used by the solver.
    for (int m = 0; m <= 12; ++m) {
        for (double x : {0.1, 0.5, 1.0, 2.5, 4.0, 7.9, 8.0, 8.1, 12.0, 20.0, 33.3, 45.0, 59.5}) {
            CHECK(std::abs(bessel_j(m, x) - std::cyl_bessel_j(m, x)) < 1e-12);
        }
    }
}

TEST_CASE("bessel_j vanishes at the bisected first zero") {
    CHECK(std::abs(bessel_j(0, 2.404825558)) < 1e-9);
}

TEST_CASE("bessel_j domain checks") {
    CHECK_THROWS_AS(bessel_j(13, 1.0), InvalidParameterError);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), InvalidParameterError);
    CHECK_THROWS_AS(bessel_j(0, 61.0), InvalidParameterError);
    CHECK_THROWS_AS(bessel_j(0, -0.5), InvalidParameterError);
}

TEST_CASE("bessel_zero reproduces the classical zeros") {
    CHECK(bessel_zero(0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-12));
    CHECK(bessel_zero(1, 1) == doctest::Approx(3.831705970207512).epsilon(1e-12));
    CHECK(bessel_zero(2, 1) == doctest::Approx(5.135622301840683).epsilon(1e-12));
    CHECK(bessel_zero(0, 2) == doctest::Approx(5.520078110286311).epsilon(1e-12));
    CHECK(bessel_zero(0, 3) == doctest::Approx(8.653727912911013).epsilon(1e-12));
    CHECK(bessel_zero(1, 2) == doctest::Approx(7.015586669815619).epsilon(1e-12));
}

TEST_CASE("bessel_zero residuals are tiny") {
    for (int m = 0; m <= 6; ++m) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(std::abs(bessel_j(m, bessel_zero(m, n))) < 1e-11);
        }
    }
}

TEST_CASE("bessel zeros interlace") {
    for (int m = 0; m <= 11; ++m) {
        for (int n = 1; n <= 5; ++n) {
            const double jmn = bessel_zero(m, n);
            CHECK(jmn < bessel_zero(m + 1, n));
            CHECK(bessel_zero(m + 1, n) < bessel_zero(m, n + 1));
        }
    }
}

TEST_CASE("bessel_zero range checks") {
    CHECK_THROWS_AS(bessel_zero(0, 0), InvalidParameterError);
    CHECK_THROWS_AS(bessel_zero(0, 100), InvalidParameterError);
}

TEST_CASE("uniform_reference merges zeros with degeneracy") {
    const auto modes = uniform_reference(5);
    REQUIRE(modes.size() == 5);
    CHECK(modes[0].lambda == doctest::Approx(2.404826).epsilon(1e-6));
    CHECK(modes[1].lambda == doctest::Approx(3.831706).epsilon(1e-6));
    CHECK(modes[2].lambda == doctest::Approx(3.831706).epsilon(1e-6));
    CHECK(modes[3].lambda == doctest::Approx(5.135622).epsilon(1e-6));
    CHECK(modes[4].lambda == doctest::Approx(5.135622).epsilon(1e-6));
    CHECK(modes[0].m == 0);
    CHECK(modes[0].n == 1);
    CHECK(modes[1].m == 1);
    CHECK(modes[1].n == 1);
    CHECK(modes[2].m == 1);
    CHECK(modes[3].m == 2);
    CHECK(modes[4].m == 2);
}

TEST_CASE("uniform_reference single mode and structure") {
    const auto one = uniform_reference(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lambda == doctest::Approx(2.404825557695773).epsilon(1e-12));

    const auto modes = uniform_reference(25);
    for (size_t i = 1; i < modes.size(); ++i) {
        CHECK(modes[i].lambda >= modes[i - 1].lambda);
    }
    // every m >= 1 family appears exactly twice in a row
    for (size_t i = 0; i < modes.size(); ++i) {
        if (modes[i].m >= 1 && (i == 0 || modes[i - 1].lambda != modes[i].lambda)) {
            if (i + 1 < modes.size()) {
                CHECK(modes[i + 1].lambda == modes[i].lambda);
                CHECK(modes[i + 1].m == modes[i].m);
            }
        }
    }
    CHECK_THROWS_AS(uniform_reference(0), InvalidParameterError);
    CHECK_THROWS_AS(uniform_reference(26), InvalidParameterError);
}
