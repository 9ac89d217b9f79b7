#include "drumhead/report.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace drumhead;

namespace {

SpectrumReport small_report(Normalization convention) {
    const DiskGrid grid = build_grid(15, 8);
    const LoadingParams params{1.0, 0.4, 0.091, 0.0};
    auto modes = solve_modes(make_operators(grid, params), 5);
    return make_spectrum_report(params, grid, modes, convention);
}

}  // namespace

TEST_CASE("spectrum report JSON parses and carries the schema") {
    const SpectrumReport report = small_report(Normalization::kNone);
    std::ostringstream os;
    write_spectrum_report_json(os, report);

    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["params"]["sigma"] == 1.0);
    CHECK(doc["params"]["epsilon"] == 0.0);
    CHECK(doc["grid"]["nr"] == 15);
    CHECK(doc["grid"]["ntheta"] == 8);
    CHECK(doc["normalization"]["convention"] == "none");
    REQUIRE(doc["modes"].size() == 5);
    CHECK(doc["modes"][0]["rank"] == 1);
    CHECK(doc["modes"][0]["m"] == 0);
    CHECK(doc["modes"][0]["n"] == 1);
    CHECK(doc["modes"][0]["partner"].is_null());
    CHECK(doc["modes"][1]["partner"] == 3);
    CHECK(doc["modes"][2]["partner"] == 2);
    CHECK(doc["modes"][0]["lambda"].get<double>() == doctest::Approx(2.4048).epsilon(1e-3));
    CHECK(doc["modes"][0].contains("cents_vs_nearest_integer"));
}

TEST_CASE("report writers are byte deterministic") {
    const SpectrumReport report = small_report(Normalization::kOvertone2);
    std::ostringstream a, b;
    write_spectrum_report_json(a, report);
    write_spectrum_report_json(b, report);
    CHECK(a.str() == b.str());
    CHECK(a.str().find('\r') == std::string::npos);
}

TEST_CASE("normalized column and cents follow the convention") {
    const SpectrumReport report = small_report(Normalization::kOvertone2);
    CHECK(report.rows[1].normalized == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(report.rows[2].normalized == doctest::Approx(2.0).epsilon(1e-9));
    // cents of an exact integer ratio is zero
    CHECK(report.rows[1].cents_vs_nearest_integer == doctest::Approx(0.0).epsilon(1e-6));
    // sub-unity ratios are referred to 1, keeping cents finite
    const SpectrumReport r1 = small_report(Normalization::kOvertone1);
    CHECK(r1.rows[0].normalized < 0.7);
    CHECK(std::isfinite(r1.rows[0].cents_vs_nearest_integer));
}

TEST_CASE("mode field CSV format") {
    const DiskGrid grid = build_grid(3, 4);
    auto modes = solve_modes(make_operators(grid, LoadingParams{1.0, 0.4, 0.091, 0.0}), 1);
    const auto rows = export_mode_grid(modes[0], grid);
    std::ostringstream os;
    write_mode_field_csv(os, rows);
    const std::string text = os.str();
    CHECK(text.rfind("r,theta,value\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);  // header + 10 rows
    CHECK(text.find('\r') == std::string::npos);
    // boundary rows close the file with zeros
    CHECK(text.find("1,6.28318530718,0\n") != std::string::npos);
}

TEST_CASE("quality map CSV layout") {
    QualityMap map;
    map.sigma_axis = {1.0, 2.0};
    map.k_axis = {0.3, 0.4, 0.5};
    map.q_values.resize(2, 3);
    map.q_values << 0.1, 0.2, 0.3, 0.4, 0.5, 0.25;
    std::ostringstream os;
    write_quality_map_csv(os, map);
    CHECK(os.str() ==
          ",0.3,0.4,0.5\n"
          "1,0.1,0.2,0.3\n"
          "2,0.4,0.5,0.25\n");
}

TEST_CASE("eccentricity CSV layout") {
    EccentricitySweep sweep;
    sweep.epsilon_axis = {0.0, 0.1};
    sweep.lambdas.resize(2, 2);
    sweep.lambdas << 1.5, 2.5, 1.4, 2.4;
    std::ostringstream os;
    write_eccentricity_csv(os, sweep);
    CHECK(os.str() ==
          "epsilon,lambda_1,lambda_2\n"
          "0,1.5,2.5\n"
          "0.1,1.4,2.4\n");
}

TEST_CASE("format_g12 pins 12 significant digits") {
    CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_g12(0.0) == "0");
    CHECK(format_g12(-1.5) == "-1.5");
}
