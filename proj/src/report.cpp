#include "drumhead/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "drumhead/errors.hpp"

namespace drumhead {

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

// Nearest positive integer frequency ratio; ratios below 0.5 are referred to
// 1 so the cents value stays finite.
double nearest_harmonic(double normalized) {
    return std::max(1.0, std::floor(normalized + 0.5));
}

std::string partner_json(const std::optional<int>& partner) {
    return partner ? std::to_string(*partner) : "null";
}

}  // namespace

SpectrumReport make_spectrum_report(const LoadingParams& params, const DiskGrid& grid,
                                    std::vector<Mode>& modes, Normalization convention) {
    label_modes(modes, grid);
    assign_degenerate_pairs(modes);

    std::vector<double> lambdas(modes.size());
    for (size_t i = 0; i < modes.size(); ++i) lambdas[i] = modes[i].lambda;
    const NormalizedSpectrum normalized = normalize_spectrum(lambdas, convention);

    SpectrumReport report;
    report.params = params;
    report.n_r = grid.n_r;
    report.n_theta = grid.n_theta;
    report.convention = convention;
    report.reference_lambda = normalized.reference_lambda;
    report.rows.resize(modes.size());
    for (size_t i = 0; i < modes.size(); ++i) {
        SpectrumReport::Row& row = report.rows[i];
        row.rank = static_cast<int>(i) + 1;
        row.lambda = modes[i].lambda;
        row.normalized = normalized.values[i];
        row.m = modes[i].label_m;
        row.n = modes[i].label_n;
        row.label_certain = modes[i].label_certain;
        if (modes[i].degeneracy_partner) {
            row.partner = *modes[i].degeneracy_partner + 1;
        }
        row.cents_vs_nearest_integer =
            cents_deviation(row.normalized, nearest_harmonic(row.normalized));
    }
    return report;
}

void write_spectrum_report_json(std::ostream& os, const SpectrumReport& report) {
    os << "{\n";
    os << "  \"params\": {\"sigma\": " << format_g12(report.params.sigma)
       << ", \"k\": " << format_g12(report.params.k)
       << ", \"xi\": " << format_g12(report.params.xi)
       << ", \"epsilon\": " << format_g12(report.params.epsilon) << "},\n";
    os << "  \"grid\": {\"nr\": " << report.n_r << ", \"ntheta\": " << report.n_theta
       << "},\n";
    os << "  \"normalization\": {\"convention\": \"" << normalization_name(report.convention)
       << "\", \"reference_lambda\": " << format_g12(report.reference_lambda) << "},\n";
    os << "  \"modes\": [\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        os << "    {\"rank\": " << row.rank << ", \"lambda\": " << format_g12(row.lambda)
           << ", \"normalized\": " << format_g12(row.normalized) << ", \"m\": " << row.m
           << ", \"n\": " << row.n << ", \"partner\": " << partner_json(row.partner)
           << ", \"cents_vs_nearest_integer\": " << format_g12(row.cents_vs_nearest_integer)
           << "}" << (i + 1 < report.rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n";
    os << "}\n";
}

void print_spectrum_table(std::ostream& os, const SpectrumReport& report) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "sigma=%g k=%g xi=%g eps=%g  grid=(%d, %d)  normalization=%s (ref lambda %.9g)\n",
                  report.params.sigma, report.params.k, report.params.xi,
                  report.params.epsilon, report.n_r, report.n_theta,
                  normalization_name(report.convention), report.reference_lambda);
    os << line;
    os << "rank   lambda          normalized    mode    partner  cents\n";
    for (const auto& row : report.rows) {
        std::snprintf(line, sizeof line, "%-6d %-15.10g %-13.6g (%d,%d)%s  %-8s %+8.2f\n",
                      row.rank, row.lambda, row.normalized, row.m, row.n,
                      row.label_certain ? " " : "?",
                      row.partner ? std::to_string(*row.partner).c_str() : "-",
                      row.cents_vs_nearest_integer);
        os << line;
    }
}

void write_mode_field_csv(std::ostream& os, const std::vector<ModeFieldRow>& rows) {
    os << "r,theta,value\n";
    for (const auto& row : rows) {
        os << format_g12(row.r) << ',' << format_g12(row.theta) << ','
           << format_g12(row.value) << '\n';
    }
}

void write_mode_index_csv(std::ostream& os, const SpectrumReport& report) {
    os << "rank,lambda,normalized,m,n,partner\n";
    for (const auto& row : report.rows) {
        os << row.rank << ',' << format_g12(row.lambda) << ',' << format_g12(row.normalized)
           << ',' << row.m << ',' << row.n << ','
           << (row.partner ? std::to_string(*row.partner) : "") << '\n';
    }
}

void write_quality_map_csv(std::ostream& os, const QualityMap& map) {
    for (double k : map.k_axis) {
        os << ',' << format_g12(k);
    }
    os << '\n';
    for (size_t is = 0; is < map.sigma_axis.size(); ++is) {
        os << format_g12(map.sigma_axis[is]);
        for (int ik = 0; ik < map.q_values.cols(); ++ik) {
            os << ',' << format_g12(map.q_values(static_cast<int>(is), ik));
        }
        os << '\n';
    }
}

void write_sigma_sweep_csv(std::ostream& os, const SigmaSweep& sweep) {
    os << "sigma,q";
    for (int c = 0; c < sweep.normalized.cols(); ++c) {
        os << ",omega_" << c + 1;
    }
    os << '\n';
    for (size_t is = 0; is < sweep.sigma_axis.size(); ++is) {
        os << format_g12(sweep.sigma_axis[is]) << ',' << format_g12(sweep.q[is]);
        for (int c = 0; c < sweep.normalized.cols(); ++c) {
            os << ',' << format_g12(sweep.normalized(static_cast<int>(is), c));
        }
        os << '\n';
    }
}

void write_xi_sweep_csv(std::ostream& os, const XiScan& scan) {
    os << "xi,q\n";
    for (size_t i = 0; i < scan.xi_axis.size(); ++i) {
        os << format_g12(scan.xi_axis[i]) << ',' << format_g12(scan.q[i]) << '\n';
    }
}

void write_eccentricity_csv(std::ostream& os, const EccentricitySweep& sweep) {
    os << "epsilon";
    for (int c = 0; c < sweep.lambdas.cols(); ++c) {
        os << ",lambda_" << c + 1;
    }
    os << '\n';
    for (size_t ie = 0; ie < sweep.epsilon_axis.size(); ++ie) {
        os << format_g12(sweep.epsilon_axis[ie]);
        for (int c = 0; c < sweep.lambdas.cols(); ++c) {
            os << ',' << format_g12(sweep.lambdas(static_cast<int>(ie), c));
        }
        os << '\n';
    }
}

}  // namespace drumhead
