#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "drumhead/density.hpp"
#include "drumhead/eigensolver.hpp"
#include "drumhead/harmonicity.hpp"
#include "drumhead/modes.hpp"

namespace drumhead {

// Full description of one solved spectrum: model parameters, grid, raw and
// normalized eigenvalues, nodal labels, degeneracy pairing and per-mode
// cents deviation from the nearest integer frequency ratio.
struct SpectrumReport {
    LoadingParams params;
    int n_r = 0;
    int n_theta = 0;
    Normalization convention = Normalization::kNone;
    double reference_lambda = 1.0;

    struct Row {
        int rank = 0;  // 1-based, ascending lambda
        double lambda = 0.0;
        double normalized = 0.0;
        int m = 0;
        int n = 1;
        bool label_certain = true;
        std::optional<int> partner;  // 1-based rank of the degeneracy partner
        double cents_vs_nearest_integer = 0.0;
    };
    std::vector<Row> rows;
};

// Labels the modes, assigns degeneracy partners and normalizes the spectrum.
SpectrumReport make_spectrum_report(const LoadingParams& params, const DiskGrid& grid,
                                    std::vector<Mode>& modes, Normalization convention);

// All writers emit a fixed field order, 12-significant-digit numbers, LF
// line endings and no timestamps, so identical inputs give identical bytes.
void write_spectrum_report_json(std::ostream& os, const SpectrumReport& report);
void print_spectrum_table(std::ostream& os, const SpectrumReport& report);

void write_mode_field_csv(std::ostream& os, const std::vector<ModeFieldRow>& rows);
void write_mode_index_csv(std::ostream& os, const SpectrumReport& report);

void write_quality_map_csv(std::ostream& os, const QualityMap& map);
void write_sigma_sweep_csv(std::ostream& os, const SigmaSweep& sweep);
void write_xi_sweep_csv(std::ostream& os, const XiScan& scan);
void write_eccentricity_csv(std::ostream& os, const EccentricitySweep& sweep);

// "%.12g" formatting used by every writer.
std::string format_g12(double v);

}  // namespace drumhead
