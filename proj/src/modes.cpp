#include "drumhead/modes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "drumhead/errors.hpp"

namespace drumhead {

namespace {

// Sign changes between consecutive samples whose magnitude clears the
// threshold; cyclic closes the loop.  Near-zero samples are skipped so that
// nodal curves passing through grid nodes are not double counted.
int sign_changes(const std::vector<double>& samples, double threshold, bool cyclic) {
    std::vector<int> signs;
    signs.reserve(samples.size());
    for (double s : samples) {
        if (std::abs(s) > threshold) {
            signs.push_back(s > 0.0 ? 1 : -1);
        }
    }
    if (signs.size() < 2) return 0;
    int changes = 0;
    for (size_t i = 1; i < signs.size(); ++i) {
        if (signs[i] != signs[i - 1]) ++changes;
    }
    if (cyclic && signs.back() != signs.front()) ++changes;
    return changes;
}

int ring_line_count(const Mode& mode, const DiskGrid& grid, int ring, double threshold) {
    const int nt = grid.n_theta;
    std::vector<double> samples(nt);
    for (int i = 0; i < nt; ++i) {
        samples[i] = mode.values[grid.index(ring, i)];
    }
    return sign_changes(samples, threshold, true) / 2;
}

}  // namespace

ModeLabel classify_mode(const Mode& mode, const DiskGrid& grid) {
    const int m_count = grid.radial_count();
    const int nt = grid.n_theta;
    if (mode.values.size() != grid.size()) {
        throw InvalidParameterError("mode sample count does not match the grid");
    }
    const double threshold = 1e-7 * mode.values.cwiseAbs().maxCoeff();

    // Nodal lines: count on the ring nearest r = 0.75, vote with the three
    // outermost rings where the angular structure is purest.
    int ring75 = 0;
    for (int j = 1; j < m_count; ++j) {
        if (std::abs(grid.radii[j] - 0.75) < std::abs(grid.radii[ring75] - 0.75)) {
            ring75 = j;
        }
    }
    std::vector<int> rings{ring75};
    for (int j = 0; j < std::min(3, m_count); ++j) {
        if (std::find(rings.begin(), rings.end(), j) == rings.end()) {
            rings.push_back(j);
        }
    }
    std::map<int, int> votes;
    for (int ring : rings) {
        ++votes[ring_line_count(mode, grid, ring, threshold)];
    }
    const int vote75 = ring_line_count(mode, grid, ring75, threshold);
    int m_label = vote75;
    int best_count = votes[vote75];
    for (const auto& [value, count] : votes) {
        if (count > best_count) {
            best_count = count;
            m_label = value;
        }
    }
    const bool certain = votes.size() == 1;

    // Nodal contours: walk the ray from center to rim through the absolute
    // maximum; the clamped boundary contributes the +1.
    int max_index = 0;
    mode.values.cwiseAbs().maxCoeff(&max_index);
    const int ray_angle = max_index % nt;
    std::vector<double> ray(m_count);
    for (int j = 0; j < m_count; ++j) {
        ray[j] = mode.values[grid.index(m_count - 1 - j, ray_angle)];  // radii ascend
    }
    const int n_label = 1 + sign_changes(ray, threshold, false);

    return ModeLabel{m_label, n_label, certain};
}

void label_modes(std::vector<Mode>& modes, const DiskGrid& grid) {
    for (Mode& mode : modes) {
        const ModeLabel label = classify_mode(mode, grid);
        mode.label_m = label.m;
        mode.label_n = label.n;
        mode.label_certain = label.certain;
    }
}

std::vector<ModeFieldRow> export_mode_grid(const Mode& mode, const DiskGrid& grid) {
    if (mode.values.size() != grid.size()) {
        throw InvalidParameterError("mode sample count does not match the grid");
    }
    const int m_count = grid.radial_count();
    const int nt = grid.n_theta;
    const double two_pi = 2.0 * std::numbers::pi;

    std::vector<ModeFieldRow> rows;
    rows.reserve(static_cast<size_t>(m_count + 1) * (nt + 1));
    for (int j = 0; j < m_count; ++j) {
        for (int i = 0; i < nt; ++i) {
            rows.push_back({grid.radii[j], grid.angles[i], mode.values[grid.index(j, i)]});
        }
        rows.push_back({grid.radii[j], two_pi, mode.values[grid.index(j, 0)]});
    }
    for (int i = 0; i < nt; ++i) {
        rows.push_back({1.0, grid.angles[i], 0.0});
    }
    rows.push_back({1.0, two_pi, 0.0});
    return rows;
}

}  // namespace drumhead
