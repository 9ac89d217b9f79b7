#pragma once

#include <vector>

#include "drumhead/eigensolver.hpp"
#include "drumhead/grid.hpp"

namespace drumhead {

// Nodal counts of an eigenfunction.  m is half the number of sign changes
// around the collocation circle nearest r = 0.75, confirmed by a majority
// vote over the three largest interior radii; n is one plus the number of
// sign changes along the ray through the eigenfunction's absolute maximum
// (the clamped boundary counts as one contour).  certain is false when the
// votes disagree; the majority label is still returned.
struct ModeLabel {
    int m = 0;
    int n = 1;
    bool certain = true;
};

ModeLabel classify_mode(const Mode& mode, const DiskGrid& grid);

// Runs classify_mode over a solved spectrum and stores the labels.
void label_modes(std::vector<Mode>& modes, const DiskGrid& grid);

// One row of the exported eigenfunction field.
struct ModeFieldRow {
    double r;
    double theta;
    double value;
};

// Grid samples of the eigenfunction in radial-outer/angular-inner order,
// with a duplicated theta = 2*pi sample per ring and an appended r = 1 ring
// of zeros, so a contour plotter can close the disk.
std::vector<ModeFieldRow> export_mode_grid(const Mode& mode, const DiskGrid& grid);

}  // namespace drumhead
