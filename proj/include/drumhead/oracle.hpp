#pragma once

#include <vector>

namespace drumhead::oracle {

// Reference results computed independently of the collocation pipeline:
// Bessel functions of the first kind, their zeros, and the exact spectrum
// of the uniform clamped membrane.  These back the solver benchmarks, so
// they deliberately avoid every numerical library the solver uses.

// J_m(x) for 0 <= m <= 12, 0 <= x <= 60, accurate to ~1e-12 absolute.
// Ascending series for small arguments, backward (Miller) recurrence with
// the even-order normalization sum for large ones.
double bessel_j(int m, double x);

// n-th positive zero j_{m,n}, found by sign-change bracketing and bisection
// to ~1e-12.  Consecutive zeros are at least ~pi apart, so a fixed scan
// step cannot skip a bracket.
double bessel_zero(int m, int n);

struct UniformMode {
    double lambda;  // j_{m,n}
    int m;
    int n;
};

// The `count` smallest eigenvalues of the uniform clamped unit membrane,
// ascending, with multiplicity 2 for every m >= 1.  count <= 25.
std::vector<UniformMode> uniform_reference(int count);

}  // namespace drumhead::oracle
