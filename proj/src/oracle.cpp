#include "drumhead/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "drumhead/errors.hpp"

namespace drumhead::oracle {

namespace {

constexpr int kMaxOrder = 12;
constexpr double kMaxArgument = 60.0;

void check_order(int m) {
    if (m < 0 || m > kMaxOrder) {
        throw InvalidParameterError("bessel order out of supported range [0, 12]: " +
                                    std::to_string(m));
    }
}

// Ascending power series; safe against cancellation for x <= 8.
double bessel_series(int m, double x) {
    const double half_x = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= m; ++i) {
        term *= half_x / i;
    }
    double acc = term;
    const double q = half_x * half_x;
    for (int k = 1; k <= 200; ++k) {
        term *= -q / (static_cast<double>(k) * (m + k));
        acc += term;
        if (std::abs(term) < 1e-18 * (std::abs(acc) + 1e-300)) break;
    }
    return acc;
}

// Backward (Miller) recurrence, normalized with J_0 + 2*sum J_{2k} = 1.
double bessel_miller(int m, double x) {
    const int start = [&] {
        int s = std::max(m, static_cast<int>(std::ceil(x))) + 15 +
                static_cast<int>(std::ceil(15.0 * std::cbrt(x)));
        return s + (s % 2);  // even start keeps the normalization sum aligned
    }();

    double above = 0.0;    // scaled J at order k+1
    double current = 1e-30;  // scaled J at order k
    double result = (m == start) ? current : 0.0;
    double norm = (start % 2 == 0) ? 2.0 * current : 0.0;

    for (int k = start; k >= 1; --k) {
        const double below = (2.0 * k / x) * current - above;
        above = current;
        current = below;
        const int order = k - 1;
        if (order == m) result = current;
        if (order == 0) {
            norm += current;
        } else if (order % 2 == 0) {
            norm += 2.0 * current;
        }
        if (std::abs(current) > 1e250) {  // domain-bounded; guard regardless
            above *= 1e-250;
            current *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
    }
    return result / norm;
}

}  // namespace

double bessel_j(int m, double x) {
    check_order(m);
    if (!(x >= 0.0 && x <= kMaxArgument)) {
        throw InvalidParameterError("bessel argument out of supported range [0, 60]");
    }
    if (x == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    return x < 8.0 ? bessel_series(m, x) : bessel_miller(m, x);
}

double bessel_zero(int m, int n) {
    check_order(m);
    if (n < 1) {
        throw InvalidParameterError("bessel zero index must be >= 1");
    }
    // J_m is positive on (0, j_{m,1}) and j_{m,1} > m + 0.5, so start the
    // scan there; zeros are spaced by at least ~pi, far above the step.
    const double step = 0.25;
    double x = m + 0.5;
    double fx = bessel_j(m, x);
    int found = 0;
    while (x + step <= kMaxArgument) {
        const double x_next = x + step;
        const double f_next = bessel_j(m, x_next);
        if (fx == 0.0) {
            ++found;
            if (found == n) return x;
            x = x_next;
            fx = f_next;
            continue;
        }
        if (fx * f_next < 0.0) {
            ++found;
            if (found == n) {
                double lo = x, hi = x_next, flo = fx;
                while (hi - lo > 1e-13) {
                    const double mid = 0.5 * (lo + hi);
                    const double fmid = bessel_j(m, mid);
                    if (fmid == 0.0) return mid;
                    if (flo * fmid < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fmid;
                    }
                }
                return 0.5 * (lo + hi);
            }
        }
        x = x_next;
        fx = f_next;
    }
    throw InvalidParameterError("bessel zero j_{" + std::to_string(m) + "," +
                                std::to_string(n) + "} beyond supported range");
}

std::vector<UniformMode> uniform_reference(int count) {
    if (count < 1 || count > 25) {
        throw InvalidParameterError("uniform_reference supports 1..25 modes");
    }
    std::vector<UniformMode> table;
    for (int m = 0; m <= 10; ++m) {
        for (int n = 1; n <= 6; ++n) {
            table.push_back({bessel_zero(m, n), m, n});
        }
    }
    std::sort(table.begin(), table.end(),
              [](const UniformMode& a, const UniformMode& b) { return a.lambda < b.lambda; });

    std::vector<UniformMode> out;
    out.reserve(count);
    for (const UniformMode& mode : table) {
        out.push_back(mode);
        if (static_cast<int>(out.size()) == count) break;
        if (mode.m >= 1) {  // rotational degeneracy
            out.push_back(mode);
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

}  // namespace drumhead::oracle
