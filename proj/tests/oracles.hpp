#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code path it is used to check.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "fueter/quaternion.hpp"

namespace oracle {

/// Basis products e_m * e_n = sign * e_idx from the multiplication table
/// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct basis_entry {
    int sign;
    int idx;
};

inline constexpr std::array<std::array<basis_entry, 4>, 4> table{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

inline fueter::quaternion table_product(const fueter::quaternion& a, const fueter::quaternion& b) {
    std::array<double, 4> out{};
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            const auto e = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            out[static_cast<std::size_t>(e.idx)] += e.sign * a[m] * b[n];
        }
    }
    return {out[0], out[1], out[2], out[3]};
}

/// sum a_n z^n with std::pow, no Horner.
inline std::complex<double> power_sum(const std::vector<double>& ascending, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < ascending.size(); ++n) {
        acc += ascending[n] * std::pow(z, static_cast<int>(n));
    }
    return acc;
}

/// Roots of a real function on [lo, hi] by dense sign scanning plus bisection.
/// Only finds sign-changing roots.
inline std::vector<double> bracket_roots(const std::function<double(double)>& g, double lo, double hi,
                                         int samples = 20000) {
    std::vector<double> roots;
    double prev_x = lo;
    double prev = g(lo);
    for (int k = 1; k <= samples; ++k) {
        const double x = lo + (hi - lo) * k / samples;
        const double v = g(x);
        if (v == 0.0) {
            roots.push_back(x);
        } else if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) {
            double a = prev_x, b = x, ga = prev;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double gm = g(m);
                if (gm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((gm < 0.0) == (ga < 0.0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev = v;
    }
    return roots;
}

/// Central difference (order 4) of a scalar function.
inline double d4(const std::function<double(double)>& g, double x, double h) {
    return (g(x - 2 * h) - 8 * g(x - h) + 8 * g(x + h) - g(x + 2 * h)) / (12 * h);
}

/// Distance in units in the last place between two doubles of the same sign.
inline std::uint64_t ulp_distance(double a, double b) {
    if (a == b) {
        return 0;
    }
    if ((a < 0) != (b < 0)) {
        return ulp_distance(a, 0.0) + ulp_distance(0.0, b);
    }
    const auto ia = std::bit_cast<std::int64_t>(std::abs(a));
    const auto ib = std::bit_cast<std::int64_t>(std::abs(b));
    return static_cast<std::uint64_t>(ia > ib ? ia - ib : ib - ia);
}

} // namespace oracle
