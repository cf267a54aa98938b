#pragma once

// Reproducible random sampling. std::mt19937_64 has a fully specified output
// sequence; the conversions to doubles below are done by hand because the
// standard distributions are implementation-defined.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fueter/error.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/seed.hpp"

namespace fueter {

class sampler {
public:
    explicit sampler(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return engine_(); }

    /// Uniform unit quaternion (Shoemake).
    quaternion unit_quaternion() {
        const double u1 = uniform();
        const double u2 = 2.0 * std::numbers::pi * uniform();
        const double u3 = 2.0 * std::numbers::pi * uniform();
        const double a = std::sqrt(1.0 - u1);
        const double b = std::sqrt(u1);
        quaternion q{a * std::sin(u2), a * std::cos(u2), b * std::sin(u3), b * std::cos(u3)};
        return q / q.norm();
    }

    /// Uniform direction on the unit sphere of the imaginary 3-space.
    quaternion unit_imaginary() {
        const double zc = uniform(-1.0, 1.0);
        const double phi = 2.0 * std::numbers::pi * uniform();
        const double s = std::sqrt(1.0 - zc * zc);
        quaternion d{0.0, s * std::cos(phi), s * std::sin(phi), zc};
        return d / d.norm();
    }

    quaternion in_box(const std::array<double, 4>& lo, const std::array<double, 4>& hi) {
        return {uniform(lo[0], hi[0]), uniform(lo[1], hi[1]), uniform(lo[2], hi[2]), uniform(lo[3], hi[3])};
    }

private:
    std::mt19937_64 engine_;
};

/// Axis-aligned box in R^4 (t, x, y, z).
struct box4 {
    std::array<double, 4> lo{-2.0, -2.0, -2.0, -2.0};
    std::array<double, 4> hi{2.0, 2.0, 2.0, 2.0};

    static box4 uniform(double lo, double hi) { return {{lo, lo, lo, lo}, {hi, hi, hi, hi}}; }
};

/// Acceptance region for random test points.
struct admissibility {
    box4 box{};
    double min_r = 0.1;          // distance from the real axis
    double min_pole_distance = 0.2; // in the z = t + i r plane
};

/// Rejection-sample `count` points of the box that satisfy the admissibility constraints.
inline std::vector<quaternion> sample_admissible(sampler& rng, const rational_seed& seed, std::size_t count,
                                                 const admissibility& adm = {}) {
    const auto pole_list = poles(seed);
    std::vector<quaternion> out;
    out.reserve(count);
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 10)) {
            throw precondition_violation("admissible region is (nearly) empty");
        }
        const quaternion q = rng.in_box(adm.box.lo, adm.box.hi);
        const double r = q.imag_norm();
        if (r <= adm.min_r) {
            continue;
        }
        if (pole_distance(pole_list, {q.t, r}) <= adm.min_pole_distance) {
            continue;
        }
        out.push_back(q);
    }
    return out;
}

} // namespace fueter
