#pragma once

/**
 * @file quaternion.hpp
 * @brief Quaternion arithmetic in binary64, the imaginary-part decomposition
 * q = t + r*iota, the (t, r, alpha, beta) spherical chart, and inner
 * automorphisms q -> a q a^-1.
 *
 * Conventions:
 *   i^2 = j^2 = k^2 = ijk = -1
 *   x = r sin(beta) cos(alpha), y = r sin(beta) sin(alpha), z = r cos(beta)
 *   (beta measured from the +k axis, alpha in [0, 2pi)).
 */

#include <cmath>
#include <numbers>
#include <ostream>

#include "fueter/error.hpp"

namespace fueter {

/// Below this imaginary norm a point is treated as lying on the real axis.
inline constexpr double eps_axis = 1e-12;
/// Chart points closer than this (in beta) to the poles of the sphere are rejected.
inline constexpr double eps_polar = 1e-9;

struct quaternion {
    double t = 0.0; // scalar part
    double x = 0.0; // i
    double y = 0.0; // j
    double z = 0.0; // k

    constexpr quaternion() = default;
    constexpr quaternion(double t_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : t{t_}, x{x_}, y{y_}, z{z_} {}

    static constexpr quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const quaternion&) const = default;

    constexpr double operator[](int idx) const {
        switch (idx) {
        case 0: return t;
        case 1: return x;
        case 2: return y;
        default: return z;
        }
    }

    [[nodiscard]] constexpr quaternion imag() const { return {0.0, x, y, z}; }
    [[nodiscard]] constexpr quaternion conj() const { return {t, -x, -y, -z}; }

    [[nodiscard]] constexpr double norm_sq() const { return t * t + x * x + y * y + z * z; }
    [[nodiscard]] double norm() const { return std::sqrt(norm_sq()); }
    [[nodiscard]] double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

    constexpr quaternion& operator+=(const quaternion& o) {
        t += o.t; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr quaternion& operator-=(const quaternion& o) {
        t -= o.t; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr quaternion& operator*=(double s) {
        t *= s; x *= s; y *= s; z *= s;
        return *this;
    }
};

constexpr quaternion operator-(const quaternion& q) { return {-q.t, -q.x, -q.y, -q.z}; }
constexpr quaternion operator+(quaternion a, const quaternion& b) { return a += b; }
constexpr quaternion operator-(quaternion a, const quaternion& b) { return a -= b; }
constexpr quaternion operator*(quaternion a, double s) { return a *= s; }
constexpr quaternion operator*(double s, quaternion a) { return a *= s; }
constexpr quaternion operator/(const quaternion& a, double s) {
    return {a.t / s, a.x / s, a.y / s, a.z / s};
}

// Hamilton product.
constexpr quaternion operator*(const quaternion& a, const quaternion& b) {
    return {
        a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
        a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
        a.t * b.y + a.y * b.t + a.z * b.x - a.x * b.z,
        a.t * b.z + a.z * b.t + a.x * b.y - a.y * b.x,
    };
}

constexpr quaternion mul(const quaternion& a, const quaternion& b) { return a * b; }

inline double norm(const quaternion& q) { return q.norm(); }

inline std::ostream& operator<<(std::ostream& os, const quaternion& q) {
    return os << '(' << q.t << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

/// Euclidean inner product on R^4.
constexpr double dot(const quaternion& a, const quaternion& b) {
    return a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// q^-1 = conj(q) / |q|^2.
inline quaternion inverse(const quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) {
        throw zero_quaternion("inverse of the zero quaternion");
    }
    return q.conj() / n2;
}

/// q = t + r*iota with r = |Im q| and iota the unit imaginary direction.
struct imaginary_decomposition {
    double t = 0.0;
    double r = 0.0;
    quaternion iota;

    [[nodiscard]] constexpr quaternion recompose() const { return quaternion{t} + r * iota; }
};

inline imaginary_decomposition decompose(const quaternion& q) {
    const double r = q.imag_norm();
    if (r <= eps_axis) {
        throw on_real_axis("imaginary part vanishes; iota is undefined");
    }
    return {q.t, r, q.imag() / r};
}

inline quaternion recompose(double t, double r, const quaternion& iota) {
    return quaternion{t} + r * iota;
}

struct chart_point {
    double t = 0.0;
    double r = 1.0;
    double alpha = 0.0;
    double beta = std::numbers::pi / 2;
};

inline quaternion from_chart(const chart_point& c) {
    const double sb = std::sin(c.beta);
    return {c.t, c.r * sb * std::cos(c.alpha), c.r * sb * std::sin(c.alpha), c.r * std::cos(c.beta)};
}

inline chart_point to_chart(const quaternion& q) {
    const double r = q.imag_norm();
    if (r <= eps_axis) {
        throw on_real_axis("chart undefined on the real axis");
    }
    const double rho = std::hypot(q.x, q.y);
    const double beta = std::atan2(rho, q.z);
    if (beta < eps_polar || std::numbers::pi - beta < eps_polar) {
        throw polar_axis("chart undefined on the polar (k) axis");
    }
    double alpha = std::atan2(q.y, q.x);
    if (alpha < 0.0) {
        alpha += 2.0 * std::numbers::pi;
    }
    if (alpha >= 2.0 * std::numbers::pi) {
        alpha = 0.0;
    }
    return {q.t, r, alpha, beta};
}

inline constexpr double unit_tolerance = 1e-12;

/// a q a^-1 for unit a. The scalar part of q is carried over untouched; only
/// the imaginary part is rotated.
inline quaternion automorph(const quaternion& a, const quaternion& q) {
    if (std::abs(a.norm() - 1.0) > unit_tolerance) {
        throw not_unit("automorphism requires a unit quaternion");
    }
    const quaternion rotated = a * q.imag() * a.conj();
    return {q.t, rotated.x, rotated.y, rotated.z};
}

} // namespace fueter
