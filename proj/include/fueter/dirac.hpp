#pragma once

/**
 * @file dirac.hpp
 * @brief Left and right Fueter-Dirac operators by central differences.
 *
 *     D_left  f = df/dt + i df/dx + j df/dy + k df/dz
 *     D_right f = df/dt + (df/dx) i + (df/dy) j + (df/dz) k
 *
 * Lifted solutions satisfy D f = -2 v / r on both sides. The analytic route
 * assembles the same quantity from F' through the Cauchy-Riemann partials
 * and serves as the oracle for the finite differences.
 */

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "fueter/error.hpp"
#include "fueter/lift.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/seed.hpp"

namespace fueter {

/// A quaternion-valued field together with the region where it may be evaluated.
class quaternion_field {
public:
    using eval_fn = std::function<quaternion(const quaternion&)>;
    using region_fn = std::function<bool(const quaternion&)>;

    explicit quaternion_field(eval_fn eval, region_fn admissible = [](const quaternion&) { return true; })
        : eval_(std::move(eval)), admissible_(std::move(admissible)) {}

    /// Lifted solution; admissible away from the seed's poles.
    static quaternion_field from_lift(const lifted_solution& f) {
        return quaternion_field{[f](const quaternion& q) { return f(q); },
                                [f](const quaternion& q) {
                                    try {
                                        (void)f.seed().eval({q.t, q.imag_norm()});
                                        return true;
                                    } catch (const near_pole&) {
                                        return false;
                                    }
                                }};
    }

    [[nodiscard]] bool admissible(const quaternion& q) const { return admissible_(q); }

    quaternion operator()(const quaternion& q) const {
        if (!admissible_(q)) {
            throw region_violation("field evaluated outside its admissible region");
        }
        return eval_(q);
    }

private:
    eval_fn eval_;
    region_fn admissible_;
};

enum class side { left, right };

inline const char* to_string(side s) { return s == side::left ? "left" : "right"; }

struct stencil_spec {
    int order = 4;   // 2 or 4
    double h = 1e-2;
};

inline stencil_spec default_stencil(const quaternion& q) { return {4, 1e-2 * (1.0 + q.norm())}; }

inline void validate(const stencil_spec& s, const quaternion& q) {
    if (s.order != 2 && s.order != 4) {
        throw precondition_violation("stencil order must be 2 or 4");
    }
    if (!(s.h > 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + q.norm()))) {
        throw precondition_violation("stencil step too small for binary64");
    }
}

inline const std::array<quaternion, 4>& coordinate_basis() {
    static const std::array<quaternion, 4> basis{quaternion{1.0}, quaternion::i(), quaternion::j(),
                                                 quaternion::k()};
    return basis;
}

/// Central difference of a generic callable along direction `dir`.
template <typename Fn>
auto central_difference(const Fn& fn, const quaternion& q, const quaternion& dir, const stencil_spec& s) {
    const double h = s.h;
    if (s.order == 2) {
        return (fn(q + h * dir) - fn(q - h * dir)) / (2.0 * h);
    }
    return (fn(q - 2.0 * h * dir) - 8.0 * fn(q - h * dir) + 8.0 * fn(q + h * dir) - fn(q + 2.0 * h * dir)) /
           (12.0 * h);
}

/// (df/dt, df/dx, df/dy, df/dz) by central differences.
inline std::array<quaternion, 4> partials(const quaternion_field& f, const quaternion& q, const stencil_spec& s) {
    validate(s, q);
    std::array<quaternion, 4> out;
    try {
        for (std::size_t m = 0; m < 4; ++m) {
            out[m] = central_difference(f, q, coordinate_basis()[m], s);
        }
    } catch (const near_pole& e) {
        throw region_violation(std::string("stencil touches a pole: ") + e.what());
    }
    return out;
}

inline quaternion assemble(const std::array<quaternion, 4>& d, side which) {
    const auto& e = coordinate_basis();
    quaternion acc = d[0];
    for (std::size_t m = 1; m < 4; ++m) {
        acc += which == side::left ? e[m] * d[m] : d[m] * e[m];
    }
    return acc;
}

inline quaternion apply_left(const quaternion_field& f, const quaternion& q, const stencil_spec& s) {
    return assemble(partials(f, q, s), side::left);
}

inline quaternion apply_right(const quaternion_field& f, const quaternion& q, const stencil_spec& s) {
    return assemble(partials(f, q, s), side::right);
}

inline quaternion apply(const quaternion_field& f, const quaternion& q, const stencil_spec& s, side which) {
    return assemble(partials(f, q, s), which);
}

/// Closest distance to the real axis at which -2v/r is evaluated.
inline constexpr double eps_rhs = 0.05;

inline quaternion rhs_from_v(double v, double r) {
    if (r <= eps_rhs) {
        throw too_close_to_axis("right-hand side -2v/r is not evaluated this close to the real axis");
    }
    return quaternion{-2.0 * v / r};
}

inline quaternion rhs(const lifted_solution& f, const quaternion& q) {
    const double r = q.imag_norm();
    if (r <= eps_rhs) {
        throw too_close_to_axis("right-hand side -2v/r is not evaluated this close to the real axis");
    }
    return rhs_from_v(f.radial(q.t, r).v, r);
}

/// |D_side f - (-2 v / r)| for a field that declares its own v.
template <typename VFn>
double residual(const quaternion_field& f, const VFn& v_of, const quaternion& q, const stencil_spec& s, side which) {
    const quaternion target = rhs_from_v(v_of(q), q.imag_norm());
    return norm(apply(f, q, s, which) - target);
}

inline double residual(const lifted_solution& f, const quaternion& q, const stencil_spec& s, side which) {
    const quaternion target = rhs(f, q);
    return norm(apply(quaternion_field::from_lift(f), q, s, which) - target);
}

/// Partials of (u, v) in (t, r), exact up to roundoff, from F'.
struct radial_partials {
    double u_t = 0.0;
    double u_r = 0.0;
    double v_t = 0.0;
    double v_r = 0.0;
};

inline radial_partials analytic_partials_from_derivative(const rational_seed& derivative_seed, double t, double r) {
    const auto d = derivative_seed.eval({t, r});
    return {d.real(), -d.imag(), d.imag(), d.real()};
}

inline radial_partials analytic_partials(const rational_seed& f, double t, double r) {
    return analytic_partials_from_derivative(derivative(f), t, r);
}

inline radial_partials analytic_partials(const lifted_solution& f, double t, double r) {
    return analytic_partials_from_derivative(f.derivative_seed(), t, r);
}

/// D f assembled from the radial identity
///     D(u + iota v) = (u_t - v_r) + iota (v_t + u_r) - 2 v / r,
/// identical for the left and right operators.
inline quaternion apply_analytic(const lifted_solution& f, const quaternion& q) {
    const auto d = decompose(q);
    const auto p = analytic_partials(f, d.t, d.r);
    const auto w = f.radial(d.t, d.r);
    return quaternion{p.u_t - p.v_r - 2.0 * w.v / d.r} + (p.v_t + p.u_r) * d.iota;
}

struct convergence_result {
    double slope = std::numeric_limits<double>::quiet_NaN(); // NaN when `exact`
    bool exact = false; // every error at the roundoff floor
    std::vector<double> errors;
};

/// Errors at or below this (relative to 1 + |reference|) are treated as roundoff.
inline constexpr double roundoff_floor = 1e-11;

/// Least-squares slope of log(error) against log(h) over a decreasing step list.
inline convergence_result convergence_order(const quaternion_field& f, const quaternion& q, side which,
                                            std::span<const double> h_list, int order,
                                            const quaternion& reference) {
    if (h_list.size() < 3) {
        throw precondition_violation("convergence study needs at least three steps");
    }
    convergence_result out;
    const double floor = roundoff_floor * (1.0 + reference.norm());
    bool all_floor = true;
    for (double h : h_list) {
        const double e = norm(apply(f, q, {order, h}, which) - reference);
        out.errors.push_back(e);
        all_floor = all_floor && e <= floor;
    }
    if (all_floor) {
        out.exact = true;
        return out;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(h_list.size());
    for (std::size_t k = 0; k < h_list.size(); ++k) {
        const double lx = std::log(h_list[k]);
        const double ly = std::log(std::max(out.errors[k], std::numeric_limits<double>::min()));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

} // namespace fueter
