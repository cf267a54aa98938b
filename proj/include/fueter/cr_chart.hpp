#pragma once

/**
 * @file cr_chart.hpp
 * @brief The four chiral Cauchy-Riemann equations in the (t, r, alpha, beta)
 * chart and the two invertibility implications attached to them.
 *
 *     e3 = u_t - v_r
 *     e4 = u_r + v_t
 *     e5 = v_alpha (sin beta)^-2 + u_beta
 *     e6 = u_alpha (sin beta)^-2 - v_beta
 *
 * The angular factor can be switched to (sin beta)^-1; both vanish on lifts.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "fueter/dirac.hpp"
#include "fueter/error.hpp"
#include "fueter/lift.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/sampling.hpp"
#include "fueter/seed_ring.hpp"
#include "fueter/singular_scan.hpp"

namespace fueter {

enum class partials_provenance { analytic, finite_difference };

struct chart_partials {
    double u_t = 0.0, u_r = 0.0, u_alpha = 0.0, u_beta = 0.0;
    double v_t = 0.0, v_r = 0.0, v_alpha = 0.0, v_beta = 0.0;
    chart_point point;
    partials_provenance provenance = partials_provenance::analytic;

    chart_partials& operator+=(const chart_partials& o) {
        u_t += o.u_t; u_r += o.u_r; u_alpha += o.u_alpha; u_beta += o.u_beta;
        v_t += o.v_t; v_r += o.v_r; v_alpha += o.v_alpha; v_beta += o.v_beta;
        return *this;
    }
};

inline constexpr double h_chart = 1e-3;

/// Angular partials are identically zero for a lift; the rest come from F'.
inline chart_partials chart_partials_analytic(const lifted_solution& f, const chart_point& c) {
    const auto p = analytic_partials(f, c.t, c.r);
    chart_partials out;
    out.u_t = p.u_t;
    out.u_r = p.u_r;
    out.v_t = p.v_t;
    out.v_r = p.v_r;
    out.point = c;
    out.provenance = partials_provenance::analytic;
    return out;
}

/// Central differences (order 2 or 4) of a chart function c -> (u, v) in all four chart variables.
template <typename UV>
chart_partials chart_partials_fd(const UV& uv, const chart_point& c, const stencil_spec& s = {4, h_chart}) {
    if (s.order != 2 && s.order != 4) {
        throw precondition_violation("stencil order must be 2 or 4");
    }
    const double reach = s.order == 4 ? 2.0 * s.h : s.h;
    if (c.r - reach <= eps_axis || c.beta - reach <= 0.0 || c.beta + reach >= std::numbers::pi) {
        throw region_violation("chart stencil leaves the chart domain");
    }
    auto shifted = [&](int var, double delta) {
        chart_point p = c;
        switch (var) {
        case 0: p.t += delta; break;
        case 1: p.r += delta; break;
        case 2: p.alpha += delta; break;
        default: p.beta += delta; break;
        }
        return uv(p);
    };
    auto diff = [&](int var) -> std::array<double, 2> {
        const double h = s.h;
        if (s.order == 2) {
            const radial_values a = shifted(var, h);
            const radial_values b = shifted(var, -h);
            return {(a.u - b.u) / (2.0 * h), (a.v - b.v) / (2.0 * h)};
        }
        const radial_values m2 = shifted(var, -2.0 * h);
        const radial_values m1 = shifted(var, -h);
        const radial_values p1 = shifted(var, h);
        const radial_values p2 = shifted(var, 2.0 * h);
        return {(m2.u - 8.0 * m1.u + 8.0 * p1.u - p2.u) / (12.0 * h),
                (m2.v - 8.0 * m1.v + 8.0 * p1.v - p2.v) / (12.0 * h)};
    };
    chart_partials out;
    const auto dt = diff(0);
    const auto dr = diff(1);
    const auto da = diff(2);
    const auto db = diff(3);
    out.u_t = dt[0]; out.v_t = dt[1];
    out.u_r = dr[0]; out.v_r = dr[1];
    out.u_alpha = da[0]; out.v_alpha = da[1];
    out.u_beta = db[0]; out.v_beta = db[1];
    out.point = c;
    out.provenance = partials_provenance::finite_difference;
    return out;
}

/// FD partials of a lift: (u, v) are recovered from f(q) by projection onto (1, iota_q).
inline chart_partials chart_partials_fd(const lifted_solution& f, const chart_point& c,
                                        const stencil_spec& s = {4, h_chart}) {
    try {
        return chart_partials_fd(
            [&f](const chart_point& p) {
                const quaternion q = from_chart(p);
                return project(f(q), q);
            },
            c, s);
    } catch (const near_pole& e) {
        throw region_violation(e.what());
    }
}

enum class angular_factor { inverse_square, inverse };

struct cr_residual {
    double e3 = 0.0, e4 = 0.0, e5 = 0.0, e6 = 0.0;
    [[nodiscard]] double max_abs() const {
        return std::max({std::abs(e3), std::abs(e4), std::abs(e5), std::abs(e6)});
    }
};

inline cr_residual cr_residuals(const chart_partials& p, angular_factor factor = angular_factor::inverse_square) {
    const double sb = std::sin(p.point.beta);
    if (sb <= 1e-6) {
        throw polar_axis("sin(beta) vanishes at the chart point");
    }
    const double w = factor == angular_factor::inverse_square ? 1.0 / (sb * sb) : 1.0 / sb;
    return {p.u_t - p.v_r, p.u_r + p.v_t, p.v_alpha * w + p.u_beta, p.u_alpha * w - p.v_beta};
}

struct p4_star_result {
    bool antecedent = false;
    double det = 0.0;
    bool holds = true;
};

/// If all (t, r) partials vanish at q, the FD Jacobian determinant must vanish too.
inline p4_star_result p4_star(const chart_partials& p, const lifted_solution& f, const quaternion& q) {
    p4_star_result out;
    out.antecedent = std::abs(p.u_t) <= eps_zero && std::abs(p.u_r) <= eps_zero && std::abs(p.v_t) <= eps_zero &&
                     std::abs(p.v_r) <= eps_zero;
    if (!out.antecedent) {
        return out;
    }
    const auto sample = jacobian(f, q, default_stencil(q));
    out.det = sample.det_fd;
    out.holds = std::abs(sample.det_fd) <= 1e-6 * residual_scale({std::abs(sample.det_analytic)});
    return out;
}

struct p4_star_star_result {
    bool holds = true;
    bool constant = false;
    std::size_t points = 0;
    std::size_t invertible = 0;
    [[nodiscard]] double invertible_fraction() const {
        return points == 0 ? 1.0 : static_cast<double>(invertible) / static_cast<double>(points);
    }
};

/// The angular antecedent holds for every lift, so the consequent is checked:
/// constant, or |det J| (finite differences) > eps_zero on >= 99% of samples.
inline p4_star_star_result p4_star_star(const lifted_solution& f, std::uint64_t rng_seed = 0,
                                        std::size_t points = 1000, const admissibility& adm = {}) {
    p4_star_star_result out;
    if (classify(f.seed()) == seed_class::degenerate) {
        out.constant = true;
        return out;
    }
    sampler rng{rng_seed};
    const auto pts = sample_admissible(rng, f.seed(), points, adm);
    const auto field = quaternion_field::from_lift(f);
    out.points = pts.size();
    for (const auto& q : pts) {
        if (std::abs(jacobian(field, q, default_stencil(q)).det_fd) > eps_zero) {
            ++out.invertible;
        }
    }
    out.holds = out.invertible_fraction() >= dichotomy_threshold;
    return out;
}

} // namespace fueter
