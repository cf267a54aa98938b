#pragma once

/**
 * @file verify.hpp
 * @brief The property-verification suite behind `fueter verify`.
 *
 * One property_report per check; every randomized check draws from a sampler
 * seeded with the caller's rng seed, so reports are reproducible byte for
 * byte.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fueter/cr_chart.hpp"
#include "fueter/dirac.hpp"
#include "fueter/error.hpp"
#include "fueter/lift.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/sampling.hpp"
#include "fueter/seed.hpp"
#include "fueter/seed_ring.hpp"
#include "fueter/singular_scan.hpp"

namespace fueter {

struct offender {
    quaternion point;
    double value = 0.0;
};

struct property_report {
    std::string property;
    std::size_t points_tested = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<offender> details; // worst first
    nlohmann::json summary = nlohmann::json::object();
    std::optional<std::string> error;
};

/// Tracks the maximum of a residual and keeps the `keep` worst points.
class worst_tracker {
public:
    explicit worst_tracker(std::size_t keep = 3) : keep_(keep) {}

    void add(const quaternion& q, double value) {
        ++count_;
        if (std::isnan(value)) {
            value = std::numeric_limits<double>::infinity();
        }
        max_ = std::max(max_, value);
        worst_.push_back({q, value});
        std::stable_sort(worst_.begin(), worst_.end(),
                         [](const offender& a, const offender& b) { return a.value > b.value; });
        if (worst_.size() > keep_) {
            worst_.pop_back();
        }
    }

    [[nodiscard]] std::size_t count() const { return count_; }

    void fill(property_report& r, double tolerance) const {
        r.points_tested = count_;
        r.max_residual = max_;
        r.tolerance = tolerance;
        r.pass = max_ <= tolerance;
        r.details = worst_;
    }

private:
    std::size_t keep_;
    std::size_t count_ = 0;
    double max_ = 0.0;
    std::vector<offender> worst_;
};

struct verify_options {
    std::optional<double> tol;      // overrides the finite-difference residual tolerance
    int stencil_order = 4;
    std::optional<double> h;        // fixed step; default 1e-2 (1 + |q|)
    std::uint64_t rng_seed = 0;
    std::size_t points = 100;
    box4 box{};
    std::size_t automorphisms = 10;
};

namespace tolerances {
inline constexpr double eq1 = 1e-6;
inline constexpr double chirality = 1e-6;
inline constexpr double radial = 1e-12;
inline constexpr double equivariance = 1e-9;
inline constexpr double ring = 1e-11;
inline constexpr double inverse = 1e-10;
inline constexpr double inverse_min_value = 1e-3;
inline constexpr double chart_fd = 1e-6;
inline constexpr double dichotomy = 1.0 - dichotomy_threshold;
} // namespace tolerances

namespace detail {

inline stencil_spec stencil_for(const verify_options& opt, const quaternion& q) {
    return {opt.stencil_order, opt.h.value_or(1e-2 * (1.0 + q.norm()))};
}

inline property_report guarded(const std::string& id, const std::function<void(property_report&)>& body) {
    property_report r;
    r.property = id;
    try {
        body(r);
    } catch (const error& e) {
        r.pass = false;
        r.error = std::string(e.name()) + ": " + e.what();
    }
    return r;
}

/// Off-axis critical points of F (F' = 0, Im > eps_rhs) mapped to q = t + r * direction.
inline std::vector<quaternion> critical_points(const lifted_solution& f, sampler& rng) {
    std::vector<quaternion> out;
    for (const auto& z : complex_roots(f.derivative_seed().num())) {
        const double r = std::abs(z.imag());
        if (r > eps_rhs) {
            out.push_back(quaternion{z.real()} + r * rng.unit_imaginary());
        }
    }
    return out;
}

} // namespace detail

inline std::vector<property_report> run_verify_suite(const rational_seed& seed, const verify_options& opt = {}) {
    std::vector<property_report> reports;
    const lifted_solution f{seed};
    const admissibility adm{opt.box};
    const double eq1_tol = opt.tol.value_or(tolerances::eq1);
    const double chirality_tol = opt.tol.value_or(tolerances::chirality);
    const double chart_tol = opt.tol.value_or(tolerances::chart_fd);

    // eq1-left, eq1-right and chirality-gap share one set of partials per point
    {
        property_report left, right, gap;
        left.property = "eq1-left";
        right.property = "eq1-right";
        gap.property = "chirality-gap";
        try {
            sampler rng{opt.rng_seed};
            const auto pts = sample_admissible(rng, seed, opt.points, adm);
            const auto field = quaternion_field::from_lift(f);
            worst_tracker wl, wr, wg;
            for (const auto& q : pts) {
                const auto d = partials(field, q, detail::stencil_for(opt, q));
                const quaternion target = rhs(f, q);
                const quaternion dl = assemble(d, side::left);
                const quaternion dr = assemble(d, side::right);
                wl.add(q, norm(dl - target));
                wr.add(q, norm(dr - target));
                wg.add(q, norm(dl - dr));
            }
            wl.fill(left, eq1_tol);
            wr.fill(right, eq1_tol);
            wg.fill(gap, chirality_tol);
        } catch (const error& e) {
            for (auto* r : {&left, &right, &gap}) {
                r->pass = false;
                r->error = std::string(e.name()) + ": " + e.what();
            }
        }
        reports.push_back(left);
        reports.push_back(right);
        reports.push_back(gap);
    }

    reports.push_back(detail::guarded("p2-radial", [&](property_report& r) {
        sampler rng{opt.rng_seed + 1};
        const auto pole_list = poles(seed);
        worst_tracker w;
        std::size_t attempts = 0;
        while (w.count() < opt.points) {
            if (++attempts > 1000 * (opt.points + 10)) {
                throw precondition_violation("no admissible imaginary points in the box");
            }
            const quaternion q1 = rng.in_box(opt.box.lo, opt.box.hi).imag();
            const double radius = q1.imag_norm();
            if (radius <= adm.min_r || pole_distance(pole_list, {0.0, radius}) <= adm.min_pole_distance) {
                continue;
            }
            const quaternion q2 = automorph(rng.unit_quaternion(), q1);
            w.add(q1, radial_symmetry_residual(f, q1, q2));
        }
        w.fill(r, tolerances::radial);
    }));

    reports.push_back(detail::guarded("p3-equivariance", [&](property_report& r) {
        sampler rng{opt.rng_seed + 2};
        const auto pts = sample_admissible(rng, seed, opt.points, adm);
        worst_tracker w;
        for (const auto& q : pts) {
            const quaternion a = rng.unit_quaternion();
            const double res = equivariance_residual(f, a, q);
            w.add(q, res / residual_scale({norm(f(automorph(a, q))), norm(f(q))}));
        }
        w.fill(r, tolerances::equivariance);
    }));

    reports.push_back(detail::guarded("p4-ring", [&](property_report& r) {
        sampler rng{opt.rng_seed + 3};
        const auto pts = sample_admissible(rng, seed, opt.points, adm);
        // z and z^2 + 1
        const rational_seed partners[] = {rational_seed::identity(), rational_seed{real_poly{1, 0, 1}}};
        worst_tracker w;
        for (const auto& q : pts) {
            double worst = 0.0;
            for (const auto& g : partners) {
                const auto c = product_consistency_residual(seed, g, q);
                worst = std::max({worst, c.product / c.scale, c.sum / c.scale, c.commutator / c.scale});
            }
            w.add(q, worst);
        }
        w.fill(r, tolerances::ring);
    }));

    reports.push_back(detail::guarded("p4-inverse", [&](property_report& r) {
        const lifted_solution inv{localize(seed)};
        sampler rng{opt.rng_seed + 4};
        const auto pts = sample_admissible(rng, seed, opt.points * 4, adm);
        worst_tracker w;
        for (const auto& q : pts) {
            if (w.count() >= opt.points) {
                break;
            }
            if (std::abs(seed.eval({q.t, q.imag_norm()})) <= tolerances::inverse_min_value) {
                continue;
            }
            const quaternion a = inv(q);
            const quaternion b = inverse(f(q));
            w.add(q, norm(a - b) / residual_scale({norm(a), norm(b)}));
        }
        w.fill(r, tolerances::inverse);
    }));

    reports.push_back(detail::guarded("p4star", [&](property_report& r) {
        sampler rng{opt.rng_seed + 5};
        auto pts = sample_admissible(rng, seed, opt.points, adm);
        const auto crit = detail::critical_points(f, rng);
        pts.insert(pts.end(), crit.begin(), crit.end());
        worst_tracker w;
        std::size_t antecedent = 0;
        for (const auto& q : pts) {
            chart_point c;
            try {
                c = to_chart(q);
            } catch (const polar_axis&) {
                continue;
            }
            const auto res = p4_star(chart_partials_analytic(f, c), f, q);
            antecedent += res.antecedent ? 1 : 0;
            w.add(q, res.holds ? 0.0 : 1.0);
        }
        w.fill(r, 0.0);
        r.summary = {{"antecedent_points", antecedent}, {"critical_points", crit.size()}};
    }));

    reports.push_back(detail::guarded("p4starstar", [&](property_report& r) {
        const auto res = p4_star_star(f, opt.rng_seed + 6, 1000, adm);
        r.points_tested = res.points;
        r.max_residual = 1.0 - res.invertible_fraction();
        r.tolerance = tolerances::dichotomy;
        r.pass = res.holds;
        r.summary = {{"constant", res.constant}, {"invertible_fraction", res.invertible_fraction()}};
    }));

    reports.push_back(detail::guarded("p5-dichotomy", [&](property_report& r) {
        r.tolerance = tolerances::dichotomy;
        try {
            const auto res = dichotomy_verdict(seed, opt.rng_seed + 7, 1000, adm);
            r.points_tested = res.points;
            r.max_residual = 1.0 - res.nonsingular_fraction();
            r.pass = r.max_residual <= r.tolerance;
            r.summary = {{"verdict", to_string(res.verdict)}, {"nonsingular_fraction", res.nonsingular_fraction()}};
        } catch (const dichotomy_violation& e) {
            r.max_residual = 1.0;
            r.pass = false;
            r.summary = {{"verdict", "DichotomyViolation"}};
            r.error = std::string(e.name()) + ": " + e.what();
        }
    }));

    reports.push_back(detail::guarded("p6-cr", [&](property_report& r) {
        sampler rng{opt.rng_seed + 8};
        const auto pts = sample_admissible(rng, seed, opt.points, adm);
        worst_tracker w;
        double analytic_max = 0.0;
        double fd_inverse_factor_max = 0.0;
        for (const auto& q : pts) {
            chart_point c;
            try {
                c = to_chart(q);
                const auto fd = chart_partials_fd(f, c);
                analytic_max = std::max(analytic_max, cr_residuals(chart_partials_analytic(f, c)).max_abs());
                fd_inverse_factor_max =
                    std::max(fd_inverse_factor_max, cr_residuals(fd, angular_factor::inverse).max_abs());
                w.add(q, cr_residuals(fd).max_abs());
            } catch (const polar_axis&) {
            } catch (const region_violation&) {
            }
        }
        w.fill(r, chart_tol);
        r.pass = r.pass && analytic_max == 0.0;
        r.summary = {{"analytic_max", analytic_max}, {"fd_max_inverse_sin_factor", fd_inverse_factor_max}};
    }));

    reports.push_back(detail::guarded("p1-components", [&](property_report& r) {
        const auto rep = component_report(seed, opt.rng_seed);
        const bool simple = std::all_of(rep.radii.multiplicity.begin(), rep.radii.multiplicity.end(),
                                        [](int m) { return m == 1; });
        r.points_tested = ray_count;
        r.max_residual = rep.max_radius_deviation;
        r.tolerance = ray_match_tolerance(simple ? 1 : 2);
        r.pass = rep.verified_by_sampling;
        r.summary = {{"n", rep.n},
                     {"radii", rep.radii.radii},
                     {"multiplicity", rep.radii.multiplicity},
                     {"verified_by_sampling", rep.verified_by_sampling}};
    }));

    reports.push_back(detail::guarded("p1.1-invariance", [&](property_report& r) {
        sampler rng{opt.rng_seed + 9};
        std::vector<quaternion> autos(opt.automorphisms);
        for (auto& a : autos) {
            a = rng.unit_quaternion();
        }
        const bool ok = invariance_check(seed, autos, opt.rng_seed);
        r.points_tested = autos.size();
        r.max_residual = ok ? 0.0 : 1.0;
        r.tolerance = 0.0;
        r.pass = ok;
        r.summary = {{"n", component_count(seed)}};
    }));

    return reports;
}

inline nlohmann::json to_json(const property_report& r) {
    nlohmann::json details = nlohmann::json::array();
    for (const auto& d : r.details) {
        details.push_back({{"point", {d.point.t, d.point.x, d.point.y, d.point.z}}, {"value", d.value}});
    }
    nlohmann::json j = {{"property", r.property},     {"points_tested", r.points_tested},
                        {"max_residual", r.max_residual}, {"tolerance", r.tolerance},
                        {"pass", r.pass},             {"details", details}};
    if (!r.summary.empty()) {
        j["summary"] = r.summary;
    }
    if (r.error) {
        j["error"] = *r.error;
    }
    return j;
}

} // namespace fueter
