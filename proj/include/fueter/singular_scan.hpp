#pragma once

/**
 * @file singular_scan.hpp
 * @brief Jacobians of the 4D map q -> f(q), the singular set, and the
 * component count of the imaginary slice.
 *
 * For a lift f = u + iota v of a seed F, the Jacobian splits into the
 * Cauchy-Riemann block of F' in (t, r) and (v/r) times the identity on the
 * two tangential directions, so
 *
 *     det J = |F'(t + i r)|^2 (v / r)^2.
 *
 * The finite-difference Jacobian is the oracle for this closed form. A point
 * is singular when |det J| <= eps_zero * scale. The loci are
 *   CriticalSeed  F' = 0
 *   RealLocus     v = 0 (v/r -> Re F'(t) on the real axis)
 *   Zero          u = v = 0 on the singular set
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fueter/dirac.hpp"
#include "fueter/error.hpp"
#include "fueter/lift.hpp"
#include "fueter/parallel.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/sampling.hpp"
#include "fueter/seed.hpp"
#include "fueter/seed_ring.hpp"

namespace fueter {

enum class locus_kind { regular, critical_seed, real_locus, zero };

inline const char* to_string(locus_kind k) {
    switch (k) {
    case locus_kind::regular: return "Regular";
    case locus_kind::critical_seed: return "CriticalSeed";
    case locus_kind::real_locus: return "RealLocus";
    case locus_kind::zero: return "Zero";
    }
    return "?";
}

struct jacobian_sample {
    quaternion point;
    Eigen::Matrix4d matrix = Eigen::Matrix4d::Zero(); // matrix(i, m) = d f_i / d coordinate_m
    double det_fd = 0.0;
    double det_analytic = std::numeric_limits<double>::quiet_NaN();
    locus_kind locus = locus_kind::regular;
    double u = std::numeric_limits<double>::quiet_NaN();
    double v = std::numeric_limits<double>::quiet_NaN();
    bool singular = false;
    bool on_real_locus = false;
    bool on_zero_set = false;
    bool seed_critical = false;
    // D f - (-2v/r) from the same partials; NaN within eps_rhs of the real axis
    double residual_left = std::numeric_limits<double>::quiet_NaN();
    double residual_right = std::numeric_limits<double>::quiet_NaN();
};

inline Eigen::Matrix4d jacobian_matrix(const std::array<quaternion, 4>& d) {
    Eigen::Matrix4d m;
    for (int col = 0; col < 4; ++col) {
        for (int row = 0; row < 4; ++row) {
            m(row, col) = d[static_cast<std::size_t>(col)][row];
        }
    }
    return m;
}

/// Finite-difference Jacobian of an arbitrary field.
inline jacobian_sample jacobian(const quaternion_field& f, const quaternion& q, const stencil_spec& s) {
    jacobian_sample out;
    out.point = q;
    out.matrix = jacobian_matrix(partials(f, q, s));
    out.det_fd = out.matrix.determinant();
    return out;
}

inline double jacobian_det_analytic(const lifted_solution& f, const quaternion& q) {
    const auto d = decompose(q);
    const double fp = std::abs(f.derivative_seed().eval({d.t, d.r}));
    const double v_over_r = f.radial(d.t, d.r).v / d.r;
    return fp * fp * v_over_r * v_over_r;
}

inline double jacobian_det_analytic(const rational_seed& seed, const quaternion& q) {
    return jacobian_det_analytic(lifted_solution{seed}, q);
}

namespace detail {

/// v/r, continued to Re F'(t) on the real axis.
inline double v_over_r(const lifted_solution& f, double t, double r) {
    if (r <= eps_axis) {
        return f.derivative_seed().eval({t, 0.0}).real();
    }
    return f.radial(t, r).v / r;
}

inline void classify(const lifted_solution& f, jacobian_sample& s) {
    const double r = s.point.imag_norm();
    const double t = s.point.t;
    const auto w = f.radial(t, r);
    const double fp = std::abs(f.derivative_seed().eval({t, r}));
    const double vr = detail::v_over_r(f, t, r);
    s.u = w.u;
    s.v = w.v;
    s.det_analytic = fp * fp * vr * vr;
    s.seed_critical = fp <= eps_zero;
    s.on_real_locus = r > eps_axis ? std::abs(w.v) <= eps_zero : std::abs(vr) <= eps_zero;
    s.singular = std::abs(s.det_analytic) <= eps_zero * (1.0 + std::abs(s.det_analytic));
    s.on_zero_set = std::abs(w.u) + std::abs(w.v) <= eps_zero && s.on_real_locus;
    if (s.on_zero_set) {
        s.locus = locus_kind::zero;
    } else if (s.on_real_locus) {
        s.locus = locus_kind::real_locus;
    } else if (s.seed_critical) {
        s.locus = locus_kind::critical_seed;
    } else {
        s.locus = locus_kind::regular;
    }
}

} // namespace detail

/// FD Jacobian of a lift plus the closed-form determinant, locus labels and
/// the Dirac residuals built from the same partials.
inline jacobian_sample jacobian(const lifted_solution& f, const quaternion& q, const stencil_spec& s) {
    const auto field = quaternion_field::from_lift(f);
    const auto d = partials(field, q, s);
    jacobian_sample out;
    out.point = q;
    out.matrix = jacobian_matrix(d);
    out.det_fd = out.matrix.determinant();
    try {
        detail::classify(f, out);
    } catch (const near_pole& e) {
        throw region_violation(e.what());
    }
    const double r = q.imag_norm();
    if (r > eps_rhs) {
        const quaternion target = rhs_from_v(out.v, r);
        out.residual_left = norm(assemble(d, side::left) - target);
        out.residual_right = norm(assemble(d, side::right) - target);
    }
    return out;
}

struct scan_result {
    std::vector<jacobian_sample> samples; // grid-major order t, x, y, z
    std::size_t skipped = 0;              // inadmissible grid points
};

/// Sample the Jacobian on a res^4 grid over the box. Stencils default to
/// order 4 with h = 1e-2 (1 + |q|) unless `fixed` is given.
inline scan_result scan(const lifted_solution& f, const box4& box, int res,
                        std::optional<stencil_spec> fixed = std::nullopt) {
    if (res < 2) {
        throw precondition_violation("scan resolution must be at least 2 per axis");
    }
    const auto n = static_cast<std::size_t>(res);
    const std::size_t total = n * n * n * n;
    std::vector<std::optional<jacobian_sample>> slots(total);
    auto coord = [&](int axis, std::size_t idx) {
        const auto a = static_cast<std::size_t>(axis);
        return box.lo[a] + (box.hi[a] - box.lo[a]) * static_cast<double>(idx) / static_cast<double>(res - 1);
    };
    parallel_for(total, [&](std::size_t flat) {
        const std::size_t iz = flat % n;
        const std::size_t iy = (flat / n) % n;
        const std::size_t ix = (flat / (n * n)) % n;
        const std::size_t it = flat / (n * n * n);
        const quaternion q{coord(0, it), coord(1, ix), coord(2, iy), coord(3, iz)};
        try {
            slots[flat] = jacobian(f, q, fixed.value_or(default_stencil(q)));
        } catch (const region_violation&) {
        } catch (const near_pole&) {
        }
    });
    scan_result out;
    out.samples.reserve(total);
    for (auto& s : slots) {
        if (s) {
            out.samples.push_back(std::move(*s));
        } else {
            ++out.skipped;
        }
    }
    return out;
}

/// Radial range swept by the ray sampler for a given certified radius list.
inline double ray_extent(const zero_radius_list& radii) {
    const double max_radius = radii.radii.empty() ? 0.0 : radii.radii.back();
    return 1.5 * max_radius + 1.0;
}

inline constexpr std::size_t ray_count = 64;
inline constexpr std::size_t ray_samples = 512;
inline constexpr double ray_start = 0.05;

/// Zeros of |f| along the ray r -> r * direction, r in (ray_start, r_max].
/// Local minima of the sampled |f| are refined by golden-section search and
/// kept when the refined value is negligible against its neighbours.
inline std::vector<double> ray_zero_radii(const lifted_solution& f, const quaternion& direction, double r_max,
                                          std::size_t samples = ray_samples) {
    auto magnitude = [&](double r) {
        try {
            return norm(f(r * direction));
        } catch (const near_pole&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::vector<double> rs(samples);
    std::vector<double> mags(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        rs[k] = ray_start + (r_max - ray_start) * static_cast<double>(k + 1) / static_cast<double>(samples);
        mags[k] = magnitude(rs[k]);
    }
    std::vector<double> found;
    for (std::size_t k = 0; k < samples; ++k) {
        const double m = mags[k];
        if (std::isnan(m)) {
            continue;
        }
        const double left = k > 0 ? mags[k - 1] : std::numeric_limits<double>::infinity();
        const double right = k + 1 < samples ? mags[k + 1] : std::numeric_limits<double>::infinity();
        if (std::isnan(left) || std::isnan(right) || m > left || m > right) {
            continue;
        }
        double a = k > 0 ? rs[k - 1] : ray_start;
        double b = k + 1 < samples ? rs[k + 1] : r_max;
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - phi * (b - a);
        double d = a + phi * (b - a);
        double fc = magnitude(c);
        double fd = magnitude(d);
        for (int iter = 0; iter < 200 && b - a > 1e-14 * (1.0 + b); ++iter) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - phi * (b - a);
                fc = magnitude(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + phi * (b - a);
                fd = magnitude(d);
            }
        }
        const double root = 0.5 * (a + b);
        const double at_root = magnitude(root);
        const double neighbours = (std::isfinite(left) ? left : 0.0) + (std::isfinite(right) ? right : 0.0);
        if (!(at_root <= 1e-6 * neighbours + 1e-300)) {
            continue;
        }
        if (!found.empty() && std::abs(found.back() - root) <= 1e-6) {
            continue;
        }
        found.push_back(root);
    }
    return found;
}

struct component_report_t {
    int n = 1;
    zero_radius_list radii;
    bool verified_by_sampling = false;
    double max_radius_deviation = 0.0; // worst |sampled - certified| over all rays
};

/// Tolerance for matching a sampled zero radius against the certified one.
inline double ray_match_tolerance(int multiplicity) { return multiplicity > 1 ? 1e-6 : 1e-9; }

/// Sampled radii along each direction compared with the certified list.
inline bool rays_agree(const lifted_solution& f, const zero_radius_list& radii, std::span<const quaternion> directions,
                       double* worst_deviation = nullptr) {
    const double r_max = ray_extent(radii);
    bool ok = true;
    double worst = 0.0;
    for (const auto& d : directions) {
        const auto found = ray_zero_radii(f, d, r_max);
        if (found.size() != radii.size()) {
            ok = false;
            worst = std::numeric_limits<double>::infinity();
            continue;
        }
        for (std::size_t k = 0; k < found.size(); ++k) {
            const double dev = std::abs(found[k] - radii.radii[k]);
            worst = std::max(worst, dev);
            ok = ok && dev <= ray_match_tolerance(radii.multiplicity[k]);
        }
    }
    if (worst_deviation) {
        *worst_deviation = worst;
    }
    return ok;
}

inline std::vector<quaternion> ray_directions(std::uint64_t rng_seed = 0, std::size_t count = ray_count) {
    sampler rng{rng_seed};
    std::vector<quaternion> out(count);
    for (auto& d : out) {
        d = rng.unit_imaginary();
    }
    return out;
}

inline component_report_t component_report(const rational_seed& seed, std::uint64_t rng_seed = 0) {
    component_report_t out;
    out.radii = zero_radii(seed);
    out.n = static_cast<int>(out.radii.size()) + 1;
    const auto dirs = ray_directions(rng_seed);
    out.verified_by_sampling = rays_agree(lifted_solution{seed}, out.radii, dirs, &out.max_radius_deviation);
    return out;
}

/// Component count recomputed from rays rotated by each automorphism must
/// reproduce the certified n.
inline bool invariance_check(const rational_seed& seed, std::span<const quaternion> automorphisms,
                             std::uint64_t rng_seed = 0) {
    const auto radii = zero_radii(seed);
    const int n = static_cast<int>(radii.size()) + 1;
    const lifted_solution f{seed};
    const auto base = ray_directions(rng_seed);
    for (const auto& a : automorphisms) {
        std::vector<quaternion> rotated;
        rotated.reserve(base.size());
        for (const auto& d : base) {
            rotated.push_back(automorph(a, d));
        }
        const double r_max = ray_extent(radii);
        for (const auto& d : rotated) {
            const auto found = ray_zero_radii(f, d, r_max);
            if (static_cast<int>(found.size()) + 1 != n) {
                return false;
            }
            for (std::size_t k = 0; k < found.size(); ++k) {
                if (std::abs(found[k] - radii.radii[k]) > ray_match_tolerance(radii.multiplicity[k])) {
                    return false;
                }
            }
        }
    }
    return true;
}

enum class dichotomy { diffeo_almost_everywhere, totally_degenerate };

inline const char* to_string(dichotomy d) {
    return d == dichotomy::totally_degenerate ? "TotallyDegenerate" : "DiffeoAlmostEverywhere";
}

struct dichotomy_result {
    dichotomy verdict = dichotomy::totally_degenerate;
    std::size_t points = 0;
    std::size_t nonsingular = 0;
    [[nodiscard]] double nonsingular_fraction() const {
        return points == 0 ? 1.0 : static_cast<double>(nonsingular) / static_cast<double>(points);
    }
};

inline constexpr double dichotomy_threshold = 0.99;

/// Constant seeds are totally degenerate; any other seed must be non-singular
/// on at least 99% of sampled admissible points, otherwise dichotomy_violation.
inline dichotomy_result dichotomy_verdict(const rational_seed& seed, std::uint64_t rng_seed = 0,
                                          std::size_t points = 1000, const admissibility& adm = {}) {
    dichotomy_result out;
    if (classify(seed) == seed_class::degenerate) {
        out.verdict = dichotomy::totally_degenerate;
        return out;
    }
    const lifted_solution f{seed};
    sampler rng{rng_seed};
    const auto pts = sample_admissible(rng, seed, points, adm);
    out.points = pts.size();
    for (const auto& q : pts) {
        if (std::abs(jacobian_det_analytic(f, q)) > eps_zero) {
            ++out.nonsingular;
        }
    }
    if (out.nonsingular_fraction() < dichotomy_threshold) {
        throw dichotomy_violation("non-constant seed is singular on " +
                                  std::to_string(100.0 * (1.0 - out.nonsingular_fraction())) + "% of samples");
    }
    out.verdict = dichotomy::diffeo_almost_everywhere;
    return out;
}

/// Box-counting estimate of the dimension of a locus: the slope of
/// log(#cells meeting the locus) against log(resolution). A cell meets the
/// locus when every defining function changes sign over its 16 corners.
inline double empirical_dimension(const lifted_solution& f, locus_kind which, const box4& box,
                                  std::span<const int> resolutions) {
    if (which == locus_kind::regular || resolutions.size() < 2) {
        throw precondition_violation("empirical_dimension needs a singular locus and two resolutions");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (int res : resolutions) {
        const auto nodes = static_cast<std::size_t>(res + 1);
        const std::size_t total = nodes * nodes * nodes * nodes;
        // defining functions per node; NaN where the seed has a pole
        std::vector<std::array<double, 2>> g(total);
        auto coord = [&](std::size_t axis, std::size_t idx) {
            return box.lo[axis] + (box.hi[axis] - box.lo[axis]) * static_cast<double>(idx) / res;
        };
        parallel_for(total, [&](std::size_t flat) {
            const std::size_t iz = flat % nodes;
            const std::size_t iy = (flat / nodes) % nodes;
            const std::size_t ix = (flat / (nodes * nodes)) % nodes;
            const std::size_t it = flat / (nodes * nodes * nodes);
            const quaternion q{coord(0, it), coord(1, ix), coord(2, iy), coord(3, iz)};
            const double r = q.imag_norm();
            try {
                switch (which) {
                case locus_kind::real_locus:
                    g[flat] = {detail::v_over_r(f, q.t, r), 0.0};
                    break;
                case locus_kind::zero: {
                    const auto w = f.radial(q.t, r);
                    g[flat] = {w.u, detail::v_over_r(f, q.t, r)};
                    break;
                }
                default: {
                    const auto d = f.derivative_seed().eval({q.t, r});
                    g[flat] = {d.real(), d.imag()};
                    break;
                }
                }
            } catch (const near_pole&) {
                g[flat] = {std::numeric_limits<double>::quiet_NaN(), 0.0};
            }
        });
        const bool two_functions = which != locus_kind::real_locus;
        const auto cells = static_cast<std::size_t>(res);
        std::size_t hits = 0;
        for (std::size_t c = 0; c < cells * cells * cells * cells; ++c) {
            const std::size_t cz = c % cells;
            const std::size_t cy = (c / cells) % cells;
            const std::size_t cx = (c / (cells * cells)) % cells;
            const std::size_t ct = c / (cells * cells * cells);
            bool neg0 = false, pos0 = false, neg1 = false, pos1 = false, pole = false;
            for (std::size_t corner = 0; corner < 16; ++corner) {
                const std::size_t flat = (((ct + (corner & 1)) * nodes + cx + ((corner >> 1) & 1)) * nodes + cy +
                                          ((corner >> 2) & 1)) * nodes + cz + ((corner >> 3) & 1);
                const auto& val = g[flat];
                if (std::isnan(val[0])) {
                    pole = true;
                    break;
                }
                (val[0] < 0.0 ? neg0 : pos0) = true;
                (val[1] < 0.0 ? neg1 : pos1) = true;
            }
            if (pole) {
                continue;
            }
            if (neg0 && pos0 && (!two_functions || (neg1 && pos1))) {
                ++hits;
            }
        }
        if (hits > 0) {
            lx.push_back(std::log(static_cast<double>(res)));
            ly.push_back(std::log(static_cast<double>(hits)));
        }
    }
    if (lx.size() < 2) {
        return 0.0;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(lx.size());
    for (std::size_t k = 0; k < lx.size(); ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace fueter
