#pragma once

/**
 * @file lift.hpp
 * @brief Lifting a holomorphic seed to a quaternionic field
 *
 *     f(q) = u(t, r) + iota_q * v(t, r),   u + i v = F(t + i r),
 *
 * where q = t + r * iota_q. The lift of z is the identity and the lift of z^n
 * is q^n. On the real axis the field continues to the real value F(t).
 */

#include <algorithm>
#include <complex>
#include <utility>

#include "fueter/error.hpp"
#include "fueter/quaternion.hpp"
#include "fueter/seed.hpp"

namespace fueter {

/// (u, v) = (Re F, Im F) at z = t + i r.
struct radial_values {
    double u = 0.0;
    double v = 0.0;
};

class lifted_solution {
public:
    explicit lifted_solution(rational_seed seed)
        : seed_(std::move(seed)), derivative_(fueter::derivative(seed_)) {}

    [[nodiscard]] const rational_seed& seed() const { return seed_; }
    [[nodiscard]] const rational_seed& derivative_seed() const { return derivative_; }

    [[nodiscard]] radial_values radial(double t, double r) const {
        const auto w = seed_.eval({t, r});
        return {w.real(), w.imag()};
    }

    [[nodiscard]] quaternion operator()(const quaternion& q) const {
        const double r = q.imag_norm();
        if (r <= eps_axis) {
            return quaternion{seed_.eval({q.t, 0.0}).real()};
        }
        const auto w = seed_.eval({q.t, r});
        return quaternion{w.real()} + (w.imag() / r) * q.imag();
    }

private:
    rational_seed seed_;
    rational_seed derivative_;
};

inline lifted_solution lift(rational_seed seed) { return lifted_solution{std::move(seed)}; }

inline quaternion lift_eval(const lifted_solution& f, const quaternion& q) { return f(q); }

/// 1 + max of the norms; the denominator of every relative residual.
inline double residual_scale(std::initializer_list<double> norms) {
    double m = 0.0;
    for (double n : norms) {
        m = std::max(m, n);
    }
    return 1.0 + m;
}

/// Recover (u, v) from a lifted value at an off-axis point q.
inline radial_values project(const quaternion& value, const quaternion& q) {
    const auto d = decompose(q);
    return {value.t, dot(value.imag(), d.iota)};
}

/// |f(a q a^-1) - a f(q) a^-1|.
inline double equivariance_residual(const lifted_solution& f, const quaternion& a, const quaternion& q) {
    const quaternion lhs = f(automorph(a, q));
    const quaternion fq = f(q);
    const quaternion rhs = automorph(a, fq);
    return norm(lhs - rhs);
}

inline constexpr double radial_pair_tolerance = 1e-12;

/// |u(q1) - u(q2)| + |v(q1) - v(q2)| for purely imaginary q1, q2 of equal norm.
inline double radial_symmetry_residual(const lifted_solution& f, const quaternion& q1, const quaternion& q2) {
    if (q1.t != 0.0 || q2.t != 0.0) {
        throw precondition_violation("radial symmetry compares purely imaginary points");
    }
    if (std::abs(q1.norm() - q2.norm()) > radial_pair_tolerance) {
        throw precondition_violation("radial symmetry compares points of equal norm");
    }
    const auto a = project(f(q1), q1);
    const auto b = project(f(q2), q2);
    return std::abs(a.u - b.u) + std::abs(a.v - b.v);
}

struct product_consistency {
    double product = 0.0;    // |lift(FG)(q) - lift(F)(q) lift(G)(q)|
    double sum = 0.0;        // |lift(F+G)(q) - lift(F)(q) - lift(G)(q)|
    double commutator = 0.0; // |f g - g f|
    double scale = 1.0;
};

inline product_consistency product_consistency_residual(const rational_seed& f, const rational_seed& g,
                                                        const quaternion& q) {
    const quaternion fq = lift(f)(q);
    const quaternion gq = lift(g)(q);
    const quaternion fg = lift(f * g)(q);
    const quaternion fpg = lift(f + g)(q);
    product_consistency out;
    out.product = norm(fg - fq * gq);
    out.sum = norm(fpg - (fq + gq));
    out.commutator = norm(fq * gq - gq * fq);
    out.scale = residual_scale({norm(fg), norm(fq * gq), norm(fpg), norm(fq) + norm(gq)});
    return out;
}

} // namespace fueter
