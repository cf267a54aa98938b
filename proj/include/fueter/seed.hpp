#pragma once

/**
 * @file seed.hpp
 * @brief Real-coefficient rational seeds F(z) = P(z)/Q(z) and their field
 * arithmetic.
 *
 * A seed is always held in canonical form: gcd(P, Q) = 1 and Q monic. Two
 * seeds are equal as functions iff their canonical forms are equal, so
 * operator== is exact equality in the ring.
 *
 * Real coefficients give Schwarz symmetry, F(conj z) = conj F(z); in
 * particular Im F vanishes on the real axis.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "fueter/error.hpp"
#include "fueter/real_poly.hpp"

namespace fueter {

/// Threshold for |F(z)| below which a value counts as a zero.
inline constexpr double eps_zero = 1e-10;

class rational_seed {
public:
    /// The zero seed.
    rational_seed() : rational_seed(real_poly{}, real_poly::constant(1)) {}

    rational_seed(real_poly num, real_poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            throw zero_denominator("seed denominator is the zero polynomial");
        }
        canonicalize();
    }

    explicit rational_seed(real_poly poly) : rational_seed(std::move(poly), real_poly::constant(1)) {}

    static rational_seed constant(const rational& c) { return rational_seed{real_poly::constant(c)}; }
    static rational_seed identity() { return rational_seed{real_poly::identity()}; }

    [[nodiscard]] const real_poly& num() const { return num_; }
    [[nodiscard]] const real_poly& den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
    [[nodiscard]] bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    bool operator==(const rational_seed& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// P(z)/Q(z) in binary64. Throws near_pole when |Q(z)| <= 1e-12 (1 + |z|^deg Q).
    [[nodiscard]] std::complex<double> eval(std::complex<double> z) const {
        const std::complex<double> q = horner(den_d_, z);
        const double scale = 1.0 + std::pow(std::abs(z), den_.degree());
        if (std::abs(q) <= 1e-12 * scale) {
            throw near_pole("seed evaluated at a pole");
        }
        return horner(num_d_, z) / q;
    }

    /// Canonical textual form, re-parsable by parse_seed.
    [[nodiscard]] std::string to_string() const {
        if (is_polynomial()) {
            return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = real_poly::constant(1);
        } else {
            const real_poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.divmod(g).first;
                den_ = den_.divmod(g).first;
            }
            const rational scale = rational{1} / den_.leading();
            num_ = scale * num_;
            den_ = scale * den_;
        }
        num_d_ = num_.to_doubles();
        den_d_ = den_.to_doubles();
    }

    real_poly num_;
    real_poly den_;
    std::vector<double> num_d_;
    std::vector<double> den_d_;
};

inline rational_seed operator+(const rational_seed& f, const rational_seed& g) {
    return {f.num() * g.den() + g.num() * f.den(), f.den() * g.den()};
}
inline rational_seed operator-(const rational_seed& f) { return {-f.num(), f.den()}; }
inline rational_seed operator-(const rational_seed& f, const rational_seed& g) { return f + (-g); }
inline rational_seed operator*(const rational_seed& f, const rational_seed& g) {
    return {f.num() * g.num(), f.den() * g.den()};
}

inline rational_seed add(const rational_seed& f, const rational_seed& g) { return f + g; }
inline rational_seed mul(const rational_seed& f, const rational_seed& g) { return f * g; }
inline rational_seed neg(const rational_seed& f) { return -f; }

/// 1/F; the poles of the result are exactly the zeros of num(F).
inline rational_seed localize(const rational_seed& f) {
    if (f.is_zero()) {
        throw zero_element("the zero seed has no inverse");
    }
    return {f.den(), f.num()};
}

inline rational_seed operator/(const rational_seed& f, const rational_seed& g) {
    if (g.is_zero()) {
        throw zero_denominator("division by the zero seed");
    }
    return f * localize(g);
}

/// (P'Q - PQ')/Q^2.
inline rational_seed derivative(const rational_seed& f) {
    const auto& p = f.num();
    const auto& q = f.den();
    return {p.derivative() * q - p * q.derivative(), q * q};
}

inline std::complex<double> eval_complex(const rational_seed& f, std::complex<double> z) { return f.eval(z); }

/// Complex roots of a real polynomial, numerically.
inline std::vector<std::complex<double>> complex_roots(const real_poly& p) {
    if (p.degree() < 1) {
        return {};
    }
    const auto c = p.to_doubles();
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(c.size()));
    for (std::size_t n = 0; n < c.size(); ++n) {
        coeffs[static_cast<Eigen::Index>(n)] = c[n];
    }
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<std::complex<double>> out;
    for (const auto& root : solver.roots()) {
        out.push_back(root);
    }
    return out;
}

inline std::vector<std::complex<double>> poles(const rational_seed& f) { return complex_roots(f.den()); }

/// Distance in the z-plane from z to the nearest pole of f (infinity for polynomials).
inline double pole_distance(const std::vector<std::complex<double>>& pole_list, std::complex<double> z) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pole_list) {
        best = std::min(best, std::abs(z - p));
    }
    return best;
}

} // namespace fueter
