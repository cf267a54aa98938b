#pragma once

/**
 * @file seed_ring.hpp
 * @brief Exact analysis of seeds on the imaginary slice t = 0.
 *
 * Along z = i r the numerator splits as P(i r) = E(r) + i O(r) with E, O real
 * polynomials. The lifted solution vanishes on the sphere |Im q| = r0 of the
 * imaginary 3-space exactly when r0 > 0 is a common root of E and O. Those
 * radii are isolated with Sturm sequences over Q and refined by exact
 * bisection, so the number of separating spheres is certified.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "fueter/error.hpp"
#include "fueter/real_poly.hpp"
#include "fueter/seed.hpp"

namespace fueter {

/// P(i r) = even + i * odd.
struct axis_parts {
    real_poly even;
    real_poly odd;
};

/// Split of P(i r) by n mod 4: 0 -> +E, 1 -> +O, 2 -> -E, 3 -> -O.
inline axis_parts imaginary_axis_parts(const real_poly& p) {
    std::vector<rational> e(p.coefficients().size());
    std::vector<rational> o(p.coefficients().size());
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
        const rational& a = p.coefficients()[n];
        switch (n % 4) {
        case 0: e[n] = a; break;
        case 1: o[n] = a; break;
        case 2: e[n] = -a; break;
        default: o[n] = -a; break;
        }
    }
    return {real_poly{std::move(e)}, real_poly{std::move(o)}};
}

inline axis_parts imaginary_axis_parts(const rational_seed& f) {
    if (!f.is_polynomial()) {
        throw precondition_violation("imaginary_axis_parts needs a polynomial seed; split num and den");
    }
    // canonical den is the constant 1
    return imaginary_axis_parts(f.num());
}

namespace sturm {

inline std::vector<real_poly> sequence(const real_poly& p) {
    std::vector<real_poly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        real_poly r = -(a.divmod(b).second);
        if (r.is_zero()) {
            break;
        }
        seq.push_back(std::move(r));
    }
    if (seq.back().is_zero()) {
        seq.pop_back();
    }
    return seq;
}

inline int variations(const std::vector<real_poly>& seq, const rational& at) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        const rational v = p.eval(at);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

/// Smallest power of two strictly above every root modulus (Cauchy bound).
inline rational root_bound(const real_poly& p) {
    rational worst{0};
    const rational lead = p.leading();
    for (int n = 0; n < p.degree(); ++n) {
        rational ratio = p.coeff(static_cast<std::size_t>(n)) / lead;
        if (ratio < 0) {
            ratio = -ratio;
        }
        if (ratio > worst) {
            worst = ratio;
        }
    }
    const rational cauchy = worst + 1;
    rational bound{1};
    while (bound <= cauchy) {
        bound *= 2;
    }
    return bound;
}

struct isolated_root {
    rational lo;
    rational hi; // root in (lo, hi]
};

/// Isolating intervals (lo, hi] for the distinct roots of p inside (lo, hi].
inline std::vector<isolated_root> isolate(const std::vector<real_poly>& seq, rational lo, rational hi) {
    std::vector<isolated_root> out;
    std::vector<std::pair<rational, rational>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        const int count = variations(seq, a) - variations(seq, b);
        if (count == 0) {
            continue;
        }
        if (count == 1) {
            out.push_back({a, b});
            continue;
        }
        const rational mid = (a + b) / 2;
        work.emplace_back(mid, b);
        work.emplace_back(a, mid);
    }
    return out;
}

/// Shrink an isolating interval to width <= width; returns the exact root when it is hit.
inline rational refine(const std::vector<real_poly>& seq, isolated_root iv, const rational& width) {
    const real_poly& p = seq.front();
    if (p.eval(iv.hi) == 0) {
        return iv.hi;
    }
    while (iv.hi - iv.lo > width) {
        const rational mid = (iv.lo + iv.hi) / 2;
        if (p.eval(mid) == 0) {
            return mid;
        }
        if (variations(seq, iv.lo) - variations(seq, mid) == 1) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return (iv.lo + iv.hi) / 2;
}

} // namespace sturm

/// Yun's square-free decomposition: p = c * prod_k s_k^k, returned as (s_k, k).
inline std::vector<std::pair<real_poly, int>> square_free_factors(const real_poly& p) {
    std::vector<std::pair<real_poly, int>> out;
    if (p.degree() < 1) {
        return out;
    }
    const real_poly dp = p.derivative();
    real_poly a = gcd(p, dp);
    real_poly b = p.divmod(a).first;
    real_poly c = dp.divmod(a).first;
    real_poly d = c - b.derivative();
    int k = 1;
    while (b.degree() >= 1) {
        a = gcd(b, d);
        b = b.divmod(a).first;
        c = d.divmod(a).first;
        if (a.degree() >= 1) {
            out.emplace_back(a.monic(), k);
        }
        d = c - b.derivative();
        ++k;
    }
    return out;
}

struct positive_root {
    rational exact_or_midpoint;
    double value;
    int multiplicity;
};

/// Distinct positive real roots of p with multiplicities, refined to interval width `width`.
inline std::vector<positive_root> positive_roots(const real_poly& p, const rational& width = rational{1, 1000000000000LL}) {
    std::vector<positive_root> roots;
    for (auto [factor, mult] : square_free_factors(p)) {
        // strip a root at zero so Sturm counts on (0, B] are clean
        while (factor.degree() >= 1 && factor.coeff(0) == 0) {
            factor = factor.divmod(real_poly::identity()).first;
        }
        if (factor.degree() < 1) {
            continue;
        }
        const auto seq = sturm::sequence(factor);
        for (const auto& iv : sturm::isolate(seq, rational{0}, sturm::root_bound(factor))) {
            const rational root = sturm::refine(seq, iv, width);
            roots.push_back({root, to_double(root), mult});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const positive_root& a, const positive_root& b) { return a.exact_or_midpoint < b.exact_or_midpoint; });
    return roots;
}

/// Radii of the zero spheres {t = 0, |Im q| = r} of the lifted solution.
struct zero_radius_list {
    std::vector<double> radii;      // strictly increasing, positive
    std::vector<int> multiplicity;  // one per radius
    [[nodiscard]] std::size_t size() const { return radii.size(); }
};

inline zero_radius_list zero_radii(const rational_seed& f) {
    if (f.is_zero()) {
        throw zero_element("zero seed vanishes identically");
    }
    const auto [e, o] = imaginary_axis_parts(f.num());
    real_poly common;
    if (o.is_zero()) {
        common = e;
    } else if (e.is_zero()) {
        common = o;
    } else {
        common = gcd(e, o);
    }
    zero_radius_list out;
    for (const auto& root : positive_roots(common)) {
        // drop radii where the denominator also vanishes
        const auto q = horner(f.den().to_doubles(), std::complex<double>{0.0, root.value});
        if (std::abs(q) <= 1e-12 * (1.0 + std::pow(root.value, f.den().degree()))) {
            continue;
        }
        out.radii.push_back(root.value);
        out.multiplicity.push_back(root.multiplicity);
    }
    return out;
}

/// Number of connected components of the imaginary 3-space minus the zero spheres.
inline int component_count(const rational_seed& f) { return static_cast<int>(zero_radii(f).size()) + 1; }

enum class seed_class { degenerate, diffeo_almost_everywhere };

inline const char* to_string(seed_class c) {
    return c == seed_class::degenerate ? "Degenerate" : "DiffeoAlmostEverywhere";
}

inline seed_class classify(const rational_seed& f) {
    return f.is_constant() ? seed_class::degenerate : seed_class::diffeo_almost_everywhere;
}

inline bool algebraically_invertible_at(const rational_seed& f, std::complex<double> z0) {
    return std::abs(f.eval(z0)) > eps_zero;
}

} // namespace fueter
