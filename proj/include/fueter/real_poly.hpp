#pragma once

/**
 * @file real_poly.hpp
 * @brief Univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree and kept canonical: the last
 * stored coefficient is nonzero, and the zero polynomial is the empty list.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fueter {

using rational = boost::multiprecision::cpp_rational;
using integer = boost::multiprecision::cpp_int;

inline double to_double(const rational& q) { return q.convert_to<double>(); }

class real_poly {
public:
    real_poly() = default;
    explicit real_poly(std::vector<rational> ascending) : c_(std::move(ascending)) { trim(); }
    real_poly(std::initializer_list<rational> ascending) : c_(ascending) { trim(); }

    static real_poly constant(const rational& value) { return real_poly{{value}}; }
    static real_poly monomial(const rational& coeff, std::size_t degree) {
        std::vector<rational> c(degree + 1);
        c[degree] = coeff;
        return real_poly{std::move(c)};
    }
    static real_poly identity() { return monomial(1, 1); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<rational>& coefficients() const { return c_; }
    [[nodiscard]] rational coeff(std::size_t n) const { return n < c_.size() ? c_[n] : rational{0}; }
    [[nodiscard]] rational leading() const { return c_.empty() ? rational{0} : c_.back(); }

    bool operator==(const real_poly&) const = default;

    real_poly& operator+=(const real_poly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t n = 0; n < o.c_.size(); ++n) {
            c_[n] += o.c_[n];
        }
        trim();
        return *this;
    }
    real_poly& operator-=(const real_poly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t n = 0; n < o.c_.size(); ++n) {
            c_[n] -= o.c_[n];
        }
        trim();
        return *this;
    }

    friend real_poly operator+(real_poly a, const real_poly& b) { return a += b; }
    friend real_poly operator-(real_poly a, const real_poly& b) { return a -= b; }
    friend real_poly operator-(real_poly a) {
        for (auto& v : a.c_) {
            v = -v;
        }
        return a;
    }

    friend real_poly operator*(const real_poly& a, const real_poly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t m = 0; m < a.c_.size(); ++m) {
            if (a.c_[m] == 0) {
                continue;
            }
            for (std::size_t n = 0; n < b.c_.size(); ++n) {
                out[m + n] += a.c_[m] * b.c_[n];
            }
        }
        return real_poly{std::move(out)};
    }

    friend real_poly operator*(const rational& s, real_poly p) {
        if (s == 0) {
            return {};
        }
        for (auto& v : p.c_) {
            v *= s;
        }
        return p;
    }

    /// Euclidean division over Q; divisor must be nonzero.
    [[nodiscard]] std::pair<real_poly, real_poly> divmod(const real_poly& divisor) const {
        std::vector<rational> rem = c_;
        const int dd = divisor.degree();
        if (degree() < dd) {
            return {real_poly{}, *this};
        }
        std::vector<rational> quo(static_cast<std::size_t>(degree() - dd + 1));
        const rational lead = divisor.leading();
        for (int n = degree(); n >= dd; --n) {
            const rational factor = rem[static_cast<std::size_t>(n)] / lead;
            quo[static_cast<std::size_t>(n - dd)] = factor;
            if (factor == 0) {
                continue;
            }
            for (int m = 0; m <= dd; ++m) {
                rem[static_cast<std::size_t>(n - dd + m)] -= factor * divisor.c_[static_cast<std::size_t>(m)];
            }
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {real_poly{std::move(quo)}, real_poly{std::move(rem)}};
    }

    [[nodiscard]] real_poly monic() const {
        if (is_zero()) {
            return {};
        }
        const rational inv = rational{1} / leading();
        return inv * *this;
    }

    [[nodiscard]] real_poly derivative() const {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<rational> d(c_.size() - 1);
        for (std::size_t n = 1; n < c_.size(); ++n) {
            d[n - 1] = c_[n] * static_cast<long long>(n);
        }
        return real_poly{std::move(d)};
    }

    [[nodiscard]] rational eval(const rational& at) const {
        rational acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    [[nodiscard]] std::vector<double> to_doubles() const {
        std::vector<double> d;
        d.reserve(c_.size());
        for (const auto& v : c_) {
            d.push_back(to_double(v));
        }
        return d;
    }

    /// Coefficients as a sum of `coeff*z^n` terms in the seed grammar, highest degree first.
    [[nodiscard]] std::string to_string(char var = 'z') const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<rational> c_;
};

/// Horner evaluation with binary64 coefficients.
inline std::complex<double> horner(const std::vector<double>& ascending, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

inline double horner(const std::vector<double>& ascending, double x) {
    double acc = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
inline real_poly gcd(real_poly a, real_poly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline std::string rational_to_string(const rational& q) {
    const integer num = boost::multiprecision::numerator(q);
    const integer den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline std::string real_poly::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int n = degree(); n >= 0; --n) {
        const rational& a = c_[static_cast<std::size_t>(n)];
        if (a == 0) {
            continue;
        }
        const rational mag = a < 0 ? rational{-a} : a;
        if (out.empty()) {
            out += a < 0 ? "-" : "";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        const bool unit = (mag == 1) && n > 0;
        const bool fraction = boost::multiprecision::denominator(mag) != 1;
        if (!unit) {
            out += fraction && n > 0 ? "(" + rational_to_string(mag) + ")" : rational_to_string(mag);
        }
        if (n > 0) {
            if (!unit) {
                out += '*';
            }
            out += var;
            if (n > 1) {
                out += '^' + std::to_string(n);
            }
        }
    }
    return out;
}

} // namespace fueter
