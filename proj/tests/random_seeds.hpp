#pragma once

// Random exact seeds for property tests: small rational coefficients, degree <= 4.

#include <vector>

#include "fueter/sampling.hpp"
#include "fueter/seed.hpp"

namespace testing_support {

inline fueter::rational random_coefficient(fueter::sampler& rng) {
    const auto num = static_cast<long long>(rng.bits() % 13) - 6;
    const auto den = static_cast<long long>(rng.bits() % 4) + 1;
    return fueter::rational{num, den};
}

inline fueter::real_poly random_poly(fueter::sampler& rng, int max_degree = 4) {
    const auto degree = static_cast<int>(rng.bits() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<fueter::rational> c(static_cast<std::size_t>(degree + 1));
    for (auto& a : c) {
        a = random_coefficient(rng);
    }
    return fueter::real_poly{std::move(c)};
}

inline fueter::real_poly random_nonzero_poly(fueter::sampler& rng, int max_degree = 4) {
    for (;;) {
        auto p = random_poly(rng, max_degree);
        if (!p.is_zero()) {
            return p;
        }
    }
}

/// Random seed; a third are polynomials.
inline fueter::rational_seed random_seed(fueter::sampler& rng, int max_degree = 4) {
    const auto num = random_poly(rng, max_degree);
    if (rng.bits() % 3 == 0) {
        return fueter::rational_seed{num};
    }
    return {num, random_nonzero_poly(rng, max_degree)};
}

inline fueter::rational_seed random_nonzero_seed(fueter::sampler& rng, int max_degree = 4) {
    for (;;) {
        auto f = random_seed(rng, max_degree);
        if (!f.is_zero()) {
            return f;
        }
    }
}

} // namespace testing_support
