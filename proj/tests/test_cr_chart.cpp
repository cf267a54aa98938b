#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fueter/cr_chart.hpp"
#include "fueter/seed_parser.hpp"

using namespace fueter;

namespace {

rational_seed seed(const char* text) { return parse_seed(text); }

const char* const regression[] = {"z", "z^2", "z^3", "z^2+1", "1/z", "(z^2+1)*(z^2+4)", "(z^2+1)/z"};

/// Admissible points mapped into the chart, keeping clear of the poles of the chart.
std::vector<chart_point> chart_points(const rational_seed& f, std::uint64_t rng_seed, std::size_t count) {
    sampler rng{rng_seed};
    std::vector<chart_point> out;
    while (out.size() < count) {
        for (const auto& q : sample_admissible(rng, f, count)) {
            const auto c = to_chart(q);
            if (std::sin(c.beta) > 0.05 && out.size() < count) {
                out.push_back(c);
            }
        }
    }
    return out;
}

} // namespace

TEST(ChartPartials, SquareAtUnitPoint) {
    const chart_point c{1.0, 1.0, 0.0, std::numbers::pi / 2};
    const auto p = chart_partials_analytic(lift(seed("z^2")), c);
    EXPECT_EQ(p.u_t, 2.0);
    EXPECT_EQ(p.u_r, -2.0);
    EXPECT_EQ(p.u_alpha, 0.0);
    EXPECT_EQ(p.u_beta, 0.0);
    EXPECT_EQ(p.v_t, 2.0);
    EXPECT_EQ(p.v_r, 2.0);
    EXPECT_EQ(p.v_alpha, 0.0);
    EXPECT_EQ(p.v_beta, 0.0);
    EXPECT_EQ(p.provenance, partials_provenance::analytic);

    const auto d = chart_partials_fd(lift(seed("z^2")), c);
    EXPECT_NEAR(d.u_t, 2.0, 1e-8);
    EXPECT_NEAR(d.u_r, -2.0, 1e-8);
    EXPECT_NEAR(d.v_t, 2.0, 1e-8);
    EXPECT_NEAR(d.v_r, 2.0, 1e-8);
    EXPECT_NEAR(d.u_alpha, 0.0, 1e-8);
    EXPECT_NEAR(d.v_beta, 0.0, 1e-8);
    EXPECT_EQ(d.provenance, partials_provenance::finite_difference);
}

TEST(ChartPartials, ConstantLiftIsFlat) {
    const chart_point c{0.3, 0.8, 1.0, 1.2};
    const auto p = chart_partials_analytic(lift(rational_seed::constant(4)), c);
    EXPECT_EQ(cr_residuals(p).max_abs(), 0.0);
    EXPECT_EQ(p.u_t, 0.0);
    EXPECT_EQ(p.v_r, 0.0);
}

TEST(ChartPartials, LinearInAlpha) {
    const chart_point c{0.2, 1.0, 0.7, 1.1};
    const auto p = chart_partials_fd([](const chart_point& x) { return radial_values{x.alpha, 0.0}; }, c);
    EXPECT_NEAR(p.u_alpha, 1.0, 1e-8);
    EXPECT_NEAR(p.u_t, 0.0, 1e-8);
    EXPECT_NEAR(p.u_r, 0.0, 1e-8);
    EXPECT_NEAR(p.u_beta, 0.0, 1e-8);
    EXPECT_NEAR(p.v_alpha, 0.0, 1e-8);
}

TEST(ChartPartials, StencilMustStayInDomain) {
    EXPECT_THROW(chart_partials_fd(lift(seed("z")), {0.0, 1e-3, 0.0, 1.0}), region_violation);
    EXPECT_THROW(chart_partials_fd(lift(seed("z")), {0.0, 1.0, 0.0, 1e-3}), region_violation);
}

TEST(CrResiduals, ConjugateData) {
    const chart_point c{0.5, 1.2, 2.0, 1.0};
    const auto p = chart_partials_fd([](const chart_point& x) { return radial_values{x.t, -x.r}; }, c);
    const auto e = cr_residuals(p);
    EXPECT_NEAR(e.e3, 2.0, 1e-8);
    EXPECT_NEAR(e.e4, 0.0, 1e-8);
    EXPECT_NEAR(e.e5, 0.0, 1e-8);
    EXPECT_NEAR(e.e6, 0.0, 1e-8);
}

TEST(CrResiduals, ZeroPartialsAndPolarGuard) {
    chart_partials p;
    p.point = {0.0, 1.0, 0.0, 1.0};
    EXPECT_EQ(cr_residuals(p).max_abs(), 0.0);
    p.point.beta = 0.0;
    EXPECT_THROW(cr_residuals(p), polar_axis);
}

TEST(CrResiduals, LinearInPartials) {
    chart_partials a, b;
    a.point = b.point = {0.0, 1.0, 0.3, 0.9};
    a.u_t = 1.5; a.v_r = -0.25; a.u_alpha = 2.0; a.v_beta = 0.125;
    b.u_r = 0.5; b.v_t = 0.75; b.v_alpha = -1.0; b.u_beta = 4.0;
    const auto ea = cr_residuals(a);
    const auto eb = cr_residuals(b);
    chart_partials s = a;
    s += b;
    const auto es = cr_residuals(s);
    EXPECT_EQ(es.e3, ea.e3 + eb.e3);
    EXPECT_EQ(es.e4, ea.e4 + eb.e4);
    EXPECT_EQ(es.e5, ea.e5 + eb.e5);
    EXPECT_EQ(es.e6, ea.e6 + eb.e6);
}

TEST(CrResiduals, HoldOnRegressionSeeds) {
    std::uint64_t rs = 501;
    for (const char* text : regression) {
        const auto f = lift(seed(text));
        for (const auto& c : chart_points(f.seed(), rs++, 100)) {
            EXPECT_EQ(cr_residuals(chart_partials_analytic(f, c)).max_abs(), 0.0) << text;
            const auto fd = chart_partials_fd(f, c);
            EXPECT_LE(cr_residuals(fd, angular_factor::inverse_square).max_abs(), 1e-6) << text;
            EXPECT_LE(cr_residuals(fd, angular_factor::inverse).max_abs(), 1e-6) << text;
        }
    }
}

TEST(CrResiduals, MatchOperatorComponents) {
    // e3 and e4 are the real and iota parts of D f + 2v/r
    const auto f = lift(seed("(z^2+1)/z"));
    const auto fld = quaternion_field::from_lift(f);
    for (const auto& c : chart_points(f.seed(), 509, 30)) {
        const auto q = from_chart(c);
        const auto e = cr_residuals(chart_partials_analytic(f, c));
        const auto d = apply_left(fld, q, {4, 1e-3}) - rhs(f, q);
        const auto iota = decompose(q).iota;
        EXPECT_NEAR(d.t, e.e3, 1e-6);
        EXPECT_NEAR(dot(d.imag(), iota), e.e4, 1e-6);
    }
}

TEST(P4Star, VacuousWhenDerivativeNonzero) {
    const auto f = lift(seed("z^2"));
    const chart_point c{0.0, 0.5, 0.0, std::numbers::pi / 2};
    const auto res = p4_star(chart_partials_analytic(f, c), f, from_chart(c));
    EXPECT_FALSE(res.antecedent);
    EXPECT_TRUE(res.holds);
}

TEST(P4Star, CriticalPointOffAxis) {
    // F' = z^2 + 1 vanishes at z = i
    const auto f = lift(seed("z^3/3 + z"));
    const chart_point c{0.0, 1.0, 0.0, std::numbers::pi / 2};
    const auto res = p4_star(chart_partials_analytic(f, c), f, from_chart(c));
    EXPECT_TRUE(res.antecedent);
    EXPECT_NEAR(res.det, 0.0, 1e-8);
    EXPECT_TRUE(res.holds);
}

TEST(P4Star, ConstantLift) {
    const auto f = lift(rational_seed::constant(2));
    const chart_point c{0.4, 0.7, 1.0, 1.0};
    const auto res = p4_star(chart_partials_analytic(f, c), f, from_chart(c));
    EXPECT_TRUE(res.antecedent);
    EXPECT_EQ(res.det, 0.0);
    EXPECT_TRUE(res.holds);
}

TEST(P4StarStar, Examples) {
    const auto id = p4_star_star(lift(seed("z")));
    EXPECT_TRUE(id.holds);
    EXPECT_EQ(id.points, 1000u);
    EXPECT_EQ(id.invertible, 1000u);

    const auto seven = p4_star_star(lift(rational_seed::constant(7)));
    EXPECT_TRUE(seven.holds);
    EXPECT_TRUE(seven.constant);

    const auto sq = p4_star_star(lift(seed("z^2")));
    EXPECT_TRUE(sq.holds);
    EXPECT_GE(sq.invertible_fraction(), 0.99);
}
