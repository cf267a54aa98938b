#include <array>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fueter/seed_parser.hpp"
#include "fueter/singular_scan.hpp"

using namespace fueter;

namespace {

rational_seed seed(const char* text) { return parse_seed(text); }

const char* const regression[] = {"z", "z^2", "z^3", "z^2+1", "1/z", "(z^2+1)*(z^2+4)", "(z^2+1)/z"};

} // namespace

TEST(Jacobian, IdentityHasUnitDeterminant) {
    const auto f = lift(seed("z"));
    const quaternion q{0.3, -0.2, 0.9, 0.4};
    const auto s = jacobian(f, q, default_stencil(q));
    EXPECT_NEAR(s.det_fd, 1.0, 1e-8);
    EXPECT_NEAR(s.det_analytic, 1.0, 1e-15);
    EXPECT_TRUE(s.matrix.isIdentity(1e-8));
    EXPECT_EQ(s.locus, locus_kind::regular);
}

TEST(Jacobian, SquareAtOnePlusI) {
    const auto f = lift(seed("z^2"));
    const quaternion q{1, 1, 0, 0};
    const auto s = jacobian(f, q, default_stencil(q));
    EXPECT_NEAR(s.det_fd, 32.0, 32.0 * 1e-4);
    EXPECT_NEAR(jacobian_det_analytic(seed("z^2"), q), 32.0, 1e-12);
}

TEST(Jacobian, ZeroOfLift) {
    const auto f = lift(seed("z^2+1"));
    const quaternion q{0, 1, 0, 0};
    const auto s = jacobian(f, q, default_stencil(q));
    EXPECT_NEAR(s.det_fd, 0.0, 1e-8);
    EXPECT_EQ(s.locus, locus_kind::zero);
    EXPECT_TRUE(s.singular);
}

TEST(Jacobian, CriticalSeed) {
    EXPECT_NEAR(jacobian_det_analytic(seed("z^3/3 + z"), {0, 1, 0, 0}), 0.0, 1e-30);
    const auto f = lift(seed("z^3/3 + z"));
    const quaternion q{0, 0, 0, 1};
    const auto s = jacobian(f, q, default_stencil(q));
    EXPECT_EQ(s.locus, locus_kind::critical_seed);
    EXPECT_TRUE(s.seed_critical);
}

TEST(Jacobian, AnalyticFormulaMatchesFiniteDifferences) {
    std::uint64_t rs = 601;
    for (const char* text : regression) {
        const auto f = lift(seed(text));
        sampler rng{rs++};
        for (const auto& q : sample_admissible(rng, f.seed(), 100)) {
            const auto s = jacobian(f, q, default_stencil(q));
            EXPECT_LE(std::abs(s.det_fd - s.det_analytic), 1e-5 * (1.0 + std::abs(s.det_analytic))) << text;
        }
    }
}

TEST(Jacobian, GenericFieldDeterminant) {
    // (t, x, y, z) -> (2t, x, y, z)
    const quaternion_field stretch{[](const quaternion& q) { return quaternion{2 * q.t, q.x, q.y, q.z}; }};
    EXPECT_NEAR(jacobian(stretch, {0.1, 0.2, 0.3, 0.4}, {4, 1e-2}).det_fd, 2.0, 1e-12);
}

TEST(Scan, IdentityGridIsRegular) {
    const auto res = scan(lift(seed("z")), box4::uniform(-1, 1), 3);
    ASSERT_EQ(res.samples.size(), 81u);
    EXPECT_EQ(res.skipped, 0u);
    for (const auto& s : res.samples) {
        EXPECT_EQ(s.locus, locus_kind::regular);
        EXPECT_NEAR(s.det_fd, 1.0, 1e-8);
    }
    // grid-major order: z varies fastest
    EXPECT_EQ(res.samples[0].point, (quaternion{-1, -1, -1, -1}));
    EXPECT_EQ(res.samples[1].point, (quaternion{-1, -1, -1, 0}));
    EXPECT_EQ(res.samples[27].point, (quaternion{0, -1, -1, -1}));

    const auto five = scan(lift(seed("z")), box4::uniform(-1, 1), 5);
    ASSERT_EQ(five.samples.size(), 625u);
    for (const auto& s : five.samples) {
        EXPECT_FALSE(s.singular);
    }
}

TEST(Scan, SquareSingularExactlyOnTZero) {
    const auto res = scan(lift(seed("z^2")), box4::uniform(-1, 1), 5);
    ASSERT_EQ(res.samples.size(), 625u);
    for (const auto& s : res.samples) {
        EXPECT_EQ(s.singular, s.point.t == 0.0) << s.point.t;
        EXPECT_EQ(s.locus == locus_kind::real_locus || s.locus == locus_kind::zero, s.point.t == 0.0);
    }
}

TEST(Scan, ZeroSphereOfZSquaredPlusOne) {
    const auto res = scan(lift(seed("z^2+1")), box4::uniform(-2, 2), 9);
    std::size_t zeros = 0;
    for (const auto& s : res.samples) {
        if (s.locus == locus_kind::zero) {
            ++zeros;
            EXPECT_EQ(s.point.t, 0.0);
            EXPECT_NEAR(s.point.imag_norm(), 1.0, 1e-12);
        }
    }
    // +-i, +-j, +-k
    EXPECT_EQ(zeros, 6u);
}

TEST(Scan, LocusInclusions) {
    for (const char* text : {"z^2", "z^2+1", "(z^2+1)*(z^2+4)", "z^3/3 + z"}) {
        const auto res = scan(lift(seed(text)), box4::uniform(-2, 2), 5);
        for (const auto& s : res.samples) {
            if (s.on_zero_set) {
                EXPECT_TRUE(s.on_real_locus) << text;
            }
            if (s.on_real_locus) {
                EXPECT_TRUE(s.singular) << text;
            }
            if (s.seed_critical) {
                EXPECT_TRUE(s.singular) << text;
            }
        }
    }
}

TEST(Scan, SkipsPoleNeighbourhoods) {
    const auto res = scan(lift(seed("1/z")), box4::uniform(-1, 1), 3);
    EXPECT_EQ(res.samples.size() + res.skipped, 81u);
    EXPECT_GE(res.skipped, 1u);
}

TEST(Scan, RejectsLowResolution) {
    EXPECT_THROW(scan(lift(seed("z")), box4::uniform(-1, 1), 1), precondition_violation);
}

TEST(Scan, DeterministicAcrossRuns) {
    const auto a = scan(lift(seed("(z^2+1)/z")), box4::uniform(-2, 2), 4);
    const auto b = scan(lift(seed("(z^2+1)/z")), box4::uniform(-2, 2), 4);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t n = 0; n < a.samples.size(); ++n) {
        EXPECT_EQ(a.samples[n].point, b.samples[n].point);
        EXPECT_EQ(a.samples[n].det_fd, b.samples[n].det_fd);
    }
}

TEST(Components, Reports) {
    const std::pair<const char*, int> cases[] = {{"z", 1}, {"z^2+1", 2}, {"(z^2+1)*(z^2+4)", 3}, {"(z^2+1)/z", 2},
                                                 {"z^2+2", 2}, {"(z^2+1)^2", 2}};
    for (const auto& [text, n] : cases) {
        const auto rep = component_report(seed(text));
        EXPECT_EQ(rep.n, n) << text;
        EXPECT_EQ(rep.n, static_cast<int>(rep.radii.size()) + 1);
        EXPECT_TRUE(rep.verified_by_sampling) << text;
    }
    EXPECT_THROW(component_report(rational_seed{}), zero_element);
}

TEST(Components, RaysFindCertifiedRadii) {
    const auto f = lift(seed("(z^2+1)*(z^2+4)"));
    sampler rng{607};
    for (int n = 0; n < 8; ++n) {
        const auto found = ray_zero_radii(f, rng.unit_imaginary(), 4.0);
        ASSERT_EQ(found.size(), 2u);
        EXPECT_NEAR(found[0], 1.0, 1e-9);
        EXPECT_NEAR(found[1], 2.0, 1e-9);
    }
}

TEST(Components, InvarianceUnderAutomorphisms) {
    sampler rng{613};
    std::vector<quaternion> autos{quaternion{1.0}};
    for (int n = 0; n < 10; ++n) {
        autos.push_back(rng.unit_quaternion());
    }
    for (const char* text : {"z", "z^2+1", "(z^2+1)*(z^2+4)", "(z^2+1)/z"}) {
        EXPECT_TRUE(invariance_check(seed(text), autos)) << text;
    }
}

TEST(Dichotomy, Verdicts) {
    EXPECT_EQ(dichotomy_verdict(rational_seed::constant(3)).verdict, dichotomy::totally_degenerate);
    for (const char* text : regression) {
        const auto res = dichotomy_verdict(seed(text));
        EXPECT_EQ(res.verdict, dichotomy::diffeo_almost_everywhere) << text;
        EXPECT_EQ(res.points, 1000u);
        EXPECT_GE(res.nonsingular_fraction(), 0.99) << text;
    }
}

TEST(Dichotomy, ViolationIsRaised) {
    // every admissible point of this box sits on the real locus t = 0 of z^2
    admissibility adm;
    adm.box = {{0, -2, -2, -2}, {0, 2, 2, 2}};
    EXPECT_THROW(dichotomy_verdict(seed("z^2"), 0, 100, adm), dichotomy_violation);
}

TEST(EmpiricalDimension, RealLocusAndZeroSphere) {
    const std::array<int, 2> res{8, 16};
    const double real_dim = empirical_dimension(lift(seed("z^2")), locus_kind::real_locus, box4::uniform(-1.1, 0.9), res);
    EXPECT_NEAR(real_dim, 3.0, 0.35);
    const double zero_dim = empirical_dimension(lift(seed("z^2+1")), locus_kind::zero, box4::uniform(-1.6, 1.4), res);
    EXPECT_NEAR(zero_dim, 2.0, 0.35);
}
