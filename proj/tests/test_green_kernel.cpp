#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "greenreg/errors.hpp"
#include "greenreg/green_kernel.hpp"
#include "oracles.hpp"

using namespace greenreg;

namespace {

std::vector<double> grid21() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
    return g;
}

}  // namespace

TEST(GreenClosed, ZeroCoefficientIsPiecewiseLinear) {
    EXPECT_DOUBLE_EQ(green_closed(KernelParams(0.0), 0.25, 0.5), 0.125);
}

TEST(GreenClosed, VanishesOnBoundary) {
    for (double a : {0.0, 1.0, 10.0, 50.0, 800.0}) {
        const KernelParams p(a);
        EXPECT_EQ(green_closed(p, 0.0, 0.7), 0.0);
        for (double y : {0.0, 0.1, 0.5, 0.93, 1.0}) {
            EXPECT_EQ(green_closed(p, 0.0, y), 0.0) << "a=" << a;
            EXPECT_EQ(green_closed(p, 1.0, y), 0.0) << "a=" << a;
        }
    }
}

TEST(GreenClosed, CenterValueMatchesSeriesOracle) {
    // 10^6-term series; tail below 2e-7.
    const double oracle = static_cast<double>(oracle::green_series(1.0L, 0.5L, 0.5L, 1000000));
    EXPECT_NEAR(oracle, 0.231059, 1e-6);
    EXPECT_NEAR(green_closed(KernelParams(1.0), 0.5, 0.5), oracle, 1e-6);
}

TEST(GreenClosed, SymmetricAndNonnegative) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double a : {0.0, 1.0, 10.0, 45.0}) {
        const KernelParams p(a);
        for (int i = 0; i < 1000; ++i) {
            const double x = u(rng), y = u(rng);
            EXPECT_EQ(green_closed(p, x, y), green_closed(p, y, x));
        }
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) ASSERT_GE(green_closed(p, i / 100.0, j / 100.0), 0.0);
    }
}

TEST(GreenClosed, ContinuousInCoefficientAtZero) {
    const KernelParams tiny(1e-6);
    const KernelParams zero(0.0);
    for (double x : grid21())
        for (double y : grid21())
            EXPECT_NEAR(green_closed(tiny, x, y), green_closed(zero, x, y), 1e-9);
}

TEST(GreenClosed, LargeCoefficientStaysFinite) {
    // sinh(800) overflows a double; the exp-ratio form must not.
    const KernelParams p(800.0);
    const double g = green_closed(p, 0.5, 0.5);
    EXPECT_TRUE(std::isfinite(g));
    EXPECT_NEAR(g, 1.0 / (2.0 * 800.0), 1e-12);
    // Both branches of the large-a switch agree near the threshold.
    const KernelParams below(30.0);
    const KernelParams above(std::nextafter(30.0, 31.0));
    EXPECT_NEAR(green_closed(below, 0.3, 0.6), green_closed(above, 0.3, 0.6), 1e-12);
}

TEST(GreenClosed, MatchesLongDoubleLiteral) {
    for (double a : {0.5, 1.0, 10.0, 29.0, 31.0, 100.0})
        for (double x : grid21())
            for (double y : grid21()) {
                const double ref = static_cast<double>(oracle::green_literal(a, x, y));
                EXPECT_NEAR(green_closed(KernelParams(a), x, y), ref, 1e-13 * (1.0 + ref));
            }
}

TEST(GreenClosed, RejectsOutOfDomain) {
    const KernelParams p(1.0);
    EXPECT_THROW(green_closed(p, -0.1, 0.5), DomainError);
    EXPECT_THROW(green_closed(p, 0.5, 1.1), DomainError);
    EXPECT_THROW(green_closed(p, std::nan(""), 0.5), DomainError);
}

TEST(KernelParams, Validation) {
    EXPECT_THROW(KernelParams{-1.0}, DomainError);
    EXPECT_THROW(KernelParams{std::numeric_limits<double>::infinity()}, DomainError);
    EXPECT_THROW(KernelParams(1.0, 0), DomainError);
    EXPECT_THROW(KernelParams(1.0, 10, QuadratureSpec{5, {}}), ValidationError);
}

TEST(GreenSeries, SingleTerm) {
    const KernelParams p = KernelParams(1.0).with_series_terms(1);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    EXPECT_NEAR(green_series(p, 0.5, 0.5), 2.0 / (pi2 + 1.0), 1e-15);
    EXPECT_NEAR(green_series(p, 0.5, 0.5), 0.183999, 1e-6);
}

TEST(GreenSeries, ConvergesToClosedFormWithinTailBound) {
    const KernelParams one(1.0);
    EXPECT_NEAR(green_series(one, 0.5, 0.5), green_closed(one, 0.5, 0.5), 1e-4);
    EXPECT_NEAR(green_series(KernelParams(0.0), 0.3, 0.3), 0.21, 1e-4);

    const double bound = 2.0 * oracle::series_tail_bound(KernelParams::kDefaultSeriesTerms);
    EXPECT_NEAR(bound, 4.1e-6, 0.1e-6);
    for (double a : {0.0, 1.0, 10.0}) {
        const KernelParams p(a);
        double worst = 0.0;
        for (double x : grid21())
            for (double y : grid21())
                worst = std::max(worst, std::abs(green_series(p, x, y) - green_closed(p, x, y)));
        EXPECT_LE(worst, bound) << "a=" << a;
    }
}

TEST(L1Norm, CenterIdentity) {
    EXPECT_NEAR(l1_norm(KernelParams(1.0), 0.5), 0.113181, 1e-6);
    EXPECT_DOUBLE_EQ(l1_norm(KernelParams(0.0), 0.5), 0.125);
    for (double a : {0.5, 1.0, 2.0, 10.0}) {
        const double closed = (1.0 - 1.0 / std::cosh(a / 2.0)) / (a * a);
        EXPECT_NEAR(l1_norm(KernelParams(a), 0.5), closed, 1e-12);
    }
}

TEST(L1Norm, MatchesLiteralFormula) {
    // The literal form cancels badly for larger a even in long double.
    for (double a : {0.5, 1.0, 2.0, 10.0})
        for (int i = 1; i < 20; ++i) {
            const double y = i / 20.0;
            const double ref = static_cast<double>(oracle::l1_literal(a, y));
            EXPECT_NEAR(l1_norm(KernelParams(a), y), ref, 1e-12 * ref) << a << " " << y;
        }
}

TEST(L1Norm, AgreesWithQuadrature) {
    const KernelParams p1(1.0);
    const auto quad = [&](const KernelParams& p, double y) {
        return integrate([&](double x) { return green_closed(p, x, y); }, 0.0, 1.0,
                         p.quad().with_splits({y}));
    };
    EXPECT_NEAR(l1_norm(p1, 0.1), quad(p1, 0.1), 1e-8);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (double a : {0.0, 1.0, 10.0}) {
        const KernelParams p(a);
        for (int i = 0; i < 50; ++i) {
            const double y = u(rng);
            EXPECT_NEAR(l1_norm(p, y), quad(p, y), 1e-8) << "a=" << a << " y=" << y;
        }
    }
}

TEST(L1Norm, LargeCoefficientAgreesWithQuadrature) {
    for (double a : {29.5, 30.5, 60.0, 200.0}) {
        const KernelParams p(a, KernelParams::kDefaultSeriesTerms, QuadratureSpec{8192, {}});
        for (double y : {0.05, 0.3, 0.5, 0.85}) {
            const double quad = integrate([&](double x) { return green_closed(p, x, y); }, 0.0,
                                          1.0, p.quad().with_splits({y}));
            EXPECT_NEAR(l1_norm(p, y), quad, 1e-9 * quad) << a << " " << y;
        }
    }
}

TEST(L1Norm, SmallCoefficientApproachesZeroBranch) {
    for (double y : {0.1, 0.5, 0.9})
        EXPECT_NEAR(l1_norm(KernelParams(1e-6), y), 0.5 * y * (1.0 - y), 1e-12);
}

TEST(L1Norm, RejectsEndpoints) {
    const KernelParams p(1.0);
    EXPECT_THROW(l1_norm(p, 0.0), DomainError);
    EXPECT_THROW(l1_norm(p, 1.0), DomainError);
    EXPECT_THROW(l1_norm(p, 1.5), DomainError);
    EXPECT_THROW(normalized_green(p, 0.5, 0.0), DomainError);
}

TEST(NormalizedGreen, TabulatedValues) {
    EXPECT_NEAR(normalized_green(KernelParams(1.0), 0.5, 0.5), 2.041, 1e-3);
    EXPECT_NEAR(normalized_green(KernelParams(1.0), 0.5, 0.1), 1.076, 1e-3);
    EXPECT_NEAR(normalized_green(KernelParams(10.0), 0.5, 0.5), 5.068, 1e-3);
}

TEST(NormalizedGreen, UnitMass) {
    for (double a : {0.0, 0.5, 1.0, 10.0, 100.0}) {
        // Steep columns at a = 100 need finer panels than the default.
        const KernelParams p(a, KernelParams::kDefaultSeriesTerms,
                             QuadratureSpec{a > 10.0 ? 8192 : 2048, {}});
        for (int i = 1; i <= 9; ++i) {
            const double y = i / 10.0;
            const double mass = integrate([&](double x) { return normalized_green(p, x, y); }, 0.0,
                                          1.0, p.quad().with_splits({y}));
            EXPECT_NEAR(mass, 1.0, 1e-8) << "a=" << a << " y=" << y;
        }
    }
}

TEST(NormalizedGreen, IsAsymmetric) {
    const KernelParams p(1.0);
    EXPECT_GT(std::abs(normalized_green(p, 0.1, 0.3) - normalized_green(p, 0.3, 0.1)), 0.5);
}

TEST(GreenDx, MatchesCentralDifferenceAwayFromKink) {
    for (double a : {0.0, 1.0, 10.0, 40.0}) {
        const KernelParams p(a);
        const double y = 0.4;
        const double h = 1e-6;
        for (double x : {0.1, 0.3, 0.6, 0.9}) {
            const double fd = (green_closed(p, x + h, y) - green_closed(p, x - h, y)) / (2 * h);
            EXPECT_NEAR(green_dx(p, x, y, x < y), fd, 1e-6 * (1.0 + std::abs(fd))) << a << " " << x;
        }
        // Unit jump at the kink: dG/dx(y-) - dG/dx(y+) = 1.
        EXPECT_NEAR(green_dx(p, y, y, true) - green_dx(p, y, y, false), 1.0, 1e-12);
    }
}

TEST(RkhsInnerProduct, ReproducesFunctionValues) {
    const double pi = std::numbers::pi;
    const TestFunction sin1{[=](double x) { return std::sin(pi * x); },
                            [=](double x) { return pi * std::cos(pi * x); }};
    const TestFunction bump{[](double x) { return x * (1.0 - x); },
                            [](double x) { return 1.0 - 2.0 * x; }};
    const TestFunction sin2{[=](double x) { return std::sin(2 * pi * x); },
                            [=](double x) { return 2 * pi * std::cos(2 * pi * x); }};
    const TestFunction sin3{[=](double x) { return std::sin(3 * pi * x); },
                            [=](double x) { return 3 * pi * std::cos(3 * pi * x); }};

    EXPECT_NEAR(rkhs_inner_product(KernelParams(1.0), sin1, 0.5), 1.0, 1e-6);
    EXPECT_NEAR(rkhs_inner_product(KernelParams(1.0), bump, 0.3), 0.21, 1e-6);
    EXPECT_NEAR(rkhs_inner_product(KernelParams(10.0), sin2, 0.25), 1.0, 1e-6);

    for (double a : {1.0, 10.0}) {
        const KernelParams p(a);
        for (const auto* u : {&sin1, &bump, &sin3})
            for (int i = 1; i <= 9; ++i) {
                const double y = i / 10.0;
                EXPECT_NEAR(rkhs_inner_product(p, *u, y), u->value(y), 1e-6);
            }
    }
}
