#include <gtest/gtest.h>

#include <cmath>

#include "../common/oracles.hpp"
#include "reeb/errors.hpp"
#include "reeb/perturbation.hpp"
#include "support.hpp"

namespace reeb::test {
namespace {

using curves::CriticalType;
using curves::PerturbationBump;

void expect_two_point_critical_set(const PerturbationBump& bump) {
    const curves::CriticalSetReport r = curves::perturb_critical_surface(bump);
    ASSERT_EQ(r.points.size(), 2u) << "delta=" << bump.delta << " eps=" << bump.epsilon;
    const auto& saddle = r.points[0];
    const auto& minimum = r.points[1];
    EXPECT_EQ(saddle.r, 0.0);
    EXPECT_EQ(saddle.theta, 0.0);
    EXPECT_EQ(saddle.type, CriticalType::Saddle);
    EXPECT_EQ(minimum.r, 0.0);
    EXPECT_DOUBLE_EQ(minimum.theta, kPi);
    EXPECT_EQ(minimum.type, CriticalType::Minimum);

    const double e2 = bump.epsilon * bump.epsilon;
    EXPECT_NEAR(minimum.hessian[0][0], 2.0, 1e-8);
    EXPECT_NEAR(minimum.hessian[0][1], 0.0, 1e-8);
    EXPECT_NEAR(minimum.hessian[1][0], 0.0, 1e-8);
    EXPECT_NEAR(minimum.hessian[1][1], e2, 1e-8);
    EXPECT_NEAR(saddle.hessian[1][1], -e2, 1e-8);
}

TEST(PerturbationBump, SmoothstepSatisfiesInvariants) {
    for (double eps : {0.01, 0.1, 0.24, 0.4}) {
        const PerturbationBump b = PerturbationBump::smoothstep(1.0, eps);
        EXPECT_NO_THROW(curves::validate(b));
        EXPECT_EQ(b.chi(0.0), eps * eps);
        EXPECT_EQ(b.chi(2.0 * eps), 0.0);
        EXPECT_EQ(b.chi(-0.99), 0.0);
    }
}

TEST(PerturbationBump, SlopeStaysBelowTwiceRadius) {
    // Peak slope of the quintic transition is 15 eps / 8, reached at r = 1.5 eps.
    const double eps = 0.2;
    const PerturbationBump b = PerturbationBump::smoothstep(1.0, eps);
    EXPECT_NEAR(std::abs(b.dchi(1.5 * eps)), 15.0 * eps / 8.0, 1e-12);
    for (int i = 1; i <= 1000; ++i) {
        const double r = 2.0 * eps * i / 1000.0;
        EXPECT_LT(std::abs(b.dchi(r)), 2.0 * r);
        // dchi is the derivative of chi.
        const double h = 1e-7;
        EXPECT_NEAR(b.dchi(r), (b.chi(r + h) - b.chi(r - h)) / (2 * h), 1e-6);
    }
}

TEST(PerturbationBump, ValidationRejectsBadBumps) {
    EXPECT_THROW(curves::validate(PerturbationBump::smoothstep(1.0, 0.5)), ValidationError);
    EXPECT_THROW(curves::validate(PerturbationBump::smoothstep(1.0, -0.1)), ValidationError);

    PerturbationBump steep = PerturbationBump::smoothstep(1.0, 0.2);
    // Transition squeezed into [eps, 1.1 eps]: slope about 19 eps > 2 r.
    const double e = steep.epsilon;
    steep.chi = [e](double r) {
        const double a = std::abs(r);
        if (a <= e) return e * e;
        if (a >= 1.1 * e) return 0.0;
        const double x = (a - e) / (0.1 * e);
        return e * e * (1.0 - x * x * x * (10.0 + x * (-15.0 + 6.0 * x)));
    };
    steep.dchi = [e](double r) {
        const double a = std::abs(r);
        if (a <= e || a >= 1.1 * e) return 0.0;
        const double x = (a - e) / (0.1 * e);
        return -std::copysign(e * e * 30.0 * x * x * (1 - x) * (1 - x) / (0.1 * e), r);
    };
    EXPECT_THROW(curves::validate(steep), ValidationError);

    PerturbationBump off_plateau = PerturbationBump::smoothstep(1.0, 0.2);
    off_plateau.chi = [](double r) { return std::abs(r) < 0.4 ? 0.03 : 0.0; };
    EXPECT_THROW(curves::validate(off_plateau), ValidationError);
    EXPECT_THROW(curves::perturb_critical_surface(off_plateau), ValidationError);
}

TEST(PerturbCriticalSurface, DefaultBump) { expect_two_point_critical_set(PerturbationBump::smoothstep(1.0, 0.25)); }

TEST(PerturbCriticalSurface, RandomBumpsMatchGridOracle) {
    auto gen = rng(3);
    std::uniform_real_distribution<double> delta(0.3, 5.0);
    std::uniform_real_distribution<double> frac(0.02, 0.98);
    for (int k = 0; k < 8; ++k) {
        const double d = delta(gen);
        const double e = 0.5 * d * frac(gen);
        const PerturbationBump b = PerturbationBump::smoothstep(d, e);
        expect_two_point_critical_set(b);

        const auto grid = oracle::grid_critical_cells(d, b.chi, b.dchi);
        bool near_zero = false;
        bool near_pi = false;
        for (const auto& [i, j] : grid.cells) {
            EXPECT_TRUE(i == 999 || i == 1000) << "spurious cell at r index " << i;
            EXPECT_TRUE(j == 0 || j == 999 || j == 1000 || j == 1999) << "spurious cell at theta index " << j;
            near_zero |= (j == 0 || j == 1999);
            near_pi |= (j == 999 || j == 1000);
        }
        EXPECT_TRUE(near_zero);
        EXPECT_TRUE(near_pi);
    }
}

TEST(PerturbCriticalSurface, MorseTypesAgreeWithNeighbourValues) {
    const PerturbationBump b = PerturbationBump::smoothstep(1.0, 0.3);
    const double h = 1e-3;
    auto g = [&](double r, double th) { return curves::perturbed_integral(b, r, th); };
    // Minimum at (0, pi): every neighbour is higher.
    for (double dr : {-h, 0.0, h}) {
        for (double dt : {-h, 0.0, h}) {
            if (dr != 0.0 || dt != 0.0) {
                EXPECT_GT(g(dr, kPi + dt), g(0.0, kPi));
            }
        }
    }
    // Saddle at (0, 0): up along r, down along theta.
    EXPECT_GT(g(h, 0.0), g(0.0, 0.0));
    EXPECT_LT(g(0.0, h), g(0.0, 0.0));
}

}  // namespace
}  // namespace reeb::test
