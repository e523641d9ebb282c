#include <gtest/gtest.h>

#include <cmath>

#include "reeb/cattorus.hpp"
#include "reeb/curves.hpp"
#include "reeb/errors.hpp"
#include "reeb/lutz_twist.hpp"
#include "support.hpp"

namespace reeb::test {
namespace {

using curves::LutzCurve;

/// h(t) = (t - s0, C)
LutzCurve horizontal(double s0, double C, curves::Interval domain) {
    return curves::make_segment(-s0, 1.0, C, 0.0, domain);
}

TEST(FullLutzTwist, AddsOneClockwiseTurn) {
    const LutzCurve base = horizontal(0.0, 1.0, {-1.0, 1.0});
    const LutzCurve twisted = curves::full_lutz_twist(base, 0.0, 0.5, 1.0);
    EXPECT_NO_THROW(curves::validate(twisted, 100001));
    EXPECT_NEAR(curves::winding_angle(twisted) - curves::winding_angle(base), -kTwoPi, 1e-6);
    EXPECT_EQ(curves::torsion_count_relative(twisted, base), 1);
}

TEST(FullLutzTwist, AgreesWithInputOutsideWindow) {
    const LutzCurve seg = horizontal(0.25, 2.0, {-1.0, 1.0});
    const LutzCurve twisted = curves::full_lutz_twist(seg, 0.25, 0.5, 2.0);
    for (int i = 0; i <= 2000; ++i) {
        const double t = -1.0 + i * 0.001;
        if (t > -0.25 && t < 0.75) {
            continue;
        }
        const curves::CurveJet a = seg.at(t);
        const curves::CurveJet b = twisted.at(t);
        EXPECT_EQ(a.h1, b.h1) << "t=" << t;
        EXPECT_EQ(a.h2, b.h2) << "t=" << t;
        EXPECT_EQ(a.dh1, b.dh1) << "t=" << t;
        EXPECT_EQ(a.dh2, b.dh2) << "t=" << t;
    }
}

TEST(FullLutzTwist, FirstDerivativeMatchesAtWindowEnds) {
    const LutzCurve seg = horizontal(0.0, 1.0, {-1.0, 1.0});
    const LutzCurve twisted = curves::full_lutz_twist(seg, 0.0, 0.5, 1.0);
    for (double edge : {-0.5, 0.5}) {
        for (double h : {1e-4, 1e-6}) {
            const double t = edge - std::copysign(h, edge);
            const curves::CurveJet a = seg.at(t);
            const curves::CurveJet b = twisted.at(t);
            EXPECT_NEAR(a.h1, b.h1, 10 * h);
            EXPECT_NEAR(a.h2, b.h2, 10 * h);
            EXPECT_NEAR(a.dh1, b.dh1, 1e3 * h);
            EXPECT_NEAR(a.dh2, b.dh2, 1e3 * h);
        }
    }
}

TEST(FullLutzTwist, DoubleTwistAddsTwoTurns) {
    const LutzCurve base = horizontal(0.0, 1.0, {-1.0, 1.0});
    const LutzCurve once = curves::full_lutz_twist(base, 0.0, 0.5, 1.0);
    const LutzCurve twice = curves::full_lutz_twist(once, 0.0, 0.2, 1.0);
    EXPECT_NO_THROW(curves::validate(twice, 100001));
    EXPECT_NEAR(curves::winding_angle(twice) - curves::winding_angle(base), -2.0 * kTwoPi, 1e-6);
    EXPECT_EQ(curves::torsion_count_relative(twice, base), 2);
}

TEST(FullLutzTwist, RandomWindowsAndHeights) {
    auto gen = rng(7);
    std::uniform_real_distribution<double> height(0.05, 20.0);
    std::uniform_real_distribution<double> width(0.01, 2.0);
    std::uniform_real_distribution<double> centre(-3.0, 3.0);
    for (int k = 0; k < 25; ++k) {
        const double C = height(gen);
        const double eps = width(gen);
        const double s0 = centre(gen);
        const LutzCurve base = horizontal(s0, C, {s0 - 2.0 * eps, s0 + 2.0 * eps});
        const LutzCurve twisted = curves::full_lutz_twist(base, s0, eps, C);
        EXPECT_TRUE(curves::is_contact(twisted, 20001)) << "C=" << C << " eps=" << eps;
        EXPECT_NEAR(curves::winding_angle(twisted) - curves::winding_angle(base), -kTwoPi, 1e-6)
            << "C=" << C << " eps=" << eps;
    }
}

TEST(FullLutzTwist, ReebFieldOnAxisAlignedPieces) {
    const double C = 1.5;
    const double eps = 0.4;
    const curves::LutzTwistTemplate tmpl;
    const LutzCurve twisted = curves::full_lutz_twist(horizontal(0.0, C, {-1.0, 1.0}), 0.0, eps, C, tmpl);
    const auto spans = curves::lutz_twist_axis_spans(0.0, eps, C, tmpl);
    ASSERT_EQ(spans.size(), 4u);
    const double X = tmpl.side_ratio * C;
    for (const auto& s : spans) {
        ASSERT_LT(s.t_lo, s.t_hi);
        for (int i = 1; i < 50; ++i) {
            const double t = s.t_lo + (s.t_hi - s.t_lo) * i / 50.0;
            const curves::TorusVector r = curves::reeb_velocity(twisted, t);
            switch (s.piece) {
                case curves::TwistPiece::Top:
                    EXPECT_NEAR(r.x1, 0.0, 1e-9);
                    EXPECT_NEAR(r.x2, 1.0 / C, 1e-9);
                    break;
                case curves::TwistPiece::Right:
                    EXPECT_NEAR(r.x1, 1.0 / X, 1e-9);
                    EXPECT_NEAR(r.x2, 0.0, 1e-9);
                    break;
                case curves::TwistPiece::Bottom:
                    EXPECT_NEAR(r.x1, 0.0, 1e-9);
                    EXPECT_NEAR(r.x2, -1.0 / C, 1e-9);
                    break;
            }
        }
    }
}

TEST(FullLutzTwist, RejectsWrongShape) {
    EXPECT_THROW(curves::full_lutz_twist(cat::alpha_curve(0, {-1.0, 1.0}), 0.0, 0.5, 1.0), ShapeError);
    EXPECT_THROW(curves::full_lutz_twist(horizontal(0.0, 1.0, {-1.0, 1.0}), 0.0, 0.5, 2.0), ShapeError);
    EXPECT_THROW(curves::full_lutz_twist(horizontal(0.0, -1.0, {-1.0, 1.0}), 0.0, 0.5, -1.0), ShapeError);
    EXPECT_THROW(curves::full_lutz_twist(horizontal(0.0, 1.0, {-1.0, 1.0}), 0.0, 0.0, 1.0), ShapeError);
}

TEST(FullLutzTwist, WindowMustFitDomain) {
    EXPECT_THROW(curves::full_lutz_twist(horizontal(0.0, 1.0, {-1.0, 1.0}), 0.0, 1.5, 1.0), DomainError);
}

TEST(FullLutzTwist, RejectsInvalidTemplate) {
    curves::LutzTwistTemplate bad;
    bad.corner_ratio = 1.0;
    EXPECT_THROW(curves::full_lutz_twist(horizontal(0.0, 1.0, {-1.0, 1.0}), 0.0, 0.5, 1.0, bad), ValidationError);
}

}  // namespace
}  // namespace reeb::test
