#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

#include "reeb/curves.hpp"

namespace reeb::test {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(REEB_FIXTURE_DIR) / name;
}

inline std::filesystem::path curve_file(const std::string& name) {
    return std::filesystem::path(REEB_DATA_DIR) / "curves" / name;
}

inline std::mt19937_64 rng(unsigned long long salt = 0) { return std::mt19937_64(0x5eedULL + salt); }

/// Solves [[a, b], [c, d]] x = (e, f) by Cramer's rule.
inline std::array<double, 2> solve2(double a, double b, double c, double d, double e, double f) {
    const double det = a * d - b * c;
    return {(e * d - b * f) / det, (a * f - e * c) / det};
}

/// Central difference of h1 and h2 at t with step h.
inline std::array<double, 2> central_difference(const curves::LutzCurve& c, double t, double h) {
    const curves::CurveJet p = c.at(t + h);
    const curves::CurveJet m = c.at(t - h);
    return {(p.h1 - m.h1) / (2.0 * h), (p.h2 - m.h2) / (2.0 * h)};
}

inline curves::LutzCurve clockwise_circle(double speed, curves::Interval domain) {
    return curves::LutzCurve::closed_form(domain, [speed](double t) {
        return curves::CurveJet{std::cos(speed * t), -std::sin(speed * t), -speed * std::sin(speed * t),
                                -speed * std::cos(speed * t)};
    });
}

}  // namespace reeb::test
