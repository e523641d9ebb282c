#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace reeb::curves {

/// Plateau function chi on [-delta, delta] used to break a critical torus or
/// Klein bottle of f = r^2 into one elliptic and one hyperbolic orbit.
///
/// Required: 2 eps < delta, chi = eps^2 on [-eps, eps], chi = 0 for
/// |r| >= 2 eps, 0 <= chi <= eps^2 and |chi'(r)| < |2r| for r != 0.
struct PerturbationBump {
    double delta = 1.0;
    double epsilon = 0.25;
    std::function<double(double)> chi;
    std::function<double(double)> dchi;

    /// Quintic smootherstep transitions on eps <= |r| <= 2 eps. The slope
    /// peaks at 15 eps / 8 < 2 eps <= |2r| there.
    static PerturbationBump smoothstep(double delta, double epsilon);
};

/// Throws ValidationError naming the first violated invariant.
void validate(const PerturbationBump& bump, std::size_t samples = 20001);

/// g(r, theta) = r^2 + chi(r) cos(theta)
double perturbed_integral(const PerturbationBump& bump, double r, double theta);

enum class CriticalType { Minimum, Maximum, Saddle, Degenerate };

std::string to_string(CriticalType type);

struct CriticalPoint {
    double r = 0.0;
    double theta = 0.0;
    CriticalType type = CriticalType::Degenerate;
    /// [[g_rr, g_rt], [g_rt, g_tt]]
    std::array<std::array<double, 2>, 2> hessian{};
    /// ascending
    std::array<double, 2> eigenvalues{};
};

struct CriticalSetReport {
    std::vector<CriticalPoint> points;
};

/// Critical set of g on [-delta, delta] x S^1 with Morse classification.
/// For a valid bump this is {(0, 0) saddle, (0, pi) minimum}.
CriticalSetReport perturb_critical_surface(const PerturbationBump& bump);

}  // namespace reeb::curves
