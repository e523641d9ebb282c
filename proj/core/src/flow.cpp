#include "reeb/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "reeb/errors.hpp"

namespace reeb::flow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Thrown from inside the vector field and caught by the driver loop.
struct StageViolation {
    std::string what;
};

}  // namespace

double reduce_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r >= kTwoPi ? 0.0 : r;
}

double angle_difference(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -std::numbers::pi) {
        d += kTwoPi;
    }
    return d;
}

Trajectory integrate_reeb(const curves::LutzCurve& curve, const curves::BottProfile& profile, FlowState x0,
                          double T, double dt, Direction direction) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ValidationError("integrate_reeb: dt must be positive");
    }
    if (!(T >= dt) || !std::isfinite(T)) {
        throw ValidationError("integrate_reeb: T must be at least dt");
    }
    const double sign = direction == Direction::Forward ? 1.0 : -1.0;

    auto field = [&](const std::array<double, 3>& y) -> std::array<double, 3> {
        const curves::CurveJet j = curve.at(y[0]);
        const double delta = j.defect();
        if (!(delta < 0.0)) {
            throw StageViolation{"contact condition fails at t = " + std::to_string(y[0])};
        }
        return {0.0, sign * j.dh2 / delta, -sign * j.dh1 / delta};
    };

    const auto steps = static_cast<std::size_t>(std::ceil(T / dt - 1e-9));
    Trajectory traj;
    traj.step = sign * dt;
    traj.states.reserve(steps + 1);
    const double f0 = profile.f(x0.t);
    traj.states.push_back({x0.t, reduce_angle(x0.x1), reduce_angle(x0.x2), x0.time});

    std::array<double, 3> y{x0.t, x0.x1, x0.x2};
    for (std::size_t k = 1; k <= steps; ++k) {
        const double elapsed_prev = static_cast<double>(k - 1) * dt;
        const double h = std::min(dt, T - elapsed_prev);
        try {
            y = rk4_step(field, y, h);
        } catch (const StageViolation& v) {
            traj.status = FlowStatus::ContactViolation;
            traj.error = v.what;
            break;
        } catch (const Error& e) {
            traj.status = FlowStatus::ContactViolation;
            traj.error = e.what();
            break;
        }
        const double elapsed = k == steps ? T : static_cast<double>(k) * dt;
        traj.states.push_back({y[0], reduce_angle(y[1]), reduce_angle(y[2]), x0.time + sign * elapsed});
        traj.integral_drift = std::max(traj.integral_drift, std::abs(profile.f(y[0]) - f0));
        traj.t_drift = std::max(traj.t_drift, std::abs(y[0] - x0.t));
    }
    return traj;
}

curves::TorusVector exact_linear_flow(const curves::LutzCurve& curve, double t, curves::TorusVector x0, double T) {
    const curves::TorusVector r = curves::reeb_velocity(curve, t);
    return {reduce_angle(x0.x1 + T * r.x1), reduce_angle(x0.x2 + T * r.x2)};
}

void write_csv(std::ostream& os, const Trajectory& traj, const curves::BottProfile& profile) {
    const auto old = os.precision(17);
    os << "time,t,x1,x2,f\n";
    for (const FlowState& s : traj.states) {
        os << s.time << ',' << s.t << ',' << s.x1 << ',' << s.x2 << ',' << profile.f(s.t) << '\n';
    }
    os.precision(old);
}

}  // namespace reeb::flow
