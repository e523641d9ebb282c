#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "reeb/curves.hpp"

namespace reeb::flow {

/// A point of the Lutz chart (interval x T^2) at a given flow time.
/// Angles are reduced to [0, 2 pi) in every stored state.
struct FlowState {
    double t = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double time = 0.0;
};

enum class FlowStatus { Completed, ContactViolation };

enum class Direction { Forward, Backward };

struct Trajectory {
    std::vector<FlowState> states;
    /// Signed: negative for backward integration.
    double step = 0.0;
    /// max |f(state) - f(state_0)|
    double integral_drift = 0.0;
    /// max |t(state) - t(state_0)|
    double t_drift = 0.0;
    FlowStatus status = FlowStatus::Completed;
    std::string error;

    const FlowState& final_state() const { return states.back(); }
};

/// One classical fourth-order Runge-Kutta step of y' = field(y).
template <typename Field, std::size_t N>
std::array<double, N> rk4_step(const Field& field, const std::array<double, N>& y, double h) {
    auto axpy = [](const std::array<double, N>& a, double s, const std::array<double, N>& b) {
        std::array<double, N> r{};
        for (std::size_t i = 0; i < N; ++i) {
            r[i] = a[i] + s * b[i];
        }
        return r;
    };
    const auto k1 = field(y);
    const auto k2 = field(axpy(y, 0.5 * h, k1));
    const auto k3 = field(axpy(y, 0.5 * h, k2));
    const auto k4 = field(axpy(y, h, k3));
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

/// Fixed-step RK4 integration of the Reeb field (R1(t), R2(t)) with dt/dtime = 0.
///
/// Takes ceil(T / dt) steps, the last one shortened to land on T. Angles are
/// carried unreduced and only reduced when a state is stored. If the contact
/// condition fails at a stage point the run stops there: the partial
/// trajectory is returned with status ContactViolation.
///
/// Throws ValidationError unless dt > 0 and T >= dt.
Trajectory integrate_reeb(const curves::LutzCurve& curve, const curves::BottProfile& profile, FlowState x0,
                          double T, double dt, Direction direction = Direction::Forward);

/// x0 + T * R(t), reduced mod 2 pi: the exact Reeb flow on the torus {t}.
curves::TorusVector exact_linear_flow(const curves::LutzCurve& curve, double t, curves::TorusVector x0, double T);

/// Reduce an angle to [0, 2 pi).
double reduce_angle(double x);

/// Signed distance between two angles, in (-pi, pi].
double angle_difference(double a, double b);

/// Writes "time,t,x1,x2,f" rows, header included.
void write_csv(std::ostream& os, const Trajectory& traj, const curves::BottProfile& profile);

}  // namespace reeb::flow
