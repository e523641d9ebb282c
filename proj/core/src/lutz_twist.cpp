#include "reeb/lutz_twist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "reeb/errors.hpp"

namespace reeb::curves {

namespace {

struct Vec {
    double x;
    double y;
};

struct Line {
    Vec start;
    Vec dir;  // unit
    double length;
};

struct Arc {
    Vec center;
    double radius;
    double start_angle;
    double sweep;  // negative: clockwise
};

double piece_length(const Line& l) { return l.length; }
double piece_length(const Arc& a) { return a.radius * std::abs(a.sweep); }

/// Position and unit tangent at arc length s along a piece.
std::pair<Vec, Vec> piece_eval(const Line& l, double s) {
    return {{l.start.x + l.dir.x * s, l.start.y + l.dir.y * s}, l.dir};
}

std::pair<Vec, Vec> piece_eval(const Arc& a, double s) {
    const double phi = a.start_angle + std::copysign(s / a.radius, a.sweep);
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    const double sgn = a.sweep < 0 ? -1.0 : 1.0;
    return {{a.center.x + a.radius * c, a.center.y + a.radius * sn}, {-sgn * sn, sgn * c}};
}

using Piece = std::variant<Line, Arc>;

/// Arc-length parametrized C^1 path made of lines and circular arcs.
class Path {
public:
    explicit Path(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
        double acc = 0.0;
        for (const auto& p : pieces_) {
            starts_.push_back(acc);
            acc += std::visit([](const auto& q) { return piece_length(q); }, p);
        }
        length_ = acc;
    }

    double length() const { return length_; }
    double start_of(std::size_t i) const { return starts_[i]; }
    double end_of(std::size_t i) const { return i + 1 < starts_.size() ? starts_[i + 1] : length_; }

    std::pair<Vec, Vec> eval(double s) const {
        s = std::clamp(s, 0.0, length_);
        auto it = std::upper_bound(starts_.begin(), starts_.end(), s);
        const std::size_t i = static_cast<std::size_t>(std::distance(starts_.begin(), it)) - 1;
        const double local = s - starts_[i];
        return std::visit([local](const auto& q) { return piece_eval(q, local); }, pieces_[i]);
    }

private:
    std::vector<Piece> pieces_;
    std::vector<double> starts_;
    double length_ = 0.0;
};

// Indices of the axis-aligned pieces in build_path().
constexpr std::size_t kTopEntry = 0;
constexpr std::size_t kRight = 2;
constexpr std::size_t kBottom = 4;
constexpr std::size_t kTopExit = 6;

/// h1 where the exit line starts; the exit line is traversed at unit speed.
double exit_offset(double eps) { return 0.5 * eps; }

Path build_path(double eps, double C, const LutzTwistTemplate& tmpl) {
    const double pi = std::numbers::pi;
    const double X = tmpl.side_ratio * C;
    const double rho = tmpl.corner_ratio * std::min(X, C);
    const double w = exit_offset(eps);
    return Path({
        Line{{-eps, C}, {1.0, 0.0}, X - rho + eps},
        Arc{{X - rho, C - rho}, rho, pi / 2, -pi / 2},
        Line{{X, C - rho}, {0.0, -1.0}, 2.0 * (C - rho)},
        Arc{{X - rho, -C + rho}, rho, 0.0, -pi / 2},
        Line{{X - rho, -C}, {-1.0, 0.0}, X - rho + w},
        Arc{{-w, 0.0}, C, -pi / 2, -pi},
        Line{{-w, C}, {1.0, 0.0}, w + eps},
    });
}

// Quintic smootherstep: w(0) = 0, w(1) = 1, w' = w'' = 0 at both ends.
double smootherstep(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }
double smootherstep_prime(double x) { return 30.0 * x * x * (1.0 - x) * (1.0 - x); }

/// Monotone map u in [-eps, eps] onto arc length [0, L] with unit slope at
/// both ends, so the template meets the segment with matching derivative.
/// On [knot, eps] it is a pure shift, which puts the exit line back at
/// h = (u, C): the twisted curve again contains the straight segment there.
struct Reparam {
    double eps;
    double excess;  // L - 2 eps, positive
    double knot;    // in (-eps, 0)

    double sigma(double u) const {
        if (u >= knot) {
            return u + eps + excess;
        }
        const double x = (u + eps) / (knot + eps);
        return (u + eps) + excess * smootherstep(x);
    }
    double dsigma(double u) const {
        if (u >= knot) {
            return 1.0;
        }
        const double x = (u + eps) / (knot + eps);
        return 1.0 + excess * smootherstep_prime(x) / (knot + eps);
    }
    /// Inverse by bisection; sigma is strictly increasing.
    double inverse(double s) const {
        double lo = -eps;
        double hi = eps;
        for (int k = 0; k < 200 && hi - lo > 1e-15 * eps; ++k) {
            const double mid = 0.5 * (lo + hi);
            (sigma(mid) < s ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
};

void check_template(const LutzTwistTemplate& tmpl) {
    if (!(tmpl.side_ratio > 0.0) || !(tmpl.corner_ratio > 0.0 && tmpl.corner_ratio < 1.0)) {
        throw ValidationError("Lutz twist template needs side_ratio > 0 and corner_ratio in (0, 1)");
    }
}

void check_window(const LutzCurve& curve, double s0, double eps, double C, const LutzTwistTemplate& tmpl) {
    if (!(eps > 0.0) || !std::isfinite(eps) || !std::isfinite(s0)) {
        throw ShapeError("Lutz twist window half-width must be positive");
    }
    if (!(C > 0.0) || !std::isfinite(C)) {
        throw ShapeError("Lutz twist needs C > 0");
    }
    if (!curve.domain().contains(Interval{s0 - eps, s0 + eps})) {
        throw DomainError("Lutz twist window [s0 - eps, s0 + eps] is not inside the curve domain");
    }
    const std::size_t n = std::max<std::size_t>(tmpl.shape_check_samples, 2);
    const double tol = tmpl.shape_tolerance * std::max({1.0, C, eps});
    for (std::size_t i = 0; i < n; ++i) {
        const double t = s0 - eps + 2.0 * eps * static_cast<double>(i) / static_cast<double>(n - 1);
        const CurveJet j = curve.at(t);
        if (std::abs(j.h1 - (t - s0)) > tol || std::abs(j.h2 - C) > tol || std::abs(j.dh1 - 1.0) > tol ||
            std::abs(j.dh2) > tol) {
            throw ShapeError("curve is not (t - s0, C) on the Lutz twist window (first mismatch at t = " +
                             std::to_string(t) + ")");
        }
    }
}

}  // namespace

LutzCurve full_lutz_twist(const LutzCurve& curve, double s0, double eps, double C,
                          const LutzTwistTemplate& tmpl) {
    check_template(tmpl);
    check_window(curve, s0, eps, C, tmpl);

    const Path path = build_path(eps, C, tmpl);
    const Reparam rep{eps, path.length() - 2.0 * eps, -exit_offset(eps)};
    const double lo = s0 - eps;
    const double hi = s0 + eps;

    auto eval = [curve, path, rep, s0, lo, hi](double t) -> CurveJet {
        if (t <= lo || t >= hi) {
            return curve.at(t);
        }
        const double u = t - s0;
        const auto [p, tangent] = path.eval(rep.sigma(u));
        const double speed = rep.dsigma(u);
        return {p.x, p.y, tangent.x * speed, tangent.y * speed};
    };
    LutzCurve out = LutzCurve::closed_form(curve.domain(), std::move(eval));

    const std::size_t n = std::max<std::size_t>(tmpl.contact_check_samples, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double delta = out.at(t).defect();
        if (!(delta < 0.0)) {
            throw ConstructionError("Lutz twist template violates the contact condition at t = " +
                                    std::to_string(t) + "; enlarge eps");
        }
    }
    return out;
}

std::vector<AxisAlignedSpan> lutz_twist_axis_spans(double s0, double eps, double C,
                                                   const LutzTwistTemplate& tmpl) {
    check_template(tmpl);
    const Path path = build_path(eps, C, tmpl);
    const Reparam rep{eps, path.length() - 2.0 * eps, -exit_offset(eps)};
    auto span = [&](TwistPiece piece, std::size_t index) {
        return AxisAlignedSpan{piece, s0 + rep.inverse(path.start_of(index)),
                               s0 + rep.inverse(path.end_of(index))};
    };
    return {span(TwistPiece::Top, kTopEntry), span(TwistPiece::Right, kRight),
            span(TwistPiece::Bottom, kBottom), span(TwistPiece::Top, kTopExit)};
}

}  // namespace reeb::curves
