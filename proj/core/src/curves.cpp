#include "reeb/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "reeb/errors.hpp"

namespace reeb::curves {

namespace {

using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;

constexpr double kDomainSlack = 1e-12;

/// Fourth-order one-sided difference at the first (or last) sample.
double end_slope(const std::vector<double>& f, double h, bool right) {
    const std::size_t n = f.size();
    auto at = [&](std::size_t k) { return right ? f[n - 1 - k] : f[k]; };
    const double d = (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4)) / (12.0 * h);
    return right ? -d : d;
}

double central_slope(const std::vector<double>& f, std::size_t i, double h) {
    return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
}
// Base grid for winding accumulation; intervals are bisected until each
// increment turns by less than kMaxStepTurn.
constexpr std::size_t kWindingBaseIntervals = 256;
constexpr double kMaxStepTurn = std::numbers::pi / 4.0;
constexpr int kMaxWindingDepth = 40;
constexpr double kTorsionTolerance = 1e-3;

std::string describe(double t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}

}  // namespace

struct LutzCurve::Impl {
    Interval domain;
    Tag tag;
    Evaluator eval;
    std::optional<Samples> samples;
    std::optional<Spline> s1;
    std::optional<Spline> s2;
};

LutzCurve::LutzCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

LutzCurve LutzCurve::closed_form(Interval domain, Evaluator eval, Tag tag) {
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
        throw DomainError("curve domain must be a finite interval with lo < hi");
    }
    if (!eval) {
        throw ValidationError("closed-form curve needs an evaluator");
    }
    auto impl = std::make_shared<Impl>();
    impl->domain = domain;
    impl->eval = std::move(eval);
    impl->tag = std::move(tag);
    return LutzCurve(std::move(impl));
}

LutzCurve LutzCurve::sampled(double t0, double step, std::vector<double> h1, std::vector<double> h2,
                             double derivative_tolerance) {
    if (h1.size() != h2.size()) {
        throw DimensionError("sampled curve: h1 and h2 sample counts differ");
    }
    if (h1.size() < 5) {
        throw ValidationError("sampled curve: at least 5 samples are required");
    }
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(t0)) {
        throw ValidationError("sampled curve: grid step must be positive and finite");
    }
    for (std::size_t i = 0; i < h1.size(); ++i) {
        if (!std::isfinite(h1[i]) || !std::isfinite(h2[i])) {
            throw ValidationError("sampled curve: non-finite sample at index " + std::to_string(i));
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->domain = {t0, t0 + step * static_cast<double>(h1.size() - 1)};
    impl->s1.emplace(h1.data(), h1.size(), t0, step, end_slope(h1, step, false), end_slope(h1, step, true));
    impl->s2.emplace(h2.data(), h2.size(), t0, step, end_slope(h2, step, false), end_slope(h2, step, true));
    impl->samples = Samples{t0, step, std::move(h1), std::move(h2), derivative_tolerance};
    return LutzCurve(std::move(impl));
}

const Interval& LutzCurve::domain() const { return impl_->domain; }

CurveJet LutzCurve::at(double t) const {
    const Interval& d = impl_->domain;
    const double slack = kDomainSlack * std::max({1.0, std::abs(d.lo), std::abs(d.hi)});
    if (!(t >= d.lo - slack && t <= d.hi + slack)) {
        throw DomainError("t = " + describe(t) + " outside curve domain [" + describe(d.lo) + ", " +
                          describe(d.hi) + "]");
    }
    t = std::clamp(t, d.lo, d.hi);
    CurveJet j;
    if (impl_->samples) {
        j = {(*impl_->s1)(t), (*impl_->s2)(t), impl_->s1->prime(t), impl_->s2->prime(t)};
    } else {
        j = impl_->eval(t);
    }
    if (!std::isfinite(j.h1) || !std::isfinite(j.h2) || !std::isfinite(j.dh1) || !std::isfinite(j.dh2)) {
        throw NumericError("non-finite curve evaluation at t = " + describe(t));
    }
    return j;
}

bool LutzCurve::is_sampled() const { return impl_->samples.has_value(); }

const LutzCurve::Tag& LutzCurve::tag() const { return impl_->tag; }

const LutzCurve::Samples* LutzCurve::samples() const {
    return impl_->samples ? &*impl_->samples : nullptr;
}

LutzCurve make_segment(double a1, double b1, double a2, double b2, Interval domain) {
    return LutzCurve::closed_form(
        domain,
        [=](double t) { return CurveJet{a1 + b1 * t, a2 + b2 * t, b1, b2}; },
        {"segment", {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}}});
}

LutzCurve make_klein_normal(Interval domain) {
    return LutzCurve::closed_form(
        domain, [](double t) { return CurveJet{1.0, -t, 0.0, -1.0}; }, {"klein_normal", {}});
}

BottProfile BottProfile::quadratic(double c, double sign, double center) {
    return {[=](double t) { return c + sign * (t - center) * (t - center); },
            [=](double t) { return 2.0 * sign * (t - center); }, Mode::Morse};
}

BottProfile BottProfile::cosine(double period) {
    const double w = 2.0 * std::numbers::pi / period;
    return {[=](double t) { return std::cos(w * t); }, [=](double t) { return -w * std::sin(w * t); },
            Mode::Morse};
}

BottProfile BottProfile::linear(double slope) {
    return {[=](double t) { return slope * t; }, [=](double) { return slope; }, Mode::Monotone};
}

double contact_defect(const LutzCurve& curve, double t) { return curve.at(t).defect(); }

ContactCheck check_contact(const LutzCurve& curve, std::size_t samples) {
    samples = std::max<std::size_t>(samples, 2);
    const Interval& d = curve.domain();
    ContactCheck out;
    out.samples = samples;
    out.max_defect = -std::numeric_limits<double>::infinity();
    out.min_radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = d.lo + d.length() * static_cast<double>(i) / static_cast<double>(samples - 1);
        const CurveJet j = curve.at(t);
        const double delta = j.defect();
        if (delta > out.max_defect) {
            out.max_defect = delta;
            out.worst_t = t;
        }
        out.min_radius = std::min(out.min_radius, std::hypot(j.h1, j.h2));
    }
    out.contact = out.max_defect < 0.0 && out.min_radius > 0.0;
    return out;
}

bool is_contact(const LutzCurve& curve, std::size_t samples) { return check_contact(curve, samples).contact; }

void validate(const LutzCurve& curve, std::size_t samples) {
    const ContactCheck c = check_contact(curve, samples);
    if (!(c.min_radius > 0.0)) {
        throw ValidationError("curve passes through the origin");
    }
    if (!c.contact) {
        throw ValidationError("contact condition fails: Delta(" + describe(c.worst_t) +
                              ") = " + describe(c.max_defect) + " >= 0");
    }
    const auto* s = curve.samples();
    if (s == nullptr) {
        return;
    }
    // Spline derivatives against five-point central differences at the knots
    // two or more steps from either end.
    double scale = 0.0;
    double worst = 0.0;
    double worst_t = s->t0;
    for (std::size_t i = 2; i + 2 < s->h1.size(); ++i) {
        const double t = s->t0 + s->step * static_cast<double>(i);
        const double fd1 = central_slope(s->h1, i, s->step);
        const double fd2 = central_slope(s->h2, i, s->step);
        const CurveJet j = curve.at(t);
        scale = std::max({scale, std::abs(fd1), std::abs(fd2)});
        const double mismatch = std::max(std::abs(j.dh1 - fd1), std::abs(j.dh2 - fd2));
        if (mismatch > worst) {
            worst = mismatch;
            worst_t = t;
        }
    }
    if (scale == 0.0) {
        scale = 1.0;
    }
    if (worst > s->derivative_tolerance * scale) {
        throw ValidationError("sampled curve: derivative reconstruction mismatch " + describe(worst / scale) +
                              " (relative) at t = " + describe(worst_t) + " exceeds tolerance " +
                              describe(s->derivative_tolerance));
    }
}

TorusVector reeb_velocity(const LutzCurve& curve, double t) {
    const CurveJet j = curve.at(t);
    const double delta = j.defect();
    if (!(delta < 0.0)) {
        throw ContactViolation("Delta(" + describe(t) + ") = " + describe(delta) + " is not negative");
    }
    return {j.dh2 / delta, -j.dh1 / delta};
}

TorusVector transverse_y(const LutzCurve& curve, const BottProfile& profile, double t) {
    const CurveJet j = curve.at(t);
    const double delta = j.defect();
    if (!(delta < 0.0)) {
        throw ContactViolation("Delta(" + describe(t) + ") = " + describe(delta) + " is not negative");
    }
    const double fp = profile.df(t);
    const TorusVector y{-fp * j.h2 / delta, fp * j.h1 / delta};
    const double a1 = j.h1 * y.x1;
    const double a2 = j.h2 * y.x2;
    if (!std::isfinite(y.x1) || !std::isfinite(y.x2) ||
        std::abs(a1 + a2) > 1e-12 * (std::abs(a1) + std::abs(a2)) + 1e-300) {
        throw NumericError("alpha(Y) = 0 fails at t = " + describe(t));
    }
    return y;
}

namespace {

struct Point {
    double x;
    double y;
};

class WindingAccumulator {
public:
    WindingAccumulator(const LutzCurve& curve, double scale) : curve_(curve), floor_(1e-14 * scale) {}

    Point eval(double t) const {
        const CurveJet j = curve_.at(t);
        if (!(std::hypot(j.h1, j.h2) > floor_)) {
            throw SingularityError("curve reaches the origin near t = " + describe(t));
        }
        return {j.h1, j.h2};
    }

    double span(double ta, Point pa, double tb, Point pb, int depth) const {
        const double turn = std::atan2(pa.x * pb.y - pa.y * pb.x, pa.x * pb.x + pa.y * pb.y);
        if (std::abs(turn) < kMaxStepTurn) {
            return turn;
        }
        if (depth >= kMaxWindingDepth) {
            throw ResolutionError("winding step still turns " + describe(turn) + " rad near t = " +
                                  describe(ta) + " at maximum refinement");
        }
        const double tm = 0.5 * (ta + tb);
        const Point pm = eval(tm);
        return span(ta, pa, tm, pm, depth + 1) + span(tm, pm, tb, pb, depth + 1);
    }

private:
    const LutzCurve& curve_;
    double floor_;
};

}  // namespace

double winding_angle(const LutzCurve& curve, double t0, double t1) {
    if (t0 > t1) {
        return -winding_angle(curve, t1, t0);
    }
    // Validate both ends before doing any work.
    const CurveJet j0 = curve.at(t0);
    const CurveJet j1 = curve.at(t1);
    if (t0 == t1) {
        return 0.0;
    }
    const double scale = std::max({std::hypot(j0.h1, j0.h2), std::hypot(j1.h1, j1.h2), 1e-300});
    const WindingAccumulator acc(curve, scale);
    double total = 0.0;
    double ta = t0;
    Point pa = acc.eval(t0);
    for (std::size_t i = 1; i <= kWindingBaseIntervals; ++i) {
        const double tb =
            i == kWindingBaseIntervals
                ? t1
                : t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(kWindingBaseIntervals);
        const Point pb = acc.eval(tb);
        total += acc.span(ta, pa, tb, pb, 0);
        ta = tb;
        pa = pb;
    }
    return total;
}

double winding_angle(const LutzCurve& curve) {
    return winding_angle(curve, curve.domain().lo, curve.domain().hi);
}

long torsion_count_relative(const LutzCurve& curve, const LutzCurve& base) {
    const Interval& a = curve.domain();
    const Interval& b = base.domain();
    const double slack = kDomainSlack * std::max({1.0, std::abs(a.lo), std::abs(a.hi)});
    if (std::abs(a.lo - b.lo) > slack || std::abs(a.hi - b.hi) > slack) {
        throw DomainError("torsion comparison needs curves on the same domain");
    }
    const double ratio = (winding_angle(base) - winding_angle(curve)) / (2.0 * std::numbers::pi);
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > kTorsionTolerance) {
        throw InconsistencyError("relative winding is " + describe(ratio) +
                                 " full turns, not an integer within 1e-3");
    }
    return static_cast<long>(rounded);
}

bool zero_torsion_witness(const LutzCurve& curve, std::size_t samples) {
    samples = std::max<std::size_t>(samples, 2);
    const Interval& d = curve.domain();
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = d.lo + d.length() * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (!(curve.at(t).h2 > 0.0)) {
            return false;
        }
    }
    return true;
}

}  // namespace reeb::curves
