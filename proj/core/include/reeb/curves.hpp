#pragma once

// Lutz-type contact forms  alpha = h1(t) dx1 + h2(t) dx2  on an interval times
// a 2-torus, represented by the planar curve t -> (h1(t), h2(t)).
//
// Conventions used throughout:
//   defect      Delta(t) = h1 h2' - h1' h2, contact iff Delta < 0 everywhere
//   Reeb field  R = (h2' d/dx1 - h1' d/dx2) / Delta
//   winding     counterclockwise positive, so contact curves wind negatively

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace reeb::curves {

inline constexpr std::size_t kDefaultContactSamples = 10001;
inline constexpr double kDefaultDerivativeTolerance = 1e-6;

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    bool contains(double t) const { return t >= lo && t <= hi; }
    bool contains(const Interval& other) const { return other.lo >= lo && other.hi <= hi; }
};

/// Values and first derivatives of (h1, h2) at one parameter value.
struct CurveJet {
    double h1 = 0.0;
    double h2 = 0.0;
    double dh1 = 0.0;
    double dh2 = 0.0;

    double defect() const { return h1 * dh2 - dh1 * h2; }
};

/// Components of a vector field along the torus factor, in (x1, x2).
struct TorusVector {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Planar curve defining a (candidate) Lutz-type form.
///
/// Either a closed-form evaluator or uniform samples reconstructed with
/// cubic B-splines. Instances are immutable and cheap to copy. Construction
/// does not imply the contact condition; use validate() or check_contact().
class LutzCurve {
public:
    using Evaluator = std::function<CurveJet(double)>;

    /// Registry identity of a closed-form curve, used for serialization.
    /// An empty kind marks an anonymous (composite or ad hoc) curve.
    struct Tag {
        std::string kind;
        std::map<std::string, double> params;
    };

    struct Samples {
        double t0 = 0.0;
        double step = 0.0;
        std::vector<double> h1;
        std::vector<double> h2;
        double derivative_tolerance = kDefaultDerivativeTolerance;
    };

    static LutzCurve closed_form(Interval domain, Evaluator eval, Tag tag = {});

    /// Uniform samples h(t0 + i*step). Requires at least 5 samples, step > 0.
    static LutzCurve sampled(double t0, double step, std::vector<double> h1, std::vector<double> h2,
                             double derivative_tolerance = kDefaultDerivativeTolerance);

    const Interval& domain() const;

    /// Throws DomainError outside the domain, NumericError on non-finite values.
    CurveJet at(double t) const;

    bool is_sampled() const;
    const Tag& tag() const;
    /// nullptr for closed-form curves.
    const Samples* samples() const;

private:
    struct Impl;
    explicit LutzCurve(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// h(t) = (a1 + b1 t, a2 + b2 t). Constant defect a1 b2 - b1 a2.
LutzCurve make_segment(double a1, double b1, double a2, double b2, Interval domain);

/// Klein-bottle normal form h1 = 1, h2 = -t, i.e. alpha = ds - r dtheta.
LutzCurve make_klein_normal(Interval domain);

/// The Bott integral as a function of the transverse coordinate.
struct BottProfile {
    enum class Mode { Morse, Monotone };

    std::function<double(double)> f;
    std::function<double(double)> df;
    Mode mode = Mode::Morse;

    /// c + sign * (t - center)^2
    static BottProfile quadratic(double c = 0.0, double sign = 1.0, double center = 0.0);
    /// cos(2 pi t / period); a Morse function on the circle R / period Z.
    static BottProfile cosine(double period = 1.0);
    static BottProfile linear(double slope = 1.0);
};

double contact_defect(const LutzCurve& curve, double t);

struct ContactCheck {
    bool contact = false;
    double max_defect = 0.0;   // largest Delta seen (must be < 0)
    double worst_t = 0.0;      // where it was seen
    double min_radius = 0.0;   // smallest |h| seen
    std::size_t samples = 0;
};

/// Samples Delta on a uniform grid. Delta == 0 anywhere counts as a failure.
ContactCheck check_contact(const LutzCurve& curve, std::size_t samples = kDefaultContactSamples);
bool is_contact(const LutzCurve& curve, std::size_t samples = kDefaultContactSamples);

/// Contact condition plus, for sampled curves, the spline-vs-finite-difference
/// derivative check. Throws ValidationError naming the failing quantity.
void validate(const LutzCurve& curve, std::size_t samples = kDefaultContactSamples);

/// Throws ContactViolation if Delta(t) >= 0.
TorusVector reeb_velocity(const LutzCurve& curve, double t);

/// The field Y with alpha(Y) = 0 and i_Y d(alpha) = -df. It has no transverse
/// component and vanishes exactly where f' does.
TorusVector transverse_y(const LutzCurve& curve, const BottProfile& profile, double t);

/// Total turning angle of (h1, h2) about the origin over [t0, t1].
/// Throws SingularityError if the curve reaches the origin and
/// ResolutionError if the refinement cannot resolve the rotation.
double winding_angle(const LutzCurve& curve, double t0, double t1);
double winding_angle(const LutzCurve& curve);

/// round((W(base) - W(curve)) / 2pi) over the shared domain: the number of
/// extra clockwise full twists of `curve` relative to `base`.
long torsion_count_relative(const LutzCurve& curve, const LutzCurve& base);

/// True iff h2 > 0 at every sample; certifies zero Giroux torsion.
bool zero_torsion_witness(const LutzCurve& curve, std::size_t samples = kDefaultContactSamples);

}  // namespace reeb::curves
