#pragma once

#include <cstddef>
#include <vector>

#include "reeb/curves.hpp"

namespace reeb::curves {

/// Geometry of the full-twist excursion, in units of the segment height C.
///
/// Inside the window the curve runs right along h2 = C, turns down a rounded
/// corner onto the vertical h1 = side_ratio * C, runs left along h2 = -C,
/// climbs back to (-eps/2, C) on a half circle of radius C centred at
/// (-eps/2, 0), and continues right to the window end. Every piece turns
/// clockwise about the origin, so the defect stays negative for all eps, C > 0.
/// On [s0 - eps/2, s0 + eps] the result is again exactly (t - s0, C), so the
/// twist can be repeated there with a smaller window.
struct LutzTwistTemplate {
    double side_ratio = 1.0;
    /// Corner radius as a fraction of min(side, C); must lie in (0, 1).
    double corner_ratio = 0.5;
    std::size_t shape_check_samples = 201;
    double shape_tolerance = 1e-9;
    std::size_t contact_check_samples = 20001;
};

/// Which axis-aligned piece of the template a parameter range covers, with the
/// direction the Reeb field takes there.
enum class TwistPiece {
    Top,     // h2 = C,  R = +d/dx2 / C
    Right,   // h1 = X,  R = +d/dx1 / X
    Bottom,  // h2 = -C, R = -d/dx2 / C
};

struct AxisAlignedSpan {
    TwistPiece piece;
    double t_lo;
    double t_hi;
};

/// Replace the straight piece h = (t - s0, C) on [s0 - eps, s0 + eps] by one
/// extra clockwise loop around the origin. The result is C^1, agrees with the
/// input outside the open window, and winds exactly 2 pi less.
///
/// Throws DomainError if the window leaves the domain, ShapeError if the input
/// is not the required segment there (or C <= 0), and ConstructionError if
/// the template fails the contact check.
LutzCurve full_lutz_twist(const LutzCurve& curve, double s0, double eps, double C,
                          const LutzTwistTemplate& tmpl = {});

/// Parameter ranges of the twisted curve on which the template is
/// axis-aligned (excluding the rounded corners and the half circle).
std::vector<AxisAlignedSpan> lutz_twist_axis_spans(double s0, double eps, double C,
                                                   const LutzTwistTemplate& tmpl = {});

}  // namespace reeb::curves
