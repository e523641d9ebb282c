#include "reeb/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "reeb/errors.hpp"

namespace reeb::curves {

namespace {

constexpr std::size_t kRootScanPoints = 20001;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::array<double, 2> symmetric_eigenvalues(double a, double b, double d) {
    const double m = 0.5 * (a + d);
    const double q = std::hypot(0.5 * (a - d), b);
    return {m - q, m + q};
}

}  // namespace

PerturbationBump PerturbationBump::smoothstep(double delta, double epsilon) {
    const double e2 = epsilon * epsilon;
    auto chi = [=](double r) {
        const double a = std::abs(r);
        if (a <= epsilon) {
            return e2;
        }
        if (a >= 2.0 * epsilon) {
            return 0.0;
        }
        const double x = (a - epsilon) / epsilon;
        return e2 * (1.0 - x * x * x * (10.0 + x * (-15.0 + 6.0 * x)));
    };
    auto dchi = [=](double r) {
        const double a = std::abs(r);
        if (a <= epsilon || a >= 2.0 * epsilon) {
            return 0.0;
        }
        const double x = (a - epsilon) / epsilon;
        return -std::copysign(epsilon * 30.0 * x * x * (1.0 - x) * (1.0 - x), r);
    };
    return {delta, epsilon, chi, dchi};
}

void validate(const PerturbationBump& bump, std::size_t samples) {
    const double d = bump.delta;
    const double e = bump.epsilon;
    if (!(e > 0.0) || !(d > 0.0) || !std::isfinite(d)) {
        throw ValidationError("bump: delta and epsilon must be positive");
    }
    if (!(2.0 * e < d)) {
        throw ValidationError("bump: requires 2*epsilon < delta (epsilon = " + fmt(e) + ", delta = " + fmt(d) + ")");
    }
    if (!bump.chi || !bump.dchi) {
        throw ValidationError("bump: chi and dchi must be provided");
    }
    const double e2 = e * e;
    const double tol = 1e-14 * e2;
    samples = std::max<std::size_t>(samples, 3);
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = d * (2.0 * static_cast<double>(i) - static_cast<double>(samples - 1)) /
                         static_cast<double>(samples - 1);
        const double c = bump.chi(r);
        const double dc = bump.dchi(r);
        if (!std::isfinite(c) || !std::isfinite(dc)) {
            throw ValidationError("bump: non-finite chi at r = " + fmt(r));
        }
        if (c < -tol || c > e2 + tol) {
            throw ValidationError("bump: chi(" + fmt(r) + ") = " + fmt(c) + " outside [0, epsilon^2]");
        }
        if (std::abs(r) <= e && std::abs(c - e2) > tol) {
            throw ValidationError("bump: chi must equal epsilon^2 on [-epsilon, epsilon]; chi(" + fmt(r) +
                                  ") = " + fmt(c));
        }
        if (std::abs(r) >= 2.0 * e && std::abs(c) > tol) {
            throw ValidationError("bump: chi must vanish for |r| >= 2*epsilon; chi(" + fmt(r) + ") = " + fmt(c));
        }
        if (r != 0.0 && !(std::abs(dc) < std::abs(2.0 * r))) {
            throw ValidationError("bump: |chi'(" + fmt(r) + ")| = " + fmt(std::abs(dc)) + " is not < |2r|");
        }
    }
}

double perturbed_integral(const PerturbationBump& bump, double r, double theta) {
    return r * r + bump.chi(r) * std::cos(theta);
}

std::string to_string(CriticalType type) {
    switch (type) {
        case CriticalType::Minimum:
            return "minimum";
        case CriticalType::Maximum:
            return "maximum";
        case CriticalType::Saddle:
            return "saddle";
        case CriticalType::Degenerate:
            return "degenerate";
    }
    return "unknown";
}

CriticalSetReport perturb_critical_surface(const PerturbationBump& bump) {
    validate(bump);

    // g_theta = -chi(r) sin(theta). Where chi(r) = 0 we have |g_r| >= |2r| -
    // |chi'(r)| > 0 (and chi(0) > 0), so every critical point has sin = 0.
    const double d = bump.delta;
    const double h = 1e-6 * bump.epsilon;
    CriticalSetReport report;
    for (const double cos_theta : {1.0, -1.0}) {
        const double theta = cos_theta > 0 ? 0.0 : std::numbers::pi;
        auto gr = [&](double r) { return 2.0 * r + bump.dchi(r) * cos_theta; };

        std::vector<double> roots;
        auto push_root = [&](double r) {
            if (roots.empty() || std::abs(roots.back() - r) > 1e-12 * d) {
                roots.push_back(r);
            }
        };
        const std::size_t n = kRootScanPoints;
        auto node = [&](std::size_t i) {
            return d * (2.0 * static_cast<double>(i) - static_cast<double>(n - 1)) / static_cast<double>(n - 1);
        };
        double ra = node(0);
        double ga = gr(ra);
        if (ga == 0.0) {
            push_root(ra);
        }
        for (std::size_t i = 1; i < n; ++i) {
            const double rb = node(i);
            const double gb = gr(rb);
            if (gb == 0.0) {
                push_root(rb);
            } else if (ga != 0.0 && (ga < 0.0) != (gb < 0.0)) {
                double lo = ra;
                double hi = rb;
                double glo = ga;
                for (int k = 0; k < 200 && hi - lo > 1e-15 * d; ++k) {
                    const double mid = 0.5 * (lo + hi);
                    const double gm = gr(mid);
                    if (gm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((gm < 0.0) == (glo < 0.0)) {
                        lo = mid;
                        glo = gm;
                    } else {
                        hi = mid;
                    }
                }
                push_root(0.5 * (lo + hi));
            }
            ra = rb;
            ga = gb;
        }

        for (const double r : roots) {
            CriticalPoint p;
            p.r = r;
            p.theta = theta;
            const double ddchi = (bump.dchi(r + h) - bump.dchi(r - h)) / (2.0 * h);
            const double grr = 2.0 + ddchi * cos_theta;
            const double grt = 0.0;  // -chi'(r) sin(theta), sin = 0 here
            const double gtt = -bump.chi(r) * cos_theta;
            p.hessian = {{{grr, grt}, {grt, gtt}}};
            p.eigenvalues = symmetric_eigenvalues(grr, grt, gtt);
            const double scale = std::max({std::abs(grr), std::abs(gtt), 1e-300});
            const double zero = 1e-12 * scale;
            const auto [l0, l1] = p.eigenvalues;
            if (std::abs(l0) <= zero || std::abs(l1) <= zero) {
                p.type = CriticalType::Degenerate;
            } else if (l0 > 0.0) {
                p.type = CriticalType::Minimum;
            } else if (l1 < 0.0) {
                p.type = CriticalType::Maximum;
            } else {
                p.type = CriticalType::Saddle;
            }
            report.points.push_back(p);
        }
    }
    return report;
}

}  // namespace reeb::curves
