#include "reeb/cattorus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "reeb/errors.hpp"

namespace reeb::cat {

namespace {

constexpr std::array<double, 6> kFibonacci{1.0, 1.0, 2.0, 3.0, 5.0, 8.0};

}  // namespace

const CatConstants& constants() {
    static const CatConstants c = [] {
        const double s5 = std::sqrt(5.0);
        CatConstants k{};
        k.A = {{{2, 1}, {1, 1}}};
        k.lambda = (3.0 + s5) / 2.0;
        k.lambda_inv = (3.0 - s5) / 2.0;
        k.log_lambda = std::log(k.lambda);
        return k;
    }();
    return c;
}

curves::CurveJet alpha_n(unsigned n, double t) {
    const CatConstants& k = constants();
    const double s5 = std::sqrt(5.0);
    const double pre = std::sqrt(2.0) / s5;
    const double a = (s5 - 1.0) / 2.0;
    const double b = (s5 + 1.0) / 2.0;
    const double w = 2.0 * static_cast<double>(n) * std::numbers::pi;  // phase speed
    const double phase = std::numbers::pi / 4.0 + w * t;
    const double S = std::sin(phase);
    const double C = std::cos(phase);
    const double up = std::exp(k.log_lambda * t);
    const double down = std::exp(-k.log_lambda * t);
    const double L = k.log_lambda;

    // d/dt (S up)   = (w C + L S) up
    // d/dt (C down) = -(w S + L C) down
    const double dSup = (w * C + L * S) * up;
    const double dCdown = -(w * S + L * C) * down;

    curves::CurveJet j;
    j.h1 = pre * (S * up - C * down);
    j.h2 = pre * (a * S * up + b * C * down);
    j.dh1 = pre * (dSup - dCdown);
    j.dh2 = pre * (a * dSup + b * dCdown);
    return j;
}

curves::LutzCurve alpha_curve(unsigned n, curves::Interval domain) {
    return curves::LutzCurve::closed_form(
        domain, [n](double t) { return alpha_n(n, t); }, {"alpha_n", {{"n", static_cast<double>(n)}}});
}

double contact_determinant(unsigned n, double t) {
    const double w = 2.0 * static_cast<double>(n) * std::numbers::pi;
    return -(2.0 / std::sqrt(5.0)) * (w + std::cos(2.0 * w * t) * constants().log_lambda);
}

double check_equivariance(unsigned n, double t, const Monodromy& m) {
    const curves::CurveJet now = alpha_n(n, t);
    const curves::CurveJet before = alpha_n(n, t - 1.0);
    const double r1 = now.h1 - (static_cast<double>(m[0][0]) * before.h1 + static_cast<double>(m[0][1]) * before.h2);
    const double r2 = now.h2 - (static_cast<double>(m[1][0]) * before.h1 + static_cast<double>(m[1][1]) * before.h2);
    return std::max(std::abs(r1), std::abs(r2));
}

double check_equivariance(unsigned n, double t) { return check_equivariance(n, t, constants().A); }

Word parse_word(std::string_view text, std::string_view alphabet) {
    Word w;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const auto pos = alphabet.find(lower);
        if (pos == std::string_view::npos) {
            throw ValidationError(std::string("word letter '") + ch + "' is not a generator");
        }
        w.letters.emplace_back(pos, std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1);
    }
    return w;
}

zl::IntVector exponent_sums(const Word& w, std::size_t ngens) {
    zl::IntVector v(ngens);
    for (const auto& [g, e] : w.letters) {
        if (g >= ngens) {
            throw DimensionError("word uses generator " + std::to_string(g) + " beyond ngens");
        }
        v[g] += e;
    }
    return v;
}

std::vector<Word> cat_relators() {
    constexpr std::string_view abc = "abc";
    return {parse_word("abAB", abc), parse_word("acBAAC", abc), parse_word("bcBAC", abc)};
}

zl::IntMatrix cat_h1_presentation() {
    std::vector<zl::IntVector> rows;
    for (const Word& w : cat_relators()) {
        rows.push_back(exponent_sums(w, 3));
    }
    return zl::IntMatrix::from_rows(rows, 3);
}

IdentityReport verify_identities(unsigned n, std::size_t samples) {
    IdentityReport r;
    r.n = n;
    r.samples = std::max<std::size_t>(samples, 2);
    const Monodromy wrong{{{1, 1}, {0, 1}}};
    for (std::size_t i = 0; i < r.samples; ++i) {
        const double t = 3.0 * static_cast<double>(i) / static_cast<double>(r.samples - 1);
        r.equivariance_residual = std::max(r.equivariance_residual, check_equivariance(n, t));
        r.determinant_residual =
            std::max(r.determinant_residual, std::abs(alpha_n(n, t).defect() - contact_determinant(n, t)));
        r.negative_control_residual = std::max(r.negative_control_residual, check_equivariance(n, t, wrong));
    }
    const curves::CurveJet origin = alpha_n(n, 0.0);
    r.initial_residual = std::max(std::abs(origin.h1), std::abs(origin.h2 - 1.0));
    for (int k = 1; k <= 3; ++k) {
        const curves::CurveJet j = alpha_n(n, static_cast<double>(k));
        r.fibonacci[static_cast<std::size_t>(2 * k - 2)] = j.h2;
        r.fibonacci[static_cast<std::size_t>(2 * k - 1)] = j.h1;
    }
    for (std::size_t i = 0; i < kFibonacci.size(); ++i) {
        r.fibonacci_residual = std::max(r.fibonacci_residual, std::abs(r.fibonacci[i] - kFibonacci[i]));
    }
    const curves::LutzCurve curve = alpha_curve(n);
    r.winding = curves::winding_angle(curve);
    r.torsion = curves::torsion_count_relative(curve, alpha_curve(0));
    r.zero_torsion_witness = curves::zero_torsion_witness(curve);
    return r;
}

}  // namespace reeb::cat
