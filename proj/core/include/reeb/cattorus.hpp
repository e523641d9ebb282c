#pragma once

// The mapping torus of Arnold's cat map A = [[2, 1], [1, 1]] and the explicit
// family alpha_n of Bott-integrable Lutz-type contact forms on it.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reeb/curves.hpp"
#include "reeb/zlinalg.hpp"

namespace reeb::cat {

using Monodromy = std::array<std::array<long, 2>, 2>;

struct CatConstants {
    Monodromy A{{{2, 1}, {1, 1}}};
    double lambda;      // (3 + sqrt 5) / 2
    double lambda_inv;  // (3 - sqrt 5) / 2
    double log_lambda;
};

const CatConstants& constants();

/// h1, h2 of alpha_n and their exact t-derivatives.
curves::CurveJet alpha_n(unsigned n, double t);

/// alpha_n as a closed-form curve (registry kind "alpha_n").
curves::LutzCurve alpha_curve(unsigned n, curves::Interval domain = {0.0, 1.0});

/// Closed form of the defect: -(2/sqrt 5) (2 n pi + cos(4 n pi t) log lambda).
double contact_determinant(unsigned n, double t);

/// Residual of h(t) = M h(t - 1), the condition for alpha_n to descend to the
/// mapping torus with monodromy M. With M = A this vanishes up to rounding.
double check_equivariance(unsigned n, double t, const Monodromy& monodromy);
double check_equivariance(unsigned n, double t);

/// A word in the free group on named generators; each letter is a generator
/// index and an exponent of +1 or -1.
struct Word {
    std::vector<std::pair<std::size_t, int>> letters;
};

/// Parse "acBAAC": lowercase is a generator, uppercase its inverse.
Word parse_word(std::string_view text, std::string_view alphabet);

/// Abelianization of a word: exponent sum per generator.
zl::IntVector exponent_sums(const Word& w, std::size_t ngens);

/// Relators [a,b], acb^-1a^-2c^-1, bcb^-1a^-1c^-1 of pi_1 over (a, b, c).
std::vector<Word> cat_relators();

/// Abelianized relation matrix over (a, b, c); its cokernel is Z, generated by c.
zl::IntMatrix cat_h1_presentation();

/// Summary of every checkable identity of alpha_n at one value of n.
struct IdentityReport {
    unsigned n = 0;
    std::size_t samples = 0;
    double equivariance_residual = 0.0;
    double determinant_residual = 0.0;
    double initial_residual = 0.0;  // |h1(0)| and |h2(0) - 1|
    std::array<double, 6> fibonacci{};  // h2(1), h1(1), h2(2), h1(2), h2(3), h1(3)
    double fibonacci_residual = 0.0;
    double winding = 0.0;  // over [0, 1]
    long torsion = 0;      // relative to alpha_0
    bool zero_torsion_witness = false;
    double negative_control_residual = 0.0;  // equivariance with [[1,1],[0,1]]
};

/// Evaluates the identities on `samples` uniformly spaced points of [0, 3].
IdentityReport verify_identities(unsigned n, std::size_t samples = 1000);

}  // namespace reeb::cat
