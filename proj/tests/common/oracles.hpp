#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the library code they are used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reeb::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<BigInt>>;

/// Determinant by Gaussian elimination over the rationals.
inline BigInt rational_determinant(const Dense& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Rational(m[i][j]);
        }
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    return boost::multiprecision::numerator(det);
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) {
        return;
    }
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}. Stops at the first vanishing D_k.
inline std::vector<BigInt> determinantal_invariant_factors(const Dense& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<BigInt> factors;
    BigInt prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        BigInt g = 0;
        for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
            for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
                Dense minor(k, std::vector<BigInt>(k));
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = 0; b < k; ++b) {
                        minor[a][b] = m[ri[a]][ci[b]];
                    }
                }
                g = boost::multiprecision::gcd(g, BigInt(abs(rational_determinant(minor))));
            });
        });
        if (g == 0) {
            break;
        }
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

/// Cycle rank by building a spanning forest with depth-first search and
/// counting the edges left over.
inline std::size_t spanning_forest_cycle_rank(std::size_t vertices,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    std::vector<bool> seen(vertices, false);
    std::size_t tree_edges = 0;
    for (std::size_t s = 0; s < vertices; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adj[v]) {
                (void)e;
                if (!seen[w]) {
                    seen[w] = true;
                    ++tree_edges;
                    stack.push_back(w);
                }
            }
        }
    }
    return edges.size() - tree_edges;
}

/// Exponent sums of a relator written with lowercase generators and
/// uppercase inverses, counted letter by letter.
inline std::vector<long> letter_count(const std::string& word, const std::string& alphabet) {
    std::vector<long> v(alphabet.size(), 0);
    for (char ch : word) {
        for (std::size_t g = 0; g < alphabet.size(); ++g) {
            if (ch == alphabet[g]) {
                ++v[g];
            } else if (ch == alphabet[g] - 'a' + 'A') {
                --v[g];
            }
        }
    }
    return v;
}

/// Critical-point search for g(r, theta) = r^2 + chi(r) cos(theta) on a
/// uniform (n x n) node grid of [-delta, delta] x [0, 2 pi]. A cell is a
/// candidate when both gradient components take both signs (or vanish) on
/// its corners. Candidate cells are reported by their lower-left node.
struct GridCandidates {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    double r_step = 0.0;
    double theta_step = 0.0;
};

inline GridCandidates grid_critical_cells(double delta, const std::function<double(double)>& chi,
                                          const std::function<double(double)>& dchi, std::size_t n = 2001) {
    GridCandidates out;
    out.r_step = 2.0 * delta / static_cast<double>(n - 1);
    out.theta_step = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
    std::vector<double> c(n), dc(n), cs(n), sn(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = -delta + out.r_step * static_cast<double>(i);
        c[i] = chi(r);
        dc[i] = dchi(r);
        const double th = out.theta_step * static_cast<double>(i);
        cs[i] = std::cos(th);
        sn[i] = std::sin(th);
    }
    // Exact values on the symmetry lines, so sign tests see true zeros.
    sn[0] = sn[n - 1] = sn[(n - 1) / 2] = 0.0;
    auto gr = [&](std::size_t i, std::size_t j) {
        const double r = -delta + out.r_step * static_cast<double>(i);
        return (2 * i == n - 1 ? 0.0 : 2.0 * r) + dc[i] * cs[j];
    };
    auto gt = [&](std::size_t i, std::size_t j) { return -c[i] * sn[j]; };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double a[4] = {gr(i, j), gr(i + 1, j), gr(i, j + 1), gr(i + 1, j + 1)};
            if (std::min({a[0], a[1], a[2], a[3]}) > 0.0 || std::max({a[0], a[1], a[2], a[3]}) < 0.0) {
                continue;
            }
            const double b[4] = {gt(i, j), gt(i + 1, j), gt(i, j + 1), gt(i + 1, j + 1)};
            if (std::min({b[0], b[1], b[2], b[3]}) > 0.0 || std::max({b[0], b[1], b[2], b[3]}) < 0.0) {
                continue;
            }
            out.cells.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace reeb::oracle
