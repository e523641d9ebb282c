#include "reeb/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "reeb/errors.hpp"

namespace reeb::zl {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("IntMatrix: ragged initializer");
        }
        for (long long v : r) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("IntMatrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(cols));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(src, j).is_zero()) {
            (*this)(dst, j) += k * (*this)(src, j);
        }
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, src).is_zero()) {
            (*this)(i, dst) += k * (*this)(i, src);
        }
    }
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size()) {
        throw DimensionError("matrix-vector product: matrix has " + std::to_string(a.cols()) +
                             " columns, vector has " + std::to_string(v.size()) + " entries");
    }
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

IntVector row_times(const IntVector& v, const IntMatrix& m) {
    if (m.rows() != v.size()) {
        throw DimensionError("vector-matrix product: vector has " + std::to_string(v.size()) +
                             " entries, matrix has " + std::to_string(m.rows()) + " rows");
    }
    IntVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[j] += v[i] * m(i, j);
        }
    }
    return out;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Integer d = determinant(m);
    return d == 1 || d == -1;
}

bool is_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j && !m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

IntVector SmithDecomposition::invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i) {
        out.push_back(D(i, i));
    }
    return out;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a, std::size_t s) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = s; i < a.rows(); ++i) {
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) {
                continue;
            }
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = std::move(v);
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithDecomposition out;
    IntMatrix& a = out.D;
    a = m;
    out.U = IntMatrix::identity(m.rows());
    out.V = IntMatrix::identity(m.cols());
    out.V_inverse = IntMatrix::identity(m.cols());
    const std::size_t limit = std::min(m.rows(), m.cols());

    for (std::size_t s = 0; s < limit; ++s) {
        bool settled = false;
        while (!settled) {
            const auto pivot = smallest_pivot(a, s);
            if (!pivot) {
                return out;
            }
            const auto [pi, pj] = *pivot;
            a.swap_rows(s, pi);
            out.U.swap_rows(s, pi);
            a.swap_cols(s, pj);
            out.V.swap_cols(s, pj);
            out.V_inverse.swap_rows(s, pj);

            bool cleared = true;
            for (std::size_t i = s + 1; i < a.rows(); ++i) {
                if (a(i, s).is_zero()) {
                    continue;
                }
                const Integer q = a(i, s) / a(s, s);
                a.add_row_multiple(i, s, -q);
                out.U.add_row_multiple(i, s, -q);
                cleared = cleared && a(i, s).is_zero();
            }
            for (std::size_t j = s + 1; j < a.cols(); ++j) {
                if (a(s, j).is_zero()) {
                    continue;
                }
                const Integer q = a(s, j) / a(s, s);
                a.add_col_multiple(j, s, -q);
                out.V.add_col_multiple(j, s, -q);
                out.V_inverse.add_row_multiple(s, j, q);
                cleared = cleared && a(s, j).is_zero();
            }
            if (!cleared) {
                continue;
            }
            // Pivot must divide the whole trailing block; otherwise fold the
            // offending row into row s and reduce again with a smaller pivot.
            settled = true;
            for (std::size_t i = s + 1; i < a.rows() && settled; ++i) {
                for (std::size_t j = s + 1; j < a.cols(); ++j) {
                    if (Integer(a(i, j) % a(s, s)) != 0) {
                        a.add_row_multiple(s, i, 1);
                        out.U.add_row_multiple(s, i, 1);
                        settled = false;
                        break;
                    }
                }
            }
        }
        if (a(s, s) < 0) {
            a.negate_row(s);
            out.U.negate_row(s);
        }
        ++out.rank;
    }
    return out;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) {
            os << "^" << free_rank;
        }
        first = false;
    }
    for (const Integer& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

HomologyGroup homology_from_presentation(const IntMatrix& relations, std::size_t ngens) {
    if (relations.cols() != ngens) {
        throw DimensionError("relation matrix has " + std::to_string(relations.cols()) + " columns but ngens = " +
                             std::to_string(ngens));
    }
    const SmithDecomposition snf = smith_normal_form(relations);
    HomologyGroup h;
    h.free_rank = ngens - snf.rank;
    for (const Integer& d : snf.invariant_factors()) {
        if (d > 1) {
            h.torsion.push_back(d);
        }
    }
    return h;
}

void Multigraph::validate() const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (u >= vertex_count || v >= vertex_count) {
            throw ValidationError("edge " + std::to_string(e) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an endpoint >= vertex count " + std::to_string(vertex_count));
        }
    }
}

std::size_t connected_components(const Multigraph& g) {
    g.validate();
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = g.vertex_count;
    for (const auto& [u, v] : g.edges) {
        const std::size_t ru = find(u);
        const std::size_t rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components;
}

std::size_t graph_first_betti(const Multigraph& g) {
    return g.edges.size() + connected_components(g) - g.vertex_count;
}

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const Integer& x : v) {
        g = gcd(g, abs(x));
    }
    return g;
}

bool divisible_by(std::span<const Integer> v, const Integer& m) {
    if (m.is_zero()) {
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
    }
    return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return Integer(x % m) == 0; });
}

}  // namespace reeb::zl
