#pragma once

// Exact integer linear algebra: Smith normal form, cokernel homology of
// finite presentations, multigraph Betti numbers and content/divisibility.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reeb::zl {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    /// `cols` is needed to give shape to a matrix with no rows.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Matrix times column vector.
IntVector operator*(const IntMatrix& a, const IntVector& v);
/// Row vector times matrix.
IntVector row_times(const IntVector& v, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
bool is_diagonal(const IntMatrix& m);

/// D = U * M * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;
    std::size_t rank = 0;

    /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
    IntVector invariant_factors() const;
};

/// Pivot: smallest nonzero |entry| of the trailing block, ties broken by the
/// lowest row then column index, so the factorization is reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Z^free_rank + Z/d_1 + ... with 2 <= d_1 | d_2 | ...
struct HomologyGroup {
    std::size_t free_rank = 0;
    IntVector torsion;

    bool is_free() const { return torsion.empty(); }
    std::string to_string() const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Cokernel of Z^rows -> Z^ngens, i.e. Z^ngens modulo the row span of `relations`.
/// Throws DimensionError if relations.cols() != ngens.
HomologyGroup homology_from_presentation(const IntMatrix& relations, std::size_t ngens);

/// Undirected multigraph; loops and parallel edges allowed.
struct Multigraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Throws ValidationError if an endpoint is out of range.
    void validate() const;
    friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

std::size_t connected_components(const Multigraph& g);

/// E - V + C
std::size_t graph_first_betti(const Multigraph& g);

/// gcd of the entries (non-negative); content of the zero vector is 0.
Integer content(std::span<const Integer> v);

/// v in m Z^r; for m = 0 this means v = 0.
bool divisible_by(std::span<const Integer> v, const Integer& m);

}  // namespace reeb::zl
