#pragma once

// Graph-manifold descriptions M = N # k(S^1 x S^2), the homological
// criterion for graph links, and the Euler class / d^2 obstruction algebra
// that decides Bott integrability of overtwisted contact structures.
//
// Homology classes are entered as coordinates: the a-part on the generators
// of H_1(N) (modulo h1_relations), the b-part in Z^k. Cohomology classes are
// always handled through their Poincare duals in the same coordinates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reeb/zlinalg.hpp"

namespace reeb::graph {

using zl::Integer;
using zl::IntVector;

struct GraphManifoldDesc {
    std::string name;
    /// One JSJ complex per irreducible summand of N.
    std::vector<zl::Multigraph> summands;
    /// Number of S^1 x S^2 summands.
    std::size_t k = 0;
    zl::IntMatrix h1_relations;
    std::size_t ngens = 0;
    /// H_1(N) generator coordinates -> cycle-basis coordinates of H_1(C_N).
    zl::IntMatrix rho;
    std::vector<std::string> generator_names;

    friend bool operator==(const GraphManifoldDesc&, const GraphManifoldDesc&) = default;
};

/// A class (a, b) in H_1(M) = H_1(N) + Z^k.
struct H1Class {
    IntVector a;
    IntVector b;

    friend bool operator==(const H1Class&, const H1Class&) = default;
    H1Class operator-() const;
    H1Class& operator+=(const H1Class& o);
    H1Class& operator-=(const H1Class& o);
    friend H1Class operator+(H1Class x, const H1Class& y) { return x += y; }
    friend H1Class operator-(H1Class x, const H1Class& y) { return x -= y; }
    friend H1Class operator*(const Integer& s, const H1Class& x);
    bool is_zero() const;
};

enum class OrbitType { Elliptic, Hyperbolic };

struct CriticalComponent {
    OrbitType type = OrbitType::Elliptic;
    H1Class cls;
};

/// Critical periodic Reeb orbits of a Bott integral, oriented by the flow.
struct CriticalLinkDesc {
    std::vector<CriticalComponent> components;
};

/// A tangent 2-plane field, recorded by the Poincare dual of its Euler class.
/// d3_tag labels the 3-dimensional invariant and never enters a computation.
struct PlaneField {
    H1Class euler_pd;
    long d3_tag = 0;
};

/// A validated description together with a fixed Smith basis for H_1(N).
class GraphManifold {
public:
    /// Throws ValidationError / DimensionError naming the offending field.
    explicit GraphManifold(GraphManifoldDesc desc);

    const GraphManifoldDesc& desc() const { return desc_; }
    std::size_t ngens() const { return desc_.ngens; }
    std::size_t k() const { return desc_.k; }
    /// Rank of H_1(C_N): the row count of rho.
    std::size_t cycle_rank() const { return desc_.rho.rows(); }

    H1Class zero() const;
    /// Throws DimensionError if the class does not fit this manifold.
    void check(const H1Class& u) const;

    /// Canonical representative modulo the relations: Smith coordinates
    /// reduced into [0, d_i) on torsion factors and zeroed on unit factors,
    /// mapped back to generator coordinates. Idempotent and additive.
    H1Class canonical(const H1Class& u) const;
    bool equivalent(const H1Class& u, const H1Class& v) const;

    zl::HomologyGroup homology_of_prime_part() const;
    /// H_1(M) including the Z^k from the S^1 x S^2 summands.
    zl::HomologyGroup homology() const;

private:
    GraphManifoldDesc desc_;
    zl::SmithDecomposition basis_;
};

/// Disjoint union of the summand complexes plus one edge joining vertex 0 of
/// summand i to vertex 0 of summand i + 1. Throws ValidationError if empty.
zl::Multigraph jsj_complex(const GraphManifoldDesc& desc);
zl::Multigraph jsj_complex(const GraphManifold& m);

/// rho_*(a) in H_1(C_N).
IntVector rho_push(const GraphManifold& m, const IntVector& a);

/// u = (a, b) is represented by a graph link iff rho_*(a) is divisible
/// by the content m(b), with m(0) = 0 forcing rho_*(a) = 0.
bool graph_link_representable(const GraphManifold& m, const H1Class& u);

/// An overtwisted contact structure is Bott integrable iff PD(e) is
/// represented by a graph link.
bool bott_integrable_overtwisted(const GraphManifold& m, const PlaneField& xi);

/// PD e(xi) = sum over elliptic orbits - sum over hyperbolic orbits, canonical.
H1Class euler_from_critical_link(const GraphManifold& m, const CriticalLinkDesc& link);

struct D2Report {
    bool additivity = false;                 // d12 + d23 = d13
    bool doubling = false;                   // 2 d12 = e1 - e2
    std::optional<bool> antisymmetry;        // d21 = -d12, when d21 is given

    bool passed() const { return additivity && doubling && antisymmetry.value_or(true); }
};

D2Report check_d2_algebra(const GraphManifold& m, const H1Class& d12, const H1Class& d23, const H1Class& d13,
                          const H1Class& e1, const H1Class& e2, const std::optional<H1Class>& d21 = std::nullopt);

/// d^2(xi^K, eta) = d^2(xi, eta) - PD[K] after a Lutz twist along K, canonical.
H1Class lutz_twist_bookkeeping(const GraphManifold& m, const H1Class& d_xi_eta, const H1Class& K);

/// Plane fields over the 2-skeleton, each recorded by its obstruction class
/// relative to a reference field xi_0. Everything else follows from
/// antisymmetry, additivity and 2 d^2(xi_0, eta) = e(xi_0) - e(eta).
class ObstructionLedger {
public:
    using FieldId = std::size_t;
    static constexpr FieldId kReference = 0;

    ObstructionLedger(GraphManifold m, H1Class reference_euler);

    /// Registers the field eta with d^2(xi_0, eta) = offset.
    FieldId add_field(const H1Class& offset);
    /// Registers xi^K, the Lutz twist of `field` along a knot in class K.
    FieldId lutz_twist(FieldId field, const H1Class& K);

    H1Class d2(FieldId from, FieldId to) const;
    H1Class euler(FieldId field) const;
    PlaneField plane_field(FieldId field, long d3_tag = 0) const;
    std::size_t size() const { return offsets_.size(); }
    const GraphManifold& manifold() const { return manifold_; }

private:
    const H1Class& offset(FieldId field) const;

    GraphManifold manifold_;
    H1Class reference_euler_;
    std::vector<H1Class> offsets_;
};

}  // namespace reeb::graph
