#pragma once

// Built-in graph-manifold descriptions and the critical links produced by the
// toolkit's own constructions on them. The shipped JSON fixtures are the
// serialized form of these descriptions.

#include <string>
#include <vector>

#include "reeb/graphlink.hpp"

namespace reeb::fixtures {

/// Cat-map mapping torus with H_1 written on its single generator c.
/// JSJ complex: one vertex with one loop; rho = [1].
graph::GraphManifoldDesc cat_torus();

/// Same manifold on generators (a, b, c) with the abelianized pi_1 relations.
graph::GraphManifoldDesc cat_torus_presented();

/// Torus bundle with monodromy -I: a single Seifert piece, H_1 = Z + Z/2 + Z/2,
/// JSJ complex a single vertex, so rho has no rows.
graph::GraphManifoldDesc seifert_vertex();

/// cat_torus # (S^1 x S^2).
graph::GraphManifoldDesc cat_plus_s1s2();

struct FixtureCase {
    std::string file;  // name of the shipped JSON file
    graph::GraphManifoldDesc desc;
    /// Critical links of Bott integrals built on this manifold.
    std::vector<graph::CriticalLinkDesc> links;
};

/// One elliptic and one parallel hyperbolic orbit per removed critical
/// surface, each in the class of the Reeb orbits on that surface.
graph::CriticalLinkDesc removed_surfaces_link(const std::vector<graph::H1Class>& orbit_classes);

std::vector<FixtureCase> builtin_fixtures();

}  // namespace reeb::fixtures
