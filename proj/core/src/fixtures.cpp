#include "reeb/fixtures.hpp"

#include "reeb/cattorus.hpp"

namespace reeb::fixtures {

namespace {

graph::H1Class cls(std::vector<long long> a, std::vector<long long> b = {}) {
    graph::H1Class u;
    for (long long x : a) {
        u.a.emplace_back(x);
    }
    for (long long x : b) {
        u.b.emplace_back(x);
    }
    return u;
}

graph::CriticalLinkDesc elliptic(const std::vector<graph::H1Class>& classes) {
    graph::CriticalLinkDesc link;
    for (const graph::H1Class& u : classes) {
        link.components.push_back({graph::OrbitType::Elliptic, u});
    }
    return link;
}

graph::CriticalLinkDesc join(graph::CriticalLinkDesc x, const graph::CriticalLinkDesc& y) {
    x.components.insert(x.components.end(), y.components.begin(), y.components.end());
    return x;
}

zl::Multigraph single_loop() { return {1, {{0, 0}}}; }

}  // namespace

graph::GraphManifoldDesc cat_torus() {
    graph::GraphManifoldDesc d;
    d.name = "cat map mapping torus";
    d.summands = {single_loop()};
    d.k = 0;
    d.ngens = 1;
    d.h1_relations = zl::IntMatrix(0, 1);
    d.rho = {{1}};
    d.generator_names = {"c"};
    return d;
}

graph::GraphManifoldDesc cat_torus_presented() {
    graph::GraphManifoldDesc d;
    d.name = "cat map mapping torus (pi_1 presentation)";
    d.summands = {single_loop()};
    d.k = 0;
    d.ngens = 3;
    d.h1_relations = cat::cat_h1_presentation();
    d.rho = {{0, 0, 1}};
    d.generator_names = {"a", "b", "c"};
    return d;
}

graph::GraphManifoldDesc seifert_vertex() {
    graph::GraphManifoldDesc d;
    d.name = "torus bundle with monodromy -I";
    d.summands = {zl::Multigraph{1, {}}};
    d.k = 0;
    d.ngens = 3;
    d.h1_relations = {{2, 0, 0}, {0, 2, 0}};
    d.rho = zl::IntMatrix(0, 3);
    d.generator_names = {"a", "b", "c"};
    return d;
}

graph::GraphManifoldDesc cat_plus_s1s2() {
    graph::GraphManifoldDesc d = cat_torus();
    d.name = "cat map mapping torus # S1xS2";
    d.k = 1;
    return d;
}

graph::CriticalLinkDesc removed_surfaces_link(const std::vector<graph::H1Class>& orbit_classes) {
    graph::CriticalLinkDesc link;
    for (const graph::H1Class& u : orbit_classes) {
        link.components.push_back({graph::OrbitType::Elliptic, u});
        link.components.push_back({graph::OrbitType::Hyperbolic, u});
    }
    return link;
}

std::vector<FixtureCase> builtin_fixtures() {
    std::vector<FixtureCase> out;

    // alpha_n with Bott integral cos(2 pi t): critical fibre tori at t = 0 and
    // t = 1/2. Fibre classes vanish in H_1 of the cat torus.
    out.push_back({"cat_torus.json",
                   cat_torus(),
                   {graph::CriticalLinkDesc{}, removed_surfaces_link({cls({0}), cls({0})})}});

    out.push_back({"cat_torus_presented.json",
                   cat_torus_presented(),
                   {graph::CriticalLinkDesc{}, removed_surfaces_link({cls({1, 0, 0}), cls({0, 1, 0})}),
                    removed_surfaces_link({cls({1, 1, 0}), cls({2, -1, 0})})}});

    // H_1-complete constructions: an elliptic sublink in any prescribed class,
    // possibly next to cancelling pairs from removed surfaces.
    const graph::CriticalLinkDesc pair = removed_surfaces_link({cls({1, 0, 0})});
    out.push_back({"seifert_vertex.json",
                   seifert_vertex(),
                   {elliptic({cls({1, 0, 0})}), elliptic({cls({0, 1, 0}), cls({0, 0, 1})}),
                    join(elliptic({cls({1, 1, 3})}), pair), elliptic({cls({0, 0, -2})})}});

    out.push_back({"cat_plus_s1s2.json",
                   cat_plus_s1s2(),
                   {removed_surfaces_link({cls({0}, {0}), cls({0}, {1})}), elliptic({cls({0}, {1})}),
                    elliptic({cls({0}, {2}), cls({0}, {-1})})}});
    return out;
}

}  // namespace reeb::fixtures
