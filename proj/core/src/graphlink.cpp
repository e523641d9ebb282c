#include "reeb/graphlink.hpp"

#include <algorithm>

#include "reeb/errors.hpp"

namespace reeb::graph {

namespace {

void add_into(IntVector& x, const IntVector& y, int sign) {
    if (x.size() != y.size()) {
        throw DimensionError("class coordinate lengths differ (" + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += sign * y[i];
    }
}

bool all_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

}  // namespace

H1Class H1Class::operator-() const {
    H1Class r = *this;
    for (auto& x : r.a) {
        x = -x;
    }
    for (auto& x : r.b) {
        x = -x;
    }
    return r;
}

H1Class& H1Class::operator+=(const H1Class& o) {
    add_into(a, o.a, 1);
    add_into(b, o.b, 1);
    return *this;
}

H1Class& H1Class::operator-=(const H1Class& o) {
    add_into(a, o.a, -1);
    add_into(b, o.b, -1);
    return *this;
}

H1Class operator*(const Integer& s, const H1Class& x) {
    H1Class r = x;
    for (auto& v : r.a) {
        v *= s;
    }
    for (auto& v : r.b) {
        v *= s;
    }
    return r;
}

bool H1Class::is_zero() const { return all_zero(a) && all_zero(b); }

GraphManifold::GraphManifold(GraphManifoldDesc desc) : desc_(std::move(desc)) {
    if (desc_.summands.empty()) {
        throw ValidationError("summands: at least one summand is required");
    }
    std::size_t betti = 0;
    for (std::size_t i = 0; i < desc_.summands.size(); ++i) {
        const zl::Multigraph& g = desc_.summands[i];
        if (g.vertex_count == 0) {
            throw ValidationError("summands[" + std::to_string(i) + "].vertices: must be at least 1");
        }
        try {
            g.validate();
        } catch (const ValidationError& e) {
            throw ValidationError("summands[" + std::to_string(i) + "].edges: " + e.what());
        }
        betti += zl::graph_first_betti(g);
    }
    if (desc_.h1_relations.cols() != desc_.ngens) {
        throw DimensionError("h1_relations: " + std::to_string(desc_.h1_relations.cols()) +
                             " columns, expected ngens = " + std::to_string(desc_.ngens));
    }
    if (desc_.rho.cols() != desc_.ngens) {
        throw DimensionError("rho: " + std::to_string(desc_.rho.cols()) + " columns, expected ngens = " +
                             std::to_string(desc_.ngens));
    }
    if (desc_.rho.rows() != betti) {
        throw DimensionError("rho: " + std::to_string(desc_.rho.rows()) +
                             " rows, expected the JSJ cycle rank " + std::to_string(betti));
    }
    if (!desc_.generator_names.empty() && desc_.generator_names.size() != desc_.ngens) {
        throw DimensionError("generator_names: " + std::to_string(desc_.generator_names.size()) +
                             " names for ngens = " + std::to_string(desc_.ngens));
    }
    // rho lands in a free group, so it must kill every relation.
    for (std::size_t r = 0; r < desc_.h1_relations.rows(); ++r) {
        if (!all_zero(desc_.rho * desc_.h1_relations.row(r))) {
            throw ValidationError("rho: does not vanish on h1_relations[" + std::to_string(r) +
                                  "], so it is not defined on H_1(N)");
        }
    }
    basis_ = zl::smith_normal_form(desc_.h1_relations);
}

H1Class GraphManifold::zero() const { return {IntVector(desc_.ngens), IntVector(desc_.k)}; }

void GraphManifold::check(const H1Class& u) const {
    if (u.a.size() != desc_.ngens || u.b.size() != desc_.k) {
        throw DimensionError("class has " + std::to_string(u.a.size()) + "+" + std::to_string(u.b.size()) +
                             " coordinates, manifold expects " + std::to_string(desc_.ngens) + "+" +
                             std::to_string(desc_.k));
    }
}

H1Class GraphManifold::canonical(const H1Class& u) const {
    check(u);
    IntVector y = zl::row_times(u.a, basis_.V);
    for (std::size_t i = 0; i < basis_.rank; ++i) {
        const Integer& d = basis_.D(i, i);
        y[i] %= d;
        if (y[i] < 0) {
            y[i] += d;
        }
    }
    return {zl::row_times(y, basis_.V_inverse), u.b};
}

bool GraphManifold::equivalent(const H1Class& u, const H1Class& v) const { return canonical(u - v).is_zero(); }

zl::HomologyGroup GraphManifold::homology_of_prime_part() const {
    return zl::homology_from_presentation(desc_.h1_relations, desc_.ngens);
}

zl::HomologyGroup GraphManifold::homology() const {
    zl::HomologyGroup h = homology_of_prime_part();
    h.free_rank += desc_.k;
    return h;
}

zl::Multigraph jsj_complex(const GraphManifoldDesc& desc) {
    if (desc.summands.empty()) {
        throw ValidationError("jsj_complex: empty description");
    }
    zl::Multigraph out;
    std::vector<std::size_t> offsets;
    for (const zl::Multigraph& g : desc.summands) {
        g.validate();
        offsets.push_back(out.vertex_count);
        for (const auto& [u, v] : g.edges) {
            out.edges.emplace_back(u + out.vertex_count, v + out.vertex_count);
        }
        out.vertex_count += g.vertex_count;
    }
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
        out.edges.emplace_back(offsets[i], offsets[i + 1]);
    }
    return out;
}

zl::Multigraph jsj_complex(const GraphManifold& m) { return jsj_complex(m.desc()); }

IntVector rho_push(const GraphManifold& m, const IntVector& a) {
    if (a.size() != m.ngens()) {
        throw DimensionError("rho_push: class has " + std::to_string(a.size()) + " coordinates, ngens = " +
                             std::to_string(m.ngens()));
    }
    return m.desc().rho * a;
}

bool graph_link_representable(const GraphManifold& m, const H1Class& u) {
    m.check(u);
    const IntVector image = rho_push(m, u.a);
    return zl::divisible_by(image, zl::content(u.b));
}

bool bott_integrable_overtwisted(const GraphManifold& m, const PlaneField& xi) {
    return graph_link_representable(m, xi.euler_pd);
}

H1Class euler_from_critical_link(const GraphManifold& m, const CriticalLinkDesc& link) {
    H1Class e = m.zero();
    for (const CriticalComponent& c : link.components) {
        m.check(c.cls);
        if (c.type == OrbitType::Elliptic) {
            e += c.cls;
        } else {
            e -= c.cls;
        }
    }
    return m.canonical(e);
}

D2Report check_d2_algebra(const GraphManifold& m, const H1Class& d12, const H1Class& d23, const H1Class& d13,
                          const H1Class& e1, const H1Class& e2, const std::optional<H1Class>& d21) {
    D2Report r;
    r.additivity = m.equivalent(d12 + d23, d13);
    r.doubling = m.equivalent(Integer(2) * d12, e1 - e2);
    if (d21) {
        r.antisymmetry = m.equivalent(*d21, -d12);
    }
    return r;
}

H1Class lutz_twist_bookkeeping(const GraphManifold& m, const H1Class& d_xi_eta, const H1Class& K) {
    m.check(d_xi_eta);
    m.check(K);
    return m.canonical(d_xi_eta - K);
}

ObstructionLedger::ObstructionLedger(GraphManifold m, H1Class reference_euler)
    : manifold_(std::move(m)), reference_euler_(std::move(reference_euler)) {
    manifold_.check(reference_euler_);
    offsets_.push_back(manifold_.zero());
}

const H1Class& ObstructionLedger::offset(FieldId field) const {
    if (field >= offsets_.size()) {
        throw DomainError("unknown plane field id " + std::to_string(field));
    }
    return offsets_[field];
}

ObstructionLedger::FieldId ObstructionLedger::add_field(const H1Class& offset) {
    manifold_.check(offset);
    offsets_.push_back(manifold_.canonical(offset));
    return offsets_.size() - 1;
}

ObstructionLedger::FieldId ObstructionLedger::lutz_twist(FieldId field, const H1Class& K) {
    manifold_.check(K);
    // d^2(xi^K, xi) = -PD[K]  <=>  d^2(xi_0, xi^K) = d^2(xi_0, xi) + PD[K]
    offsets_.push_back(manifold_.canonical(offset(field) + K));
    return offsets_.size() - 1;
}

H1Class ObstructionLedger::d2(FieldId from, FieldId to) const {
    return manifold_.canonical(offset(to) - offset(from));
}

H1Class ObstructionLedger::euler(FieldId field) const {
    return manifold_.canonical(reference_euler_ - Integer(2) * offset(field));
}

PlaneField ObstructionLedger::plane_field(FieldId field, long d3_tag) const { return {euler(field), d3_tag}; }

}  // namespace reeb::graph
