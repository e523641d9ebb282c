#include "reeb/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "reeb/cattorus.hpp"
#include "reeb/errors.hpp"

namespace reeb::io {

namespace {

constexpr long long kExactJsonLimit = 9007199254740992LL;  // 2^53

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

std::string member(const std::string& field, const std::string& key) {
    return field.empty() ? key : field + "." + key;
}

const json& require(const json& j, const std::string& field, const std::string& key) {
    if (!j.is_object()) {
        fail(field.empty() ? "<root>" : field, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(member(field, key), "missing required field");
    }
    return *it;
}

const json& require_array(const json& j, const std::string& field) {
    if (!j.is_array()) {
        fail(field, "expected an array");
    }
    return j;
}

double number_from_json(const json& j, const std::string& field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail(field, "must be finite");
    }
    return v;
}

std::size_t size_from_json(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail(field, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

curves::Interval domain_from_json(const json& j, const std::string& field) {
    require_array(j, field);
    if (j.size() != 2) {
        fail(field, "expected [lo, hi]");
    }
    const curves::Interval d{number_from_json(j[0], at(field, 0)), number_from_json(j[1], at(field, 1))};
    if (!(d.lo < d.hi)) {
        fail(field, "requires lo < hi");
    }
    return d;
}

json param_value(double v) {
    if (v == std::floor(v) && std::abs(v) < static_cast<double>(kExactJsonLimit)) {
        return static_cast<long long>(v);
    }
    return v;
}

double param(const json& params, const std::string& key) {
    return number_from_json(require(params, "params", key), member("params", key));
}

curves::LutzCurve closed_form_from_json(const json& j, curves::Interval domain) {
    const json& name_j = require(j, "", "name");
    if (!name_j.is_string()) {
        fail("name", "expected a string");
    }
    const std::string name = name_j.get<std::string>();
    static const json kNoParams = json::object();
    const json& params = j.contains("params") ? j.at("params") : kNoParams;
    if (!params.is_object()) {
        fail("params", "expected an object");
    }
    if (name == "alpha_n") {
        const json& n = require(params, "params", "n");
        return cat::alpha_curve(static_cast<unsigned>(size_from_json(n, "params.n")), domain);
    }
    if (name == "segment") {
        return curves::make_segment(param(params, "a1"), param(params, "b1"), param(params, "a2"),
                                    param(params, "b2"), domain);
    }
    if (name == "klein_normal") {
        return curves::make_klein_normal(domain);
    }
    fail("name", "unknown closed-form kind '" + name + "' (known: alpha_n, klein_normal, segment)");
}

curves::LutzCurve sampled_from_json(const json& j) {
    const json& samples = require_array(require(j, "", "samples"), "samples");
    const std::size_t n = samples.size();
    if (n < 5) {
        fail("samples", "at least 5 samples are required, got " + std::to_string(n));
    }
    std::vector<double> t(n), h1(n), h2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string f = at("samples", i);
        const json& row = require_array(samples[i], f);
        if (row.size() != 3) {
            fail(f, "expected [t, h1, h2]");
        }
        t[i] = number_from_json(row[0], at(f, 0));
        h1[i] = number_from_json(row[1], at(f, 1));
        h2[i] = number_from_json(row[2], at(f, 2));
    }
    const double step = (t[n - 1] - t[0]) / static_cast<double>(n - 1);
    if (!(step > 0.0)) {
        fail("samples", "t must increase");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = t[0] + static_cast<double>(i) * step;
        if (std::abs(t[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
            fail(at("samples", i), "t values must be uniformly spaced");
        }
    }
    if (j.contains("domain")) {
        const curves::Interval d = domain_from_json(j.at("domain"), "domain");
        const double slack = 1e-9 * std::max(1.0, std::max(std::abs(t[0]), std::abs(t[n - 1])));
        if (std::abs(d.lo - t[0]) > slack || std::abs(d.hi - t[n - 1]) > slack) {
            fail("domain", "does not match the first and last sample");
        }
    }
    double tolerance = curves::kDefaultDerivativeTolerance;
    if (j.contains("derivative_tolerance")) {
        tolerance = number_from_json(j.at("derivative_tolerance"), "derivative_tolerance");
    }
    return curves::LutzCurve::sampled(t[0], step, std::move(h1), std::move(h2), tolerance);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(path.string() + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": malformed JSON (" + e.what() + ")");
    }
}

json integer_to_json(const zl::Integer& x) {
    if (x < kExactJsonLimit && x > -kExactJsonLimit) {
        return x.convert_to<long long>();
    }
    return x.str();
}

zl::Integer integer_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? zl::Integer(j.get<unsigned long long>()) : zl::Integer(j.get<long long>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
            fail(field, "expected an integer, got the string \"" + s + "\"");
        }
        return zl::Integer(s);
    }
    fail(field, "expected an integer");
}

json vector_to_json(const zl::IntVector& v) {
    json out = json::array();
    for (const zl::Integer& x : v) {
        out.push_back(integer_to_json(x));
    }
    return out;
}

zl::IntVector vector_from_json(const json& j, const std::string& field) {
    require_array(j, field);
    zl::IntVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(integer_from_json(j[i], at(field, i)));
    }
    return v;
}

json matrix_to_json(const zl::IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(vector_to_json(m.row(i)));
    }
    return out;
}

zl::IntMatrix matrix_from_json(const json& j, const std::string& field, std::size_t cols) {
    require_array(j, field);
    std::vector<zl::IntVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(vector_from_json(j[i], at(field, i)));
        if (rows.back().size() != cols) {
            throw DimensionError(at(field, i) + ": has " + std::to_string(rows.back().size()) +
                                 " entries, expected " + std::to_string(cols));
        }
    }
    return zl::IntMatrix::from_rows(rows, cols);
}

zl::IntMatrix matrix_from_json(const json& j, const std::string& field) {
    require_array(j, field);
    if (j.empty()) {
        return {};
    }
    return matrix_from_json(j, field, require_array(j[0], at(field, 0)).size());
}

json curve_to_json(const curves::LutzCurve& curve, std::size_t anonymous_samples) {
    const curves::Interval& d = curve.domain();
    if (const curves::LutzCurve::Samples* s = curve.samples()) {
        json rows = json::array();
        for (std::size_t i = 0; i < s->h1.size(); ++i) {
            rows.push_back({s->t0 + static_cast<double>(i) * s->step, s->h1[i], s->h2[i]});
        }
        json out{{"kind", "sampled"}, {"domain", {d.lo, d.hi}}, {"samples", std::move(rows)}};
        if (s->derivative_tolerance != curves::kDefaultDerivativeTolerance) {
            out["derivative_tolerance"] = s->derivative_tolerance;
        }
        return out;
    }
    const curves::LutzCurve::Tag& tag = curve.tag();
    if (!tag.kind.empty()) {
        json params = json::object();
        for (const auto& [k, v] : tag.params) {
            params[k] = param_value(v);
        }
        return {{"kind", "closed_form"}, {"name", tag.kind}, {"params", std::move(params)}, {"domain", {d.lo, d.hi}}};
    }
    const std::size_t n = std::max<std::size_t>(anonymous_samples, 5);
    const double step = d.length() / static_cast<double>(n - 1);
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (i + 1 == n) ? d.hi : d.lo + static_cast<double>(i) * step;
        const curves::CurveJet jet = curve.at(t);
        rows.push_back({t, jet.h1, jet.h2});
    }
    return {{"kind", "sampled"}, {"domain", {d.lo, d.hi}}, {"samples", std::move(rows)}};
}

curves::LutzCurve curve_from_json(const json& j) {
    const json& kind_j = require(j, "", "kind");
    if (!kind_j.is_string()) {
        fail("kind", "expected a string");
    }
    const std::string kind = kind_j.get<std::string>();
    if (kind == "closed_form") {
        return closed_form_from_json(j, domain_from_json(require(j, "", "domain"), "domain"));
    }
    if (kind == "sampled") {
        return sampled_from_json(j);
    }
    fail("kind", "expected \"closed_form\" or \"sampled\", got \"" + kind + "\"");
}

json desc_to_json(const graph::GraphManifoldDesc& desc) {
    json summands = json::array();
    for (const zl::Multigraph& g : desc.summands) {
        json edges = json::array();
        for (const auto& [u, v] : g.edges) {
            edges.push_back({u, v});
        }
        summands.push_back({{"vertices", g.vertex_count}, {"edges", std::move(edges)}});
    }
    json out{{"summands", std::move(summands)},
             {"k", desc.k},
             {"h1_relations", matrix_to_json(desc.h1_relations)},
             {"ngens", desc.ngens},
             {"rho", matrix_to_json(desc.rho)},
             {"generator_names", desc.generator_names}};
    if (!desc.name.empty()) {
        out["name"] = desc.name;
    }
    return out;
}

graph::GraphManifoldDesc desc_from_json(const json& j) {
    graph::GraphManifoldDesc d;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) {
            fail("name", "expected a string");
        }
        d.name = j.at("name").get<std::string>();
    }
    const json& summands = require_array(require(j, "", "summands"), "summands");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const std::string f = at("summands", i);
        zl::Multigraph g;
        g.vertex_count = size_from_json(require(summands[i], f, "vertices"), f + ".vertices");
        const json& edges = require_array(require(summands[i], f, "edges"), f + ".edges");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const std::string fe = at(f + ".edges", e);
            if (!edges[e].is_array() || edges[e].size() != 2) {
                fail(fe, "expected [u, v]");
            }
            g.edges.emplace_back(size_from_json(edges[e][0], at(fe, 0)), size_from_json(edges[e][1], at(fe, 1)));
        }
        d.summands.push_back(std::move(g));
    }
    d.k = size_from_json(require(j, "", "k"), "k");
    d.ngens = size_from_json(require(j, "", "ngens"), "ngens");
    d.h1_relations = matrix_from_json(require(j, "", "h1_relations"), "h1_relations", d.ngens);
    d.rho = matrix_from_json(require(j, "", "rho"), "rho", d.ngens);
    if (j.contains("generator_names")) {
        const json& names = require_array(j.at("generator_names"), "generator_names");
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!names[i].is_string()) {
                fail(at("generator_names", i), "expected a string");
            }
            d.generator_names.push_back(names[i].get<std::string>());
        }
    }
    return d;
}

graph::GraphManifold manifold_from_json(const json& j) { return graph::GraphManifold(desc_from_json(j)); }

json class_to_json(const graph::H1Class& u) { return {{"a", vector_to_json(u.a)}, {"b", vector_to_json(u.b)}}; }

graph::H1Class class_from_json(const json& j, const std::string& field) {
    graph::H1Class u;
    u.a = vector_from_json(require(j, field, "a"), member(field, "a"));
    if (j.contains("b")) {
        u.b = vector_from_json(j.at("b"), member(field, "b"));
    }
    return u;
}

json link_to_json(const graph::CriticalLinkDesc& link) {
    json comps = json::array();
    for (const graph::CriticalComponent& c : link.components) {
        json entry = class_to_json(c.cls);
        entry["type"] = c.type == graph::OrbitType::Elliptic ? "elliptic" : "hyperbolic";
        comps.push_back(std::move(entry));
    }
    return {{"components", std::move(comps)}};
}

graph::CriticalLinkDesc link_from_json(const json& j) {
    graph::CriticalLinkDesc link;
    const json& comps = require_array(require(j, "", "components"), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string f = at("components", i);
        const json& type = require(comps[i], f, "type");
        graph::CriticalComponent c;
        if (type == "elliptic") {
            c.type = graph::OrbitType::Elliptic;
        } else if (type == "hyperbolic") {
            c.type = graph::OrbitType::Hyperbolic;
        } else {
            fail(f + ".type", "expected \"elliptic\" or \"hyperbolic\"");
        }
        c.cls = class_from_json(comps[i], f);
        link.components.push_back(std::move(c));
    }
    return link;
}

zl::IntVector parse_int_list(std::string_view text, const std::string& field) {
    zl::IntVector out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        const std::size_t start = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
        if (item.size() == start || item.find_first_not_of("0123456789", start) != std::string_view::npos) {
            fail(field, "expected comma-separated integers, got \"" + std::string(text) + "\"");
        }
        out.emplace_back(std::string(item[0] == '+' ? item.substr(1) : item));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

graph::H1Class split_class(const graph::GraphManifold& m, const zl::IntVector& coords, const std::string& field) {
    graph::H1Class u = m.zero();
    if (coords.size() == 1 && coords[0].is_zero()) {
        return u;
    }
    if (coords.size() != m.ngens() + m.k()) {
        throw DimensionError(field + ": " + std::to_string(coords.size()) + " coordinates, expected ngens + k = " +
                             std::to_string(m.ngens() + m.k()));
    }
    std::copy(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(m.ngens()), u.a.begin());
    std::copy(coords.begin() + static_cast<std::ptrdiff_t>(m.ngens()), coords.end(), u.b.begin());
    return u;
}

}  // namespace reeb::io
