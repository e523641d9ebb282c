#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>

#include "reeb/cattorus.hpp"
#include "reeb/curves.hpp"
#include "reeb/errors.hpp"
#include "reeb/flow.hpp"
#include "reeb/graphlink.hpp"
#include "reeb/io.hpp"
#include "reeb/lutz_twist.hpp"
#include "reeb/perturbation.hpp"
#include "reeb/zlinalg.hpp"

namespace reeb::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string manifold;
    std::string curve;
    std::string base;
    std::string matrix;
    std::string link;
    std::string csv;
    std::string output;
    std::string class_text;
    std::string euler_text;
    unsigned n = 0;
    std::optional<double> t0;
    std::optional<double> t1;
    double T = 1.0;
    double dt = 1e-3;
    double delta = 1.0;
    double epsilon = 0.25;
    bool backward = false;
    bool human = false;
    double tolerance = kDefaultTolerance;
};

/// Prefixes a ValidationError with the file it came from.
template <typename F>
auto from_file(const std::string& path, F&& parse) {
    const json j = io::read_json_file(path);
    try {
        return parse(j);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(path + ": " + e.what());
    }
}

curves::LutzCurve load_curve(const std::string& path) {
    return from_file(path, [](const json& j) { return io::curve_from_json(j); });
}

graph::GraphManifold load_manifold(const std::string& path) {
    return from_file(path, [](const json& j) { return io::manifold_from_json(j); });
}

graph::H1Class class_flag(const graph::GraphManifold& m, const std::string& text, const std::string& flag) {
    return io::split_class(m, io::parse_int_list(text, flag), flag);
}

json state_json(const flow::FlowState& s) { return {{"t", s.t}, {"x1", s.x1}, {"x2", s.x2}, {"time", s.time}}; }

json critical_point_json(const curves::CriticalPoint& p) {
    return {{"r", p.r},
            {"theta", p.theta},
            {"type", curves::to_string(p.type)},
            {"hessian", {{p.hessian[0][0], p.hessian[0][1]}, {p.hessian[1][0], p.hessian[1][1]}}},
            {"eigenvalues", {p.eigenvalues[0], p.eigenvalues[1]}}};
}

json homology_json(const zl::HomologyGroup& h) {
    return {{"free_rank", h.free_rank}, {"torsion", io::vector_to_json(h.torsion)}, {"group", h.to_string()}};
}

/// Matrix files hold either an array of rows or {"ngens": n, "relations": rows}.
std::pair<zl::IntMatrix, std::size_t> load_relations(const std::string& path) {
    return from_file(path, [](const json& j) -> std::pair<zl::IntMatrix, std::size_t> {
        if (j.is_object()) {
            if (!j.contains("ngens") || !j.at("ngens").is_number_unsigned()) {
                throw ValidationError("ngens: expected a non-negative integer");
            }
            const auto ngens = j.at("ngens").get<std::size_t>();
            if (!j.contains("relations")) {
                throw ValidationError("relations: missing required field");
            }
            return {io::matrix_from_json(j.at("relations"), "relations", ngens), ngens};
        }
        zl::IntMatrix m = io::matrix_from_json(j, "matrix");
        const std::size_t cols = m.cols();
        return {std::move(m), cols};
    });
}

using Handler = std::function<json(const Options&, int&)>;

json cmd_check_contact(const Options& o, int&) {
    const curves::LutzCurve c = load_curve(o.curve);
    const curves::ContactCheck r = curves::check_contact(c);
    json out{{"contact", r.contact},
             {"max_defect", r.max_defect},
             {"worst_t", r.worst_t},
             {"min_radius", r.min_radius},
             {"samples", r.samples},
             {"domain", {c.domain().lo, c.domain().hi}}};
    if (c.is_sampled()) {
        try {
            curves::validate(c);
            out["derivative_check"] = "passed";
        } catch (const ValidationError& e) {
            out["derivative_check"] = e.what();
        }
    }
    return out;
}

json cmd_reeb_flow(const Options& o, int& code) {
    const curves::LutzCurve c = load_curve(o.curve);
    const curves::BottProfile f = curves::BottProfile::quadratic();
    const flow::FlowState x0{o.t0.value_or(c.domain().lo), 0.0, 0.0, 0.0};
    const flow::Trajectory tr = flow::integrate_reeb(c, f, x0, o.T, o.dt,
                                                     o.backward ? flow::Direction::Backward : flow::Direction::Forward);
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv);
        if (!csv) {
            throw ValidationError("--csv: cannot write " + o.csv);
        }
        flow::write_csv(csv, tr, f);
    }
    json out{{"status", tr.status == flow::FlowStatus::Completed ? "completed" : "contact_violation"},
             {"steps", tr.states.size() - 1},
             {"dt", tr.step},
             {"initial", state_json(tr.states.front())},
             {"final", state_json(tr.final_state())},
             {"t_drift", tr.t_drift},
             {"integral_drift", tr.integral_drift}};
    if (tr.status != flow::FlowStatus::Completed) {
        out["error"] = tr.error;
        code = kComputationFailure;
    }
    return out;
}

json cmd_winding(const Options& o, int&) {
    const curves::LutzCurve c = load_curve(o.curve);
    const double a = o.t0.value_or(c.domain().lo);
    const double b = o.t1.value_or(c.domain().hi);
    const double w = curves::winding_angle(c, a, b);
    return {{"t0", a}, {"t1", b}, {"winding", w}, {"turns", w / (2.0 * std::numbers::pi)}};
}

json cmd_torsion(const Options& o, int&) {
    if (o.curve.empty()) {
        const curves::LutzCurve c = cat::alpha_curve(o.n);
        return {{"n", o.n},
                {"torsion", curves::torsion_count_relative(c, cat::alpha_curve(0))},
                {"zero_torsion_witness", curves::zero_torsion_witness(c)}};
    }
    const curves::LutzCurve c = load_curve(o.curve);
    const curves::LutzCurve base = o.base.empty() ? cat::alpha_curve(0, c.domain()) : load_curve(o.base);
    return {{"torsion", curves::torsion_count_relative(c, base)},
            {"zero_torsion_witness", curves::zero_torsion_witness(c)}};
}

json cmd_lutz_twist(const Options& o, int& code) {
    const curves::LutzCurve c = load_curve(o.curve);
    if (!o.t0 || !o.t1) {
        throw ValidationError("--t0/--t1: the twist window is required");
    }
    if (!(*o.t0 < *o.t1)) {
        throw ValidationError("--t0/--t1: requires t0 < t1");
    }
    const double s0 = 0.5 * (*o.t0 + *o.t1);
    const double eps = 0.5 * (*o.t1 - *o.t0);
    const double C = c.at(s0).h2;
    const curves::LutzCurve twisted = curves::full_lutz_twist(c, s0, eps, C);
    const double before = curves::winding_angle(c);
    const double after = curves::winding_angle(twisted);
    const curves::ContactCheck check = curves::check_contact(twisted);
    const double delta = after - before;
    const bool ok = check.contact && std::abs(delta + 2.0 * std::numbers::pi) <= 1e-6;
    if (!o.output.empty()) {
        std::ofstream f(o.output);
        if (!f) {
            throw ValidationError("--output: cannot write " + o.output);
        }
        f << io::curve_to_json(twisted).dump(2) << '\n';
    }
    if (!ok) {
        code = kComputationFailure;
    }
    return {{"s0", s0},
            {"eps", eps},
            {"C", C},
            {"winding_before", before},
            {"winding_after", after},
            {"winding_delta", delta},
            {"contact", check.contact},
            {"max_defect", check.max_defect},
            {"passed", ok}};
}

json cmd_perturb(const Options& o, int&) {
    const curves::PerturbationBump bump = curves::PerturbationBump::smoothstep(o.delta, o.epsilon);
    curves::validate(bump);
    const curves::CriticalSetReport r = curves::perturb_critical_surface(bump);
    json pts = json::array();
    for (const curves::CriticalPoint& p : r.points) {
        pts.push_back(critical_point_json(p));
    }
    return {{"delta", o.delta}, {"epsilon", o.epsilon}, {"critical_points", std::move(pts)}};
}

json cmd_homology(const Options& o, int&) {
    if (!o.manifold.empty()) {
        const graph::GraphManifold m = load_manifold(o.manifold);
        return {{"H1", homology_json(m.homology())}, {"H1_prime_part", homology_json(m.homology_of_prime_part())}};
    }
    if (o.matrix.empty()) {
        throw ValidationError("--manifold/--matrix: one of them is required");
    }
    const auto [rel, ngens] = load_relations(o.matrix);
    return {{"H1", homology_json(zl::homology_from_presentation(rel, ngens))}};
}

json cmd_snf(const Options& o, int&) {
    const auto [m, ngens] = load_relations(o.matrix);
    (void)ngens;
    const zl::SmithDecomposition s = zl::smith_normal_form(m);
    return {{"U", io::matrix_to_json(s.U)},
            {"D", io::matrix_to_json(s.D)},
            {"V", io::matrix_to_json(s.V)},
            {"rank", s.rank},
            {"invariant_factors", io::vector_to_json(s.invariant_factors())}};
}

json cmd_jsj(const Options& o, int&) {
    const graph::GraphManifold m = load_manifold(o.manifold);
    const zl::Multigraph g = graph::jsj_complex(m);
    json edges = json::array();
    for (const auto& [u, v] : g.edges) {
        edges.push_back({u, v});
    }
    return {{"vertices", g.vertex_count},
            {"edges", std::move(edges)},
            {"components", zl::connected_components(g)},
            {"betti", zl::graph_first_betti(g)}};
}

json cmd_decide_graphlink(const Options& o, int&) {
    const graph::GraphManifold m = load_manifold(o.manifold);
    const graph::H1Class u = class_flag(m, o.class_text, "--class");
    return {{"representable", graph::graph_link_representable(m, u)}};
}

json cmd_decide_bott(const Options& o, int&) {
    const graph::GraphManifold m = load_manifold(o.manifold);
    const graph::PlaneField xi{class_flag(m, o.euler_text, "--euler"), 0};
    return {{"bott_integrable", graph::bott_integrable_overtwisted(m, xi)}};
}

json cmd_euler(const Options& o, int&) {
    const graph::GraphManifold m = load_manifold(o.manifold);
    const graph::CriticalLinkDesc link = from_file(o.link, [](const json& j) { return io::link_from_json(j); });
    const graph::H1Class e = graph::euler_from_critical_link(m, link);
    return {{"euler_pd", io::class_to_json(e)}, {"representable", graph::graph_link_representable(m, e)}};
}

json cmd_d2(const Options& o, int& code) {
    const graph::GraphManifold m = load_manifold(o.manifold);
    const graph::H1Class e0 = class_flag(m, o.euler_text, "--euler");
    const graph::H1Class K = class_flag(m, o.class_text, "--class");
    // xi_0, then two successive Lutz twists along K.
    graph::ObstructionLedger ledger(m, e0);
    const auto x1 = ledger.lutz_twist(graph::ObstructionLedger::kReference, K);
    const auto x2 = ledger.lutz_twist(x1, K);
    const graph::D2Report r = graph::check_d2_algebra(m, ledger.d2(0, x1), ledger.d2(x1, x2), ledger.d2(0, x2),
                                                      ledger.euler(0), ledger.euler(x1), ledger.d2(x1, 0));
    const bool lutz_relation = m.equivalent(ledger.d2(x1, 0), -K);
    if (!r.passed() || !lutz_relation) {
        code = kComputationFailure;
    }
    return {{"d2_twist_to_reference", io::class_to_json(ledger.d2(x1, 0))},
            {"euler_reference", io::class_to_json(ledger.euler(0))},
            {"euler_twisted", io::class_to_json(ledger.euler(x1))},
            {"euler_twisted_twice", io::class_to_json(ledger.euler(x2))},
            {"additivity", r.additivity},
            {"doubling", r.doubling},
            {"antisymmetry", r.antisymmetry.value_or(false)},
            {"lutz_relation", lutz_relation}};
}

json cmd_catmap_verify(const Options& o, int& code) {
    const cat::IdentityReport r = cat::verify_identities(o.n);
    const double tol = o.tolerance;
    const bool passed = r.equivariance_residual < tol && r.determinant_residual < tol &&
                        r.fibonacci_residual < tol && r.initial_residual < 1e-12 &&
                        r.torsion == static_cast<long>(o.n) && r.zero_torsion_witness == (o.n == 0);
    if (!passed) {
        code = kComputationFailure;
    }
    return {{"n", r.n},
            {"samples", r.samples},
            {"tolerance", tol},
            {"equivariance_residual", r.equivariance_residual},
            {"determinant_residual", r.determinant_residual},
            {"initial_residual", r.initial_residual},
            {"fibonacci", r.fibonacci},
            {"fibonacci_residual", r.fibonacci_residual},
            {"winding", r.winding},
            {"torsion", r.torsion},
            {"zero_torsion_witness", r.zero_torsion_witness},
            {"negative_control_residual", r.negative_control_residual},
            {"passed", passed}};
}

void render_human(std::ostream& out, const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            render_human(out, v, prefix.empty() ? k : prefix + "." + k);
        }
        return;
    }
    out << std::left << std::setw(32) << prefix << ' ' << j.dump() << '\n';
}

double tolerance_from_env() {
    const char* env = std::getenv("REEB_TOOLKIT_TOL");
    if (env == nullptr || *env == '\0') {
        return kDefaultTolerance;
    }
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
        throw ValidationError(std::string("REEB_TOOLKIT_TOL: expected a positive number, got \"") + env + "\"");
    }
    return v;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Lutz-type contact forms, Reeb flows and Bott integrability of graph manifolds", "reebtk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& desc, Handler h) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_flag("--human", o.human, "Print a key/value table instead of JSON");
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    auto curve_opt = [&](CLI::App* s) { s->add_option("--curve", o.curve, "Curve JSON file")->required(); };
    auto manifold_opt = [&](CLI::App* s) {
        s->add_option("--manifold", o.manifold, "Graph-manifold description JSON")->required();
    };
    auto window = [&](CLI::App* s) {
        s->add_option("--t0", o.t0, "Start parameter");
        s->add_option("--t1", o.t1, "End parameter");
    };

    {
        auto* s = add("check-contact", "Check the contact condition h1 h2' - h1' h2 < 0", cmd_check_contact);
        curve_opt(s);
    }
    {
        auto* s = add("reeb-flow", "Integrate the Reeb flow with f = t^2 from (t0, 0, 0)", cmd_reeb_flow);
        curve_opt(s);
        s->add_option("--t0", o.t0, "Initial transverse coordinate (default: domain start)");
        s->add_option("--T", o.T, "Total flow time")->capture_default_str();
        s->add_option("--dt", o.dt, "Step size")->capture_default_str();
        s->add_flag("--backward", o.backward, "Integrate in negative time");
        s->add_option("--csv", o.csv, "Write the trajectory as CSV");
    }
    {
        auto* s = add("winding", "Turning angle of the Lutz curve about the origin", cmd_winding);
        curve_opt(s);
        window(s);
    }
    {
        auto* s = add("torsion", "Full twists relative to a base curve (alpha_0 by default)", cmd_torsion);
        s->add_option("--curve", o.curve, "Curve JSON file");
        s->add_option("--base", o.base, "Base curve JSON file");
        s->add_option("--n", o.n, "Use alpha_n on [0, 1]");
    }
    {
        auto* s = add("lutz-twist", "Full Lutz twist on the straight window [t0, t1]", cmd_lutz_twist);
        curve_opt(s);
        window(s);
        s->add_option("--output", o.output, "Write the twisted curve JSON");
    }
    {
        auto* s = add("perturb", "Critical set of r^2 + chi(r) cos(theta)", cmd_perturb);
        s->add_option("--delta", o.delta, "Half-width of the neighbourhood")->capture_default_str();
        s->add_option("--epsilon", o.epsilon, "Plateau half-width")->capture_default_str();
    }
    {
        auto* s = add("homology", "First homology from a manifold or a relation matrix", cmd_homology);
        s->add_option("--manifold", o.manifold, "Graph-manifold description JSON");
        s->add_option("--matrix", o.matrix, "Relation matrix JSON");
    }
    {
        auto* s = add("snf", "Smith normal form D = U M V", cmd_snf);
        s->add_option("--matrix", o.matrix, "Matrix JSON")->required();
    }
    {
        auto* s = add("jsj", "JSJ complex of the description", cmd_jsj);
        manifold_opt(s);
    }
    {
        auto* s = add("decide-graphlink", "Is the class represented by a graph link?", cmd_decide_graphlink);
        manifold_opt(s);
        s->add_option("--class", o.class_text, "Class coordinates a..., b...")->required();
    }
    {
        auto* s = add("decide-bott", "Is an overtwisted structure with this Euler class Bott integrable?",
                      cmd_decide_bott);
        manifold_opt(s);
        s->add_option("--euler", o.euler_text, "Poincare dual of the Euler class")->required();
    }
    {
        auto* s = add("euler", "Euler class from a critical link", cmd_euler);
        manifold_opt(s);
        s->add_option("--link", o.link, "Critical link JSON")->required();
    }
    {
        auto* s = add("d2", "d^2 bookkeeping for Lutz twists along a class", cmd_d2);
        manifold_opt(s);
        s->add_option("--euler", o.euler_text, "Euler class of the reference field")->required();
        s->add_option("--class", o.class_text, "Class of the twisting knot")->required();
    }
    {
        auto* s = add("catmap-verify", "Identity suite for alpha_n on the cat torus", cmd_catmap_verify);
        s->add_option("--n", o.n, "Family index")->required();
    }

    if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
        err << "reebtk: unknown command '" << args[0] << "'\n";
        return kInputFailure;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "reebtk: " << e.what() << '\n';
        return kInputFailure;
    }

    try {
        o.tolerance = tolerance_from_env();
        for (const auto& [sub, handler] : commands) {
            if (!sub->parsed()) {
                continue;
            }
            int code = kOk;
            const json report = handler(o, code);
            if (o.human) {
                render_human(out, report, "");
            } else {
                out << report.dump(2) << '\n';
            }
            return code;
        }
    } catch (const InputError& e) {
        err << "reebtk: " << e.what() << '\n';
        return kInputFailure;
    } catch (const ComputationError& e) {
        err << "reebtk: " << e.what() << '\n';
        return kComputationFailure;
    }
    err << "reebtk: no command given\n";
    return kInputFailure;
}

}  // namespace reeb::cli
