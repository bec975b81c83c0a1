#include "idcp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "idcp/document.hpp"
#include "idcp/harness.hpp"
#include "idcp/svg.hpp"

namespace idcp {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("IDCP_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

RadiusAssignment pick_radii(const PackingDocument& doc) {
    if (doc.radii_hyp || doc.labels_u) return doc.hyperbolic_radii();
    if (doc.radii_euc) return *doc.radii_euc;
    throw DocumentError("document carries no radii");
}

int cmd_check(const std::string& in) {
    PackingDocument doc = load_document(in);
    Triangulation t = doc.triangulation();

    auto sc = check_structure_condition(t, doc.eta);
    std::cout << "structure-condition: " << (sc.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [fi, worst] : sc.offending_faces)
        std::cout << "  face " << fi << ": min cyclic value " << worst << "\n";

    auto reg = check_regular_weight(t, doc.eta);
    std::cout << "regular-weight: " << (reg.pass ? "pass" : "FAIL") << "\n";
    for (const auto& e : reg.offending_edges)
        std::cout << "  edge " << e.a << "-" << e.b << "\n";

    bool delaunay_pass = true;
    RadiusAssignment radii = pick_radii(doc);
    auto rep = is_weighted_delaunay_packing(t, doc.eta, radii);
    delaunay_pass = rep.pass;
    std::cout << "weighted-delaunay: " << (rep.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [e, res] : rep.edges)
        if (!res.pass)
            std::cout << "  edge " << e.a << "-" << e.b << ": h sum " << res.h_sum << "\n";

    return (sc.pass && reg.pass && delaunay_pass) ? 0 : 1;
}

int cmd_curvature(const std::string& in) {
    PackingDocument doc = load_document(in);
    Triangulation t = doc.triangulation();
    RadiusAssignment radii = pick_radii(doc);
    EdgeLengthTable len = edge_lengths(t, doc.eta, radii);
    CurvatureVector k = curvature(t, triangle_angle_table(t, len));
    std::cout.precision(17);
    for (VertexId v : t.vertices())
        std::cout << v << (t.is_boundary(v) ? " b " : " i ") << k.at(v) << "\n";
    return 0;
}

int cmd_solve(const std::string& in, const std::string& out, double target_k, int max_iters,
              double tol) {
    PackingDocument doc = load_document(in);
    Triangulation t = doc.triangulation();
    RadiusAssignment radii = pick_radii(doc);

    SolveConfig cfg;
    cfg.max_iterations = max_iters;
    cfg.residual_tol = tol;
    for (VertexId v : t.interior_vertices()) cfg.target_K[v] = target_k;

    SolveReport rep = solve_prescribed_curvature(t, doc.eta, cfg, labels_from_radii(radii));
    std::cout << rep.message << " after " << rep.iterations << " iterations, residual "
              << rep.residual_history.back() << "\n";
    if (!rep.converged) return 1;

    RadiusAssignment solved = radii_from_labels(rep.u);
    if (solved.geometry == Geometry::Hyperbolic) {
        doc.radii_hyp = solved;
        doc.labels_u = rep.u;
    } else {
        doc.radii_euc = solved;
    }
    save_document(doc, out);
    return 0;
}

int cmd_layout(const std::string& in, const std::string& out) {
    PackingDocument doc = load_document(in);
    Triangulation t = doc.triangulation();
    RadiusAssignment radii = doc.hyperbolic_radii();
    EdgeLengthTable len = edge_lengths_h(t, doc.eta, radii);
    doc.layout = layout_in_disk(t, len);
    save_document(doc, out);
    return 0;
}

int cmd_render(const std::string& in, const std::string& out, bool geodesics, bool face_circles) {
    PackingDocument doc = load_document(in);
    RenderOptions opts;
    opts.geodesic_edges = geodesics;
    opts.face_circles = face_circles;
    std::string svg = render_svg(doc, opts);
    std::ofstream f(out);
    if (!f) throw DocumentError("cannot write '" + out + "'");
    f << svg;
    return 0;
}

void print_report(const std::string& name, const TrialReport& rep) {
    std::cout << name << ": trials " << rep.trials << ", non-vacuous " << rep.non_vacuous
              << ", skipped " << rep.skipped << ", boundary-flagged " << rep.numerical_boundary
              << ", violations " << rep.violations << ", worst margin " << rep.worst_margin
              << "\n";
    for (auto s : rep.violation_seeds) std::cout << "  violation seed " << s << "\n";
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, int rings, int star_n,
               const std::string& regime_name, bool regime_given) {
    WeightRegime regime =
        regime_name == "nonneg" ? WeightRegime::NonNegative : WeightRegime::LowRange;
    TrialReport total;

    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };

    if (want("scaling")) {
        TrialReport r = check_scaling_lemmas(seed, trials);
        print_report("scaling", r);
        total.merge(r);
    }
    if (want("gen-scaling")) {
        TrialReport r = check_generalized_scaling(seed, trials);
        print_report("gen-scaling", r);
        total.merge(r);
    }
    if (want("max-principle")) {
        TrialReport r = run_max_principle_suite(star_n, regime, trials, seed);
        print_report("max-principle", r);
        total.merge(r);
    }
    if (want("gen-max-principle")) {
        TrialReport r = run_generalized_max_principle_suite(star_n, regime, trials, seed);
        print_report("gen-max-principle", r);
        total.merge(r);
    }
    if (want("schwarz")) {
        TrialReport r = run_schwarz_suite(rings, regime, trials, seed);
        print_report("schwarz", r);
        total.merge(r);
    }
    if (want("rigidity")) {
        RigidityOptions opts;
        opts.rings = rings;
        // Tangential weights (eta = 1) unless a regime was requested.
        opts.regime = regime_given ? std::optional(regime) : std::nullopt;
        opts.trials = trials;
        TrialReport r = rigidity_experiment(opts, seed);
        print_report("rigidity", r);
        total.merge(r);
    }
    if (total.trials == 0) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
    }
    return total.pass() ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("idcp");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"inversive distance circle packings in the Poincare disk"};
    app.require_subcommand(1);

    std::string in, out;
    double target_k = 0.0, tol = 1e-10;
    int max_iters = 50;
    bool geodesics = false, face_circles = false;

    auto* check = app.add_subcommand("check", "structure condition, regularity, Delaunay report");
    check->add_option("--in", in)->required();

    auto* curv = app.add_subcommand("curvature", "print combinatorial curvatures");
    curv->add_option("--in", in)->required();

    auto* solve = app.add_subcommand("solve", "solve for prescribed interior curvature");
    solve->add_option("--in", in)->required();
    solve->add_option("--out", out)->required();
    solve->add_option("--target-K", target_k, "interior curvature target (default 0)");
    solve->add_option("--max-iters", max_iters);
    solve->add_option("--tol", tol);

    auto* layout = app.add_subcommand("layout", "develop a flat packing into the disk");
    layout->add_option("--in", in)->required();
    layout->add_option("--out", out)->required();

    auto* render = app.add_subcommand("render", "render a laid-out packing to SVG");
    render->add_option("--in", in)->required();
    render->add_option("--out", out)->required();
    render->add_flag("--geodesics", geodesics, "draw edges as geodesic arcs");
    render->add_flag("--face-circles", face_circles, "draw non-virtual face-circles");

    std::string suite = "all", regime = "low";
    int trials = 100, rings = 2, star_n = 6;
    std::uint64_t seed = default_seed();
    auto* verify = app.add_subcommand("verify", "run randomized theorem-check suites");
    verify->add_option("--suite", suite,
                       "scaling|gen-scaling|max-principle|gen-max-principle|schwarz|rigidity|all");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--rings", rings);
    verify->add_option("--n", star_n, "star polygon size");
    verify->add_option("--regime", regime)->check(CLI::IsMember({"low", "nonneg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return cmd_check(in);
        if (*curv) return cmd_curvature(in);
        if (*solve) return cmd_solve(in, out, target_k, max_iters, tol);
        if (*layout) return cmd_layout(in, out);
        if (*render) return cmd_render(in, out, geodesics, face_circles);
        if (*verify)
            return cmd_verify(suite, trials, seed, rings, star_n, regime,
                              verify->count("--regime") > 0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace idcp
