#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heartglue/commands.hpp"

using namespace heartglue;

namespace {

int finish(const CmdResult& r, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << r.out;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << r.out;
    }
    return r.exit_code;
}

bool parse_range(const std::string& s, Int& lo, Int& hi) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoll(s.substr(0, colon));
        hi = std::stoll(s.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

Manifest manifest_from_flags(const std::string& manifest_path, const std::string& oracle,
                             Int dim, Int vertices, const std::string& preset,
                             const std::string& table, const std::string& window_flag) {
    Manifest m;
    if (!manifest_path.empty()) {
        m = load_manifest(manifest_path);
    } else if (!oracle.empty()) {
        m.oracle.kind = oracle;
        m.oracle.dim = dim;
        m.oracle.vertices = vertices;
        if (oracle == "beilinson-soule") m.oracle.vanishing = preset == "number-field";
        if (oracle == "table") m.oracle.table_path = table;
    } else {
        throw ParseError("either --manifest or --oracle is required");
    }
    if (!window_flag.empty()) {
        Int lo, hi;
        if (!parse_range(window_flag, lo, hi)) throw ParseError("--window expects lo:hi");
        m.window.w_lo = lo;
        m.window.w_hi = hi;
    }
    m.window = window_from_env(m.window);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset-indexed slicing calculus: perversities, upper sets, gluing checks"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // ---- perv ----
    auto* perv = app.add_subcommand("perv", "perversity utilities");
    perv->require_subcommand(1);

    std::string p_spec, q_spec, u_spec, act_op = "dot";
    std::string window_spec = "0:2", values_spec = "0:1";
    Int act_k = 1;

    auto* penum = perv->add_subcommand("enumerate", "list perversities on a window");
    penum->add_option("--window", window_spec, "argument range lo:hi")->capture_default_str();
    penum->add_option("--values", values_spec, "value range lo:hi")->capture_default_str();

    std::string to_route = "direct", from_route = "op";
    auto* p2u = perv->add_subcommand("to-upperset", "upper set attached to a perversity");
    p2u->add_option("--p", p_spec, "perversity (name, chi:k, const:c, JSON, @file)")->required();
    p2u->add_option("--route", to_route, "direct or op")->capture_default_str();

    auto* u2p = perv->add_subcommand("from-upperset", "perversity attached to an upper set");
    u2p->add_option("--u", u_spec, "upper set (empty, full, half-plane:c, JSON, @file)")->required();
    u2p->add_option("--route", from_route, "op or graph")->capture_default_str();

    auto* pact = perv->add_subcommand("act", "apply a Z-action");
    pact->add_option("--p", p_spec)->required();
    pact->add_option("--op", act_op, "dot (reindex) or plus (add)")->capture_default_str();
    pact->add_option("--k", act_k)->capture_default_str();

    auto* pcmp = perv->add_subcommand("compare", "pointwise partial order");
    pcmp->add_option("--p", p_spec)->required();
    pcmp->add_option("--q", q_spec)->required();

    auto* pstrict = perv->add_subcommand("is-strict", "strictness test");
    pstrict->add_option("--p", p_spec)->required();

    // ---- check ----
    std::string manifest_path, oracle_name, preset, table_path, check_window, map_name, map_p;
    Int dim = 3, vertices = 2;
    auto* check = app.add_subcommand("check", "predicate checks over a window");
    check->require_subcommand(1);
    for (const char* name : {"compatible", "gluable", "grading", "perverse", "implications"}) {
        auto* sub = check->add_subcommand(name);
        sub->add_option("--manifest", manifest_path, "manifest JSON file");
        sub->add_option("--oracle", oracle_name,
                        "koszul | semisimple | table | beilinson-soule | coherent-support | "
                        "torsion-pair | quiver | semiorthogonal-pair");
        sub->add_option("--dim", dim, "coherent-support dimension");
        sub->add_option("--vertices", vertices, "quiver size");
        sub->add_option("--preset", preset, "beilinson-soule preset (number-field)");
        sub->add_option("--table", table_path, "ext-table JSON file");
        sub->add_option("--window", check_window, "weight window lo:hi");
        sub->add_option("--map", map_name, "map for 'compatible' (exchange, alpha, gamma, g, ...)");
        sub->add_option("--map-p", map_p, "perversity for gamma/g maps");
    }

    // ---- heart ----
    auto* heart = app.add_subcommand("heart", "perverse-heart membership of objects");
    heart->add_option("--manifest", manifest_path);
    heart->add_option("--oracle", oracle_name);
    heart->add_option("--table", table_path);
    heart->add_option("--window", check_window);
    heart->add_option("--p", p_spec, "perversity")->required();

    // ---- push ----
    std::string object_spec, quiver_object_spec;
    Int object_vertices = 4;
    auto* push = app.add_subcommand("push", "push a support along a map");
    push->add_option("--manifest", manifest_path);
    push->add_option("--oracle", oracle_name);
    push->add_option("--table", table_path);
    push->add_option("--window", check_window);
    push->add_option("--map", map_name)->required();
    push->add_option("--map-p", map_p);
    push->add_option("--object", object_spec, "bigraded entries as JSON [[deg,weight,mult],...]");
    push->add_option("--quiver-object", quiver_object_spec,
                     "interval summands as JSON [[a,b,shift,mult],...]");
    push->add_option("--vertices", object_vertices, "quiver size for --quiver-object");

    // ---- plot ----
    std::string plot_p, plot_u, plot_window = "-8:8", plot_window_m, plot_format = "ascii";
    auto* plot = app.add_subcommand("plot", "staircase diagram of an upper set or perversity");
    plot->add_option("--p", plot_p, "perversity to convert and draw");
    plot->add_option("--u", plot_u, "upper set to draw");
    plot->add_option("--window", plot_window, "first coordinate range lo:hi")->capture_default_str();
    plot->add_option("--window-m", plot_window_m, "second coordinate range lo:hi (defaults to --window)");
    plot->add_option("--format", plot_format, "ascii or svg")->capture_default_str();

    // ---- demo ----
    std::string demo_name;
    DemoOptions demo_opts;
    demo_opts.window = HeartWindow{-4, 4, 8};
    auto* demo = app.add_subcommand("demo", "scenario walkthroughs");
    demo->add_option("name", demo_name, "koszul | motives | coherent | torsion-tilt | bbd-gluing")
        ->required();
    demo->add_option("--k", demo_opts.k, "cut for torsion-tilt");
    demo->add_option("--dim", demo_opts.dim, "dimension for coherent");

    CLI11_PARSE(app, argc, argv);

    try {
        if (penum->parsed()) {
            Int nlo, nhi, vlo, vhi;
            if (!parse_range(window_spec, nlo, nhi) || !parse_range(values_spec, vlo, vhi))
                throw ParseError("enumerate: --window and --values expect lo:hi");
            return finish(cmd_perv_enumerate(nlo, nhi, vlo, vhi), out_path);
        }
        if (p2u->parsed())
            return finish(cmd_perv_to_upperset(parse_perversity_spec(p_spec), to_route), out_path);
        if (u2p->parsed())
            return finish(cmd_perv_from_upperset(parse_upperset_spec(u_spec), from_route), out_path);
        if (pact->parsed())
            return finish(cmd_perv_act(parse_perversity_spec(p_spec), act_op, act_k), out_path);
        if (pcmp->parsed())
            return finish(cmd_perv_compare(parse_perversity_spec(p_spec), parse_perversity_spec(q_spec)),
                          out_path);
        if (pstrict->parsed())
            return finish(cmd_perv_is_strict(parse_perversity_spec(p_spec)), out_path);

        if (check->parsed()) {
            Manifest m = manifest_from_flags(manifest_path, oracle_name, dim, vertices, preset,
                                             table_path, check_window);
            if (!map_name.empty()) {
                MapSpec spec;
                spec.name = map_name;
                if (!map_p.empty()) spec.p = parse_perversity_spec(map_p);
                m.map = spec;
            }
            return finish(cmd_check(check->get_subcommands().front()->get_name(), m), out_path);
        }
        if (heart->parsed()) {
            Manifest m = manifest_from_flags(manifest_path, oracle_name.empty() ? "semisimple" : oracle_name,
                                             dim, vertices, preset, table_path, check_window);
            return finish(cmd_heart(m, parse_perversity_spec(p_spec), m.objects), out_path);
        }
        if (push->parsed()) {
            Manifest m = manifest_from_flags(manifest_path, oracle_name.empty() ? "semisimple" : oracle_name,
                                             dim, vertices, preset, table_path, check_window);
            MapSpec spec;
            spec.name = map_name;
            if (!map_p.empty()) spec.p = parse_perversity_spec(map_p);
            if (object_spec.empty() == quiver_object_spec.empty())
                throw ParseError("push: give exactly one of --object and --quiver-object");
            SupportObject support;
            if (!object_spec.empty()) {
                nlohmann::json entries = nlohmann::json::parse(object_spec);
                std::vector<BigradedEntry> raw;
                for (const auto& e : entries)
                    raw.push_back({e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>()});
                support = BigradedObject::of(raw).support();
            } else {
                nlohmann::json entries = nlohmann::json::parse(quiver_object_spec);
                std::vector<QuiverSummand> raw;
                for (const auto& e : entries)
                    raw.push_back({e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>(),
                                   e.at(3).get<Int>()});
                support = QuiverObject::of(object_vertices, raw).support();
            }
            return finish(cmd_push(m, spec, support), out_path);
        }
        if (plot->parsed()) {
            if (plot_p.empty() == plot_u.empty())
                throw ParseError("plot: give exactly one of --p and --u");
            UpperSet2D u = plot_p.empty() ? parse_upperset_spec(plot_u)
                                          : to_upperset(parse_perversity_spec(plot_p));
            PlotOptions opts;
            opts.format = plot_format;
            if (!parse_range(plot_window, opts.n_lo, opts.n_hi))
                throw ParseError("plot: --window expects lo:hi");
            if (plot_window_m.empty()) {
                opts.m_lo = opts.n_lo;
                opts.m_hi = opts.n_hi;
            } else if (!parse_range(plot_window_m, opts.m_lo, opts.m_hi)) {
                throw ParseError("plot: --window-m expects lo:hi");
            }
            return finish(cmd_plot(u, opts), out_path);
        }
        if (demo->parsed()) {
            demo_opts.window = window_from_env(demo_opts.window);
            return finish(cmd_demo(demo_name, demo_opts), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
